#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace abgrp {

// Thrown when a 64-bit intermediate would wrap. Callers either surface it
// or retry the computation with BigInt.
struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 add overflow");
    return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 sub overflow");
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 mul overflow");
    return r;
}

inline int64_t checked_neg(int64_t a) {
    if (a == INT64_MIN) throw OverflowError("int64 negate overflow");
    return -a;
}

inline int64_t checked_abs(int64_t a) {
    if (a == INT64_MIN) throw OverflowError("int64 abs overflow");
    return a < 0 ? -a : a;
}

} // namespace abgrp
