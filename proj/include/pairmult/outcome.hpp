#pragma once

#include <optional>
#include <string>
#include <utility>

namespace pairmult {

// Value-or-structured-NA. Bounded computations never skip silently: when a
// size bound or scope guard trips, the reason travels with the result.
template <class T>
struct Outcome {
    std::optional<T> value;
    std::string na_reason;

    bool ok() const { return value.has_value(); }
    const T& operator*() const { return *value; }
    const T* operator->() const { return &*value; }

    static Outcome of(T v) { return {std::move(v), {}}; }
    static Outcome na(std::string reason) { return {std::nullopt, std::move(reason)}; }
};

} // namespace pairmult
