#pragma once

#include "pairmult/checked.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace abgrp {

// Dense row-major integer matrix. Entries are plain int64; every algorithm
// that combines entries goes through checked arithmetic and retries with
// BigInt on overflow.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<int64_t>> init);

    static IntMatrix identity(size_t n);
    static IntMatrix diagonal(std::span<const int64_t> d);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    int64_t& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    int64_t at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    std::span<const int64_t> row(size_t i) const { return {a_.data() + i * cols_, cols_}; }

    IntMatrix transposed() const;
    std::vector<int64_t> col(size_t j) const;

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_zero() const;

private:
    size_t rows_, cols_;
    std::vector<int64_t> a_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
std::vector<int64_t> mat_vec(const IntMatrix& a, std::span<const int64_t> x);
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_neg(const IntMatrix& a);

} // namespace abgrp
