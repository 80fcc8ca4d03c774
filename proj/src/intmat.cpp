#include "pairmult/intmat.hpp"

#include <stdexcept>

namespace abgrp {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<int64_t>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : init) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(std::span<const int64_t> d) {
    IntMatrix m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

std::vector<int64_t> IntMatrix::col(size_t j) const {
    std::vector<int64_t> v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

bool IntMatrix::is_zero() const {
    for (int64_t v : a_)
        if (v != 0) return false;
    return true;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            int64_t aik = a.at(i, k);
            if (aik == 0) continue;
            for (size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) = checked_add(c.at(i, j), checked_mul(aik, b.at(k, j)));
        }
    return c;
}

std::vector<int64_t> mat_vec(const IntMatrix& a, std::span<const int64_t> x) {
    if (a.cols() != x.size()) throw std::invalid_argument("mat_vec shape mismatch");
    std::vector<int64_t> y(a.rows(), 0);
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            if (x[j] != 0) y[i] = checked_add(y[i], checked_mul(a.at(i, j), x[j]));
    return y;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack shape mismatch");
    IntMatrix c(a.rows(), a.cols() + b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
        for (size_t j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
    }
    return c;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack shape mismatch");
    IntMatrix c(a.rows() + b.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) c.at(a.rows() + i, j) = b.at(i, j);
    return c;
}

IntMatrix mat_neg(const IntMatrix& a) {
    IntMatrix c(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) c.at(i, j) = checked_neg(a.at(i, j));
    return c;
}

} // namespace abgrp
