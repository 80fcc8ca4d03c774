#include "pairmult/snf.hpp"

#include "pairmult/bigint.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace abgrp {

namespace {

// ---- scalar shims so the elimination core can run on int64 or BigInt ----

inline int64_t z_add(int64_t a, int64_t b) { return checked_add(a, b); }
inline int64_t z_sub(int64_t a, int64_t b) { return checked_sub(a, b); }
inline int64_t z_mul(int64_t a, int64_t b) { return checked_mul(a, b); }
inline int64_t z_neg(int64_t a) { return checked_neg(a); }
inline int64_t z_quot(int64_t a, int64_t b) {
    if (a == INT64_MIN && b == -1) throw OverflowError("int64 div overflow");
    return a / b;
}
inline int64_t z_rem(int64_t a, int64_t b) {
    if (a == INT64_MIN && b == -1) return 0;
    return a % b;
}
inline bool z_zero(int64_t a) { return a == 0; }
inline bool z_neg_p(int64_t a) { return a < 0; }
inline int64_t z_abs(int64_t a) { return checked_abs(a); }
inline bool z_abs_less(int64_t a, int64_t b) {
    // |a| < |b| without overflow on INT64_MIN
    uint64_t ua = a < 0 ? ~static_cast<uint64_t>(a) + 1 : static_cast<uint64_t>(a);
    uint64_t ub = b < 0 ? ~static_cast<uint64_t>(b) + 1 : static_cast<uint64_t>(b);
    return ua < ub;
}

inline BigInt z_add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt z_sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt z_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt z_neg(const BigInt& a) { return -a; }
inline BigInt z_quot(const BigInt& a, const BigInt& b) { return a / b; }
inline BigInt z_rem(const BigInt& a, const BigInt& b) { return a % b; }
inline bool z_zero(const BigInt& a) { return a.is_zero(); }
inline bool z_neg_p(const BigInt& a) { return a.is_negative(); }
inline BigInt z_abs(const BigInt& a) { return a.abs(); }
inline bool z_abs_less(const BigInt& a, const BigInt& b) { return a.abs() < b.abs(); }

inline int64_t z_narrow(int64_t a) { return a; }
inline int64_t z_narrow(const BigInt& a) { return a.to_int64(); }

template <class Z>
struct Mat {
    size_t rows = 0, cols = 0;
    std::vector<Z> a;

    Mat() = default;
    Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c, Z(0)) {}

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = Z(1);
        return m;
    }
    static Mat from(const IntMatrix& s) {
        Mat m(s.rows(), s.cols());
        for (size_t i = 0; i < s.rows(); ++i)
            for (size_t j = 0; j < s.cols(); ++j) m.at(i, j) = Z(s.at(i, j));
        return m;
    }
    IntMatrix narrow() const {
        IntMatrix m(rows, cols);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) m.at(i, j) = z_narrow(at(i, j));
        return m;
    }

    Z& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Z& at(size_t i, size_t j) const { return a[i * cols + j]; }

    void swap_rows(size_t i, size_t j) {
        if (i == j) return;
        for (size_t c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
    }
    void swap_cols(size_t i, size_t j) {
        if (i == j) return;
        for (size_t r = 0; r < rows; ++r) std::swap(at(r, i), at(r, j));
    }
    // row_i -= q * row_t
    void row_sub(size_t i, size_t t, const Z& q) {
        for (size_t c = 0; c < cols; ++c)
            if (!z_zero(at(t, c))) at(i, c) = z_sub(at(i, c), z_mul(q, at(t, c)));
    }
    // col_j -= q * col_t
    void col_sub(size_t j, size_t t, const Z& q) {
        for (size_t r = 0; r < rows; ++r)
            if (!z_zero(at(r, t))) at(r, j) = z_sub(at(r, j), z_mul(q, at(r, t)));
    }
    // col_t += q * col_i
    void col_add(size_t t, size_t i, const Z& q) {
        for (size_t r = 0; r < rows; ++r)
            if (!z_zero(at(r, i))) at(r, t) = z_add(at(r, t), z_mul(q, at(r, i)));
    }
    // row_t += q * row_j
    void row_add(size_t t, size_t j, const Z& q) {
        for (size_t c = 0; c < cols; ++c)
            if (!z_zero(at(j, c))) at(t, c) = z_add(at(t, c), z_mul(q, at(j, c)));
    }
    void negate_row(size_t i) {
        for (size_t c = 0; c < cols; ++c) at(i, c) = z_neg(at(i, c));
    }
    void negate_col(size_t j) {
        for (size_t r = 0; r < rows; ++r) at(r, j) = z_neg(at(r, j));
    }
};

template <class Z>
struct Transforms {
    Mat<Z>* L = nullptr;   // U
    Mat<Z>* Li = nullptr;  // U^-1
    Mat<Z>* R = nullptr;   // V
    Mat<Z>* Ri = nullptr;  // V^-1

    void row_swap(size_t i, size_t j) {
        if (L) L->swap_rows(i, j);
        if (Li) Li->swap_cols(i, j);
    }
    void row_sub(size_t i, size_t t, const Z& q) {
        if (L) L->row_sub(i, t, q);
        if (Li) Li->col_add(t, i, q);
    }
    void row_negate(size_t i) {
        if (L) L->negate_row(i);
        if (Li) Li->negate_col(i);
    }
    void col_swap(size_t i, size_t j) {
        if (R) R->swap_cols(i, j);
        if (Ri) Ri->swap_rows(i, j);
    }
    void col_sub(size_t j, size_t t, const Z& q) {
        if (R) R->col_sub(j, t, q);
        if (Ri) Ri->row_add(t, j, q);
    }
};

// Finds the smallest-|value| nonzero entry of a[t.., t..]; lowest (i,j) wins ties.
template <class Z>
bool find_pivot(const Mat<Z>& a, size_t t, size_t& pi, size_t& pj) {
    bool found = false;
    for (size_t i = t; i < a.rows; ++i)
        for (size_t j = t; j < a.cols; ++j) {
            const Z& v = a.at(i, j);
            if (z_zero(v)) continue;
            if (!found || z_abs_less(v, a.at(pi, pj))) {
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

template <class Z>
void snf_core(Mat<Z>& a, Transforms<Z> tf) {
    size_t t = 0;
    size_t nmin = std::min(a.rows, a.cols);
    while (t < nmin) {
        size_t pi, pj;
        if (!find_pivot(a, t, pi, pj)) break;
        a.swap_rows(t, pi);
        tf.row_swap(t, pi);
        a.swap_cols(t, pj);
        tf.col_swap(t, pj);

        for (;;) {
            bool residue = false;
            for (size_t i = t + 1; i < a.rows; ++i) {
                if (z_zero(a.at(i, t))) continue;
                Z q = z_quot(a.at(i, t), a.at(t, t));
                if (!z_zero(q)) {
                    a.row_sub(i, t, q);
                    tf.row_sub(i, t, q);
                }
                if (!z_zero(a.at(i, t))) residue = true;
            }
            for (size_t j = t + 1; j < a.cols; ++j) {
                if (z_zero(a.at(t, j))) continue;
                Z q = z_quot(a.at(t, j), a.at(t, t));
                if (!z_zero(q)) {
                    a.col_sub(j, t, q);
                    tf.col_sub(j, t, q);
                }
                if (!z_zero(a.at(t, j))) residue = true;
            }
            if (residue) {
                // remainders are strictly smaller than the pivot; re-pick
                if (!find_pivot(a, t, pi, pj)) break;
                a.swap_rows(t, pi);
                tf.row_swap(t, pi);
                a.swap_cols(t, pj);
                tf.col_swap(t, pj);
                continue;
            }
            // row and column are clear; enforce the divisibility chain
            bool fixed = false;
            for (size_t i = t + 1; i < a.rows && !fixed; ++i)
                for (size_t j = t + 1; j < a.cols && !fixed; ++j) {
                    if (z_zero(a.at(i, j))) continue;
                    if (!z_zero(z_rem(a.at(i, j), a.at(t, t)))) {
                        Z one(1);
                        a.row_add(t, i, one);
                        if (tf.L) tf.L->row_add(t, i, one);
                        if (tf.Li) {
                            Z mone(-1);
                            tf.Li->col_add(i, t, mone);
                        }
                        fixed = true;
                    }
                }
            if (!fixed) break;
        }
        if (z_neg_p(a.at(t, t))) {
            a.negate_row(t);
            tf.row_negate(t);
        }
        ++t;
    }
}

template <class Z>
SnfResult snf_run(const IntMatrix& input, SnfOptions opt) {
    Mat<Z> a = Mat<Z>::from(input);
    Mat<Z> L, Li, R, Ri;
    Transforms<Z> tf;
    if (opt.left) {
        L = Mat<Z>::identity(a.rows);
        tf.L = &L;
    }
    if (opt.left_inv) {
        Li = Mat<Z>::identity(a.rows);
        tf.Li = &Li;
    }
    if (opt.right) {
        R = Mat<Z>::identity(a.cols);
        tf.R = &R;
    }
    if (opt.right_inv) {
        Ri = Mat<Z>::identity(a.cols);
        tf.Ri = &Ri;
    }
    snf_core(a, tf);

    SnfResult res;
    res.d = a.narrow();
    size_t nmin = std::min(a.rows, a.cols);
    for (size_t i = 0; i < nmin; ++i) {
        int64_t v = res.d.at(i, i);
        if (v == 0) break;
        res.divisors.push_back(v);
    }
    res.rank = res.divisors.size();
    if (opt.left) res.left = L.narrow();
    if (opt.left_inv) res.left_inv = Li.narrow();
    if (opt.right) res.right = R.narrow();
    if (opt.right_inv) res.right_inv = Ri.narrow();
    return res;
}

} // namespace

SnfResult smith_normal_form(const IntMatrix& a, SnfOptions opt) {
    try {
        return snf_run<int64_t>(a, opt);
    } catch (const OverflowError&) {
        return snf_run<BigInt>(a, opt);
    }
}

std::vector<int64_t> elementary_divisors(const IntMatrix& a) {
    return smith_normal_form(a).divisors;
}

size_t lattice_rank(const IntMatrix& a) { return smith_normal_form(a).rank; }

namespace {

inline int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = z_quot(a, b);
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

template <class Z>
Z floor_div_z(const Z& a, const Z& b) {
    Z q = z_quot(a, b);
    Z r = z_rem(a, b);
    if (!z_zero(r) && (z_neg_p(a) != z_neg_p(b))) q = z_sub(q, Z(1));
    return q;
}

template <class Z>
IntMatrix hnf_rows_impl(const IntMatrix& input) {
    Mat<Z> a = Mat<Z>::from(input);
    size_t r = 0;
    std::vector<size_t> pivot_cols;
    for (size_t c = 0; c < a.cols && r < a.rows; ++c) {
        // gcd-reduce column c among rows >= r until one nonzero remains
        for (;;) {
            size_t best = a.rows;
            for (size_t i = r; i < a.rows; ++i) {
                if (z_zero(a.at(i, c))) continue;
                if (best == a.rows || z_abs_less(a.at(i, c), a.at(best, c))) best = i;
            }
            if (best == a.rows) break;  // column clear below r
            a.swap_rows(r, best);
            bool residue = false;
            for (size_t i = r + 1; i < a.rows; ++i) {
                if (z_zero(a.at(i, c))) continue;
                Z q = z_quot(a.at(i, c), a.at(r, c));
                if (!z_zero(q)) a.row_sub(i, r, q);
                if (!z_zero(a.at(i, c))) residue = true;
            }
            if (!residue) break;
        }
        if (z_zero(a.at(r, c))) continue;
        if (z_neg_p(a.at(r, c))) a.negate_row(r);
        pivot_cols.push_back(c);
        ++r;
    }
    // reduce entries above pivots into [0, pivot)
    for (size_t k = 0; k < pivot_cols.size(); ++k) {
        size_t c = pivot_cols[k];
        for (size_t i = 0; i < k; ++i) {
            Z q = floor_div_z(a.at(i, c), a.at(k, c));
            if (!z_zero(q)) a.row_sub(i, k, q);
        }
    }
    IntMatrix out(r, input.cols());
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < input.cols(); ++j) out.at(i, j) = z_narrow(a.at(i, j));
    return out;
}

} // namespace

IntMatrix hnf_rows(const IntMatrix& a) {
    try {
        return hnf_rows_impl<int64_t>(a);
    } catch (const OverflowError&) {
        return hnf_rows_impl<BigInt>(a);
    }
}

IntMatrix kernel_basis(const IntMatrix& a) {
    SnfOptions opt;
    opt.right = true;
    SnfResult s = smith_normal_form(a, opt);
    size_t n = a.cols();
    IntMatrix k(n, n - s.rank);
    for (size_t j = s.rank; j < n; ++j)
        for (size_t i = 0; i < n; ++i) k.at(i, j - s.rank) = s.right->at(i, j);
    return k;
}

LatticeSolver::LatticeSolver(IntMatrix a) : a_(std::move(a)) {
    SnfOptions opt;
    opt.left = true;
    opt.right = true;
    snf_ = smith_normal_form(a_, opt);
}

std::optional<std::vector<int64_t>> LatticeSolver::solve(std::span<const int64_t> b) const {
    if (b.size() != a_.rows()) throw std::invalid_argument("LatticeSolver: bad rhs size");
    std::vector<int64_t> y = mat_vec(*snf_.left, b);
    std::vector<int64_t> w(a_.cols(), 0);
    for (size_t i = 0; i < y.size(); ++i) {
        if (i < snf_.rank) {
            int64_t d = snf_.divisors[i];
            if (y[i] % d != 0) return std::nullopt;
            if (i < a_.cols()) w[i] = y[i] / d;
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    return mat_vec(*snf_.right, w);
}

std::vector<int64_t> divisor_chain(std::vector<int64_t> diag) {
    for (int64_t v : diag)
        if (v <= 0) throw std::invalid_argument("divisor_chain: nonpositive entry");
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < diag.size(); ++i)
            for (size_t j = i + 1; j < diag.size(); ++j) {
                int64_t g = std::gcd(diag[i], diag[j]);
                if (diag[i] % diag[j] == 0 || diag[j] % diag[i] == 0) continue;
                int64_t l = checked_mul(diag[i] / g, diag[j]);
                diag[i] = g;
                diag[j] = l;
                changed = true;
            }
        std::sort(diag.begin(), diag.end());
    }
    std::sort(diag.begin(), diag.end());
    return diag;
}

namespace {

// int64 with explicit overflow flag instead of exceptions, for the hot loop
struct SmallState {
    int64_t a[36];
    size_t r, c;
    bool overflow = false;

    int64_t& at(size_t i, size_t j) { return a[i * c + j]; }

    int64_t mul(int64_t x, int64_t y) {
        int64_t z;
        if (__builtin_mul_overflow(x, y, &z)) overflow = true;
        return z;
    }
    int64_t sub(int64_t x, int64_t y) {
        int64_t z;
        if (__builtin_sub_overflow(x, y, &z)) overflow = true;
        return z;
    }
    int64_t add(int64_t x, int64_t y) {
        int64_t z;
        if (__builtin_add_overflow(x, y, &z)) overflow = true;
        return z;
    }

    bool find_pivot(size_t t, size_t& pi, size_t& pj) {
        bool found = false;
        uint64_t best = 0;
        for (size_t i = t; i < r; ++i)
            for (size_t j = t; j < c; ++j) {
                int64_t v = at(i, j);
                if (v == 0) continue;
                uint64_t av = v < 0 ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
                if (!found || av < best) {
                    best = av;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        return found;
    }

    void swap_rows(size_t i, size_t j) {
        if (i == j) return;
        for (size_t k = 0; k < c; ++k) std::swap(at(i, k), at(j, k));
    }
    void swap_cols(size_t i, size_t j) {
        if (i == j) return;
        for (size_t k = 0; k < r; ++k) std::swap(at(k, i), at(k, j));
    }
};

} // namespace

size_t small_divisors(const int64_t* data, size_t rows, size_t cols, int64_t* out) {
    if (rows > 6 || cols > 6) throw std::invalid_argument("small_divisors: shape too large");
    SmallState m;
    m.r = rows;
    m.c = cols;
    std::copy(data, data + rows * cols, m.a);

    size_t t = 0, nmin = std::min(rows, cols), nd = 0;
    while (t < nmin && !m.overflow) {
        size_t pi, pj;
        if (!m.find_pivot(t, pi, pj)) break;
        m.swap_rows(t, pi);
        m.swap_cols(t, pj);
        for (;;) {
            bool residue = false;
            for (size_t i = t + 1; i < rows; ++i) {
                if (m.at(i, t) == 0) continue;
                int64_t q = m.at(i, t) / m.at(t, t);
                if (q != 0)
                    for (size_t k = t; k < cols; ++k)
                        m.at(i, k) = m.sub(m.at(i, k), m.mul(q, m.at(t, k)));
                if (m.at(i, t) != 0) residue = true;
            }
            for (size_t j = t + 1; j < cols; ++j) {
                if (m.at(t, j) == 0) continue;
                int64_t q = m.at(t, j) / m.at(t, t);
                if (q != 0)
                    for (size_t k = t; k < rows; ++k)
                        m.at(k, j) = m.sub(m.at(k, j), m.mul(q, m.at(k, t)));
                if (m.at(t, j) != 0) residue = true;
            }
            if (m.overflow) break;
            if (residue) {
                if (!m.find_pivot(t, pi, pj)) break;
                m.swap_rows(t, pi);
                m.swap_cols(t, pj);
                continue;
            }
            bool fixed = false;
            for (size_t i = t + 1; i < rows && !fixed; ++i)
                for (size_t j = t + 1; j < cols && !fixed; ++j) {
                    if (m.at(i, j) == 0 || m.at(i, j) % m.at(t, t) == 0) continue;
                    for (size_t k = t; k < cols; ++k)
                        m.at(t, k) = m.add(m.at(t, k), m.at(i, k));
                    fixed = true;
                }
            if (!fixed) break;
        }
        if (m.at(t, t) == 0) break;
        out[nd++] = m.at(t, t) < 0 ? -m.at(t, t) : m.at(t, t);
        ++t;
    }
    if (m.overflow) {
        // rare: redo through the general machinery
        IntMatrix a(rows, cols);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) a.at(i, j) = data[i * cols + j];
        std::vector<int64_t> d = elementary_divisors(a);
        std::copy(d.begin(), d.end(), out);
        return d.size();
    }
    return nd;
}

// ------------------------- sparse elementary divisors -------------------------

namespace {

struct SparseElim {
    size_t nrows, ncols;
    // rows as sorted (col, val) vectors; per-column row sets for pivoting
    std::vector<std::vector<std::pair<uint32_t, int64_t>>> row;
    std::vector<std::set<uint32_t>> col_rows;
    std::vector<bool> row_alive, col_alive;
    // lazy priority queue of (nnz, row)
    std::priority_queue<std::pair<size_t, uint32_t>, std::vector<std::pair<size_t, uint32_t>>,
                        std::greater<>>
        pq;

    SparseElim(size_t r, size_t c) : nrows(r), ncols(c) {
        row.resize(r);
        col_rows.resize(c);
        row_alive.assign(r, true);
        col_alive.assign(c, true);
    }

    int64_t value_at(uint32_t r, uint32_t c) const {
        for (const auto& [cc, v] : row[r])
            if (cc == c) return v;
        return 0;
    }

    void index_all() {
        for (uint32_t r = 0; r < nrows; ++r) {
            for (const auto& [c, v] : row[r]) col_rows[c].insert(r);
            if (!row[r].empty()) pq.push({row[r].size(), r});
        }
    }

    // dst -= f * src  (rows); returns the merged row
    void row_axpy(uint32_t dst, uint32_t src, int64_t f) {
        std::vector<std::pair<uint32_t, int64_t>> out;
        out.reserve(row[dst].size() + row[src].size());
        auto it1 = row[dst].begin(), e1 = row[dst].end();
        auto it2 = row[src].begin(), e2 = row[src].end();
        while (it1 != e1 || it2 != e2) {
            if (it2 == e2 || (it1 != e1 && it1->first < it2->first)) {
                out.push_back(*it1++);
            } else if (it1 == e1 || it2->first < it1->first) {
                int64_t nv = checked_neg(checked_mul(f, it2->second));
                if (nv != 0) {
                    out.emplace_back(it2->first, nv);
                    col_rows[it2->first].insert(dst);
                }
                ++it2;
            } else {
                int64_t nv = checked_sub(it1->second, checked_mul(f, it2->second));
                if (nv != 0) {
                    out.emplace_back(it1->first, nv);
                } else {
                    col_rows[it1->first].erase(dst);
                }
                ++it1;
                ++it2;
            }
        }
        row[dst] = std::move(out);
        if (!row[dst].empty()) pq.push({row[dst].size(), dst});
    }

    void drop_row(uint32_t r) {
        for (const auto& [c, v] : row[r]) col_rows[c].erase(r);
        row[r].clear();
        row_alive[r] = false;
    }
    void drop_col(uint32_t c) {
        // caller ensures the column is empty
        col_alive[c] = false;
    }
};

} // namespace

std::vector<int64_t> elementary_divisors_sparse(
    size_t rows, size_t cols, std::vector<std::tuple<uint32_t, uint32_t, int64_t>> entries) {
    // accumulate duplicates
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) {
                  return std::tie(std::get<0>(a), std::get<1>(a)) <
                         std::tie(std::get<0>(b), std::get<1>(b));
              });
    SparseElim m(rows, cols);
    for (size_t i = 0; i < entries.size();) {
        size_t j = i;
        int64_t sum = 0;
        while (j < entries.size() && std::get<0>(entries[j]) == std::get<0>(entries[i]) &&
               std::get<1>(entries[j]) == std::get<1>(entries[i])) {
            sum = checked_add(sum, std::get<2>(entries[j]));
            ++j;
        }
        if (sum != 0) m.row[std::get<0>(entries[i])].emplace_back(std::get<1>(entries[i]), sum);
        i = j;
    }
    m.index_all();

    std::vector<int64_t> diag;

    // phase 1: eliminate with +-1 pivots, smallest rows first
    std::vector<uint32_t> deferred;
    while (!m.pq.empty()) {
        auto [nnz, r] = m.pq.top();
        m.pq.pop();
        if (!m.row_alive[r] || m.row[r].empty() || m.row[r].size() != nnz) continue;
        // pick the unit entry with the smallest column support, lowest col on ties
        uint32_t best_col = 0;
        int64_t best_val = 0;
        size_t best_sz = SIZE_MAX;
        for (const auto& [c, v] : m.row[r]) {
            if (v != 1 && v != -1) continue;
            size_t sz = m.col_rows[c].size();
            if (sz < best_sz) {
                best_sz = sz;
                best_col = c;
                best_val = v;
            }
        }
        if (best_sz == SIZE_MAX) {
            deferred.push_back(r);
            continue;
        }
        // eliminate: clear the column with row ops, then retire the pivot
        std::vector<uint32_t> others(m.col_rows[best_col].begin(), m.col_rows[best_col].end());
        for (uint32_t r2 : others) {
            if (r2 == r) continue;
            int64_t coef = m.value_at(r2, best_col);
            // row2 -= (coef * best_val) * row_r   (best_val^2 = 1)
            m.row_axpy(r2, r, checked_mul(coef, best_val));
        }
        m.drop_row(r);
        m.drop_col(best_col);
        diag.push_back(1);
        // rows parked in `deferred` may have gained units; requeue them
        if (!deferred.empty()) {
            for (uint32_t d : deferred)
                if (m.row_alive[d] && !m.row[d].empty()) m.pq.push({m.row[d].size(), d});
            deferred.clear();
        }
    }

    // phase 2: densify whatever is left
    std::vector<uint32_t> live_rows, live_cols;
    std::map<uint32_t, uint32_t> col_index;
    for (uint32_t r = 0; r < rows; ++r)
        if (m.row_alive[r] && !m.row[r].empty()) live_rows.push_back(r);
    for (uint32_t r : live_rows)
        for (const auto& [c, v] : m.row[r]) col_index.emplace(c, 0);
    for (auto& [c, idx] : col_index) {
        idx = static_cast<uint32_t>(live_cols.size());
        live_cols.push_back(c);
    }
    if (!live_rows.empty()) {
        if (live_rows.size() * live_cols.size() > 4000000)
            throw std::runtime_error("sparse divisor leftover too large to densify");
        IntMatrix dense(live_rows.size(), live_cols.size());
        for (size_t i = 0; i < live_rows.size(); ++i)
            for (const auto& [c, v] : m.row[live_rows[i]]) dense.at(i, col_index[c]) = v;
        for (int64_t d : elementary_divisors(dense)) diag.push_back(d);
    }
    return divisor_chain(std::move(diag));
}

} // namespace abgrp
