#include "support/quotient_oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

namespace testsupport {

namespace {

using Vec = std::vector<int64_t>;

// Triangular lattice basis via a plain column sweep with gcd reduction.
// Deliberately simple and separate from the production normal-form code.
struct Triangular {
    std::vector<Vec> basis;      // echelon rows, zeros before each pivot
    std::vector<size_t> pivots;  // strictly increasing pivot columns

    Triangular(std::vector<Vec> rows, size_t cols) {
        std::vector<Vec> work;
        for (Vec& v : rows)
            if (std::any_of(v.begin(), v.end(), [](int64_t x) { return x != 0; }))
                work.push_back(std::move(v));
        for (size_t c = 0; c < cols; ++c) {
            // invariant: every row in `work` is zero at columns < c
            for (;;) {
                size_t i = SIZE_MAX, j = SIZE_MAX;  // two smallest |value| at column c
                for (size_t k = 0; k < work.size(); ++k) {
                    if (work[k][c] == 0) continue;
                    if (i == SIZE_MAX || std::abs(work[k][c]) < std::abs(work[i][c])) {
                        j = i;
                        i = k;
                    } else if (j == SIZE_MAX || std::abs(work[k][c]) < std::abs(work[j][c])) {
                        j = k;
                    }
                }
                if (j == SIZE_MAX) break;  // zero or one row hits column c
                int64_t q = work[j][c] / work[i][c];
                for (size_t t = c; t < cols; ++t) work[j][t] -= q * work[i][t];
            }
            for (size_t k = 0; k < work.size(); ++k) {
                if (work[k][c] == 0) continue;
                if (work[k][c] < 0)
                    for (int64_t& x : work[k]) x = -x;
                basis.push_back(work[k]);
                pivots.push_back(c);
                work.erase(work.begin() + static_cast<std::ptrdiff_t>(k));
                break;
            }
        }
        // back-reduce entries above pivots, left to right
        for (size_t j = 0; j < basis.size(); ++j) {
            size_t p = pivots[j];
            for (size_t k = 0; k < j; ++k) {
                int64_t a = basis[j][p];
                int64_t q = basis[k][p] / a;
                if ((basis[k][p] % a != 0) && (basis[k][p] < 0)) --q;  // floor (a > 0)
                if (q != 0)
                    for (size_t t = p; t < basis[k].size(); ++t) basis[k][t] -= q * basis[j][t];
            }
        }
    }

    // canonical coset representative: pivot coordinates reduced into [0, pivot)
    Vec reduce(Vec v) const {
        for (size_t k = 0; k < basis.size(); ++k) {
            size_t p = pivots[k];
            int64_t a = basis[k][p];
            int64_t q = v[p] / a;
            if ((v[p] % a != 0) && (v[p] < 0)) --q;  // floor (a > 0)
            if (q != 0)
                for (size_t t = p; t < v.size(); ++t) v[t] -= q * basis[k][t];
        }
        return v;
    }
};

std::vector<int64_t> primes_of(int64_t n) {
    std::vector<int64_t> ps;
    for (int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

} // namespace

std::optional<abgrp::AbelianGroup> enumerate_quotient(const abgrp::IntMatrix& relation_rows,
                                                      size_t cols, int64_t bound) {
    std::vector<Vec> rowvecs;
    for (size_t i = 0; i < relation_rows.rows(); ++i) {
        Vec v(cols);
        for (size_t j = 0; j < cols; ++j) v[j] = relation_rows.at(i, j);
        rowvecs.push_back(std::move(v));
    }
    Triangular tri(std::move(rowvecs), cols);
    if (tri.basis.size() < cols) return std::nullopt;  // infinite quotient

    int64_t order = 1;
    for (size_t k = 0; k < cols; ++k) {
        order *= tri.basis[k][tri.pivots[k]];
        if (order > bound || order <= 0) return std::nullopt;
    }

    // BFS over cosets from 0 along the generator directions
    std::set<Vec> seen;
    std::vector<Vec> queue;
    Vec zero(cols, 0);
    seen.insert(zero);
    queue.push_back(zero);
    while (!queue.empty()) {
        Vec v = queue.back();
        queue.pop_back();
        for (size_t i = 0; i < cols; ++i) {
            Vec w = v;
            w[i] += 1;
            w = tri.reduce(std::move(w));
            if (seen.insert(w).second) {
                if (static_cast<int64_t>(seen.size()) > order)
                    throw std::logic_error("quotient oracle: enumeration exceeded det bound");
                queue.push_back(w);
            }
        }
    }
    if (static_cast<int64_t>(seen.size()) != order)
        throw std::logic_error("quotient oracle: enumeration does not match det");

    // order statistics -> invariant factors, prime by prime
    auto count_killed = [&](int64_t m) {
        int64_t c = 0;
        for (const Vec& v : seen) {
            Vec w(cols);
            for (size_t i = 0; i < cols; ++i) w[i] = v[i] * m;
            w = tri.reduce(std::move(w));
            if (w == zero) ++c;
        }
        return c;
    };

    std::map<int64_t, std::vector<int64_t>> exps;  // prime -> exponents, descending
    for (int64_t p : primes_of(order)) {
        std::vector<int64_t> counts{1};  // counts[i] = #{x : p^i x = 0}
        int64_t pk = 1;
        for (;;) {
            pk *= p;
            int64_t c = count_killed(pk);
            counts.push_back(c);
            if (c == counts[counts.size() - 2]) break;  // stabilized
        }
        // s_i = log_p(counts[i]/counts[i-1]) = #{j : e_j >= i}
        std::vector<int64_t> s;
        for (size_t i = 1; i < counts.size(); ++i) {
            int64_t ratio = counts[i] / counts[i - 1];
            int64_t lg = 0;
            while (ratio > 1) {
                ratio /= p;
                ++lg;
            }
            s.push_back(lg);
        }
        std::vector<int64_t> e;  // conjugate partition
        for (int64_t j = 0; j < (s.empty() ? 0 : s[0]); ++j) {
            int64_t cnt = 0;
            for (int64_t si : s)
                if (si > j) ++cnt;
            e.push_back(cnt);
        }
        std::sort(e.rbegin(), e.rend());
        if (!e.empty() && e[0] > 0) exps[p] = std::move(e);
    }

    size_t k = 0;
    for (auto& [p, e] : exps) k = std::max(k, e.size());
    std::vector<int64_t> chain;  // built largest-first
    for (size_t i = 0; i < k; ++i) {
        int64_t d = 1;
        for (auto& [p, e] : exps)
            if (i < e.size())
                for (int64_t t = 0; t < e[i]; ++t) d *= p;
        chain.push_back(d);
    }
    std::reverse(chain.begin(), chain.end());
    std::vector<int64_t> tor;
    for (int64_t d : chain)
        if (d >= 2) tor.push_back(d);
    return abgrp::AbelianGroup(0, std::move(tor));
}

} // namespace testsupport
