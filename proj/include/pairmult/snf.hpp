#pragma once

#include "pairmult/intmat.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

namespace abgrp {

struct SnfOptions {
    bool left = false;       // track U with U*A*V = D
    bool left_inv = false;   // track U^-1
    bool right = false;      // track V
    bool right_inv = false;  // track V^-1
};

// Smith normal form U*A*V = D with D diagonal, diagonal entries nonnegative
// and forming a divisibility chain d1 | d2 | ... | dr (then zeros).
struct SnfResult {
    IntMatrix d;
    std::vector<int64_t> divisors;  // the positive diagonal entries, in order
    size_t rank = 0;
    std::optional<IntMatrix> left, left_inv, right, right_inv;
};

// Pivot rule: smallest absolute value in the working submatrix, ties broken
// by lowest (row, col). Runs on checked int64 and retries the whole
// computation with BigInt if an intermediate overflows.
SnfResult smith_normal_form(const IntMatrix& a, SnfOptions opt = {});

std::vector<int64_t> elementary_divisors(const IntMatrix& a);
size_t lattice_rank(const IntMatrix& a);

// Canonical row Hermite normal form: upper echelon, positive pivots,
// entries above each pivot reduced into [0, pivot). Zero rows dropped.
// Rows of the result are a canonical basis of the row space lattice.
IntMatrix hnf_rows(const IntMatrix& a);

// Columns form a basis of { x : a*x = 0 } (a saturated sublattice).
IntMatrix kernel_basis(const IntMatrix& a);

// Solves a*x = b over the integers; reusable across many right-hand sides.
class LatticeSolver {
public:
    explicit LatticeSolver(IntMatrix a);

    std::optional<std::vector<int64_t>> solve(std::span<const int64_t> b) const;
    bool contains(std::span<const int64_t> b) const { return solve(b).has_value(); }
    size_t rank() const { return snf_.rank; }
    size_t dim() const { return a_.rows(); }

private:
    IntMatrix a_;
    SnfResult snf_;  // with left and right transforms
};

// Elementary divisors of a large sparse matrix. Entries are (row, col, value)
// triplets; duplicates are summed. Unit pivots are eliminated sparsely; the
// leftover is handled densely (or by general sparse pivoting when too big).
std::vector<int64_t> elementary_divisors_sparse(
    size_t rows, size_t cols, std::vector<std::tuple<uint32_t, uint32_t, int64_t>> entries);

// Normalizes a positive diagonal multiset into an invariant-factor chain
// via gcd/lcm exchanges (no factoring needed).
std::vector<int64_t> divisor_chain(std::vector<int64_t> diag);

// Allocation-free divisor computation for matrices up to 6x6 (the hot path
// of the abelian sweep); same reduction loop as the general code, falls back
// to it on overflow. Returns the number of divisors written to `out`.
size_t small_divisors(const int64_t* data, size_t rows, size_t cols, int64_t* out);

} // namespace abgrp
