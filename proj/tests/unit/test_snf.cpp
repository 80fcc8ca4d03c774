#include "pairmult/snf.hpp"
#include "support/testutil.hpp"

#include <doctest.h>

#include <numeric>

using namespace abgrp;

TEST_SUITE_BEGIN("snf");

namespace {

void check_snf_coherent(const IntMatrix& a) {
    SnfOptions opt;
    opt.left = opt.left_inv = opt.right = opt.right_inv = true;
    SnfResult s = smith_normal_form(a, opt);

    CHECK(mat_mul(mat_mul(*s.left, a), *s.right) == s.d);
    CHECK(mat_mul(*s.left, *s.left_inv) == IntMatrix::identity(a.rows()));
    CHECK(mat_mul(*s.right, *s.right_inv) == IntMatrix::identity(a.cols()));
    for (size_t i = 1; i < s.divisors.size(); ++i)
        CHECK(s.divisors[i] % s.divisors[i - 1] == 0);
    // off-diagonal zero
    for (size_t i = 0; i < s.d.rows(); ++i)
        for (size_t j = 0; j < s.d.cols(); ++j)
            if (i != j) CHECK(s.d.at(i, j) == 0);
}

} // namespace

TEST_CASE("snf on small fixed matrices") {
    check_snf_coherent(IntMatrix{{2, 0}, {0, 3}});
    check_snf_coherent(IntMatrix{{1}});
    check_snf_coherent(IntMatrix{{0}});
    check_snf_coherent(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    CHECK(elementary_divisors(IntMatrix{{2, 0}, {0, 3}}) == std::vector<int64_t>{1, 6});
    // |det| = 144, gcd of entries 2, gcd of 2x2 minors 12: divisors 2, 6, 12
    CHECK(elementary_divisors(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}) ==
          std::vector<int64_t>{2, 6, 12});
}

TEST_CASE("snf coherence on random matrices") {
    testsupport::Rng rng(2024);
    for (int iter = 0; iter < 300; ++iter) {
        size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
        check_snf_coherent(testsupport::random_matrix(rng, r, c, -6, 6));
    }
}

TEST_CASE("zero-size shapes") {
    SnfResult s = smith_normal_form(IntMatrix(0, 3));
    CHECK(s.rank == 0);
    IntMatrix k = kernel_basis(IntMatrix(0, 3));
    CHECK(k.cols() == 3);
    s = smith_normal_form(IntMatrix(3, 0));
    CHECK(s.rank == 0);
}

TEST_CASE("kernel basis spans the kernel") {
    testsupport::Rng rng(99);
    for (int iter = 0; iter < 200; ++iter) {
        size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
        IntMatrix a = testsupport::random_matrix(rng, r, c, -5, 5);
        IntMatrix k = kernel_basis(a);
        CHECK(k.cols() == c - lattice_rank(a));
        if (k.cols()) CHECK(mat_mul(a, k).is_zero());
        // saturated: kernel basis columns extend to a basis, so any kernel
        // vector must be an integer combination; spot-check with doubles of
        // the basis vectors and sums
        if (k.cols() >= 2) {
            std::vector<int64_t> v(k.rows());
            for (size_t i = 0; i < k.rows(); ++i) v[i] = k.at(i, 0) + 2 * k.at(i, 1);
            LatticeSolver solver(k);
            CHECK(solver.contains(v));
        }
    }
}

TEST_CASE("lattice solver solves and rejects") {
    IntMatrix a{{2, 0}, {0, 3}};
    LatticeSolver s(a);
    auto x = s.solve(std::vector<int64_t>{4, -9});
    REQUIRE(x.has_value());
    CHECK(mat_vec(a, *x) == std::vector<int64_t>({4, -9}));
    CHECK(!s.solve(std::vector<int64_t>{1, 0}).has_value());
    CHECK(!s.solve(std::vector<int64_t>{0, 2}).has_value());

    testsupport::Rng rng(5);
    for (int iter = 0; iter < 200; ++iter) {
        size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
        IntMatrix m = testsupport::random_matrix(rng, r, c, -4, 4);
        LatticeSolver solver(m);
        // b = m * random integer vector must be solvable, and solutions exact
        std::vector<int64_t> x0(c);
        for (size_t j = 0; j < c; ++j) x0[j] = rng.range(-3, 3);
        std::vector<int64_t> b = mat_vec(m, x0);
        auto sol = solver.solve(b);
        REQUIRE(sol.has_value());
        CHECK(mat_vec(m, *sol) == b);
    }
}

TEST_CASE("hnf is a canonical lattice invariant") {
    testsupport::Rng rng(13);
    for (int iter = 0; iter < 200; ++iter) {
        size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
        IntMatrix a = testsupport::random_matrix(rng, r, c, -4, 4);
        IntMatrix h = hnf_rows(a);
        // row-op transformed copy: swap two rows, add a multiple of one to another
        IntMatrix b = a;
        if (r >= 2) {
            for (size_t j = 0; j < c; ++j) std::swap(b.at(0, j), b.at(r - 1, j));
            int64_t f = rng.range(-3, 3);
            for (size_t j = 0; j < c; ++j) b.at(0, j) += f * b.at(r - 1, j);
        }
        CHECK(hnf_rows(b) == h);
        // HNF of the HNF is itself
        CHECK(hnf_rows(h) == h);
    }
}

TEST_CASE("divisor chain normalization") {
    CHECK(divisor_chain({6, 4}) == std::vector<int64_t>{2, 12});
    CHECK(divisor_chain({2, 3}) == std::vector<int64_t>{1, 6});
    CHECK(divisor_chain({1, 1, 5}) == std::vector<int64_t>{1, 1, 5});
    CHECK(divisor_chain({12, 18, 10}) == std::vector<int64_t>{2, 6, 180});
    CHECK(divisor_chain({}) == std::vector<int64_t>{});
}

TEST_CASE("sparse divisors agree with dense") {
    testsupport::Rng rng(321);
    for (int iter = 0; iter < 200; ++iter) {
        size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
        IntMatrix a = testsupport::random_matrix(rng, r, c, -4, 4);
        std::vector<std::tuple<uint32_t, uint32_t, int64_t>> trip;
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j)
                if (a.at(i, j) != 0)
                    trip.emplace_back(static_cast<uint32_t>(i), static_cast<uint32_t>(j),
                                      a.at(i, j));
        auto dense = elementary_divisors(a);
        auto sparse = elementary_divisors_sparse(r, c, trip);
        CHECK(divisor_chain(dense) == sparse);
    }
}

TEST_CASE("small_divisors agrees with the general path") {
    testsupport::Rng rng(616);
    for (int iter = 0; iter < 500; ++iter) {
        size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
        IntMatrix a = testsupport::random_matrix(rng, r, c, -5, 5);
        int64_t out[6];
        size_t nd = small_divisors(&a.row(0)[0], r, c, out);
        std::vector<int64_t> got(out, out + nd);
        CHECK(got == elementary_divisors(a));
    }
}

TEST_CASE("snf falls back to bigint on overflow-prone input") {
    // Ill-conditioned matrix with huge entries: the checked int64 path throws
    // internally and the BigInt retry must deliver the same normal form that
    // direct rational reasoning predicts for the 1x2 case.
    IntMatrix a{{INT64_MAX / 2, INT64_MAX / 3}};
    SnfResult s = smith_normal_form(a);
    REQUIRE(s.divisors.size() == 1);
    CHECK(s.divisors[0] == std::gcd(INT64_MAX / 2, INT64_MAX / 3));
}

TEST_SUITE_END();
