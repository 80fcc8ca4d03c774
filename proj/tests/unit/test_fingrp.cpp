#include "pairmult/fingrp.hpp"
#include "support/testutil.hpp"

#include <doctest.h>

using namespace fingrp;
using abgrp::AbelianGroup;

TEST_SUITE_BEGIN("fingrp");

namespace {

// S3 in lexicographic one-line order: even permutations are 0, 3, 4
const std::vector<int> kA3 = {0, 3, 4};

} // namespace

TEST_CASE("constructors validate and have expected structure") {
    CHECK(cyclic(1)->order() == 1);
    CHECK(cyclic(8)->order() == 8);
    CHECK(dihedral(4)->order() == 8);
    CHECK(quaternion8()->order() == 8);
    CHECK(symmetric(3)->order() == 6);
    CHECK(symmetric(4)->order() == 24);
    CHECK(alternating(4)->order() == 12);
    CHECK(direct_product(cyclic(2), cyclic(2))->order() == 4);
    CHECK(cyclic(6)->is_abelian());
    CHECK(!dihedral(3)->is_abelian());
    CHECK(quaternion8()->element_order(1) == 2);   // -1
    CHECK(quaternion8()->element_order(2) == 4);   // i
    CHECK(symmetric(3)->element_order(3) == 3);    // a 3-cycle
}

TEST_CASE("corrupted tables are rejected") {
    // break the Latin square property
    std::vector<std::vector<int>> t = {{0, 1}, {1, 1}};
    CHECK_THROWS_AS((void)make_group(t), std::invalid_argument);
    // break the identity
    CHECK_THROWS_AS((void)make_group({{1, 0}, {0, 1}}), std::invalid_argument);
    // break associativity but keep the Latin square: the smallest examples
    // are order-5 Latin squares that are not group tables
    std::vector<std::vector<int>> q = {
        {0, 1, 2, 3, 4},
        {1, 0, 3, 4, 2},
        {2, 3, 4, 0, 1},
        {3, 4, 1, 2, 0},
        {4, 2, 0, 1, 3},
    };
    CHECK_THROWS_AS((void)make_group(q), std::invalid_argument);

    // property: swapping two entries of a valid table inside one row breaks
    // either the Latin property or associativity
    testsupport::Rng rng(17);
    GroupPtr g = dihedral(3);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<std::vector<int>> tbl(g->order(), std::vector<int>(g->order()));
        for (size_t i = 0; i < g->order(); ++i)
            for (size_t j = 0; j < g->order(); ++j)
                tbl[i][j] = g->mul(static_cast<int>(i), static_cast<int>(j));
        size_t i = 1 + rng.below(g->order() - 1);
        size_t j1 = rng.below(g->order()), j2 = rng.below(g->order());
        if (j1 == j2) continue;
        std::swap(tbl[i][j1], tbl[i][j2]);
        CHECK_THROWS_AS((void)make_group(tbl), std::invalid_argument);
    }
}

TEST_CASE("subgroup_generated") {
    GroupPtr s3 = symmetric(3);
    Subgroup t = subgroup_generated(s3, {1});  // a transposition
    CHECK(t.order() == 2);
    CHECK(subgroup_generated(s3, {}).order() == 1);
    std::vector<int> all = {0, 1, 2, 3, 4, 5};
    CHECK(subgroup_generated(s3, all).order() == 6);
}

TEST_CASE("normal_closure") {
    GroupPtr s3 = symmetric(3);
    Subgroup a3 = normal_closure(s3, {3});  // a 3-cycle
    CHECK(a3.elements == kA3);
    CHECK(a3.is_normal());
    // in an abelian group the normal closure is just the generated subgroup
    GroupPtr c12 = cyclic(12);
    CHECK(normal_closure(c12, {4}).same_elements(subgroup_generated(c12, {4})));
    CHECK(normal_closure(s3, {0}).order() == 1);
}

TEST_CASE("commutator_subgroup") {
    GroupPtr s3 = symmetric(3);
    Subgroup full = full_subgroup(s3);
    CHECK(commutator_subgroup(s3, full, full).elements == kA3);
    Subgroup a3{s3, kA3};
    CHECK(commutator_subgroup(s3, a3, full).elements == kA3);
    CHECK(commutator_subgroup(s3, full, trivial_subgroup(s3)).order() == 1);
}

TEST_CASE("lower central series") {
    GroupPtr d4 = dihedral(4);
    auto series = lower_central_series(d4, 5);
    REQUIRE(series.size() == 3);
    CHECK(series[1].elements == std::vector<int>{0, 2});  // <r^2>
    CHECK(series[2].order() == 1);

    auto ab = lower_central_series(cyclic(6), 4);
    REQUIRE(ab.size() == 2);
    CHECK(ab[1].order() == 1);

    auto s3s = lower_central_series(symmetric(3), 4);
    REQUIRE(s3s.size() == 2);  // stabilizes at A3
    CHECK(s3s[1].elements == kA3);
    CHECK(series_term(s3s, 3).elements == kA3);

    // nesting
    for (auto& g : {dihedral(4), symmetric(3), quaternion8()}) {
        auto s = lower_central_series(g, 6);
        for (size_t k = 1; k < s.size(); ++k)
            for (int x : s[k].elements) CHECK(s[k - 1].contains(x));
    }
}

TEST_CASE("relative series") {
    GroupPtr s3 = symmetric(3);
    PairOfGroups p(s3, Subgroup{s3, kA3});
    auto series = relative_series(p, 3);
    CHECK(series_term(series, 2).elements == kA3);  // [A3, S3] = A3, stable

    // central N: [N, G] = 1
    GroupPtr d4 = dihedral(4);
    PairOfGroups pc(d4, Subgroup{d4, {0, 2}});
    auto sc = relative_series(pc, 3);
    CHECK(series_term(sc, 2).order() == 1);

    // N = G reproduces the lower central series
    PairOfGroups pg(d4, full_subgroup(d4));
    auto sg = relative_series(pg, 5);
    auto lc = lower_central_series(d4, 5);
    REQUIRE(sg.size() == lc.size());
    for (size_t i = 0; i < sg.size(); ++i) CHECK(sg[i].same_elements(lc[i]));
}

TEST_CASE("quotient") {
    GroupPtr s3 = symmetric(3);
    QuotientResult q = quotient(s3, Subgroup{s3, kA3});
    CHECK(q.group->order() == 2);
    CHECK(q.projection.is_surjective());

    QuotientResult qt = quotient(s3, trivial_subgroup(s3));
    CHECK(qt.group->order() == 6);
    CHECK(qt.projection.is_injective());

    CHECK(quotient(s3, full_subgroup(s3)).group->order() == 1);

    // non-normal subgroup rejected
    Subgroup t = subgroup_generated(s3, {1});
    CHECK_THROWS_AS(quotient(s3, t), std::invalid_argument);

    for (auto& g : {dihedral(4), quaternion8(), symmetric(3), cyclic(8)})
        for (auto& n : normal_subgroups(g))
            CHECK(g->order() == n.order() * quotient(g, n).group->order());
}

TEST_CASE("abelianization") {
    CHECK(abelianize(quaternion8()).group == AbelianGroup(0, {2, 2}));
    CHECK(abelianize(symmetric(3)).group == AbelianGroup(0, {2}));
    CHECK(abelianize(cyclic(6)).group == AbelianGroup(0, {6}));
    CHECK(abelianize(dihedral(4)).group == AbelianGroup(0, {2, 2}));
    CHECK(abelianize(alternating(4)).group == AbelianGroup(0, {3}));
    CHECK(abelianize(trivial_group()).group == AbelianGroup());

    // coordinates: identity maps to zero, products add
    Abelianization ab = abelianize(direct_product(cyclic(4), cyclic(2)));
    GroupPtr g = direct_product(cyclic(4), cyclic(2));
    auto zero = ab.coords(0);
    for (int64_t v : zero) CHECK(v == 0);
}

TEST_CASE("quotient and abelianization commute") {
    for (auto& g : {dihedral(4), quaternion8(), symmetric(3), dihedral(6)}) {
        Abelianization gab = abelianize(g);
        for (auto& n : normal_subgroups(g)) {
            QuotientResult q = quotient(g, n);
            AbelianGroup direct = abelianize(q.group).group;
            // cokernel of (induced map of the inclusion N -> G on abelianizations)
            SubgroupGroup sg = subgroup_as_group(n);
            GroupHom incl(sg.group, g, sg.to_parent);
            abgrp::AbelianHom ind = induced_abelian_hom(incl, abelianize(sg.group), gab);
            AbelianGroup via_coker = abgrp::hom_cokernel(ind).group->canon();
            CHECK(direct == via_coker);
        }
    }
}

TEST_CASE("find_complement") {
    GroupPtr s3 = symmetric(3);
    PairOfGroups p(s3, Subgroup{s3, kA3});
    auto q = find_complement(p);
    REQUIRE(q.has_value());
    CHECK(q->order() == 2);
    CHECK(intersect(*q, p.normal).order() == 1);

    // Z4 has no complement for its Z2
    GroupPtr c4 = cyclic(4);
    PairOfGroups p2(c4, subgroup_generated(c4, {2}));
    CHECK(!find_complement(p2).has_value());

    PairOfGroups p3(s3, full_subgroup(s3));
    auto q3 = find_complement(p3);
    REQUIRE(q3.has_value());
    CHECK(q3->order() == 1);

    PairOfGroups p4(s3, trivial_subgroup(s3));
    auto q4 = find_complement(p4);
    REQUIRE(q4.has_value());
    CHECK(q4->order() == 6);

    // Z2 x Z2: each factor complements the other
    GroupPtr k4 = direct_product(cyclic(2), cyclic(2));
    PairOfGroups p5(k4, subgroup_generated(k4, {2}));  // first factor (1,0) -> index 2
    auto q5 = find_complement(p5);
    REQUIRE(q5.has_value());
    CHECK(q5->order() == 2);
}

TEST_CASE("induced abelian homs") {
    GroupPtr s3 = symmetric(3);
    QuotientResult q = quotient(s3, Subgroup{s3, kA3});
    abgrp::AbelianHom f = induced_abelian_hom(q.projection);
    CHECK(f.source->canon() == AbelianGroup(0, {2}));
    CHECK(f.target->canon() == AbelianGroup(0, {2}));
    // an isomorphism: kernel and cokernel trivial
    CHECK(abgrp::hom_kernel(f).group->canon() == AbelianGroup());
    CHECK(abgrp::hom_cokernel(f).group->canon() == AbelianGroup());

    abgrp::AbelianHom id = induced_abelian_hom(identity_hom(quaternion8()));
    CHECK(hom_equal(id, identity_hom(id.source)));

    // constant map to the trivial group induces the zero hom
    GroupPtr triv = trivial_group();
    GroupHom c(s3, triv, std::vector<int>(6, 0));
    abgrp::AbelianHom zc = induced_abelian_hom(c);
    CHECK(hom_is_zero(zc));
}

TEST_CASE("pair validation") {
    GroupPtr s3 = symmetric(3);
    CHECK_THROWS_AS(PairOfGroups(s3, subgroup_generated(s3, {1})), std::invalid_argument);
    CHECK_NOTHROW(PairOfGroups(s3, Subgroup{s3, kA3}));
}

TEST_SUITE_END();
