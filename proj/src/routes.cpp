#include "pairmult/routes.hpp"

#include <algorithm>
#include <stdexcept>

namespace pairmult {

using abgrp::AbelianGroup;
using abgrp::AbelianHom;
using fingrp::GroupPtr;
using fingrp::PairOfGroups;
using fingrp::Subgroup;

const char* route_name(Route r) {
    switch (r) {
        case Route::semidirect_kernel: return "semidirect-kernel";
        case Route::central_formula: return "central-formula";
        case Route::hopf_section: return "hopf-section";
        case Route::specialization: return "specialization";
    }
    return "?";
}

const char* interpretation_name(Interpretation i) {
    return i == Interpretation::literal ? "literal" : "reduced";
}

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::PASS: return "PASS";
        case CheckStatus::FAIL: return "FAIL";
        case CheckStatus::MISMATCH: return "MISMATCH";
        case CheckStatus::NA: return "NA";
        case CheckStatus::UNDERDETERMINED: return "UNDERDETERMINED";
    }
    return "?";
}

RouteResult RouteResult::of(Route r, AbelianGroup v, std::vector<std::string> notes) {
    RouteResult res;
    res.route = r;
    res.applicable = true;
    res.value = std::move(v);
    res.notes = std::move(notes);
    return res;
}

RouteResult RouteResult::na(Route r, std::string reason) {
    RouteResult res;
    res.route = r;
    res.applicable = false;
    res.na_reason = std::move(reason);
    return res;
}

PairContext make_pair_context(const PairOfGroups& p) {
    PairContext ctx{p,
                    fingrp::quotient(p.group, p.normal),
                    fingrp::abelianize(p.group),
                    {},
                    fingrp::subgroup_as_group(p.normal),
                    {},
                    {fingrp::trivial_group(), fingrp::identity_hom(fingrp::trivial_group())},
                    {},
                    {}};
    ctx.q_ab = fingrp::abelianize(ctx.quot.group);
    ctx.comm_ng = fingrp::commutator_subgroup(p.group, p.normal, fingrp::full_subgroup(p.group));
    // [N, G] as a subgroup of the standalone copy of N
    std::vector<int> k_els;
    for (int x : ctx.comm_ng.elements) k_els.push_back(ctx.n_group.from_parent[x]);
    std::sort(k_els.begin(), k_els.end());
    Subgroup k_in_n{ctx.n_group.group, std::move(k_els)};
    ctx.nbar_quot = fingrp::quotient(ctx.n_group.group, k_in_n);
    ctx.nbar_ab = fingrp::abelianize(ctx.nbar_quot.group);
    ctx.rel_series = fingrp::relative_series(p, 3);
    return ctx;
}

AbelianHom nbar_to_gab(const PairContext& ctx) {
    // element of ab(N/[N,G]) -> coset in N/[N,G] -> representative in N ->
    // element of G -> class in ab(G)
    size_t m = ctx.nbar_ab.ab_quotient->order();
    std::vector<int> elt_map(m);
    // minimal preimage in n_group for each nbar element
    std::vector<int> nbar_lift(ctx.nbar_quot.group->order(), -1);
    for (size_t x = 0; x < ctx.n_group.group->order(); ++x) {
        int c = ctx.nbar_quot.projection(static_cast<int>(x));
        if (nbar_lift[c] < 0) nbar_lift[c] = static_cast<int>(x);
    }
    for (size_t a = 0; a < m; ++a) {
        int in_nbar = ctx.nbar_ab.lift[a];
        int in_n = nbar_lift[in_nbar];
        int in_g = ctx.n_group.to_parent[in_n];
        elt_map[a] = ctx.g_ab.projection[in_g];
    }
    return fingrp::induced_hom_on_ab(ctx.nbar_ab, ctx.g_ab, elt_map);
}

RouteResult semidirect_kernel(const PairContext& ctx, const homology::Oracle& oracle) {
    auto q = fingrp::find_complement(ctx.pair);
    if (!q) return RouteResult::na(Route::semidirect_kernel, "no-complement");
    auto induced = oracle.induced_on_homology(ctx.quot.projection, 2);
    if (!induced.ok()) return RouteResult::na(Route::semidirect_kernel, induced.na_reason);
    AbelianGroup value = abgrp::hom_kernel(*induced).group->canon();
    std::string witness = "complement {";
    for (size_t i = 0; i < q->elements.size(); ++i)
        witness += (i ? "," : "") + ctx.pair.group->label(q->elements[i]);
    witness += "}";
    return RouteResult::of(Route::semidirect_kernel, std::move(value), {witness});
}

Verdict semidirect_splitting_check(const PairContext& ctx, const homology::Oracle& oracle) {
    Verdict v;
    auto q = fingrp::find_complement(ctx.pair);
    if (!q) {
        v.status = CheckStatus::NA;
        v.notes.push_back("no-complement");
        return v;
    }
    RouteResult kernel = semidirect_kernel(ctx, oracle);
    if (!kernel.applicable) {
        v.status = CheckStatus::NA;
        v.notes.push_back(kernel.na_reason);
        return v;
    }
    auto mg = oracle.schur_multiplier(ctx.pair.group);
    if (!mg.ok()) {
        v.status = CheckStatus::NA;
        v.notes.push_back(mg.na_reason);
        return v;
    }
    fingrp::SubgroupGroup qg = fingrp::subgroup_as_group(*q);
    auto mq = oracle.schur_multiplier(qg.group);
    if (!mq.ok()) {
        v.status = CheckStatus::NA;
        v.notes.push_back(mq.na_reason);
        return v;
    }
    AbelianGroup rhs = abgrp::direct_sum(*kernel.value, *mq);
    v.values.emplace_back("M(G)", mg->str());
    v.values.emplace_back("M(G,N)", kernel.value->str());
    v.values.emplace_back("M(Q)", mq->str());
    v.status = (*mg == rhs) ? CheckStatus::PASS : CheckStatus::FAIL;
    if (v.status == CheckStatus::FAIL)
        v.notes.push_back("M(G) != M(G,N) + M(Q): " + mg->str() + " vs " + rhs.str());
    return v;
}

RouteResult central_formula(const PairContext& ctx, int c, Interpretation interp) {
    const GroupPtr& g = ctx.pair.group;
    if (c < 1) return RouteResult::na(Route::central_formula, "c-must-be-positive");
    if (c == 1) {
        Subgroup z = fingrp::center(g);
        for (int x : ctx.pair.normal.elements)
            if (!z.contains(x)) return RouteResult::na(Route::central_formula, "not-central");
        AbelianGroup n_ab = fingrp::abelianize(ctx.n_group.group).group;
        AbelianGroup value = abgrp::tensor(ctx.g_ab.group, n_ab);
        return RouteResult::of(Route::central_formula, std::move(value),
                               {"G^ab (x) N with N central"});
    }
    // N_c-central: the relative series must vanish at stage c+1
    const Subgroup& tail = fingrp::series_term(ctx.rel_series, static_cast<size_t>(c) + 1);
    if (tail.order() != 1) return RouteResult::na(Route::central_formula, "not-nc-central");
    AbelianGroup q;
    std::vector<std::string> notes;
    if (interp == Interpretation::literal) {
        auto lcs = fingrp::lower_central_series(g, c);
        fingrp::QuotientResult qr =
            fingrp::quotient(g, fingrp::series_term(lcs, static_cast<size_t>(c)));
        q = fingrp::abelianize(qr.group).group;
        notes.push_back("interpretation=literal: Q = G/gamma_" + std::to_string(c) + "(G)");
    } else {
        q = ctx.g_ab.group;
        notes.push_back("interpretation=reduced: Q = G^ab");
    }
    AbelianGroup n_ab = fingrp::abelianize(ctx.n_group.group).group;
    if (!ctx.n_group.group->is_abelian())
        notes.push_back("N nonabelian: tensor taken over N^ab");
    AbelianGroup value = n_ab;
    for (int i = 0; i < c; ++i) value = abgrp::tensor(value, q);
    notes.push_back("N (x) Q^(x" + std::to_string(c) + ")");
    return RouteResult::of(Route::central_formula, std::move(value), std::move(notes));
}

RouteResult hopf_route(const PairContext& ctx, int c) {
    auto comp = fingrp::find_complement(ctx.pair);
    if (!comp) return RouteResult::na(Route::hopf_section, "no-complement");
    const GroupPtr& g = ctx.pair.group;
    if (!g->is_abelian())
        return RouteResult::na(Route::hopf_section, "presentation-out-of-scope: G not abelian");
    std::vector<std::vector<int64_t>> sub_coords;
    for (int x : ctx.pair.normal.elements)
        if (x != 0) sub_coords.push_back(ctx.g_ab.coords(x));
    nilfree::PresentationWithSubgroup pres =
        nilfree::presentation_for_abelian(ctx.g_ab.group, sub_coords);
    auto r = nilfree::baer_section(pres, c);
    if (!r.ok()) return RouteResult::na(Route::hopf_section, r.na_reason);
    return RouteResult::of(Route::hopf_section, *r.value,
                           {"S = preimage of N in the canonical presentation",
                            "[SV*F] read as [S," + std::to_string(c) + "F]"});
}

Verdict five_term_check(const PairContext& ctx, const homology::Oracle& oracle) {
    Verdict v;
    auto induced = oracle.induced_on_homology(ctx.quot.projection, 2);
    if (!induced.ok()) {
        v.status = CheckStatus::NA;
        v.notes.push_back(induced.na_reason);
        return v;
    }
    AbelianHom delta = nbar_to_gab(ctx);
    AbelianHom pi_ab =
        fingrp::induced_abelian_hom(ctx.quot.projection, ctx.g_ab, ctx.q_ab);

    v.values.emplace_back("M(G)", induced->source->canon().str());
    v.values.emplace_back("M(G/N)", induced->target->canon().str());
    v.values.emplace_back("N/[N,G]", ctx.nbar_ab.group.str());
    v.values.emplace_back("G^ab", ctx.g_ab.group.str());
    v.values.emplace_back("(G/N)^ab", ctx.q_ab.group.str());

    bool ok = true;
    // (a) surjectivity of G^ab -> (G/N)^ab
    if (!abgrp::hom_cokernel(pi_ab).group->canon().is_trivial()) {
        ok = false;
        v.notes.push_back("(a) G^ab -> (G/N)^ab not surjective");
    }
    // (b) exactness at G^ab
    seqcheck::AbelianSequence tail({delta, pi_ab}, {"N/[N,G]", "G^ab", "(G/N)^ab"});
    seqcheck::CheckResult ex = seqcheck::exact_at(tail, 0);
    if (!ex.ok) {
        ok = false;
        std::string w = "(b) exactness fails at G^ab";
        if (ex.witness) w += ": " + ex.witness->note;
        v.notes.push_back(std::move(w));
    }
    // (c) coker(M(G) -> M(G/N)) = ker(N/[N,G] -> G^ab)
    if (!seqcheck::coker_ker_compare(*induced, delta)) {
        ok = false;
        v.notes.push_back("(c) transgression-position identity fails: coker " +
                          abgrp::hom_cokernel(*induced).group->canon().str() + " vs ker " +
                          abgrp::hom_kernel(delta).group->canon().str());
    }
    v.status = ok ? CheckStatus::PASS : CheckStatus::FAIL;
    return v;
}

Verdict lemma38_check(const PairContext& ctx) {
    Verdict v;
    AbelianHom pi_ab =
        fingrp::induced_abelian_hom(ctx.quot.projection, ctx.g_ab, ctx.q_ab);
    AbelianHom wedge = abgrp::wedge2_hom(pi_ab);
    AbelianGroup kernel = abgrp::hom_kernel(wedge).group->canon();
    AbelianGroup expected = abgrp::direct_sum(
        abgrp::wedge2(ctx.nbar_ab.group), abgrp::tensor(ctx.nbar_ab.group, ctx.q_ab.group));
    bool surj = abgrp::hom_cokernel(wedge).group->canon().is_trivial();

    v.values.emplace_back("ker(wedge2 G^ab -> wedge2 (G/N)^ab)", kernel.str());
    v.values.emplace_back("wedge2(N/[N,G]) + (N/[N,G] (x) (G/N)^ab)", expected.str());
    if (kernel == expected && surj) {
        v.status = CheckStatus::PASS;
    } else {
        v.status = CheckStatus::FAIL;
        if (kernel != expected)
            v.notes.push_back("kernel mismatch: " + kernel.str() + " vs " + expected.str());
        if (!surj) v.notes.push_back("wedge-square map not surjective");
    }
    return v;
}

Verdict thm39_tail_check(const PairContext& ctx) {
    Verdict v;
    const Subgroup& gamma3 = fingrp::series_term(ctx.rel_series, 3);
    const Subgroup& gamma2 = fingrp::series_term(ctx.rel_series, 2);

    // both as subgroups of the standalone copy of N
    auto reindex = [&](const Subgroup& s) {
        std::vector<int> els;
        for (int x : s.elements) els.push_back(ctx.n_group.from_parent[x]);
        std::sort(els.begin(), els.end());
        return Subgroup{ctx.n_group.group, std::move(els)};
    };
    fingrp::QuotientResult q3 = fingrp::quotient(ctx.n_group.group, reindex(gamma3));
    fingrp::QuotientResult q2 = fingrp::quotient(ctx.n_group.group, reindex(gamma2));

    // natural surjection N/gamma3 -> N/[N,G]
    std::vector<int> lift(q3.group->order(), -1);
    for (size_t x = 0; x < ctx.n_group.group->order(); ++x)
        if (lift[q3.projection(static_cast<int>(x))] < 0)
            lift[q3.projection(static_cast<int>(x))] = static_cast<int>(x);
    std::vector<int> map(q3.group->order());
    for (size_t a = 0; a < map.size(); ++a) map[a] = q2.projection(lift[a]);
    fingrp::GroupHom nat(q3.group, q2.group, map);

    AbelianGroup middle = abgrp::direct_sum(
        abgrp::wedge2(ctx.nbar_ab.group), abgrp::tensor(ctx.nbar_ab.group, ctx.q_ab.group));
    v.values.emplace_back("|N/gamma3(G,N)|", std::to_string(q3.group->order()));
    v.values.emplace_back("|N/[N,G]|", std::to_string(q2.group->order()));
    v.values.emplace_back("wedge2(N/[N,G]) + (N/[N,G] (x) (G/N)^ab)", middle.str());
    v.notes.push_back("only the surjectivity of N/gamma3(G,N) -> N/[N,G] is asserted");
    v.notes.push_back("gamma_k(G,N) read as gamma_1 = N, gamma_{k+1} = [gamma_k, G]");
    v.status = nat.is_surjective() ? CheckStatus::PASS : CheckStatus::FAIL;
    return v;
}

namespace {

void add_specializations(std::vector<RouteResult>& routes, const PairContext& ctx, int c,
                         const homology::Oracle& oracle) {
    if (ctx.pair.normal.order() == 1) {
        routes.push_back(RouteResult::of(Route::specialization, AbelianGroup(),
                                         {"N = 1 forces a trivial invariant"}));
        return;
    }
    if (ctx.pair.normal.order() == ctx.pair.group->order()) {
        if (c == 1) {
            auto mg = oracle.schur_multiplier(ctx.pair.group);
            if (mg.ok()) {
                routes.push_back(RouteResult::of(
                    Route::specialization, *mg, {"N = G: the absolute invariant via the bar oracle"}));
                return;
            }
            routes.push_back(RouteResult::na(Route::specialization, mg.na_reason));
            return;
        }
        // cyclic G: the invariant of (C, C) is trivial in every class
        bool cyclic = false;
        for (size_t x = 1; x < ctx.pair.group->order(); ++x)
            if (ctx.pair.group->element_order(static_cast<int>(x)) ==
                static_cast<int>(ctx.pair.group->order())) {
                cyclic = true;
                break;
            }
        if (cyclic)
            routes.push_back(RouteResult::of(Route::specialization, AbelianGroup(),
                                             {"cyclic G with N = G"}));
    }
}

} // namespace

ConsistencyVerdict consistency_audit(const PairContext& ctx, int c,
                                     const homology::Oracle& oracle) {
    ConsistencyVerdict cv;
    add_specializations(cv.routes, ctx, c, oracle);
    if (c == 1) {
        cv.routes.push_back(semidirect_kernel(ctx, oracle));
        cv.routes.push_back(hopf_route(ctx, c));
        cv.routes.push_back(central_formula(ctx, c, Interpretation::reduced));
    } else {
        cv.routes.push_back(
            RouteResult::na(Route::semidirect_kernel, "no-variety-oracle-above-c1"));
        cv.routes.push_back(hopf_route(ctx, c));
        cv.routes.push_back(central_formula(ctx, c, Interpretation::literal));
        cv.routes.push_back(central_formula(ctx, c, Interpretation::reduced));
    }

    bool mismatch = false;
    bool any = false;
    for (size_t i = 0; i < cv.routes.size(); ++i) {
        if (!cv.routes[i].applicable) continue;
        any = true;
        for (size_t j = i + 1; j < cv.routes.size(); ++j) {
            if (!cv.routes[j].applicable) continue;
            bool agree = *cv.routes[i].value == *cv.routes[j].value;
            cv.agreement.emplace_back(i, j, agree);
            if (!agree) mismatch = true;
        }
    }
    cv.status = !any             ? CheckStatus::UNDERDETERMINED
                : mismatch       ? CheckStatus::MISMATCH
                                 : CheckStatus::PASS;
    if (cv.status == CheckStatus::UNDERDETERMINED) {
        // the defining sequence still pins part of the invariant
        auto induced = oracle.induced_on_homology(ctx.quot.projection, 2);
        if (induced.ok()) {
            AbelianGroup k = abgrp::hom_kernel(*induced).group->canon();
            cv.constraints.push_back(
                "five-term: the invariant surjects onto ker(M(G) -> M(G/N)) = " + k.str());
            AbelianGroup ck = abgrp::hom_cokernel(*induced).group->canon();
            cv.constraints.push_back("five-term: coker(M(G) -> M(G/N)) = " + ck.str() +
                                     " = ker(N/[N,G] -> G^ab)");
        } else {
            cv.constraints.push_back("five-term constraints unavailable: " + induced.na_reason);
        }
    }

    auto pick = [&](Route r) -> bool {
        for (const RouteResult& rr : cv.routes)
            if (rr.route == r && rr.applicable) {
                cv.headline = rr.value;
                cv.headline_route = route_name(r);
                return true;
            }
        return false;
    };
    pick(Route::hopf_section) || pick(Route::semidirect_kernel) ||
        pick(Route::specialization) || pick(Route::central_formula);
    return cv;
}

Outcome<AbelianGroup> pair_value(const PairContext& ctx, int c, const homology::Oracle& oracle) {
    ConsistencyVerdict cv = consistency_audit(ctx, c, oracle);
    if (!cv.headline) return Outcome<AbelianGroup>::na("no-applicable-route");
    return Outcome<AbelianGroup>::of(*cv.headline);
}

Verdict mn_check(const GroupPtr& g, const Subgroup& m, const Subgroup& n, int c,
                 const homology::Oracle& oracle) {
    Verdict v;
    std::vector<int> seeds = m.elements;
    seeds.insert(seeds.end(), n.elements.begin(), n.elements.end());
    Subgroup mn = fingrp::subgroup_generated(g, seeds);
    v.values.emplace_back("|MN|", std::to_string(mn.order()));
    v.values.emplace_back("|M|", std::to_string(m.order()));
    v.values.emplace_back("|McapN|", std::to_string(fingrp::intersect(m, n).order()));
    v.notes.push_back(m.same_elements(mn) ? "hypothesis M = MN holds"
                                          : "hypothesis M = MN does not hold; recorded only");

    bool hypothesis = m.same_elements(mn);

    fingrp::SubgroupGroup mn_g = fingrp::subgroup_as_group(mn);
    fingrp::SubgroupGroup m_g = fingrp::subgroup_as_group(m);

    auto reindex = [](const fingrp::SubgroupGroup& host, const Subgroup& s) {
        std::vector<int> els;
        for (int x : s.elements) {
            int y = host.from_parent[x];
            if (y < 0) throw std::invalid_argument("subgroup not inside host");
            els.push_back(y);
        }
        std::sort(els.begin(), els.end());
        return Subgroup{host.group, std::move(els)};
    };

    try {
        PairOfGroups p1(mn_g.group, reindex(mn_g, n));
        PairOfGroups p2(m_g.group, reindex(m_g, fingrp::intersect(m, n)));
        PairContext c1 = make_pair_context(p1);
        PairContext c2 = make_pair_context(p2);
        auto v1 = pair_value(c1, c, oracle);
        auto v2 = pair_value(c2, c, oracle);
        if (v1.ok()) v.values.emplace_back("M(MN,N)", v1->str());
        if (v2.ok()) v.values.emplace_back("M(M,McapN)", v2->str());
        if (!hypothesis) {
            // the statement only covers M = MN; both sides are recorded
            v.status = CheckStatus::NA;
            return v;
        }
        // under the hypothesis MN = M and M cap N = N, so the two sides are
        // the identical pair; values are compared when computable
        if (v1.ok() && v2.ok() && !(*v1.value == *v2.value)) {
            v.status = CheckStatus::MISMATCH;
            return v;
        }
        v.notes.push_back("M = MN makes both sides the identical pair");
        v.status = CheckStatus::PASS;
    } catch (const std::invalid_argument& e) {
        v.status = CheckStatus::NA;
        v.notes.push_back(std::string("inapplicable: ") + e.what());
    }
    return v;
}

} // namespace pairmult
