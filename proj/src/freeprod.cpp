#include "pairmult/freeprod.hpp"

#include <numeric>

namespace freeprod {

using abgrp::direct_sum;
using abgrp::tensor;
using abgrp::tor;

PairInvariantData tuple_from_pair(const pairmult::PairContext& ctx,
                                  const homology::Oracle& oracle) {
    PairInvariantData d;
    d.source = "computed-from-group";
    auto m1 = pairmult::pair_value(ctx, 1, oracle);
    if (m1.ok()) d.m1 = *m1.value;
    auto m2 = pairmult::pair_value(ctx, 2, oracle);
    if (m2.ok()) d.m2 = *m2.value;
    d.n_mod = ctx.nbar_ab.group;
    d.q_ab = ctx.q_ab.group;
    d.g_ab = ctx.g_ab.group;
    auto mq = oracle.schur_multiplier(ctx.quot.group);
    if (mq.ok()) d.m_q = *mq.value;
    auto mg = oracle.schur_multiplier(ctx.pair.group);
    if (mg.ok()) d.m_g = *mg.value;
    auto h3 = oracle.homology(ctx.quot.group, 3);
    if (h3.ok()) d.h3_q = *h3.value;
    return d;
}

Outcome<AbelianGroup> eval_c1(const PairInvariantData& d1, const PairInvariantData& d2) {
    if (!d1.m1 || !d2.m1) return Outcome<AbelianGroup>::na("missing-field: m1");
    return Outcome<AbelianGroup>::of(direct_sum(*d1.m1, *d2.m1));
}

Outcome<std::vector<std::pair<std::string, AbelianGroup>>> eval_c2_terms(
    const PairInvariantData& d1, const PairInvariantData& d2) {
    using R = Outcome<std::vector<std::pair<std::string, AbelianGroup>>>;
    auto need = [](const std::optional<AbelianGroup>& f, const char* name) {
        return f ? std::string() : std::string("missing-field: ") + name;
    };
    for (const auto& [f, n] :
         std::initializer_list<std::pair<const std::optional<AbelianGroup>*, const char*>>{
             {&d1.m2, "m2(1)"},       {&d2.m2, "m2(2)"},     {&d1.m1, "m1(1)"},
             {&d2.m1, "m1(2)"},       {&d1.n_mod, "n_mod(1)"}, {&d2.n_mod, "n_mod(2)"},
             {&d1.q_ab, "q_ab(1)"},   {&d2.q_ab, "q_ab(2)"}, {&d1.m_q, "m_q(1)"},
             {&d2.m_q, "m_q(2)"}}) {
        std::string miss = need(*f, n);
        if (!miss.empty()) return R::na(miss);
    }
    std::vector<std::pair<std::string, AbelianGroup>> terms;
    terms.emplace_back("M2(G1,N1)", *d1.m2);
    terms.emplace_back("M2(G2,N2)", *d2.m2);
    terms.emplace_back("M(G1,N1) (x) N2/[N2,G2]", tensor(*d1.m1, *d2.n_mod));
    terms.emplace_back("M(G2,N2) (x) N1/[N1,G1]", tensor(*d2.m1, *d1.n_mod));
    terms.emplace_back("M(G2/N2) (x) N1/[N1,G1]", tensor(*d2.m_q, *d1.n_mod));
    terms.emplace_back("M(G1/N1) (x) N2/[N2,G2]", tensor(*d1.m_q, *d2.n_mod));
    terms.emplace_back("(G1/N1)^ab (x) M(G2,N2)", tensor(*d1.q_ab, *d2.m1));
    terms.emplace_back("(G2/N2)^ab (x) M(G1,N1)", tensor(*d2.q_ab, *d1.m1));
    terms.emplace_back("Tor(N1/[N1,G1], N2/[N2,G2])", tor(*d1.n_mod, *d2.n_mod));
    terms.emplace_back("Tor((G1/N1)^ab, N2/[N2,G2])", tor(*d1.q_ab, *d2.n_mod));
    terms.emplace_back("Tor((G2/N2)^ab, N1/[N1,G1])", tor(*d2.q_ab, *d1.n_mod));
    return R::of(std::move(terms));
}

Outcome<AbelianGroup> eval_c2(const PairInvariantData& d1, const PairInvariantData& d2) {
    auto terms = eval_c2_terms(d1, d2);
    if (!terms.ok()) return Outcome<AbelianGroup>::na(terms.na_reason);
    AbelianGroup acc;
    for (const auto& [name, g] : *terms.value) acc = direct_sum(acc, g);
    return Outcome<AbelianGroup>::of(std::move(acc));
}

const char* battery_outcome_name(BatteryOutcome b) {
    switch (b) {
        case BatteryOutcome::all_hold: return "all-hold";
        case BatteryOutcome::violated: return "violated";
        case BatteryOutcome::underdetermined: return "underdetermined";
    }
    return "?";
}

namespace {

Condition cond(const std::string& name, const std::optional<AbelianGroup>& value,
               const std::string& na_reason = "") {
    Condition c;
    c.name = name;
    if (value) {
        c.holds = value->is_trivial();
        c.value = value->str();
    } else {
        c.value = na_reason.empty() ? "NA" : na_reason;
    }
    return c;
}

std::optional<AbelianGroup> opt_tensor(const std::optional<AbelianGroup>& a,
                                       const std::optional<AbelianGroup>& b) {
    if (!a || !b) return std::nullopt;
    return tensor(*a, *b);
}

std::optional<AbelianGroup> opt_tor(const std::optional<AbelianGroup>& a,
                                    const std::optional<AbelianGroup>& b) {
    if (!a || !b) return std::nullopt;
    return tor(*a, *b);
}

std::vector<Condition> g_level_conditions(const PairInvariantData& d1,
                                          const PairInvariantData& d2) {
    std::vector<Condition> out;
    out.push_back(cond("G1^ab (x) G2^ab", opt_tensor(d1.g_ab, d2.g_ab)));
    out.push_back(cond("M(G1) (x) G2^ab", opt_tensor(d1.m_g, d2.g_ab), "missing M(G1)"));
    out.push_back(cond("M(G2) (x) G1^ab", opt_tensor(d2.m_g, d1.g_ab), "missing M(G2)"));
    out.push_back(cond("Tor(G1^ab, G2^ab)", opt_tor(d1.g_ab, d2.g_ab)));
    return out;
}

BatteryOutcome summarize(const std::vector<const std::vector<Condition>*>& blocks) {
    bool any_na = false;
    for (const auto* b : blocks)
        for (const Condition& c : *b) {
            if (!c.holds.has_value()) {
                any_na = true;
            } else if (!*c.holds) {
                return BatteryOutcome::violated;
            }
        }
    return any_na ? BatteryOutcome::underdetermined : BatteryOutcome::all_hold;
}

} // namespace

ConditionReport thm43_hypotheses(const PairInvariantData& d1, const PairInvariantData& d2) {
    ConditionReport r;
    auto& q = r.quotient_conditions;
    q.push_back(cond("(G1/N1)^ab (x) (G2/N2)^ab", opt_tensor(d1.q_ab, d2.q_ab)));
    q.push_back(cond("M(G1/N1) (x) M(G2/N2)", opt_tensor(d1.m_q, d2.m_q)));
    q.push_back(cond("Tor((G1/N1)^ab, (G2/N2)^ab)", opt_tor(d1.q_ab, d2.q_ab)));
    q.push_back(cond("(G1/N1)^ab (x) H3(G2/N2)", opt_tensor(d1.q_ab, d2.h3_q),
                     "missing H3(G2/N2)"));
    q.push_back(cond("M(G1/N1) (x) (G2/N2)^ab", opt_tensor(d1.m_q, d2.q_ab)));
    q.push_back(cond("Tor((G1/N1)^ab, M(G2/N2))", opt_tor(d1.q_ab, d2.m_q)));
    q.push_back(cond("(G2/N2)^ab (x) H3(G1/N1)", opt_tensor(d2.q_ab, d1.h3_q),
                     "missing H3(G1/N1)"));
    q.push_back(cond("M(G2/N2) (x) (G1/N1)^ab", opt_tensor(d2.m_q, d1.q_ab)));
    q.push_back(cond("Tor((G2/N2)^ab, M(G1/N1))", opt_tor(d2.q_ab, d1.m_q)));
    r.g_conditions = g_level_conditions(d1, d2);
    r.overall = summarize({&r.quotient_conditions, &r.g_conditions});
    return r;
}

CoprimeReport cor44_coprime(const fingrp::GroupPtr& g1, const fingrp::GroupPtr& g2,
                            const homology::Oracle& oracle) {
    CoprimeReport r;
    fingrp::Abelianization a1 = fingrp::abelianize(g1);
    fingrp::Abelianization a2 = fingrp::abelianize(g2);
    r.ab_order1 = *a1.group.order();
    r.ab_order2 = *a2.group.order();
    r.coprime = std::gcd(r.ab_order1, r.ab_order2) == 1;
    if (!r.coprime) return r;
    r.conclusion =
        "M^(c)(G1*G2, <N1*N2>) decomposes as M^(c)(G1,N1) + M^(c)(G2,N2) for all c >= 1";

    PairInvariantData d1, d2;
    d1.source = d2.source = "computed-from-group";
    d1.g_ab = a1.group;
    d2.g_ab = a2.group;
    auto m1 = oracle.schur_multiplier(g1);
    if (m1.ok()) d1.m_g = *m1.value;
    auto m2 = oracle.schur_multiplier(g2);
    if (m2.ok()) d2.m_g = *m2.value;
    r.g_conditions = g_level_conditions(d1, d2);
    bool any_na = false, any_false = false;
    for (const Condition& c : r.g_conditions) {
        if (!c.holds.has_value())
            any_na = true;
        else if (!*c.holds)
            any_false = true;
    }
    if (any_false)
        r.implication_holds = false;
    else if (!any_na)
        r.implication_holds = true;
    return r;
}

} // namespace freeprod
