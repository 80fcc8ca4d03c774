#pragma once

#include "pairmult/abgrp.hpp"
#include "pairmult/homology.hpp"
#include "pairmult/outcome.hpp"
#include "pairmult/routes.hpp"

#include <optional>
#include <string>
#include <vector>

namespace freeprod {

using abgrp::AbelianGroup;
using pairmult::Outcome;

// Invariant tuple of one pair (G, N). The evaluators consume these instead of
// materializing free products, which are infinite for nontrivial factors.
// Fields are optional so that supplied tuples can exercise the evaluators
// beyond oracle reach; missing required fields surface as NA.
struct PairInvariantData {
    std::optional<AbelianGroup> m1;     // M(G, N)
    std::optional<AbelianGroup> m2;     // M^(2)(G, N)
    std::optional<AbelianGroup> n_mod;  // N/[N,G]
    std::optional<AbelianGroup> q_ab;   // (G/N)^ab
    std::optional<AbelianGroup> m_q;    // M(G/N)
    std::optional<AbelianGroup> g_ab;   // G^ab
    std::optional<AbelianGroup> m_g;    // M(G), supplied alongside for the G-level battery
    std::optional<AbelianGroup> h3_q;   // H3(G/N)
    std::string source;                 // "computed-from-group" | "supplied"
};

// Auto-fill from a pair through the route and homology pipelines; fields out
// of reach stay empty.
PairInvariantData tuple_from_pair(const pairmult::PairContext& ctx,
                                  const homology::Oracle& oracle);

// M(G1*G2, <N1*N2>) = M(G1,N1) + M(G2,N2)
Outcome<AbelianGroup> eval_c1(const PairInvariantData& d1, const PairInvariantData& d2);

// the 11-summand decomposition of M^(2)(G1*G2, <N1*N2>), in document order
Outcome<AbelianGroup> eval_c2(const PairInvariantData& d1, const PairInvariantData& d2);
// the same sum with each summand listed separately (for bookkeeping tests)
Outcome<std::vector<std::pair<std::string, AbelianGroup>>> eval_c2_terms(
    const PairInvariantData& d1, const PairInvariantData& d2);

struct Condition {
    std::string name;
    std::optional<bool> holds;  // empty = not computable (missing H3)
    std::string value;          // canonical form, or the NA reason
};

enum class BatteryOutcome { all_hold, violated, underdetermined };
const char* battery_outcome_name(BatteryOutcome b);

struct ConditionReport {
    std::vector<Condition> quotient_conditions;  // nine
    std::vector<Condition> g_conditions;         // four
    BatteryOutcome overall = BatteryOutcome::underdetermined;
};

ConditionReport thm43_hypotheses(const PairInvariantData& d1, const PairInvariantData& d2);

struct CoprimeReport {
    bool coprime = false;
    int64_t ab_order1 = 0, ab_order2 = 0;
    std::string conclusion;  // set when coprime
    // the G-level battery under coprimality; empty when not computable
    std::vector<Condition> g_conditions;
    std::optional<bool> implication_holds;
};

// gcd(|G1^ab|, |G2^ab|) = 1 test plus the implication audit against the
// G-level conditions (reported, not presumed).
CoprimeReport cor44_coprime(const fingrp::GroupPtr& g1, const fingrp::GroupPtr& g2,
                            const homology::Oracle& oracle);

} // namespace freeprod
