#pragma once

#include "pairmult/abgrp.hpp"
#include "pairmult/fingrp.hpp"
#include "pairmult/homology.hpp"
#include "pairmult/nilfree.hpp"
#include "pairmult/outcome.hpp"
#include "pairmult/seqcheck.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pairmult {

enum class Route { semidirect_kernel, central_formula, hopf_section, specialization };
const char* route_name(Route r);

enum class Interpretation { literal, reduced };
const char* interpretation_name(Interpretation i);

// One evaluated route for a pair invariant: which formula, whether it was
// applicable, the value when it was, a machine-readable NA reason when not,
// and free-form provenance notes (interpretation flags and witnesses).
struct RouteResult {
    Route route;
    bool applicable = false;
    std::optional<abgrp::AbelianGroup> value;
    std::string na_reason;
    std::vector<std::string> notes;

    static RouteResult of(Route r, abgrp::AbelianGroup v, std::vector<std::string> notes = {});
    static RouteResult na(Route r, std::string reason);
};

enum class CheckStatus { PASS, FAIL, MISMATCH, NA, UNDERDETERMINED };
const char* status_name(CheckStatus s);

// Per-check outcome, with serialized values and human-checkable witnesses.
struct Verdict {
    CheckStatus status = CheckStatus::NA;
    std::vector<std::pair<std::string, std::string>> values;
    std::vector<std::string> notes;
};

// Precomputed data shared by the per-pair checks: the quotient, the
// abelianizations, N as a standalone group, and N/[N,G].
struct PairContext {
    fingrp::PairOfGroups pair;
    fingrp::QuotientResult quot;  // G/N with projection
    fingrp::Abelianization g_ab;
    fingrp::Abelianization q_ab;
    fingrp::SubgroupGroup n_group;
    fingrp::Subgroup comm_ng;               // [N, G] inside G
    fingrp::QuotientResult nbar_quot;       // N -> N/[N,G]
    fingrp::Abelianization nbar_ab;
    std::vector<fingrp::Subgroup> rel_series;  // relative series to depth 3
};

PairContext make_pair_context(const fingrp::PairOfGroups& p);

// the induced map N/[N,G] -> G^ab in canonical coordinates
abgrp::AbelianHom nbar_to_gab(const PairContext& ctx);

// ker(M(G) -> M(G/N)) when a complement exists and homology is in bounds
RouteResult semidirect_kernel(const PairContext& ctx, const homology::Oracle& oracle);

// M(G) = M(G,N) + M(Q) for a complement Q
Verdict semidirect_splitting_check(const PairContext& ctx, const homology::Oracle& oracle);

// central case: c = 1 needs N central, value G^ab (x) N; c >= 2 needs the
// relative series to vanish at stage c+1, value N^ab (x) Q^(x c) with
// Q = G/gamma_c(G) (literal) or G^ab (reduced)
RouteResult central_formula(const PairContext& ctx, int c, Interpretation interp);

// Hopf-type section via the free nilpotent engine; needs a complement and an
// in-scope presentation (auto-generated for abelian G)
RouteResult hopf_route(const PairContext& ctx, int c);

// computable exactness consequences of the five-term tail
Verdict five_term_check(const PairContext& ctx, const homology::Oracle& oracle);

// kernel decomposition of the exterior-square map
Verdict lemma38_check(const PairContext& ctx);

// surjectivity of N/gamma_3(G,N) -> N/[N,G] plus recorded orders
Verdict thm39_tail_check(const PairContext& ctx);

// All routes on one pair with a pairwise agreement matrix.
struct ConsistencyVerdict {
    std::vector<RouteResult> routes;
    std::vector<std::tuple<size_t, size_t, bool>> agreement;  // applicable pairs only
    CheckStatus status = CheckStatus::UNDERDETERMINED;
    std::optional<abgrp::AbelianGroup> headline;
    std::string headline_route;
    // five-term bounds attached when no route determines the invariant
    std::vector<std::string> constraints;
};

ConsistencyVerdict consistency_audit(const PairContext& ctx, int c,
                                     const homology::Oracle& oracle);

// headline value per route precedence (hopf > semidirect > specialization >
// central); NA with reason when no route applies
Outcome<abgrp::AbelianGroup> pair_value(const PairContext& ctx, int c,
                                        const homology::Oracle& oracle);

// M(MN, N) vs M(M, M cap N) through whatever routes apply
Verdict mn_check(const fingrp::GroupPtr& g, const fingrp::Subgroup& m,
                 const fingrp::Subgroup& n, int c, const homology::Oracle& oracle);

} // namespace pairmult
