#pragma once

#include "pairmult/intmat.hpp"
#include "pairmult/snf.hpp"

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace abgrp {

// Canonical finitely generated abelian group: free rank plus an
// invariant-factor chain d1 | d2 | ... | dk, each di >= 2. Two values are
// isomorphic iff they are field-equal.
struct AbelianGroup {
    uint64_t free_rank = 0;
    std::vector<int64_t> torsion;

    AbelianGroup() = default;
    AbelianGroup(uint64_t fr, std::vector<int64_t> t);

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_finite() const { return free_rank == 0; }
    // product of invariant factors; empty when infinite
    std::optional<int64_t> order() const;
    size_t gen_count() const { return torsion.size() + free_rank; }

    bool operator==(const AbelianGroup& o) const = default;

    std::string str() const;  // e.g. "Z^2 + Z/2 + Z/6", "0"
};

inline bool is_isomorphic(const AbelianGroup& a, const AbelianGroup& b) { return a == b; }

// Canonical form of Z^cols / rowspace(rel). Divisor-only fast path.
AbelianGroup canonical_quotient(const IntMatrix& relation_rows, size_t cols);

// A workbench presentation: gens generators subject to the rows of a
// relation matrix, with the canonical form and the unimodular coordinate
// change to canonical generators computed once up front.
class PresentedAbelian {
public:
    // relation_rows: each row is a relation over the generators
    PresentedAbelian(size_t gens, const IntMatrix& relation_rows);

    size_t gens() const { return gens_; }
    const IntMatrix& relations() const { return relations_; }       // HNF-compressed rows
    const IntMatrix& relation_cols() const { return rel_cols_; }    // transposed
    const AbelianGroup& canon() const { return canon_; }

    // presentation coordinates -> canonical coordinates
    // (torsion entries reduced into [0, d_i), free entries exact)
    std::vector<int64_t> to_canonical(std::span<const int64_t> x) const;
    // canonical generator j as a presentation-coordinate vector
    std::vector<int64_t> canonical_generator(size_t j) const;

    bool is_relation(std::span<const int64_t> x) const;

private:
    size_t gens_;
    IntMatrix relations_;  // m' x gens, HNF rows
    IntMatrix rel_cols_;   // gens x m'
    AbelianGroup canon_;
    IntMatrix u_, u_inv_;            // U * rel_cols * V = D; coords map x -> U x
    std::vector<int64_t> diag_;      // d_i per coordinate (0 beyond rank)
    std::vector<size_t> kept_;       // coordinate indices kept (torsion then free)
};

using PresentedPtr = std::shared_ptr<const PresentedAbelian>;

PresentedPtr make_presented(size_t gens, const IntMatrix& relation_rows);
// gens = torsion + free generators, relations diag(d_i)
PresentedPtr canonical_presentation(const AbelianGroup& g);

// Homomorphism between presented groups; matrix column j is the image of
// source generator j in target generator coordinates. Construction verifies
// well-definedness (every source relation maps into the target lattice).
struct AbelianHom {
    PresentedPtr source;
    PresentedPtr target;
    IntMatrix matrix;  // target.gens() x source.gens()

    AbelianHom(PresentedPtr src, PresentedPtr dst, IntMatrix m);
};

// Structural equality: same generator count and same (compressed) relations.
bool same_presentation(const PresentedAbelian& a, const PresentedAbelian& b);

AbelianHom identity_hom(const PresentedPtr& p);
AbelianHom zero_hom(const PresentedPtr& src, const PresentedPtr& dst);
AbelianHom compose(const AbelianHom& g, const AbelianHom& f);  // g after f
bool hom_is_zero(const AbelianHom& f);
bool hom_equal(const AbelianHom& f, const AbelianHom& g);  // as maps, same presentations

// Rewrites f in canonical coordinates on both sides.
AbelianHom as_canonical_hom(const AbelianHom& f);

struct SubquotientPart {
    PresentedPtr group;
    AbelianHom map;  // kernel: inclusion into source; image: inclusion into
                     // target; cokernel: projection from target
};

SubquotientPart hom_kernel(const AbelianHom& f);
SubquotientPart hom_image(const AbelianHom& f);
SubquotientPart hom_cokernel(const AbelianHom& f);

// Generating columns of ker f inside source presentation coordinates.
IntMatrix kernel_generators(const AbelianHom& f);

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);
AbelianGroup tensor(const AbelianGroup& a, const AbelianGroup& b);
AbelianGroup tor(const AbelianGroup& a, const AbelianGroup& b);
AbelianGroup wedge2(const AbelianGroup& a);

// Exterior square as a presentation on pairs e_i ^ e_j (i < j) of the
// canonical generators, with lifted relations; e_j ^ e_i is rewritten with a
// sign. wedge2(a) == wedge2_presentation(a)->canon().
PresentedPtr wedge2_presentation(const AbelianGroup& a);
// Induced map on exterior squares of a hom between canonical presentations.
AbelianHom wedge2_hom(const AbelianHom& f);

// Multiplication by k on the canonical presentation of g.
AbelianHom mult_hom(const AbelianGroup& g, int64_t k);

} // namespace abgrp
