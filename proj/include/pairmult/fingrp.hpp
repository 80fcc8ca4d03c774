#pragma once

#include "pairmult/abgrp.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fingrp {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Finite group as a Cayley table over element indices 0..n-1, element 0 the
// identity. Construction checks every group axiom and reports a witness for
// the first violation.
class FiniteGroup {
public:
    explicit FiniteGroup(std::vector<std::vector<int>> table,
                         std::vector<std::string> labels = {});

    size_t order() const { return n_; }
    int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    // conjugate of x by g
    int conj(int x, int g) const { return mul(mul(inv(g), x), g); }
    // [a, b] = a^-1 b^-1 a b
    int comm(int a, int b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
    int pow(int a, int64_t e) const;
    int element_order(int a) const;
    bool is_abelian() const;

    const std::string& label(int i) const { return labels_[i]; }

private:
    size_t n_;
    std::vector<int> table_;
    std::vector<int> inv_;
    std::vector<std::string> labels_;
};

GroupPtr make_group(std::vector<std::vector<int>> table, std::vector<std::string> labels = {});

GroupPtr trivial_group();
GroupPtr cyclic(int n);
GroupPtr dihedral(int n);  // order 2n
GroupPtr quaternion8();
GroupPtr symmetric(int n);   // n <= 4
GroupPtr alternating(int n); // n <= 4
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

struct Subgroup {
    GroupPtr parent;
    std::vector<int> elements;  // sorted, includes 0

    size_t order() const { return elements.size(); }
    bool contains(int x) const;
    bool is_normal() const;
    bool same_elements(const Subgroup& o) const { return elements == o.elements; }
};

Subgroup trivial_subgroup(GroupPtr g);
Subgroup full_subgroup(GroupPtr g);
Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& seeds);
Subgroup normal_closure(const GroupPtr& g, const std::vector<int>& seeds);
Subgroup commutator_subgroup(const GroupPtr& g, const Subgroup& a, const Subgroup& b);
Subgroup center(const GroupPtr& g);
Subgroup intersect(const Subgroup& a, const Subgroup& b);

// gamma_1 = G, gamma_{k+1} = [gamma_k, G]; truncated at stabilization
std::vector<Subgroup> lower_central_series(const GroupPtr& g, int depth);
// entry k of a (possibly truncated) series, clamped at the stable tail
const Subgroup& series_term(const std::vector<Subgroup>& series, size_t k);

std::vector<Subgroup> all_subgroups(const GroupPtr& g);
std::vector<Subgroup> normal_subgroups(const GroupPtr& g);

// Verified homomorphism given by an image table.
struct GroupHom {
    GroupPtr source, target;
    std::vector<int> map;

    GroupHom(GroupPtr src, GroupPtr dst, std::vector<int> images);
    int operator()(int x) const { return map[x]; }
    bool is_surjective() const;
    bool is_injective() const;
};

GroupHom identity_hom(const GroupPtr& g);
GroupHom compose(const GroupHom& g, const GroupHom& f);

// A group with a distinguished normal subgroup; normality validated.
struct PairOfGroups {
    GroupPtr group;
    Subgroup normal;

    PairOfGroups(GroupPtr g, Subgroup n);
};

// gamma_1(G,N) = N, gamma_{k+1}(G,N) = [gamma_k(G,N), G]; truncated as above
std::vector<Subgroup> relative_series(const PairOfGroups& p, int depth);

struct QuotientResult {
    GroupPtr group;
    GroupHom projection;
};
// coset group with deterministic coset numbering (by minimal representative)
QuotientResult quotient(const GroupPtr& g, const Subgroup& n);

struct SubgroupGroup {
    GroupPtr group;
    std::vector<int> to_parent;    // element index -> parent index
    std::vector<int> from_parent;  // parent index -> element index or -1
};
SubgroupGroup subgroup_as_group(const Subgroup& s);

// Abelianization together with enough bookkeeping to express elements in the
// canonical coordinates of the quotient and to lift canonical generators.
struct Abelianization {
    abgrp::AbelianGroup group;
    GroupPtr ab_quotient;            // G / [G,G]
    std::vector<int> projection;     // element of G -> element of ab_quotient
    std::vector<int> lift;           // element of ab_quotient -> minimal preimage in G
    std::vector<int> generators;     // chosen generating elements of ab_quotient
    abgrp::PresentedPtr pres;        // presentation on those generators
    abgrp::IntMatrix reps;           // exponent vector per ab_quotient element

    // canonical coordinates of the class of a group element
    std::vector<int64_t> coords(int g_element) const;
    // an element of ab_quotient representing canonical generator j
    int element_for_canonical_gen(size_t j) const;
};

Abelianization abelianize(const GroupPtr& g);

// Hom between the canonical presentations of two abelianizations, defined by
// an element-level map on the abelian quotients (index table). The map must
// be multiplicative; construction verifies relations.
abgrp::AbelianHom induced_hom_on_ab(const Abelianization& src, const Abelianization& dst,
                                    const std::vector<int>& elt_map);

// Map on abelianizations induced by a group homomorphism.
abgrp::AbelianHom induced_abelian_hom(const GroupHom& f, const Abelianization& src,
                                      const Abelianization& dst);
abgrp::AbelianHom induced_abelian_hom(const GroupHom& f);

// A subgroup Q with Q * N = G and trivial intersection, if one exists.
// Searches generating sets of size <= 3 first, then the full lattice.
std::optional<Subgroup> find_complement(const PairOfGroups& p);

} // namespace fingrp
