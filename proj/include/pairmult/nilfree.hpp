#pragma once

#include "pairmult/abgrp.hpp"
#include "pairmult/outcome.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nilfree {

using pairmult::Outcome;

// A letter of the Hall basis of basic commutators, rank <= 3, class <= 3.
//   weight 1:  x_a
//   weight 2:  [x_a, x_b] with a > b
//   weight 3:  [[x_a, x_b], x_c] with a > b, c >= b
struct BasisLetter {
    int weight;
    int a = 0, b = 0, c = 0;
    std::string str() const;
};

// Hall-ordered basis: by weight, then lexicographically on constituents.
class HallBasis {
public:
    HallBasis(int rank, int cls);

    int rank() const { return rank_; }
    int cls() const { return cls_; }
    size_t size() const { return letters_.size(); }
    const BasisLetter& letter(size_t i) const { return letters_[i]; }
    size_t weight_start(int w) const;
    size_t weight_count(int w) const;

    size_t gen_index(int a) const;             // x_a
    size_t pair_index(int a, int b) const;     // [x_a, x_b], a > b
    size_t triple_index(int a, int b, int c) const;  // basic triple

private:
    int rank_, cls_;
    std::vector<BasisLetter> letters_;
};

// Element of the free nilpotent group as an exponent vector over the basis.
struct NilElement {
    std::vector<int64_t> exps;
    bool operator==(const NilElement&) const = default;
    bool is_identity() const;
};

// Free-group word: (0-based generator index, +-1) letters.
using Word = std::vector<std::pair<int, int>>;

// Collection engine for the free nilpotent group of the given rank and class.
// The commutator convention is [a, b] = a^-1 b^-1 a b throughout.
class FreeNilpotent {
public:
    FreeNilpotent(int rank, int cls);

    const HallBasis& basis() const { return basis_; }
    NilElement identity_element() const;
    NilElement generator(int i) const;

    // unique normal form; a homomorphism from the free group on rank letters
    NilElement collect_word(const Word& w) const;
    NilElement mul(const NilElement& u, const NilElement& v) const;
    NilElement inverse(const NilElement& u) const;
    NilElement commutator(const NilElement& u, const NilElement& v) const;

    // graded bracket A1 x A1 -> A2 on weight-1 coordinate vectors
    std::vector<int64_t> bracket11(std::span<const int64_t> u,
                                   std::span<const int64_t> v) const;
    // graded bracket A2 x A1 -> A3: [w2, x_k]
    std::vector<int64_t> bracket21(std::span<const int64_t> w2, int k) const;

    std::vector<int64_t> weight1_part(const NilElement& e) const;
    std::vector<int64_t> weight2_part(const NilElement& e) const;

private:
    HallBasis basis_;
    // internal word letter: (basis letter index, +-1)
    using LWord = std::vector<std::pair<size_t, int>>;

    LWord expand(const NilElement& e) const;
    NilElement collect_letters(LWord w) const;
    LWord comm_expansion(size_t A, int ea, size_t B, int eb) const;
    std::vector<int64_t> jacobi_triple(int a, int b, int c) const;  // [[x_a,x_b],x_c] in A3
};

// Free presentation with a distinguished subgroup: G = F/R with R the normal
// closure of the relators, S generated by the subgroup words together with
// the relators (so R <= S always holds).
struct PresentationWithSubgroup {
    int rank = 0;
    std::vector<Word> relators;
    std::vector<Word> subgroup_words;
};

// Mini-grammar for words: generators x1..x3, juxtaposition for products,
// ^n for integer powers (n may be negative), [u,v] for commutators,
// parentheses for grouping. Whitespace and '*' are ignored.
Word parse_word(const std::string& text, int rank);

// The Hopf-type section (R cap [S,F,..,F]) / [R,F,..,F] with c bracket
// applications, computed inside the free nilpotent group of class c+1.
// Scope guard: c = 1 needs rank <= 3, c = 2 needs rank <= 2; the presented
// quotient must be manifestly abelian (every pairwise generator commutator
// appears among the relators) and finite. Out-of-scope input returns NA.
Outcome<abgrp::AbelianGroup> baer_section(const PresentationWithSubgroup& p, int c);

// Canonical presentation of a finite abelian group from its invariant
// factors, with subgroup words given by coordinate vectors over the
// canonical generators.
PresentationWithSubgroup presentation_for_abelian(
    const abgrp::AbelianGroup& g, const std::vector<std::vector<int64_t>>& subgroup_coords);

} // namespace nilfree
