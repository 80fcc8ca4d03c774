#include "pairmult/nilfree.hpp"

#include "pairmult/snf.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilfree {

using abgrp::IntMatrix;

std::string BasisLetter::str() const {
    auto x = [](int i) { return "x" + std::to_string(i + 1); };
    if (weight == 1) return x(a);
    if (weight == 2) return "[" + x(a) + "," + x(b) + "]";
    return "[[" + x(a) + "," + x(b) + "]," + x(c) + "]";
}

HallBasis::HallBasis(int rank, int cls) : rank_(rank), cls_(cls) {
    if (rank < 1 || rank > 3) throw std::invalid_argument("HallBasis: rank must be 1..3");
    if (cls < 1 || cls > 3) throw std::invalid_argument("HallBasis: class must be 1..3");
    for (int a = 0; a < rank; ++a) letters_.push_back({1, a});
    if (cls >= 2)
        for (int a = 0; a < rank; ++a)
            for (int b = 0; b < a; ++b) letters_.push_back({2, a, b});
    if (cls >= 3)
        for (int a = 0; a < rank; ++a)
            for (int b = 0; b < a; ++b)
                for (int c = b; c < rank; ++c) letters_.push_back({3, a, b, c});
}

size_t HallBasis::weight_start(int w) const {
    for (size_t i = 0; i < letters_.size(); ++i)
        if (letters_[i].weight == w) return i;
    return letters_.size();
}

size_t HallBasis::weight_count(int w) const {
    size_t c = 0;
    for (const auto& l : letters_)
        if (l.weight == w) ++c;
    return c;
}

size_t HallBasis::gen_index(int a) const { return static_cast<size_t>(a); }

size_t HallBasis::pair_index(int a, int b) const {
    for (size_t i = 0; i < letters_.size(); ++i)
        if (letters_[i].weight == 2 && letters_[i].a == a && letters_[i].b == b) return i;
    throw std::invalid_argument("pair_index: no such basis letter");
}

size_t HallBasis::triple_index(int a, int b, int c) const {
    for (size_t i = 0; i < letters_.size(); ++i)
        if (letters_[i].weight == 3 && letters_[i].a == a && letters_[i].b == b &&
            letters_[i].c == c)
            return i;
    throw std::invalid_argument("triple_index: no such basis letter");
}

bool NilElement::is_identity() const {
    return std::all_of(exps.begin(), exps.end(), [](int64_t v) { return v == 0; });
}

FreeNilpotent::FreeNilpotent(int rank, int cls) : basis_(rank, cls) {}

NilElement FreeNilpotent::identity_element() const {
    return NilElement{std::vector<int64_t>(basis_.size(), 0)};
}

NilElement FreeNilpotent::generator(int i) const {
    NilElement e = identity_element();
    e.exps[basis_.gen_index(i)] = 1;
    return e;
}

// [[x_a, x_b], x_c] expanded over the weight-3 basis via antisymmetry in the
// first two slots and the Jacobi identity on the graded Lie ring.
std::vector<int64_t> FreeNilpotent::jacobi_triple(int a, int b, int c) const {
    std::vector<int64_t> out(basis_.weight_count(3), 0);
    if (basis_.cls() < 3) return out;
    size_t w3 = basis_.weight_start(3);
    if (a == b) return out;
    if (a < b) {
        auto t = jacobi_triple(b, a, c);
        for (auto& v : t) v = -v;
        return t;
    }
    if (c >= b) {
        out[basis_.triple_index(a, b, c) - w3] = 1;
        return out;
    }
    // a > b > c: [[a,b],c] = [[a,c],b] - [[b,c],a]
    auto t1 = jacobi_triple(a, c, b);
    auto t2 = jacobi_triple(b, c, a);
    for (size_t i = 0; i < out.size(); ++i) out[i] = t1[i] - t2[i];
    return out;
}

// expansion of the commutator [A^ea, B^eb] of two basis letters with A > B,
// as a word over strictly heavier letters (valid modulo class truncation)
FreeNilpotent::LWord FreeNilpotent::comm_expansion(size_t A, int ea, size_t B, int eb) const {
    const BasisLetter& la = basis_.letter(A);
    const BasisLetter& lb = basis_.letter(B);
    int wsum = la.weight + lb.weight;
    if (wsum > basis_.cls()) return {};

    auto w3_word = [&](const std::vector<int64_t>& vec) {
        LWord w;
        size_t w3 = basis_.weight_start(3);
        for (size_t i = 0; i < vec.size(); ++i) {
            int sign = vec[i] > 0 ? 1 : -1;
            for (int64_t k = 0; k < (vec[i] < 0 ? -vec[i] : vec[i]); ++k)
                w.emplace_back(w3 + i, sign);
        }
        return w;
    };

    if (la.weight == 1 && lb.weight == 1) {
        int j = la.a, i = lb.a;  // j > i
        size_t K = basis_.pair_index(j, i);
        std::vector<int64_t> tail(basis_.weight_count(3), 0);
        int ksign;
        if (ea > 0 && eb > 0) {
            ksign = 1;
        } else if (ea < 0 && eb > 0) {
            ksign = -1;
            tail = jacobi_triple(j, i, j);
        } else if (ea > 0 && eb < 0) {
            ksign = -1;
            tail = jacobi_triple(j, i, i);
        } else {
            ksign = 1;
            auto t1 = jacobi_triple(j, i, i);
            auto t2 = jacobi_triple(j, i, j);
            for (size_t t = 0; t < tail.size(); ++t) tail[t] = -t1[t] - t2[t];
        }
        LWord w{{K, ksign}};
        if (basis_.cls() >= 3) {
            LWord t = w3_word(tail);
            w.insert(w.end(), t.begin(), t.end());
        }
        return w;
    }
    if (la.weight == 2 && lb.weight == 1) {
        // [K^ea, x^eb] = (ea*eb) * [[x_a, x_b], x_c] in the weight-3 layer
        auto t = jacobi_triple(la.a, la.b, lb.a);
        for (auto& v : t) v *= ea * eb;
        return w3_word(t);
    }
    // weight sums >= 4 were filtered above; weight-1 letters never exceed
    // weight-2 letters in the order, so no other shape occurs
    return {};
}

NilElement FreeNilpotent::collect_letters(LWord w) const {
    for (;;) {
        size_t i = 0;
        bool disorder = false;
        for (; i + 1 < w.size(); ++i)
            if (w[i].first > w[i + 1].first) {
                disorder = true;
                break;
            }
        if (!disorder) break;
        auto [A, ea] = w[i];
        auto [B, eb] = w[i + 1];
        LWord corr = comm_expansion(A, ea, B, eb);
        // A^ea B^eb -> B^eb A^ea [A^ea, B^eb]
        w[i] = {B, eb};
        w[i + 1] = {A, ea};
        w.insert(w.begin() + static_cast<long>(i) + 2, corr.begin(), corr.end());
    }
    NilElement e = identity_element();
    for (auto [idx, s] : w) e.exps[idx] += s;
    return e;
}

FreeNilpotent::LWord FreeNilpotent::expand(const NilElement& e) const {
    LWord w;
    for (size_t i = 0; i < e.exps.size(); ++i) {
        int sign = e.exps[i] > 0 ? 1 : -1;
        for (int64_t k = 0; k < (e.exps[i] < 0 ? -e.exps[i] : e.exps[i]); ++k)
            w.emplace_back(i, sign);
    }
    return w;
}

NilElement FreeNilpotent::collect_word(const Word& w) const {
    LWord lw;
    lw.reserve(w.size());
    for (auto [g, s] : w) {
        if (g < 0 || g >= basis_.rank()) throw std::invalid_argument("word generator out of range");
        if (s != 1 && s != -1) throw std::invalid_argument("word sign must be +-1");
        lw.emplace_back(basis_.gen_index(g), s);
    }
    return collect_letters(std::move(lw));
}

NilElement FreeNilpotent::mul(const NilElement& u, const NilElement& v) const {
    LWord w = expand(u);
    LWord wv = expand(v);
    w.insert(w.end(), wv.begin(), wv.end());
    return collect_letters(std::move(w));
}

NilElement FreeNilpotent::inverse(const NilElement& u) const {
    LWord w = expand(u);
    std::reverse(w.begin(), w.end());
    for (auto& [idx, s] : w) s = -s;
    return collect_letters(std::move(w));
}

NilElement FreeNilpotent::commutator(const NilElement& u, const NilElement& v) const {
    return mul(mul(inverse(u), inverse(v)), mul(u, v));
}

std::vector<int64_t> FreeNilpotent::bracket11(std::span<const int64_t> u,
                                              std::span<const int64_t> v) const {
    size_t m2 = basis_.weight_count(2);
    std::vector<int64_t> out(m2, 0);
    if (basis_.cls() < 2) return out;
    size_t w2 = basis_.weight_start(2);
    for (int a = 0; a < basis_.rank(); ++a)
        for (int b = 0; b < a; ++b)
            out[basis_.pair_index(a, b) - w2] =
                abgrp::checked_sub(abgrp::checked_mul(u[a], v[b]),
                                   abgrp::checked_mul(u[b], v[a]));
    return out;
}

std::vector<int64_t> FreeNilpotent::bracket21(std::span<const int64_t> w2, int k) const {
    size_t m3 = basis_.weight_count(3);
    std::vector<int64_t> out(m3, 0);
    if (basis_.cls() < 3) return out;
    size_t w2s = basis_.weight_start(2);
    for (size_t p = 0; p < basis_.weight_count(2); ++p) {
        if (w2[p] == 0) continue;
        const BasisLetter& l = basis_.letter(w2s + p);
        auto t = jacobi_triple(l.a, l.b, k);
        for (size_t i = 0; i < m3; ++i)
            out[i] = abgrp::checked_add(out[i], abgrp::checked_mul(w2[p], t[i]));
    }
    return out;
}

std::vector<int64_t> FreeNilpotent::weight1_part(const NilElement& e) const {
    return {e.exps.begin(), e.exps.begin() + basis_.rank()};
}

std::vector<int64_t> FreeNilpotent::weight2_part(const NilElement& e) const {
    size_t s = basis_.weight_start(2);
    return {e.exps.begin() + static_cast<long>(s),
            e.exps.begin() + static_cast<long>(s + basis_.weight_count(2))};
}

// ----------------------------- word grammar -----------------------------

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    int rank;

    void skip() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '*')) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("word parse error at position " + std::to_string(pos) +
                                    ": " + what);
    }

    int64_t integer() {
        skip();
        bool neg = eat('-');
        skip();
        if (pos >= s.size() || !isdigit(static_cast<unsigned char>(s[pos]))) fail("expected digit");
        int64_t v = 0;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1000000) fail("exponent too large");
            ++pos;
        }
        return neg ? -v : v;
    }

    Word factor() {
        skip();
        if (pos >= s.size()) fail("expected factor");
        if (s[pos] == 'x' || s[pos] == 'X') {
            ++pos;
            int64_t idx = integer();
            if (idx < 1 || idx > rank) fail("generator index out of range");
            return {{static_cast<int>(idx) - 1, 1}};
        }
        if (s[pos] == '[') {
            ++pos;
            Word u = word(',');
            if (!eat(',')) fail("expected ',' in commutator");
            Word v = word(']');
            if (!eat(']')) fail("expected ']'");
            // [u, v] = u^-1 v^-1 u v
            Word out = invert(u);
            Word vi = invert(v);
            out.insert(out.end(), vi.begin(), vi.end());
            out.insert(out.end(), u.begin(), u.end());
            out.insert(out.end(), v.begin(), v.end());
            return out;
        }
        if (s[pos] == '(') {
            ++pos;
            Word u = word(')');
            if (!eat(')')) fail("expected ')'");
            return u;
        }
        fail("unexpected character");
    }

    static Word invert(const Word& w) {
        Word out(w.rbegin(), w.rend());
        for (auto& [g, s2] : out) s2 = -s2;
        return out;
    }

    Word term() {
        Word f = factor();
        skip();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            int64_t e = integer();
            Word out;
            Word base = e >= 0 ? f : invert(f);
            for (int64_t k = 0; k < (e < 0 ? -e : e); ++k)
                out.insert(out.end(), base.begin(), base.end());
            return out;
        }
        return f;
    }

    Word word(char stop = '\0') {
        Word out;
        for (;;) {
            skip();
            if (pos >= s.size() || s[pos] == stop || s[pos] == ',' || s[pos] == ']' ||
                s[pos] == ')')
                break;
            Word t = term();
            out.insert(out.end(), t.begin(), t.end());
        }
        return out;
    }
};

} // namespace

Word parse_word(const std::string& text, int rank) {
    Parser p{text, 0, rank};
    Word w = p.word();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return w;
}

// ----------------------------- baer section -----------------------------

namespace {

// lattice of integer row vectors spanned by `rows`, as a canonical basis
IntMatrix lattice_basis(const std::vector<std::vector<int64_t>>& rows, size_t dim) {
    IntMatrix m(rows.size(), dim);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < dim; ++j) m.at(i, j) = rows[i][j];
    return abgrp::hnf_rows(m);
}

// U / V given by generating rows inside Z^dim, V a sublattice of U
abgrp::AbelianGroup lattice_quotient(const IntMatrix& u_basis,
                                     const std::vector<std::vector<int64_t>>& v_rows) {
    size_t t = u_basis.rows();
    if (t == 0) return abgrp::AbelianGroup();
    abgrp::LatticeSolver solver(u_basis.transposed());
    IntMatrix rel(v_rows.size(), t);
    for (size_t i = 0; i < v_rows.size(); ++i) {
        auto x = solver.solve(v_rows[i]);
        if (!x) throw std::logic_error("baer_section: denominator not inside numerator");
        for (size_t j = 0; j < t; ++j) rel.at(i, j) = (*x)[j];
    }
    return abgrp::canonical_quotient(rel, t);
}

} // namespace

Outcome<abgrp::AbelianGroup> baer_section(const PresentationWithSubgroup& p, int c) {
    if (c != 1 && c != 2)
        return Outcome<abgrp::AbelianGroup>::na("class-bound: c must be 1 or 2");
    if (p.rank < 1) return Outcome<abgrp::AbelianGroup>::na("rank-bound: rank must be >= 1");
    if (c == 1 && p.rank > 3)
        return Outcome<abgrp::AbelianGroup>::na("rank-bound: c=1 needs rank <= 3");
    if (c == 2 && p.rank > 2)
        return Outcome<abgrp::AbelianGroup>::na("rank-bound: c=2 needs rank <= 2");

    FreeNilpotent F(p.rank, c + 1);
    std::vector<NilElement> rel;
    rel.reserve(p.relators.size());
    for (const Word& w : p.relators) rel.push_back(F.collect_word(w));

    // manifest abelianness: every pairwise generator commutator must occur
    // (up to sign and weight-3 tail) among the relators
    for (int a = 0; a < p.rank; ++a)
        for (int b = 0; b < a; ++b) {
            size_t m2 = F.basis().weight_count(2);
            size_t pidx = F.basis().pair_index(a, b) - F.basis().weight_start(2);
            bool found = false;
            for (const NilElement& r : rel) {
                auto w1 = F.weight1_part(r);
                if (std::any_of(w1.begin(), w1.end(), [](int64_t v) { return v != 0; }))
                    continue;
                auto w2 = F.weight2_part(r);
                bool unit = (w2[pidx] == 1 || w2[pidx] == -1);
                for (size_t q = 0; unit && q < m2; ++q)
                    if (q != pidx && w2[q] != 0) unit = false;
                if (unit) {
                    found = true;
                    break;
                }
            }
            if (!found)
                return Outcome<abgrp::AbelianGroup>::na(
                    "presentation-not-manifestly-abelian: missing commutator relator [" +
                    std::to_string(a + 1) + "," + std::to_string(b + 1) + "]");
        }

    // abelianized relator lattice; quotient must be finite
    std::vector<std::vector<int64_t>> lr_rows;
    for (const NilElement& r : rel) lr_rows.push_back(F.weight1_part(r));
    IntMatrix lr = lattice_basis(lr_rows, static_cast<size_t>(p.rank));
    if (lr.rows() < static_cast<size_t>(p.rank))
        return Outcome<abgrp::AbelianGroup>::na("quotient-infinite");

    std::vector<std::vector<int64_t>> ls_rows = lr_rows;
    for (const Word& w : p.subgroup_words)
        ls_rows.push_back(F.weight1_part(F.collect_word(w)));
    IntMatrix ls = lattice_basis(ls_rows, static_cast<size_t>(p.rank));

    auto basis_rows = [](const IntMatrix& m) {
        std::vector<std::vector<int64_t>> rows;
        for (size_t i = 0; i < m.rows(); ++i)
            rows.emplace_back(m.row(i).begin(), m.row(i).end());
        return rows;
    };
    std::vector<std::vector<int64_t>> s_basis = basis_rows(ls);
    std::vector<std::vector<int64_t>> r_basis = basis_rows(lr);

    std::vector<int64_t> unit(static_cast<size_t>(p.rank), 0);

    if (c == 1) {
        // numerator [Sbar, F] and denominator [Rbar, F] inside the weight-2 layer
        std::vector<std::vector<int64_t>> num, den;
        for (int k = 0; k < p.rank; ++k) {
            std::fill(unit.begin(), unit.end(), 0);
            unit[static_cast<size_t>(k)] = 1;
            for (const auto& s : s_basis) num.push_back(F.bracket11(s, unit));
            for (const auto& r : r_basis) den.push_back(F.bracket11(r, unit));
        }
        IntMatrix nb = lattice_basis(num, F.basis().weight_count(2));
        return Outcome<abgrp::AbelianGroup>::of(lattice_quotient(nb, den));
    }

    // c == 2: [Sbar, F, F] and [Rbar, F, F] inside the weight-3 layer
    std::vector<std::vector<int64_t>> num, den;
    for (int i = 0; i < p.rank; ++i)
        for (int k = 0; k < p.rank; ++k) {
            std::fill(unit.begin(), unit.end(), 0);
            unit[static_cast<size_t>(i)] = 1;
            for (const auto& s : s_basis) num.push_back(F.bracket21(F.bracket11(s, unit), k));
            for (const auto& r : r_basis) den.push_back(F.bracket21(F.bracket11(r, unit), k));
        }
    IntMatrix nb = lattice_basis(num, F.basis().weight_count(3));
    return Outcome<abgrp::AbelianGroup>::of(lattice_quotient(nb, den));
}

PresentationWithSubgroup presentation_for_abelian(
    const abgrp::AbelianGroup& g, const std::vector<std::vector<int64_t>>& subgroup_coords) {
    if (g.free_rank != 0)
        throw std::invalid_argument("presentation_for_abelian: group must be finite");
    int rank = static_cast<int>(g.torsion.size());
    PresentationWithSubgroup p;
    p.rank = rank;
    for (int i = 0; i < rank; ++i) {
        Word w;
        for (int64_t k = 0; k < g.torsion[static_cast<size_t>(i)]; ++k) w.emplace_back(i, 1);
        p.relators.push_back(std::move(w));
    }
    for (int a = 0; a < rank; ++a)
        for (int b = 0; b < a; ++b) {
            // [x_a, x_b]
            Word w{{a, -1}, {b, -1}, {a, 1}, {b, 1}};
            p.relators.push_back(std::move(w));
        }
    for (const auto& coords : subgroup_coords) {
        if (coords.size() != static_cast<size_t>(rank))
            throw std::invalid_argument("presentation_for_abelian: bad subgroup coords");
        Word w;
        for (int i = 0; i < rank; ++i) {
            int sign = coords[static_cast<size_t>(i)] >= 0 ? 1 : -1;
            int64_t n = coords[static_cast<size_t>(i)];
            for (int64_t k = 0; k < (n < 0 ? -n : n); ++k) w.emplace_back(i, sign);
        }
        p.subgroup_words.push_back(std::move(w));
    }
    return p;
}

} // namespace nilfree
