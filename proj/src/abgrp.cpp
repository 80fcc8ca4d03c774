#include "pairmult/abgrp.hpp"

#include <algorithm>
#include <stdexcept>

namespace abgrp {

AbelianGroup::AbelianGroup(uint64_t fr, std::vector<int64_t> t)
    : free_rank(fr), torsion(std::move(t)) {
    for (size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] < 2) throw std::invalid_argument("invariant factor < 2");
        if (i > 0 && torsion[i] % torsion[i - 1] != 0)
            throw std::invalid_argument("invariant factors not a divisibility chain");
    }
}

std::optional<int64_t> AbelianGroup::order() const {
    if (free_rank > 0) return std::nullopt;
    int64_t n = 1;
    for (int64_t d : torsion) n = checked_mul(n, d);
    return n;
}

std::string AbelianGroup::str() const {
    if (is_trivial()) return "0";
    std::string s;
    if (free_rank == 1) s = "Z";
    else if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
    for (int64_t d : torsion) {
        if (!s.empty()) s += " + ";
        s += "Z/" + std::to_string(d);
    }
    return s;
}

AbelianGroup canonical_quotient(const IntMatrix& relation_rows, size_t cols) {
    if (relation_rows.rows() > 0 && relation_rows.cols() != cols)
        throw std::invalid_argument("relation width mismatch");
    if (relation_rows.rows() <= 6 && cols <= 6 && relation_rows.rows() > 0) {
        int64_t d[6];
        size_t nd = small_divisors(&relation_rows.row(0)[0], relation_rows.rows(), cols, d);
        std::vector<int64_t> tor;
        for (size_t i = 0; i < nd; ++i)
            if (d[i] >= 2) tor.push_back(d[i]);
        return AbelianGroup(cols - nd, std::move(tor));
    }
    SnfResult s = smith_normal_form(relation_rows.rows() ? relation_rows : IntMatrix(0, cols));
    std::vector<int64_t> tor;
    for (int64_t d : s.divisors)
        if (d >= 2) tor.push_back(d);
    return AbelianGroup(cols - s.rank, std::move(tor));
}

PresentedAbelian::PresentedAbelian(size_t gens, const IntMatrix& relation_rows) : gens_(gens) {
    if (relation_rows.rows() > 0 && relation_rows.cols() != gens)
        throw std::invalid_argument("relation width mismatch");
    relations_ = hnf_rows(relation_rows.rows() ? relation_rows : IntMatrix(0, gens_));
    rel_cols_ = relations_.transposed();

    SnfOptions opt;
    opt.left = true;
    opt.left_inv = true;
    SnfResult s = smith_normal_form(rel_cols_, opt);
    u_ = std::move(*s.left);
    u_inv_ = std::move(*s.left_inv);

    diag_.assign(gens_, 0);
    for (size_t i = 0; i < s.rank; ++i) diag_[i] = s.divisors[i];

    std::vector<int64_t> tor;
    for (size_t i = 0; i < gens_; ++i) {
        if (diag_[i] >= 2) {
            kept_.push_back(i);
            tor.push_back(diag_[i]);
        }
    }
    uint64_t free_rank = 0;
    for (size_t i = 0; i < gens_; ++i) {
        if (diag_[i] == 0) {
            kept_.push_back(i);
            ++free_rank;
        }
    }
    canon_ = AbelianGroup(free_rank, std::move(tor));
}

std::vector<int64_t> PresentedAbelian::to_canonical(std::span<const int64_t> x) const {
    if (x.size() != gens_) throw std::invalid_argument("coordinate size mismatch");
    std::vector<int64_t> y = mat_vec(u_, x);
    std::vector<int64_t> out;
    out.reserve(kept_.size());
    for (size_t k : kept_) {
        int64_t v = y[k];
        if (diag_[k] >= 2) {
            v %= diag_[k];
            if (v < 0) v += diag_[k];
        }
        out.push_back(v);
    }
    return out;
}

std::vector<int64_t> PresentedAbelian::canonical_generator(size_t j) const {
    if (j >= kept_.size()) throw std::out_of_range("canonical generator index");
    return u_inv_.col(kept_[j]);
}

bool PresentedAbelian::is_relation(std::span<const int64_t> x) const {
    if (x.size() != gens_) throw std::invalid_argument("coordinate size mismatch");
    std::vector<int64_t> y = mat_vec(u_, x);
    for (size_t i = 0; i < gens_; ++i) {
        if (diag_[i] >= 1) {
            if (y[i] % diag_[i] != 0) return false;
        } else if (y[i] != 0) {
            return false;
        }
    }
    return true;
}

PresentedPtr make_presented(size_t gens, const IntMatrix& relation_rows) {
    return std::make_shared<const PresentedAbelian>(gens, relation_rows);
}

PresentedPtr canonical_presentation(const AbelianGroup& g) {
    size_t n = g.gen_count();
    IntMatrix rel(g.torsion.size(), n);
    for (size_t i = 0; i < g.torsion.size(); ++i) rel.at(i, i) = g.torsion[i];
    return make_presented(n, rel);
}

AbelianHom::AbelianHom(PresentedPtr src, PresentedPtr dst, IntMatrix m)
    : source(std::move(src)), target(std::move(dst)), matrix(std::move(m)) {
    if (matrix.rows() != target->gens() || matrix.cols() != source->gens())
        throw std::invalid_argument("hom matrix shape mismatch");
    const IntMatrix& rel = source->relations();
    for (size_t i = 0; i < rel.rows(); ++i) {
        std::vector<int64_t> img = mat_vec(matrix, rel.row(i));
        if (!target->is_relation(img))
            throw std::invalid_argument("ill-defined hom: relation image not in target lattice");
    }
}

AbelianHom identity_hom(const PresentedPtr& p) {
    return AbelianHom(p, p, IntMatrix::identity(p->gens()));
}

AbelianHom zero_hom(const PresentedPtr& src, const PresentedPtr& dst) {
    return AbelianHom(src, dst, IntMatrix(dst->gens(), src->gens()));
}

bool same_presentation(const PresentedAbelian& a, const PresentedAbelian& b) {
    return &a == &b || (a.gens() == b.gens() && a.relations() == b.relations());
}

AbelianHom compose(const AbelianHom& g, const AbelianHom& f) {
    if (!same_presentation(*g.source, *f.target))
        throw std::invalid_argument("compose: presentation mismatch");
    return AbelianHom(f.source, g.target, mat_mul(g.matrix, f.matrix));
}

bool hom_is_zero(const AbelianHom& f) {
    for (size_t j = 0; j < f.matrix.cols(); ++j)
        if (!f.target->is_relation(f.matrix.col(j))) return false;
    return true;
}

bool hom_equal(const AbelianHom& f, const AbelianHom& g) {
    if (!same_presentation(*f.source, *g.source) || !same_presentation(*f.target, *g.target))
        throw std::invalid_argument("hom_equal: presentation mismatch");
    for (size_t j = 0; j < f.matrix.cols(); ++j) {
        std::vector<int64_t> d(f.matrix.rows());
        for (size_t i = 0; i < f.matrix.rows(); ++i)
            d[i] = checked_sub(f.matrix.at(i, j), g.matrix.at(i, j));
        if (!f.target->is_relation(d)) return false;
    }
    return true;
}

AbelianHom as_canonical_hom(const AbelianHom& f) {
    PresentedPtr cs = canonical_presentation(f.source->canon());
    PresentedPtr cd = canonical_presentation(f.target->canon());
    IntMatrix m(cd->gens(), cs->gens());
    for (size_t j = 0; j < cs->gens(); ++j) {
        std::vector<int64_t> x = f.source->canonical_generator(j);
        std::vector<int64_t> y = mat_vec(f.matrix, x);
        std::vector<int64_t> c = f.target->to_canonical(y);
        for (size_t i = 0; i < cd->gens(); ++i) m.at(i, j) = c[i];
    }
    return AbelianHom(std::move(cs), std::move(cd), std::move(m));
}

namespace {

// columns a with f.matrix * a in the target relation lattice
IntMatrix preimage_lattice_cols(const IntMatrix& m, const IntMatrix& target_rel_cols) {
    IntMatrix stacked = target_rel_cols.cols() ? hstack(m, target_rel_cols) : m;
    IntMatrix k = kernel_basis(stacked);
    IntMatrix p(m.cols(), k.cols());
    for (size_t j = 0; j < k.cols(); ++j)
        for (size_t i = 0; i < m.cols(); ++i) p.at(i, j) = k.at(i, j);
    // compress to a basis
    return hnf_rows(p.transposed()).transposed();
}

} // namespace

IntMatrix kernel_generators(const AbelianHom& f) {
    return preimage_lattice_cols(f.matrix, f.target->relation_cols());
}

SubquotientPart hom_kernel(const AbelianHom& f) {
    IntMatrix p = kernel_generators(f);  // source.gens x t
    IntMatrix rel_t = preimage_lattice_cols(p, f.source->relation_cols());
    PresentedPtr k = make_presented(p.cols(), rel_t.transposed());
    AbelianHom incl(k, f.source, p);
    return {k, std::move(incl)};
}

SubquotientPart hom_image(const AbelianHom& f) {
    IntMatrix rel = preimage_lattice_cols(f.matrix, f.target->relation_cols());
    PresentedPtr img = make_presented(f.source->gens(), rel.transposed());
    AbelianHom incl(img, f.target, f.matrix);
    return {img, std::move(incl)};
}

SubquotientPart hom_cokernel(const AbelianHom& f) {
    IntMatrix rel = vstack(f.target->relations(), f.matrix.transposed());
    PresentedPtr c = make_presented(f.target->gens(), rel);
    AbelianHom proj(f.target, c, IntMatrix::identity(f.target->gens()));
    return {c, std::move(proj)};
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
    std::vector<int64_t> diag = a.torsion;
    diag.insert(diag.end(), b.torsion.begin(), b.torsion.end());
    std::vector<int64_t> tor;
    for (int64_t d : divisor_chain(std::move(diag)))
        if (d >= 2) tor.push_back(d);
    return AbelianGroup(a.free_rank + b.free_rank, std::move(tor));
}

namespace {

// Kronecker-lifted relations of a tensor product of two presentations with
// generator pairs (i, j), i major.
IntMatrix tensor_relations(const PresentedAbelian& a, const PresentedAbelian& b) {
    size_t ga = a.gens(), gb = b.gens();
    size_t rows = a.relations().rows() * gb + b.relations().rows() * ga;
    IntMatrix rel(rows, ga * gb);
    size_t r = 0;
    for (size_t t = 0; t < a.relations().rows(); ++t)
        for (size_t j = 0; j < gb; ++j, ++r)
            for (size_t i = 0; i < ga; ++i) rel.at(r, i * gb + j) = a.relations().at(t, i);
    for (size_t t = 0; t < b.relations().rows(); ++t)
        for (size_t i = 0; i < ga; ++i, ++r)
            for (size_t j = 0; j < gb; ++j) rel.at(r, i * gb + j) = b.relations().at(t, j);
    return rel;
}

} // namespace

AbelianGroup tensor(const AbelianGroup& a, const AbelianGroup& b) {
    PresentedPtr pa = canonical_presentation(a);
    PresentedPtr pb = canonical_presentation(b);
    size_t n = pa->gens() * pb->gens();
    return canonical_quotient(tensor_relations(*pa, *pb), n);
}

AbelianGroup tor(const AbelianGroup& a, const AbelianGroup& b) {
    // Tor(A, B) = ⊕_i B[d_i] over the invariant factors of A, each torsion
    // subgroup computed as the kernel of multiplication by d_i.
    AbelianGroup acc;
    for (int64_t d : a.torsion) {
        AbelianHom m = mult_hom(b, d);
        acc = direct_sum(acc, hom_kernel(m).group->canon());
    }
    return acc;
}

PresentedPtr wedge2_presentation(const AbelianGroup& a) {
    PresentedPtr p = canonical_presentation(a);
    size_t g = p->gens();
    size_t pairs = g * (g - 1) / 2;
    auto pair_index = [g](size_t i, size_t j) {  // i < j
        return i * g - i * (i + 1) / 2 + (j - i - 1);
    };
    const IntMatrix& rel = p->relations();
    IntMatrix lifted(rel.rows() * g, pairs);
    size_t r = 0;
    for (size_t t = 0; t < rel.rows(); ++t)
        for (size_t u = 0; u < g; ++u, ++r)
            for (size_t i = 0; i < g; ++i) {
                int64_t v = rel.at(t, i);
                if (v == 0 || i == u) continue;
                if (i < u)
                    lifted.at(r, pair_index(i, u)) = checked_add(lifted.at(r, pair_index(i, u)), v);
                else
                    lifted.at(r, pair_index(u, i)) =
                        checked_sub(lifted.at(r, pair_index(u, i)), v);
            }
    return make_presented(pairs, lifted);
}

AbelianGroup wedge2(const AbelianGroup& a) { return wedge2_presentation(a)->canon(); }

AbelianHom wedge2_hom(const AbelianHom& f) {
    const size_t gs = f.source->gens(), gt = f.target->gens();
    PresentedPtr ws = wedge2_presentation(f.source->canon());
    PresentedPtr wt = wedge2_presentation(f.target->canon());
    auto pair_index = [](size_t g, size_t i, size_t j) {
        return i * g - i * (i + 1) / 2 + (j - i - 1);
    };
    IntMatrix m(wt->gens(), ws->gens());
    for (size_t i = 0; i < gs; ++i)
        for (size_t j = i + 1; j < gs; ++j) {
            size_t cj = pair_index(gs, i, j);
            for (size_t p = 0; p < gt; ++p)
                for (size_t q = p + 1; q < gt; ++q) {
                    int64_t v = checked_sub(
                        checked_mul(f.matrix.at(p, i), f.matrix.at(q, j)),
                        checked_mul(f.matrix.at(p, j), f.matrix.at(q, i)));
                    if (v != 0) m.at(pair_index(gt, p, q), cj) = v;
                }
        }
    return AbelianHom(std::move(ws), std::move(wt), std::move(m));
}

AbelianHom mult_hom(const AbelianGroup& g, int64_t k) {
    PresentedPtr p = canonical_presentation(g);
    IntMatrix m(p->gens(), p->gens());
    for (size_t i = 0; i < p->gens(); ++i) m.at(i, i) = k;
    return AbelianHom(p, p, std::move(m));
}

} // namespace abgrp
