#include "pairmult/fingrp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace fingrp {

namespace {

std::string default_label(int i) { return "g" + std::to_string(i); }

} // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels) {
    n_ = table.size();
    if (n_ == 0) throw std::invalid_argument("empty Cayley table");
    table_.reserve(n_ * n_);
    for (size_t i = 0; i < n_; ++i) {
        if (table[i].size() != n_) throw std::invalid_argument("Cayley table is not square");
        for (size_t j = 0; j < n_; ++j) {
            int v = table[i][j];
            if (v < 0 || static_cast<size_t>(v) >= n_)
                throw std::invalid_argument("Cayley entry out of range at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
            table_.push_back(v);
        }
    }
    // identity
    for (size_t j = 0; j < n_; ++j) {
        if (mul(0, static_cast<int>(j)) != static_cast<int>(j) ||
            mul(static_cast<int>(j), 0) != static_cast<int>(j))
            throw std::invalid_argument("element 0 is not a two-sided identity (witness " +
                                        std::to_string(j) + ")");
    }
    // Latin square
    for (size_t i = 0; i < n_; ++i) {
        std::vector<bool> seen_row(n_, false), seen_col(n_, false);
        for (size_t j = 0; j < n_; ++j) {
            int r = mul(static_cast<int>(i), static_cast<int>(j));
            int c = mul(static_cast<int>(j), static_cast<int>(i));
            if (seen_row[r])
                throw std::invalid_argument("row " + std::to_string(i) + " is not a permutation");
            if (seen_col[c])
                throw std::invalid_argument("column " + std::to_string(i) +
                                            " is not a permutation");
            seen_row[r] = seen_col[c] = true;
        }
    }
    // associativity
    for (size_t a = 0; a < n_; ++a)
        for (size_t b = 0; b < n_; ++b)
            for (size_t c = 0; c < n_; ++c) {
                int ab_c = mul(mul(static_cast<int>(a), static_cast<int>(b)), static_cast<int>(c));
                int a_bc = mul(static_cast<int>(a), mul(static_cast<int>(b), static_cast<int>(c)));
                if (ab_c != a_bc)
                    throw std::invalid_argument(
                        "associativity fails at triple (" + std::to_string(a) + "," +
                        std::to_string(b) + "," + std::to_string(c) + ")");
            }
    // inverses
    inv_.assign(n_, -1);
    for (size_t i = 0; i < n_; ++i) {
        for (size_t j = 0; j < n_; ++j)
            if (mul(static_cast<int>(i), static_cast<int>(j)) == 0) {
                if (mul(static_cast<int>(j), static_cast<int>(i)) != 0)
                    throw std::invalid_argument("one-sided inverse at " + std::to_string(i));
                inv_[i] = static_cast<int>(j);
                break;
            }
        if (inv_[i] < 0)
            throw std::invalid_argument("element " + std::to_string(i) + " has no inverse");
    }
    if (labels.empty()) {
        labels_.reserve(n_);
        for (size_t i = 0; i < n_; ++i) labels_.push_back(default_label(static_cast<int>(i)));
    } else {
        if (labels.size() != n_) throw std::invalid_argument("label count mismatch");
        labels_ = std::move(labels);
    }
}

int FiniteGroup::pow(int a, int64_t e) const {
    int base = e >= 0 ? a : inv(a);
    int64_t k = e >= 0 ? e : -e;
    int acc = 0;
    for (int64_t i = 0; i < k; ++i) acc = mul(acc, base);
    return acc;
}

int FiniteGroup::element_order(int a) const {
    int x = a, k = 1;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = i + 1; j < n_; ++j)
            if (mul(static_cast<int>(i), static_cast<int>(j)) !=
                mul(static_cast<int>(j), static_cast<int>(i)))
                return false;
    return true;
}

GroupPtr make_group(std::vector<std::vector<int>> table, std::vector<std::string> labels) {
    return std::make_shared<const FiniteGroup>(std::move(table), std::move(labels));
}

GroupPtr trivial_group() {
    return make_group({{0}}, {"e"});
}

GroupPtr cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic: n must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        labels[i] = std::to_string(i);
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    }
    return make_group(std::move(t), std::move(labels));
}

GroupPtr dihedral(int n) {
    if (n < 1) throw std::invalid_argument("dihedral: n must be positive");
    int m = 2 * n;
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    auto idx = [n](int flip, int rot) { return flip * n + ((rot % n) + n) % n; };
    for (int f1 = 0; f1 < 2; ++f1)
        for (int r1 = 0; r1 < n; ++r1)
            for (int f2 = 0; f2 < 2; ++f2)
                for (int r2 = 0; r2 < n; ++r2) {
                    // (s^f1 r^r1)(s^f2 r^r2) = s^(f1+f2) r^(r2 + r1*(-1)^f2)
                    int f = (f1 + f2) % 2;
                    int r = f2 ? r2 - r1 : r2 + r1;
                    t[idx(f1, r1)][idx(f2, r2)] = idx(f, r);
                }
    std::vector<std::string> labels(m);
    for (int r = 0; r < n; ++r) {
        labels[idx(0, r)] = "r" + std::to_string(r);
        labels[idx(1, r)] = "sr" + std::to_string(r);
    }
    return make_group(std::move(t), std::move(labels));
}

GroupPtr quaternion8() {
    // 0..7 = 1, -1, i, -i, j, -j, k, -k
    auto enc = [](int sign, int basis) { return 2 * basis + (sign < 0 ? 1 : 0); };
    // basis products: b1*b2 = (sign, basis)
    static const int bprod[4][4][2] = {
        {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
        {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
        {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
        {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
    };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int sa = a % 2 ? -1 : 1, ba = a / 2;
            int sb = b % 2 ? -1 : 1, bb = b / 2;
            int s = sa * sb * bprod[ba][bb][0];
            t[a][b] = enc(s, bprod[ba][bb][1]);
        }
    return make_group(std::move(t), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

namespace {

std::vector<std::vector<int>> permutations_lex(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

bool perm_even(const std::vector<int>& p) {
    int inversions = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0;
}

std::string perm_label(const std::vector<int>& p) {
    std::string s = "[";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(p[i]);
    }
    return s + "]";
}

GroupPtr permutation_group(const std::vector<std::vector<int>>& perms) {
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
    size_t m = perms.size();
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    std::vector<std::string> labels(m);
    for (size_t a = 0; a < m; ++a) {
        labels[a] = perm_label(perms[a]);
        for (size_t b = 0; b < m; ++b) {
            // (p*q)(x) = p(q(x))
            std::vector<int> c(perms[a].size());
            for (size_t x = 0; x < c.size(); ++x)
                c[x] = perms[a][static_cast<size_t>(perms[b][x])];
            t[a][b] = index.at(c);
        }
    }
    return make_group(std::move(t), std::move(labels));
}

} // namespace

GroupPtr symmetric(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("symmetric: 1 <= n <= 4");
    return permutation_group(permutations_lex(n));
}

GroupPtr alternating(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("alternating: 1 <= n <= 4");
    std::vector<std::vector<int>> evens;
    for (auto& p : permutations_lex(n))
        if (perm_even(p)) evens.push_back(p);
    return permutation_group(evens);
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
    size_t na = a->order(), nb = b->order();
    size_t m = na * nb;
    auto idx = [nb](size_t x, size_t y) { return static_cast<int>(x * nb + y); };
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    std::vector<std::string> labels(m);
    for (size_t x1 = 0; x1 < na; ++x1)
        for (size_t y1 = 0; y1 < nb; ++y1) {
            labels[static_cast<size_t>(idx(x1, y1))] =
                "(" + a->label(static_cast<int>(x1)) + "," + b->label(static_cast<int>(y1)) + ")";
            for (size_t x2 = 0; x2 < na; ++x2)
                for (size_t y2 = 0; y2 < nb; ++y2)
                    t[idx(x1, y1)][idx(x2, y2)] =
                        idx(static_cast<size_t>(a->mul(static_cast<int>(x1), static_cast<int>(x2))),
                            static_cast<size_t>(b->mul(static_cast<int>(y1), static_cast<int>(y2))));
        }
    return make_group(std::move(t), std::move(labels));
}

bool Subgroup::contains(int x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

bool Subgroup::is_normal() const {
    for (int x : elements)
        for (size_t g = 0; g < parent->order(); ++g)
            if (!contains(parent->conj(x, static_cast<int>(g)))) return false;
    return true;
}

Subgroup trivial_subgroup(GroupPtr g) { return Subgroup{std::move(g), {0}}; }

Subgroup full_subgroup(GroupPtr g) {
    std::vector<int> all(g->order());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return Subgroup{std::move(g), std::move(all)};
}

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& seeds) {
    std::vector<bool> in(g->order(), false);
    in[0] = true;
    std::vector<int> queue{0};
    for (int s : seeds)
        if (!in[s]) {
            in[s] = true;
            queue.push_back(s);
        }
    for (size_t q = 0; q < queue.size(); ++q) {
        for (int s : seeds) {
            int y = g->mul(queue[q], s);
            if (!in[y]) {
                in[y] = true;
                queue.push_back(y);
            }
        }
    }
    std::vector<int> els;
    for (size_t i = 0; i < in.size(); ++i)
        if (in[i]) els.push_back(static_cast<int>(i));
    return Subgroup{g, std::move(els)};
}

Subgroup normal_closure(const GroupPtr& g, const std::vector<int>& seeds) {
    std::vector<int> gens = seeds;
    for (;;) {
        Subgroup s = subgroup_generated(g, gens);
        bool grew = false;
        for (int x : s.elements) {
            for (size_t c = 0; c < g->order() && !grew; ++c) {
                int y = g->conj(x, static_cast<int>(c));
                if (!s.contains(y)) {
                    gens.push_back(y);
                    grew = true;
                }
            }
            if (grew) break;
        }
        if (!grew) return s;
    }
}

Subgroup commutator_subgroup(const GroupPtr& g, const Subgroup& a, const Subgroup& b) {
    std::vector<int> gens;
    for (int x : a.elements)
        for (int y : b.elements) {
            int c = g->comm(x, y);
            if (c != 0) gens.push_back(c);
        }
    return subgroup_generated(g, gens);
}

Subgroup center(const GroupPtr& g) {
    std::vector<int> els;
    for (size_t x = 0; x < g->order(); ++x) {
        bool central = true;
        for (size_t y = 0; y < g->order() && central; ++y)
            if (g->mul(static_cast<int>(x), static_cast<int>(y)) !=
                g->mul(static_cast<int>(y), static_cast<int>(x)))
                central = false;
        if (central) els.push_back(static_cast<int>(x));
    }
    return Subgroup{g, std::move(els)};
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    std::vector<int> els;
    std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(),
                          b.elements.end(), std::back_inserter(els));
    return Subgroup{a.parent, std::move(els)};
}

std::vector<Subgroup> lower_central_series(const GroupPtr& g, int depth) {
    std::vector<Subgroup> series{full_subgroup(g)};
    for (int k = 1; k < depth; ++k) {
        Subgroup next = commutator_subgroup(g, series.back(), full_subgroup(g));
        if (next.same_elements(series.back())) break;
        series.push_back(std::move(next));
    }
    return series;
}

const Subgroup& series_term(const std::vector<Subgroup>& series, size_t k) {
    if (k == 0 || series.empty()) throw std::invalid_argument("series index is 1-based");
    return series[std::min(k, series.size()) - 1];
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> out;
    std::vector<Subgroup> queue{trivial_subgroup(g)};
    seen.insert(queue[0].elements);
    for (size_t q = 0; q < queue.size(); ++q) {
        Subgroup s = queue[q];
        for (size_t x = 1; x < g->order(); ++x) {
            if (s.contains(static_cast<int>(x))) continue;
            std::vector<int> gens = s.elements;
            gens.push_back(static_cast<int>(x));
            Subgroup t = subgroup_generated(g, gens);
            if (seen.insert(t.elements).second) queue.push_back(t);
        }
    }
    out = std::move(queue);
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    return out;
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& g) {
    std::vector<Subgroup> out;
    for (Subgroup& s : all_subgroups(g))
        if (s.is_normal()) out.push_back(std::move(s));
    return out;
}

GroupHom::GroupHom(GroupPtr src, GroupPtr dst, std::vector<int> images)
    : source(std::move(src)), target(std::move(dst)), map(std::move(images)) {
    if (map.size() != source->order()) throw std::invalid_argument("hom table size mismatch");
    for (int v : map)
        if (v < 0 || static_cast<size_t>(v) >= target->order())
            throw std::invalid_argument("hom image out of range");
    if (map[0] != 0) throw std::invalid_argument("hom does not fix the identity");
    for (size_t a = 0; a < source->order(); ++a)
        for (size_t b = 0; b < source->order(); ++b)
            if (map[source->mul(static_cast<int>(a), static_cast<int>(b))] !=
                target->mul(map[a], map[b]))
                throw std::invalid_argument("not a homomorphism at pair (" + std::to_string(a) +
                                            "," + std::to_string(b) + ")");
}

bool GroupHom::is_surjective() const {
    std::vector<bool> hit(target->order(), false);
    for (int v : map) hit[v] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool GroupHom::is_injective() const {
    std::vector<bool> hit(target->order(), false);
    for (int v : map) {
        if (hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

GroupHom identity_hom(const GroupPtr& g) {
    std::vector<int> m(g->order());
    for (size_t i = 0; i < m.size(); ++i) m[i] = static_cast<int>(i);
    return GroupHom(g, g, std::move(m));
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
    if (g.source.get() != f.target.get())
        throw std::invalid_argument("compose: group mismatch");
    std::vector<int> m(f.source->order());
    for (size_t i = 0; i < m.size(); ++i) m[i] = g.map[f.map[i]];
    return GroupHom(f.source, g.target, std::move(m));
}

PairOfGroups::PairOfGroups(GroupPtr g, Subgroup n) : group(std::move(g)), normal(std::move(n)) {
    if (normal.parent.get() != group.get())
        throw std::invalid_argument("pair: subgroup of a different group");
    for (int x : normal.elements)
        for (size_t c = 0; c < group->order(); ++c)
            if (!normal.contains(group->conj(x, static_cast<int>(c))))
                throw std::invalid_argument(
                    "pair: subgroup not normal (witness element " + std::to_string(x) +
                    " conjugated by " + std::to_string(c) + ")");
}

std::vector<Subgroup> relative_series(const PairOfGroups& p, int depth) {
    std::vector<Subgroup> series{p.normal};
    for (int k = 1; k < depth; ++k) {
        Subgroup next = commutator_subgroup(p.group, series.back(), full_subgroup(p.group));
        if (next.same_elements(series.back())) break;
        series.push_back(std::move(next));
    }
    return series;
}

QuotientResult quotient(const GroupPtr& g, const Subgroup& n) {
    if (!n.is_normal()) throw std::invalid_argument("quotient by a non-normal subgroup");
    size_t order = g->order();
    std::vector<int> coset_of(order, -1);
    std::vector<int> reps;
    for (size_t x = 0; x < order; ++x) {
        if (coset_of[x] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(static_cast<int>(x));
        for (int h : n.elements) coset_of[g->mul(static_cast<int>(x), h)] = c;
    }
    size_t m = reps.size();
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    std::vector<std::string> labels(m);
    for (size_t a = 0; a < m; ++a) {
        labels[a] = g->label(reps[a]) + "N";
        for (size_t b = 0; b < m; ++b) t[a][b] = coset_of[g->mul(reps[a], reps[b])];
    }
    GroupPtr q = make_group(std::move(t), std::move(labels));
    GroupHom proj(g, q, coset_of);
    if (!proj.is_surjective()) throw std::logic_error("quotient projection not surjective");
    return {std::move(q), std::move(proj)};
}

SubgroupGroup subgroup_as_group(const Subgroup& s) {
    const GroupPtr& g = s.parent;
    std::vector<int> from_parent(g->order(), -1);
    for (size_t i = 0; i < s.elements.size(); ++i) from_parent[s.elements[i]] = static_cast<int>(i);
    size_t m = s.elements.size();
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    std::vector<std::string> labels(m);
    for (size_t a = 0; a < m; ++a) {
        labels[a] = g->label(s.elements[a]);
        for (size_t b = 0; b < m; ++b) {
            int p = g->mul(s.elements[a], s.elements[b]);
            if (from_parent[p] < 0) throw std::invalid_argument("set not closed under product");
            t[a][b] = from_parent[p];
        }
    }
    return {make_group(std::move(t), std::move(labels)), s.elements, std::move(from_parent)};
}

Abelianization abelianize(const GroupPtr& g) {
    Subgroup derived = commutator_subgroup(g, full_subgroup(g), full_subgroup(g));
    QuotientResult q = quotient(g, derived);
    const GroupPtr& quo = q.group;
    size_t m = quo->order();

    Abelianization ab;
    ab.ab_quotient = quo;
    ab.projection = q.projection.map;
    ab.lift.assign(m, -1);
    for (size_t x = 0; x < g->order(); ++x)
        if (ab.lift[ab.projection[x]] < 0) ab.lift[ab.projection[x]] = static_cast<int>(x);

    // greedy generating set in element-index order
    Subgroup span = trivial_subgroup(quo);
    for (size_t x = 1; x < m; ++x) {
        if (span.contains(static_cast<int>(x))) continue;
        ab.generators.push_back(static_cast<int>(x));
        std::vector<int> gens = ab.generators;
        span = subgroup_generated(quo, gens);
        if (span.order() == m) break;
    }
    size_t k = ab.generators.size();

    // BFS exponent vectors
    ab.reps = abgrp::IntMatrix(m, k);
    std::vector<bool> seen(m, false);
    seen[0] = true;
    std::vector<int> queue{0};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int a = queue[qi];
        for (size_t i = 0; i < k; ++i) {
            int b = quo->mul(a, ab.generators[i]);
            if (!seen[b]) {
                seen[b] = true;
                for (size_t j = 0; j < k; ++j) ab.reps.at(b, j) = ab.reps.at(a, j);
                ab.reps.at(b, i) += 1;
                queue.push_back(b);
            }
        }
    }

    // Schreier relations: rep(a) + e_i - rep(a * g_i)
    std::set<std::vector<int64_t>> rel_set;
    for (size_t a = 0; a < m; ++a)
        for (size_t i = 0; i < k; ++i) {
            int b = quo->mul(static_cast<int>(a), ab.generators[i]);
            std::vector<int64_t> r(k);
            bool nonzero = false;
            for (size_t j = 0; j < k; ++j) {
                r[j] = ab.reps.at(a, j) - ab.reps.at(b, j) + (j == i ? 1 : 0);
                nonzero |= (r[j] != 0);
            }
            if (nonzero) rel_set.insert(std::move(r));
        }
    abgrp::IntMatrix rel(rel_set.size(), k);
    size_t r = 0;
    for (const auto& v : rel_set) {
        for (size_t j = 0; j < k; ++j) rel.at(r, j) = v[j];
        ++r;
    }
    ab.pres = abgrp::make_presented(k, rel);
    ab.group = ab.pres->canon();
    return ab;
}

std::vector<int64_t> Abelianization::coords(int g_element) const {
    size_t k = generators.size();
    std::vector<int64_t> v(k);
    int a = projection[g_element];
    for (size_t j = 0; j < k; ++j) v[j] = reps.at(static_cast<size_t>(a), j);
    return pres->to_canonical(v);
}

int Abelianization::element_for_canonical_gen(size_t j) const {
    std::vector<int64_t> e = pres->canonical_generator(j);
    int acc = 0;
    for (size_t i = 0; i < generators.size(); ++i)
        acc = ab_quotient->mul(acc, ab_quotient->pow(generators[i], e[i]));
    return acc;
}

abgrp::AbelianHom induced_hom_on_ab(const Abelianization& src, const Abelianization& dst,
                                    const std::vector<int>& elt_map) {
    if (elt_map.size() != src.ab_quotient->order())
        throw std::invalid_argument("induced_hom_on_ab: map size mismatch");
    abgrp::PresentedPtr cs = abgrp::canonical_presentation(src.group);
    abgrp::PresentedPtr cd = abgrp::canonical_presentation(dst.group);
    abgrp::IntMatrix m(cd->gens(), cs->gens());
    for (size_t j = 0; j < cs->gens(); ++j) {
        int e = src.element_for_canonical_gen(j);
        int y = elt_map[e];
        std::vector<int64_t> c = dst.pres->to_canonical(
            [&] {
                std::vector<int64_t> v(dst.generators.size());
                for (size_t t = 0; t < v.size(); ++t) v[t] = dst.reps.at(static_cast<size_t>(y), t);
                return v;
            }());
        for (size_t i = 0; i < cd->gens(); ++i) m.at(i, j) = c[i];
    }
    return abgrp::AbelianHom(std::move(cs), std::move(cd), std::move(m));
}

abgrp::AbelianHom induced_abelian_hom(const GroupHom& f, const Abelianization& src,
                                      const Abelianization& dst) {
    std::vector<int> elt_map(src.ab_quotient->order());
    for (size_t a = 0; a < elt_map.size(); ++a)
        elt_map[a] = dst.projection[f.map[src.lift[a]]];
    return induced_hom_on_ab(src, dst, elt_map);
}

abgrp::AbelianHom induced_abelian_hom(const GroupHom& f) {
    return induced_abelian_hom(f, abelianize(f.source), abelianize(f.target));
}

std::optional<Subgroup> find_complement(const PairOfGroups& p) {
    const GroupPtr& g = p.group;
    size_t target = g->order() / p.normal.order();
    if (target == 1) return trivial_subgroup(g);
    if (target == g->order()) return full_subgroup(g);

    auto is_complement = [&](const Subgroup& q) {
        return q.order() == target && intersect(q, p.normal).order() == 1;
    };

    size_t n = g->order();
    // generating sets of size 1, 2, 3 in index order
    for (size_t a = 1; a < n; ++a) {
        Subgroup q = subgroup_generated(g, {static_cast<int>(a)});
        if (is_complement(q)) return q;
    }
    for (size_t a = 1; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b) {
            Subgroup q = subgroup_generated(g, {static_cast<int>(a), static_cast<int>(b)});
            if (is_complement(q)) return q;
        }
    for (size_t a = 1; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b)
            for (size_t c = b + 1; c < n; ++c) {
                Subgroup q = subgroup_generated(
                    g, {static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)});
                if (is_complement(q)) return q;
            }
    for (Subgroup& q : all_subgroups(g))
        if (is_complement(q)) return q;
    return std::nullopt;
}

} // namespace fingrp
