#include "pairmult/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace homology {

using abgrp::IntMatrix;
using abgrp::checked_add;
using abgrp::checked_mul;

std::vector<std::tuple<uint32_t, uint32_t, int64_t>> SparseMatZ::triplets() const {
    std::vector<std::tuple<uint32_t, uint32_t, int64_t>> out;
    for (size_t j = 0; j < ncols; ++j)
        for (auto [r, v] : columns[j]) out.emplace_back(r, static_cast<uint32_t>(j), v);
    return out;
}

IntMatrix SparseMatZ::dense() const {
    IntMatrix m(nrows, ncols);
    for (size_t j = 0; j < ncols; ++j)
        for (auto [r, v] : columns[j]) m.at(r, j) = checked_add(m.at(r, j), v);
    return m;
}

ChainComplexZ::ChainComplexZ(std::vector<size_t> dims, std::vector<SparseMatZ> boundaries)
    : dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
    if (dims_.size() != boundaries_.size() + 1)
        throw std::invalid_argument("chain complex: dims/boundaries mismatch");
    for (size_t k = 0; k < boundaries_.size(); ++k) {
        if (boundaries_[k].nrows != dims_[k] || boundaries_[k].ncols != dims_[k + 1])
            throw std::invalid_argument("chain complex: boundary shape mismatch");
    }
    // d_{k} o d_{k+1} = 0
    for (size_t k = 1; k < boundaries_.size(); ++k) {
        const SparseMatZ& hi = boundaries_[k];
        const SparseMatZ& lo = boundaries_[k - 1];
        for (size_t j = 0; j < hi.ncols; ++j) {
            std::map<uint32_t, int64_t> acc;
            for (auto [mid, v] : hi.columns[j])
                for (auto [r, w] : lo.columns[mid])
                    acc[r] = checked_add(acc[r], checked_mul(v, w));
            for (auto& [r, v] : acc)
                if (v != 0)
                    throw std::logic_error("chain complex: d o d != 0 at degree " +
                                           std::to_string(k + 1));
        }
    }
}

size_t BarIndex::encode(std::span<const int> tuple) const {
    size_t q = order - 1, idx = 0;
    for (int g : tuple) {
        if (g <= 0 || static_cast<size_t>(g) >= order)
            throw std::invalid_argument("bar tuple entry out of range");
        idx = idx * q + (static_cast<size_t>(g) - 1);
    }
    return idx;
}

std::vector<int> BarIndex::decode(size_t index, size_t degree) const {
    size_t q = order - 1;
    std::vector<int> t(degree);
    for (size_t i = degree; i-- > 0;) {
        t[i] = static_cast<int>(index % q) + 1;
        index /= q;
    }
    return t;
}

ChainComplexZ bar_complex(const fingrp::GroupPtr& g, int top_degree) {
    if (top_degree < 1 || top_degree > 4)
        throw std::invalid_argument("bar_complex: top_degree must be in 1..4");
    size_t n = g->order();
    size_t q = n - 1;
    std::vector<size_t> dims(static_cast<size_t>(top_degree) + 1);
    dims[0] = 1;
    for (size_t k = 1; k < dims.size(); ++k) {
        dims[k] = dims[k - 1] * q;
        if (dims[k] > 2000000) throw std::invalid_argument("bar_complex: dimension cap exceeded");
    }
    BarIndex codec{n};

    std::vector<SparseMatZ> boundaries(static_cast<size_t>(top_degree));
    for (size_t k = 1; k <= static_cast<size_t>(top_degree); ++k) {
        SparseMatZ d;
        d.nrows = dims[k - 1];
        d.ncols = dims[k];
        d.columns.resize(d.ncols);
        std::vector<int> tuple(k);
        for (size_t j = 0; j < d.ncols; ++j) {
            tuple = codec.decode(j, k);
            std::map<size_t, int64_t> acc;
            // face 0: drop the head
            {
                std::vector<int> t(tuple.begin() + 1, tuple.end());
                acc[codec.encode(t)] += 1;
            }
            // middle faces: merge adjacent entries, dropped when degenerate
            int64_t sign = -1;
            for (size_t i = 0; i + 1 < k; ++i) {
                int prod = g->mul(tuple[i], tuple[i + 1]);
                if (prod != 0) {
                    std::vector<int> t;
                    t.reserve(k - 1);
                    t.insert(t.end(), tuple.begin(), tuple.begin() + static_cast<long>(i));
                    t.push_back(prod);
                    t.insert(t.end(), tuple.begin() + static_cast<long>(i) + 2, tuple.end());
                    acc[codec.encode(t)] += sign;
                }
                sign = -sign;
            }
            // last face: drop the tail
            {
                std::vector<int> t(tuple.begin(), tuple.end() - 1);
                acc[codec.encode(t)] += sign;
            }
            for (auto& [row, v] : acc)
                if (v != 0) d.columns[j].emplace_back(static_cast<uint32_t>(row), v);
        }
        boundaries[k - 1] = std::move(d);
    }
    return ChainComplexZ(std::move(dims), std::move(boundaries));
}

std::vector<int64_t> HomologyData::generator_cycle(size_t j) const {
    if (!has_witness) throw std::logic_error("homology witness not computed at this degree");
    std::vector<int64_t> x = pres->canonical_generator(j);
    return abgrp::mat_vec(kernel, x);
}

std::vector<int64_t> HomologyData::project_cycle(std::span<const int64_t> cycle) const {
    if (!has_witness) throw std::logic_error("homology witness not computed at this degree");
    std::vector<int64_t> y = abgrp::mat_vec(v_inv, cycle);
    for (size_t i = 0; i < rank_dk; ++i)
        if (y[i] != 0) throw std::logic_error("project_cycle: vector is not a cycle");
    std::vector<int64_t> x(y.begin() + static_cast<long>(rank_dk), y.end());
    return pres->to_canonical(x);
}

HomologyData homology_at(const ChainComplexZ& c, size_t k, bool want_witness) {
    if (k + 1 > c.top_degree())
        throw std::invalid_argument("homology_at: need boundaries up to degree k+1");

    HomologyData out;
    out.degree = k;

    const SparseMatZ& din = c.boundary(k + 1);  // d_{k+1}: C_{k+1} -> C_k
    size_t nk = c.dim(k);

    if (!want_witness) {
        // group only: free rank from the two boundary ranks, torsion from the
        // elementary divisors of the incoming boundary
        size_t rank_out = 0;
        if (k >= 1) {
            const SparseMatZ& dout = c.boundary(k);
            rank_out = abgrp::elementary_divisors_sparse(dout.nrows, dout.ncols,
                                                         dout.triplets())
                           .size();
        }
        std::vector<int64_t> div =
            abgrp::elementary_divisors_sparse(din.nrows, din.ncols, din.triplets());
        std::vector<int64_t> tor;
        for (int64_t d : div)
            if (d >= 2) tor.push_back(d);
        out.group = abgrp::AbelianGroup(nk - rank_out - div.size(), std::move(tor));
        out.has_witness = false;
        return out;
    }

    // witness route: dense kernel of d_k, then relations from d_{k+1}
    IntMatrix dout(k >= 1 ? c.dim(k - 1) : 0, nk);
    if (k >= 1) dout = c.boundary(k).dense();

    abgrp::SnfOptions opt;
    opt.right = true;
    opt.right_inv = true;
    abgrp::SnfResult s = abgrp::smith_normal_form(dout, opt);
    out.rank_dk = s.rank;
    size_t z = nk - s.rank;

    out.kernel = IntMatrix(nk, z);
    for (size_t j = 0; j < z; ++j)
        for (size_t i = 0; i < nk; ++i) out.kernel.at(i, j) = s.right->at(i, j + s.rank);
    out.v_inv = std::move(*s.right_inv);

    IntMatrix rel(din.ncols, z);
    for (size_t j = 0; j < din.ncols; ++j) {
        if (din.columns[j].empty()) continue;
        // y = V^{-1} * column, sparse accumulation
        std::vector<int64_t> y(nk, 0);
        for (auto [r, v] : din.columns[j])
            for (size_t i = 0; i < nk; ++i)
                y[i] = checked_add(y[i], checked_mul(v, out.v_inv.at(i, r)));
        for (size_t i = 0; i < s.rank; ++i)
            if (y[i] != 0) throw std::logic_error("bar boundary image is not a cycle");
        for (size_t i = 0; i < z; ++i) rel.at(j, i) = y[s.rank + i];
    }
    out.pres = abgrp::make_presented(z, rel);
    out.group = out.pres->canon();
    out.has_witness = true;
    return out;
}

Outcome<std::shared_ptr<const HomologyData>> Oracle::data_at(const fingrp::GroupPtr& g,
                                                             size_t k) const {
    if (k > 3) return Outcome<std::shared_ptr<const HomologyData>>::na("degree-above-3");
    size_t bound = k == 3 ? cfg_.h3_max_order : cfg_.max_order;
    if (g->order() > bound)
        return Outcome<std::shared_ptr<const HomologyData>>::na(
            k == 3 ? "order-exceeds-h3-bound" : "order-exceeds-h2-bound");

    std::shared_future<std::shared_ptr<const HomologyData>> fut;
    {
        std::unique_lock<std::mutex> lock(mu_);
        auto key = std::make_pair(g.get(), k);
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            std::promise<std::shared_ptr<const HomologyData>> prom;
            fut = prom.get_future().share();
            cache_.emplace(key, fut);
            keepalive_.emplace(g.get(), g);
            lock.unlock();
            try {
                ChainComplexZ complex = bar_complex(g, static_cast<int>(k) + 1);
                bool witness = complex.dim(k) <= cfg_.witness_dim_cap;
                auto data = std::make_shared<const HomologyData>(
                    homology_at(complex, k, witness));
                prom.set_value(data);
            } catch (...) {
                prom.set_exception(std::current_exception());
                throw;
            }
        } else {
            fut = it->second;
        }
    }
    return Outcome<std::shared_ptr<const HomologyData>>::of(fut.get());
}

Outcome<abgrp::AbelianGroup> Oracle::homology(const fingrp::GroupPtr& g, size_t k) const {
    auto d = data_at(g, k);
    if (!d.ok()) return Outcome<abgrp::AbelianGroup>::na(d.na_reason);
    return Outcome<abgrp::AbelianGroup>::of((*d)->group);
}

Outcome<abgrp::AbelianGroup> Oracle::schur_multiplier(const fingrp::GroupPtr& g) const {
    return homology(g, 2);
}

Outcome<abgrp::AbelianHom> Oracle::induced_on_homology(const fingrp::GroupHom& f,
                                                       size_t k) const {
    if (k < 1 || k > 2)
        return Outcome<abgrp::AbelianHom>::na("induced-map-degree-out-of-scope");
    auto src = data_at(f.source, k);
    if (!src.ok()) return Outcome<abgrp::AbelianHom>::na(src.na_reason);
    auto dst = data_at(f.target, k);
    if (!dst.ok()) return Outcome<abgrp::AbelianHom>::na(dst.na_reason);
    const HomologyData& a = **src;
    const HomologyData& b = **dst;
    if (!a.has_witness || !b.has_witness)
        return Outcome<abgrp::AbelianHom>::na("homology-witness-unavailable");

    BarIndex src_codec{f.source->order()};
    BarIndex dst_codec{f.target->order()};
    size_t dst_dim = 1;
    for (size_t i = 0; i < k; ++i) dst_dim *= f.target->order() - 1;

    abgrp::PresentedPtr cs = abgrp::canonical_presentation(a.group);
    abgrp::PresentedPtr cd = abgrp::canonical_presentation(b.group);
    IntMatrix m(cd->gens(), cs->gens());
    for (size_t j = 0; j < cs->gens(); ++j) {
        std::vector<int64_t> cyc = a.generator_cycle(j);
        std::vector<int64_t> img(dst_dim, 0);
        for (size_t idx = 0; idx < cyc.size(); ++idx) {
            if (cyc[idx] == 0) continue;
            std::vector<int> t = src_codec.decode(idx, k);
            bool degenerate = false;
            for (int& e : t) {
                e = f(e);
                if (e == 0) degenerate = true;
            }
            if (degenerate) continue;  // hits the normalized-away part
            size_t target_idx = dst_codec.encode(t);
            img[target_idx] = checked_add(img[target_idx], cyc[idx]);
        }
        std::vector<int64_t> col = b.project_cycle(img);
        for (size_t i = 0; i < cd->gens(); ++i) m.at(i, j) = col[i];
    }
    return Outcome<abgrp::AbelianHom>::of(abgrp::AbelianHom(cs, cd, std::move(m)));
}

} // namespace homology
