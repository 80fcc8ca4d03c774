#pragma once

#include "pairmult/abgrp.hpp"
#include "pairmult/fingrp.hpp"
#include "pairmult/outcome.hpp"

#include <future>
#include <map>
#include <mutex>
#include <span>
#include <vector>

namespace homology {

using pairmult::Outcome;

// Sparse matrix stored per column; rows() x cols() over the integers.
struct SparseMatZ {
    size_t nrows = 0, ncols = 0;
    std::vector<std::vector<std::pair<uint32_t, int64_t>>> columns;

    std::vector<std::tuple<uint32_t, uint32_t, int64_t>> triplets() const;
    abgrp::IntMatrix dense() const;
};

// Chain complex of free Z-modules, boundaries d_1..d_top with
// d_k : C_k -> C_{k-1}. Consecutive boundaries are verified to compose to
// zero at construction time.
class ChainComplexZ {
public:
    ChainComplexZ(std::vector<size_t> dims, std::vector<SparseMatZ> boundaries);

    size_t top_degree() const { return boundaries_.size(); }
    size_t dim(size_t k) const { return dims_.at(k); }
    const SparseMatZ& boundary(size_t k) const { return boundaries_.at(k - 1); }

private:
    std::vector<size_t> dims_;         // dims_[k] = dim C_k, k = 0..top
    std::vector<SparseMatZ> boundaries_;
};

// Normalized bar complex: degree-n basis indexed by n-tuples of non-identity
// elements, boundary the alternating face sum with degenerate terms dropped.
ChainComplexZ bar_complex(const fingrp::GroupPtr& g, int top_degree);

// Tuple <-> basis-index codec for the normalized bar basis.
struct BarIndex {
    size_t order;  // |G|

    size_t encode(std::span<const int> tuple) const;
    std::vector<int> decode(size_t index, size_t degree) const;
};

// Homology at one degree. The witness (kernel basis, presentation, projector)
// is computed when the degree-k dimension is small enough to afford dense
// transforms; the group itself is always exact.
struct HomologyData {
    abgrp::AbelianGroup group;
    size_t degree = 0;
    bool has_witness = false;

    // witness fields (valid when has_witness)
    abgrp::IntMatrix kernel;   // dim C_k x z, columns a basis of ker d_k
    abgrp::PresentedPtr pres;  // presentation of homology on the kernel basis
    abgrp::IntMatrix v_inv;    // inverse right transform of SNF(d_k)
    size_t rank_dk = 0;

    // canonical homology generator j as an explicit cycle vector in C_k
    std::vector<int64_t> generator_cycle(size_t j) const;
    // canonical coordinates of a cycle (throws if the vector is not a cycle)
    std::vector<int64_t> project_cycle(std::span<const int64_t> cycle) const;
};

HomologyData homology_at(const ChainComplexZ& c, size_t k, bool want_witness = true);

struct OracleConfig {
    size_t max_order = 16;     // bound for degrees <= 2
    size_t h3_max_order = 12;  // bound for degree 3
    size_t witness_dim_cap = 600;  // dense-transform cap on dim C_k
};

// Bar-resolution oracle with per-group caching. All results are cached by
// group identity; concurrent queries share one computation via futures.
class Oracle {
public:
    explicit Oracle(OracleConfig cfg = {}) : cfg_(cfg) {}

    const OracleConfig& config() const { return cfg_; }

    Outcome<abgrp::AbelianGroup> homology(const fingrp::GroupPtr& g, size_t k) const;
    Outcome<abgrp::AbelianGroup> schur_multiplier(const fingrp::GroupPtr& g) const;
    // induced map on H_k in canonical coordinates, k in {1, 2}
    Outcome<abgrp::AbelianHom> induced_on_homology(const fingrp::GroupHom& f, size_t k) const;

private:
    OracleConfig cfg_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<const fingrp::FiniteGroup*, size_t>,
                     std::shared_future<std::shared_ptr<const HomologyData>>>
        cache_;
    mutable std::map<const fingrp::FiniteGroup*, fingrp::GroupPtr> keepalive_;

    Outcome<std::shared_ptr<const HomologyData>> data_at(const fingrp::GroupPtr& g,
                                                         size_t k) const;
};

} // namespace homology
