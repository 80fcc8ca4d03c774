#pragma once

#include "pairmult/abgrp.hpp"

#include <optional>
#include <string>
#include <vector>

namespace seqcheck {

// Concrete element witnessing a failed check, in the canonical coordinates
// of the group where the failure lives.
struct Witness {
    size_t position = 0;
    std::vector<int64_t> element;
    std::string note;
};

struct CheckResult {
    bool ok = false;
    std::optional<Witness> witness;
};

// Composable chain of homs f_0, ..., f_{k-1} with target(f_i) = source(f_{i+1})
// (structural presentation equality), with optional position labels.
class AbelianSequence {
public:
    explicit AbelianSequence(std::vector<abgrp::AbelianHom> maps,
                             std::vector<std::string> labels = {});

    size_t length() const { return maps_.size(); }
    const abgrp::AbelianHom& map(size_t i) const { return maps_.at(i); }
    const std::string& label(size_t i) const { return labels_.at(i); }

private:
    std::vector<abgrp::AbelianHom> maps_;
    std::vector<std::string> labels_;
};

// Every consecutive composite is zero; witness = first violating position
// together with the nonzero image of a source generator.
CheckResult is_complex(const AbelianSequence& s);

// Exactness at the object between f_i and f_{i+1} (0 <= i <= k-2):
// image(f_i) = kernel(f_{i+1}), tested by double inclusion with integer
// lattice solvability. The witness is an element of the symmetric difference.
CheckResult exact_at(const AbelianSequence& s, size_t i);

// cokernel(f) isomorphic to kernel(g), as abstract groups.
bool coker_ker_compare(const abgrp::AbelianHom& f, const abgrp::AbelianHom& g);

} // namespace seqcheck
