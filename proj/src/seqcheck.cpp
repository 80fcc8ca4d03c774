#include "pairmult/seqcheck.hpp"

#include <stdexcept>

namespace seqcheck {

using abgrp::AbelianHom;
using abgrp::IntMatrix;

AbelianSequence::AbelianSequence(std::vector<AbelianHom> maps, std::vector<std::string> labels)
    : maps_(std::move(maps)), labels_(std::move(labels)) {
    if (maps_.empty()) throw std::invalid_argument("sequence needs at least one map");
    for (size_t i = 0; i + 1 < maps_.size(); ++i)
        if (!abgrp::same_presentation(*maps_[i].target, *maps_[i + 1].source))
            throw std::invalid_argument("sequence endpoints do not match at position " +
                                        std::to_string(i));
    if (labels_.empty())
        for (size_t i = 0; i <= maps_.size(); ++i) labels_.push_back("A" + std::to_string(i));
    if (labels_.size() != maps_.size() + 1)
        throw std::invalid_argument("label count must be map count + 1");
}

CheckResult is_complex(const AbelianSequence& s) {
    for (size_t i = 0; i + 1 < s.length(); ++i) {
        AbelianHom comp = abgrp::compose(s.map(i + 1), s.map(i));
        for (size_t j = 0; j < comp.matrix.cols(); ++j) {
            std::vector<int64_t> img = comp.matrix.col(j);
            if (!comp.target->is_relation(img)) {
                Witness w;
                w.position = i;
                w.element = comp.target->to_canonical(img);
                w.note = "composite of maps " + std::to_string(i) + "," + std::to_string(i + 1) +
                         " nonzero on source generator " + std::to_string(j);
                return {false, std::move(w)};
            }
        }
    }
    return {true, std::nullopt};
}

CheckResult exact_at(const AbelianSequence& s, size_t i) {
    if (i + 1 >= s.length()) throw std::invalid_argument("exact_at: position out of range");
    const AbelianHom& f = s.map(i);
    const AbelianHom& g = s.map(i + 1);
    const abgrp::PresentedAbelian& mid = *f.target;

    IntMatrix image_gens = f.matrix;                     // mid coords, columns
    IntMatrix ker_gens = abgrp::kernel_generators(g);    // mid coords, columns

    IntMatrix rel_cols = mid.relation_cols();
    auto with_relations = [&](const IntMatrix& gens) {
        return rel_cols.cols() ? abgrp::hstack(gens, rel_cols) : gens;
    };
    abgrp::LatticeSolver image_lat(with_relations(image_gens));
    abgrp::LatticeSolver kernel_lat(with_relations(ker_gens));

    // image subset of kernel
    for (size_t j = 0; j < image_gens.cols(); ++j) {
        std::vector<int64_t> v = image_gens.col(j);
        if (!kernel_lat.contains(v)) {
            Witness w;
            w.position = i;
            w.element = mid.to_canonical(v);
            w.note = "image element outside kernel";
            return {false, std::move(w)};
        }
    }
    // kernel subset of image
    for (size_t j = 0; j < ker_gens.cols(); ++j) {
        std::vector<int64_t> v = ker_gens.col(j);
        if (!image_lat.contains(v)) {
            Witness w;
            w.position = i;
            w.element = mid.to_canonical(v);
            w.note = "kernel element outside image";
            return {false, std::move(w)};
        }
    }
    return {true, std::nullopt};
}

bool coker_ker_compare(const AbelianHom& f, const AbelianHom& g) {
    return abgrp::hom_cokernel(f).group->canon() == abgrp::hom_kernel(g).group->canon();
}

} // namespace seqcheck
