#pragma once

#include "pairmult/fingrp.hpp"
#include "pairmult/nilfree.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace cli {

// Corpus loading failures carry whether the file was malformed (parse) or
// semantically invalid (axiom): the two map to different exit codes.
struct CorpusError : std::runtime_error {
    enum class Kind { parse, validation };
    Kind kind;

    CorpusError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

struct Corpus {
    std::vector<std::pair<std::string, fingrp::GroupPtr>> groups;

    struct PairEntry {
        std::string name;
        std::string group_name;
        fingrp::PairOfGroups pair;
    };
    std::vector<PairEntry> pairs;

    struct PresentationEntry {
        std::string name;
        nilfree::PresentationWithSubgroup pres;
    };
    std::vector<PresentationEntry> presentations;

    const fingrp::GroupPtr* find_group(const std::string& name) const;
    const PairEntry* find_pair(const std::string& name) const;
};

// JSON document with three sections: groups (tables or constructor specs),
// pairs (element lists or generator lists for the normal subgroup), and
// presentations in the word mini-grammar.
Corpus corpus_from_json(const nlohmann::json& doc);
Corpus load_corpus(const std::string& path);

// Built-in default corpus: C2..C8, C2xC2, C3xC3, C2xC2xC2, C4xC2, D4, Q8,
// S3, D6, A4, S4, with all normal subgroups enumerated as pairs for groups
// of order <= 12.
Corpus default_corpus();

} // namespace cli
