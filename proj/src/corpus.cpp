#include "pairmult/corpus.hpp"

#include <fstream>
#include <set>

namespace cli {

using nlohmann::json;

const fingrp::GroupPtr* Corpus::find_group(const std::string& name) const {
    for (const auto& [n, g] : groups)
        if (n == name) return &g;
    return nullptr;
}

const Corpus::PairEntry* Corpus::find_pair(const std::string& name) const {
    for (const auto& p : pairs)
        if (p.name == name) return &p;
    return nullptr;
}

namespace {

[[noreturn]] void vfail(const std::string& what) {
    throw CorpusError(CorpusError::Kind::validation, what);
}
[[noreturn]] void pfail(const std::string& what) {
    throw CorpusError(CorpusError::Kind::parse, what);
}

fingrp::GroupPtr construct_group(const Corpus& corpus, const json& spec,
                                 const std::string& name) {
    if (!spec.is_object() || spec.size() != 1)
        pfail("group '" + name + "': construct must be a one-key object");
    const auto& [key, value] = *spec.items().begin();
    if (key == "cyclic") return fingrp::cyclic(value.get<int>());
    if (key == "dihedral") return fingrp::dihedral(value.get<int>());
    if (key == "symmetric") return fingrp::symmetric(value.get<int>());
    if (key == "alternating") return fingrp::alternating(value.get<int>());
    if (key == "quaternion") {
        if (value.get<int>() != 8) vfail("group '" + name + "': only quaternion order 8");
        return fingrp::quaternion8();
    }
    if (key == "product") {
        if (!value.is_array() || value.size() < 2)
            pfail("group '" + name + "': product needs >= 2 factor names");
        fingrp::GroupPtr acc;
        for (const auto& fname : value) {
            const fingrp::GroupPtr* f = corpus.find_group(fname.get<std::string>());
            if (!f) vfail("group '" + name + "': unknown factor " + fname.get<std::string>());
            acc = acc ? fingrp::direct_product(acc, *f) : *f;
        }
        return acc;
    }
    pfail("group '" + name + "': unknown constructor '" + key + "'");
}

} // namespace

Corpus corpus_from_json(const json& doc) {
    Corpus corpus;
    if (!doc.is_object()) pfail("corpus document must be a JSON object");
    std::set<std::string> names;

    for (const auto& g : doc.value("groups", json::array())) {
        std::string name = g.value("name", "");
        if (name.empty()) pfail("group entry without a name");
        if (!names.insert(name).second) pfail("duplicate group name '" + name + "'");
        fingrp::GroupPtr grp;
        if (g.contains("table")) {
            std::vector<std::vector<int>> table = g["table"].get<std::vector<std::vector<int>>>();
            std::vector<std::string> labels;
            if (g.contains("labels")) labels = g["labels"].get<std::vector<std::string>>();
            try {
                grp = fingrp::make_group(std::move(table), std::move(labels));
            } catch (const std::invalid_argument& e) {
                vfail("group '" + name + "': " + e.what());
            }
        } else if (g.contains("construct")) {
            grp = construct_group(corpus, g["construct"], name);
        } else {
            pfail("group '" + name + "' needs a table or a construct spec");
        }
        corpus.groups.emplace_back(name, std::move(grp));
    }

    for (const auto& p : doc.value("pairs", json::array())) {
        std::string name = p.value("name", "");
        if (name.empty()) pfail("pair entry without a name");
        if (!names.insert(name).second) pfail("duplicate name '" + name + "'");
        std::string gname = p.value("group", "");
        const fingrp::GroupPtr* g = corpus.find_group(gname);
        if (!g) vfail("pair '" + name + "': unknown group '" + gname + "'");
        fingrp::Subgroup sub;
        if (!p.contains("normal")) pfail("pair '" + name + "' needs a normal spec");
        if (p["normal"].is_array()) {
            std::vector<int> els = p["normal"].get<std::vector<int>>();
            std::sort(els.begin(), els.end());
            for (int x : els)
                if (x < 0 || static_cast<size_t>(x) >= (*g)->order())
                    vfail("pair '" + name + "': element index out of range");
            sub = fingrp::Subgroup{*g, std::move(els)};
            // explicit lists must be subgroups
            for (int a : sub.elements)
                for (int b : sub.elements)
                    if (!sub.contains((*g)->mul(a, b)))
                        vfail("pair '" + name + "': element list is not closed under product");
        } else if (p["normal"].is_object() && p["normal"].contains("generated_by")) {
            sub = fingrp::subgroup_generated(*g,
                                             p["normal"]["generated_by"].get<std::vector<int>>());
        } else {
            pfail("pair '" + name + "': normal must be an index list or {generated_by: [...]}");
        }
        try {
            corpus.pairs.push_back({name, gname, fingrp::PairOfGroups(*g, std::move(sub))});
        } catch (const std::invalid_argument& e) {
            vfail("pair '" + name + "': " + e.what());
        }
    }

    for (const auto& pr : doc.value("presentations", json::array())) {
        std::string name = pr.value("name", "");
        if (name.empty()) pfail("presentation entry without a name");
        if (!names.insert(name).second) pfail("duplicate name '" + name + "'");
        nilfree::PresentationWithSubgroup pres;
        pres.rank = pr.value("rank", 0);
        if (pres.rank < 1 || pres.rank > 3)
            vfail("presentation '" + name + "': rank must be 1..3");
        try {
            for (const auto& w : pr.value("relators", json::array()))
                pres.relators.push_back(nilfree::parse_word(w.get<std::string>(), pres.rank));
            for (const auto& w : pr.value("subgroup", json::array()))
                pres.subgroup_words.push_back(nilfree::parse_word(w.get<std::string>(), pres.rank));
        } catch (const std::invalid_argument& e) {
            pfail("presentation '" + name + "': " + e.what());
        }
        corpus.presentations.push_back({name, std::move(pres)});
    }
    return corpus;
}

Corpus load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CorpusError(CorpusError::Kind::parse, "cannot open corpus file " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw CorpusError(CorpusError::Kind::parse, std::string("corpus parse error: ") + e.what());
    }
    return corpus_from_json(doc);
}

Corpus default_corpus() {
    Corpus corpus;
    auto add = [&](const std::string& name, fingrp::GroupPtr g) {
        corpus.groups.emplace_back(name, std::move(g));
    };
    for (int n = 2; n <= 8; ++n) add("C" + std::to_string(n), fingrp::cyclic(n));
    add("C2xC2", fingrp::direct_product(fingrp::cyclic(2), fingrp::cyclic(2)));
    add("C3xC3", fingrp::direct_product(fingrp::cyclic(3), fingrp::cyclic(3)));
    add("C2xC2xC2", fingrp::direct_product(
                        fingrp::direct_product(fingrp::cyclic(2), fingrp::cyclic(2)),
                        fingrp::cyclic(2)));
    add("C4xC2", fingrp::direct_product(fingrp::cyclic(4), fingrp::cyclic(2)));
    add("D4", fingrp::dihedral(4));
    add("Q8", fingrp::quaternion8());
    add("S3", fingrp::symmetric(3));
    add("D6", fingrp::dihedral(6));
    add("A4", fingrp::alternating(4));
    add("S4", fingrp::symmetric(4));

    for (const auto& [name, g] : corpus.groups) {
        if (g->order() > 12) continue;
        auto normals = fingrp::normal_subgroups(g);
        for (size_t k = 0; k < normals.size(); ++k)
            corpus.pairs.push_back({name + "/N" + std::to_string(k), name,
                                    fingrp::PairOfGroups(g, normals[k])});
    }
    return corpus;
}

} // namespace cli
