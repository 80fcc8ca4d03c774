#pragma once

#include "pairmult/corpus.hpp"
#include "pairmult/freeprod.hpp"
#include "pairmult/homology.hpp"
#include "pairmult/routes.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cli {

inline constexpr const char* kToolVersion = "0.1.0";

struct RunConfig {
    int c = 1;
    pairmult::Interpretation interpretation = pairmult::Interpretation::reduced;
    size_t max_order = 16;
    size_t h3_max_order = 12;
    uint64_t seed = 0;
    bool sequential = false;
    std::vector<std::string> checks;  // empty = all

    static const std::vector<std::string>& all_checks();
    homology::OracleConfig oracle_config() const;
};

struct CheckRecord {
    std::string check;
    std::string subject;
    pairmult::CheckStatus status = pairmult::CheckStatus::NA;
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    std::vector<std::string> notes;
    int64_t ms = 0;
};

struct VerificationReport {
    std::string version = kToolVersion;
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    std::vector<CheckRecord> records;
    std::vector<std::string> findings;

    // 1 when any record carries FAIL (forced-identity violation), else 0
    int exit_code() const;
    nlohmann::ordered_json to_json(bool with_timing = true) const;
    std::string table() const;
};

// Runs the requested checks over every applicable corpus subject. The record
// list is ordered by (subject, check) regardless of scheduling.
VerificationReport run_checks(const Corpus& corpus, const RunConfig& cfg);

// canonical-form serialization used by the compute command
std::string format_canonical(const abgrp::AbelianGroup& g);
nlohmann::ordered_json canonical_json(const abgrp::AbelianGroup& g);

// `compute` subcommand: prints the requested invariant; returns an exit code.
int run_compute(const Corpus& corpus, const RunConfig& cfg, const std::string& what,
                const std::vector<std::string>& group_names,
                const std::vector<std::string>& pair_names,
                const std::vector<std::string>& presentation_names, std::ostream& out);

} // namespace cli
