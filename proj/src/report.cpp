#include "pairmult/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

namespace cli {

using abgrp::AbelianGroup;
using nlohmann::ordered_json;
using pairmult::CheckStatus;
using pairmult::status_name;

const std::vector<std::string>& RunConfig::all_checks() {
    static const std::vector<std::string> kAll = {
        "five-term", "lemma38",  "thm33",  "thm35",       "thm36-audit",
        "thm39-tail", "thm41-eval", "thm43", "cor44", "oracle-cross"};
    return kAll;
}

homology::OracleConfig RunConfig::oracle_config() const {
    homology::OracleConfig oc;
    oc.max_order = max_order;
    oc.h3_max_order = h3_max_order;
    return oc;
}

std::string format_canonical(const AbelianGroup& g) {
    std::string s = "free_rank " + std::to_string(g.free_rank) + ", torsion [";
    for (size_t i = 0; i < g.torsion.size(); ++i)
        s += (i ? "," : "") + std::to_string(g.torsion[i]);
    return s + "]";
}

ordered_json canonical_json(const AbelianGroup& g) {
    ordered_json j;
    j["free_rank"] = g.free_rank;
    j["torsion"] = g.torsion;
    return j;
}

int VerificationReport::exit_code() const {
    // 1 only for structural failures (oracle disagreements, axiom failures)
    // or crashed tasks; theorem-audit FAILs are findings and keep exit 0
    for (const CheckRecord& r : records) {
        bool crashed = std::any_of(r.notes.begin(), r.notes.end(), [](const std::string& n) {
            return n.rfind("exception:", 0) == 0;
        });
        if (crashed) return 1;
        if (r.status == CheckStatus::FAIL && r.check == "oracle-cross") return 1;
    }
    return 0;
}

ordered_json VerificationReport::to_json(bool with_timing) const {
    ordered_json j;
    j["tool"] = "pairmult";
    j["version"] = version;
    j["config"] = config;
    std::map<std::string, int> counts;
    for (const CheckRecord& r : records) counts[status_name(r.status)]++;
    ordered_json summary;
    for (const char* s : {"PASS", "FAIL", "MISMATCH", "NA", "UNDERDETERMINED"})
        summary[s] = counts.count(s) ? counts[s] : 0;
    j["summary"] = summary;
    j["findings"] = findings;
    ordered_json recs = ordered_json::array();
    for (const CheckRecord& r : records) {
        ordered_json e;
        e["check"] = r.check;
        e["subject"] = r.subject;
        e["status"] = status_name(r.status);
        e["values"] = r.values;
        e["notes"] = r.notes;
        if (with_timing) e["ms"] = r.ms;
        recs.push_back(std::move(e));
    }
    j["records"] = std::move(recs);
    return j;
}

std::string VerificationReport::table() const {
    std::ostringstream out;
    auto pad = [](std::string s, size_t w) {
        if (s.size() < w) s += std::string(w - s.size(), ' ');
        return s;
    };
    out << pad("CHECK", 13) << pad("SUBJECT", 26) << pad("STATUS", 16) << "DETAIL\n";
    for (const CheckRecord& r : records) {
        std::string detail;
        for (const auto& [k, v] : r.values.items()) {
            if (detail.size() > 90) {
                detail += " ...";
                break;
            }
            if (!detail.empty()) detail += "  ";
            detail += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
        }
        out << pad(r.check, 13) << pad(r.subject, 26) << pad(status_name(r.status), 16)
            << detail << "\n";
    }
    std::map<std::string, int> counts;
    for (const CheckRecord& r : records) counts[status_name(r.status)]++;
    out << "----\n";
    for (const auto& [k, v] : counts) out << k << "=" << v << " ";
    out << "\n";
    if (!findings.empty()) {
        out << "findings:\n";
        for (const std::string& f : findings) out << "  - " << f << "\n";
    }
    return out.str();
}

namespace {

// deterministic generator shared by the seeded batches (splitmix64)
struct Rng {
    uint64_t state;
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) { return next() % n; }
};

AbelianGroup random_abelian(Rng& rng) {
    AbelianGroup g;
    for (uint64_t i = 0, n = rng.below(3); i < n; ++i)
        g = abgrp::direct_sum(g, AbelianGroup(0, {2 + static_cast<int64_t>(rng.below(8))}));
    return g;
}

freeprod::PairInvariantData random_tuple(Rng& rng) {
    freeprod::PairInvariantData d;
    d.source = "supplied";
    d.m1 = random_abelian(rng);
    d.m2 = random_abelian(rng);
    d.n_mod = random_abelian(rng);
    d.q_ab = random_abelian(rng);
    d.m_q = random_abelian(rng);
    d.g_ab = random_abelian(rng);
    d.m_g = random_abelian(rng);
    return d;
}

struct Task {
    std::string check, subject;
    std::function<void(CheckRecord&)> body;
};

void run_tasks(std::vector<Task>& tasks, std::vector<CheckRecord>& out, bool sequential) {
    out.resize(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            CheckRecord& rec = out[i];
            rec.check = tasks[i].check;
            rec.subject = tasks[i].subject;
            auto t0 = std::chrono::steady_clock::now();
            try {
                tasks[i].body(rec);
            } catch (const std::exception& e) {
                rec.status = CheckStatus::FAIL;
                rec.notes.push_back(std::string("exception: ") + e.what());
            }
            rec.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
        }
    };
    if (sequential) {
        worker();
        return;
    }
    unsigned n = std::min(std::thread::hardware_concurrency(), 8u);
    if (n < 2) {
        worker();
        return;
    }
    std::vector<std::thread> ws;
    for (unsigned i = 0; i < n; ++i) ws.emplace_back(worker);
    for (auto& w : ws) w.join();
}

void fill_from_verdict(CheckRecord& rec, const pairmult::Verdict& v) {
    rec.status = v.status;
    for (const auto& [k, val] : v.values) rec.values[k] = val;
    rec.notes.insert(rec.notes.end(), v.notes.begin(), v.notes.end());
}

ordered_json route_json(const pairmult::RouteResult& r) {
    ordered_json j;
    j["route"] = pairmult::route_name(r.route);
    j["applicable"] = r.applicable;
    if (r.applicable)
        j["value"] = canonical_json(*r.value);
    else
        j["na_reason"] = r.na_reason;
    j["notes"] = r.notes;
    return j;
}

ordered_json condition_json(const freeprod::Condition& c) {
    ordered_json j;
    j["name"] = c.name;
    if (c.holds.has_value())
        j["holds"] = *c.holds;
    else
        j["holds"] = "NA";
    j["value"] = c.value;
    return j;
}

} // namespace

VerificationReport run_checks(const Corpus& corpus, const RunConfig& cfg) {
    VerificationReport report;
    {
        ordered_json c;
        c["c"] = cfg.c;
        c["interpretation"] = pairmult::interpretation_name(cfg.interpretation);
        c["max_order"] = cfg.max_order;
        c["h3_max_order"] = cfg.h3_max_order;
        c["seed"] = cfg.seed;
        c["sequential"] = cfg.sequential;
        c["checks"] = cfg.checks.empty() ? RunConfig::all_checks() : cfg.checks;
        report.config = std::move(c);
    }
    // configuration errors fail fast, before any computation
    std::vector<std::string> wanted = cfg.checks.empty() ? RunConfig::all_checks() : cfg.checks;
    for (const std::string& w : wanted)
        if (std::find(RunConfig::all_checks().begin(), RunConfig::all_checks().end(), w) ==
            RunConfig::all_checks().end())
            throw CorpusError(CorpusError::Kind::parse, "unknown check id '" + w + "'");
    if (cfg.c < 1 || cfg.c > 2)
        throw CorpusError(CorpusError::Kind::parse, "c must be 1 or 2");
    auto want = [&](const std::string& c) {
        return std::find(wanted.begin(), wanted.end(), c) != wanted.end();
    };

    homology::Oracle oracle(cfg.oracle_config());

    // pair contexts are shared across checks
    std::vector<pairmult::PairContext> contexts;
    contexts.reserve(corpus.pairs.size());
    for (const auto& entry : corpus.pairs)
        contexts.push_back(pairmult::make_pair_context(entry.pair));

    std::vector<Task> tasks;

    auto per_pair = [&](const std::string& check,
                        std::function<void(const pairmult::PairContext&, CheckRecord&)> body) {
        if (!want(check)) return;
        for (size_t i = 0; i < corpus.pairs.size(); ++i) {
            const pairmult::PairContext* ctx = &contexts[i];
            tasks.push_back(
                {check, corpus.pairs[i].name,
                 [ctx, body](CheckRecord& rec) { body(*ctx, rec); }});
        }
    };

    per_pair("five-term", [&oracle](const pairmult::PairContext& ctx, CheckRecord& rec) {
        fill_from_verdict(rec, pairmult::five_term_check(ctx, oracle));
    });
    per_pair("lemma38", [](const pairmult::PairContext& ctx, CheckRecord& rec) {
        fill_from_verdict(rec, pairmult::lemma38_check(ctx));
    });
    per_pair("thm33", [&oracle](const pairmult::PairContext& ctx, CheckRecord& rec) {
        fill_from_verdict(rec, pairmult::semidirect_splitting_check(ctx, oracle));
    });
    per_pair("thm39-tail", [](const pairmult::PairContext& ctx, CheckRecord& rec) {
        fill_from_verdict(rec, pairmult::thm39_tail_check(ctx));
    });

    if (want("thm36-audit")) {
        for (size_t i = 0; i < corpus.pairs.size(); ++i) {
            const pairmult::PairContext* ctx = &contexts[i];
            int c = cfg.c;
            tasks.push_back({"thm36-audit", corpus.pairs[i].name, [ctx, c, &oracle](CheckRecord& rec) {
                                 pairmult::ConsistencyVerdict cv =
                                     pairmult::consistency_audit(*ctx, c, oracle);
                                 rec.status = cv.status;
                                 ordered_json routes = ordered_json::array();
                                 for (const auto& r : cv.routes) routes.push_back(route_json(r));
                                 rec.values["routes"] = std::move(routes);
                                 if (cv.headline) {
                                     rec.values["headline"] = canonical_json(*cv.headline);
                                     rec.values["headline_route"] = cv.headline_route;
                                 }
                                 ordered_json agr = ordered_json::array();
                                 for (auto [i2, j2, ok] : cv.agreement) {
                                     ordered_json e;
                                     e["routes"] = {i2, j2};
                                     e["agree"] = ok;
                                     agr.push_back(std::move(e));
                                 }
                                 rec.values["agreement"] = std::move(agr);
                                 for (const std::string& cns : cv.constraints)
                                     rec.notes.push_back(cns);
                             }});
        }
    }

    if (want("thm35")) {
        // one aggregated record per pair: M ranges over every subgroup that
        // contains N (theorem instances) plus two recorded exploration
        // samples where the hypothesis M = MN fails
        for (size_t i = 0; i < corpus.pairs.size(); ++i) {
            const auto& entry = corpus.pairs[i];
            const fingrp::PairOfGroups* pr = &entry.pair;
            int c = cfg.c;
            tasks.push_back({"thm35", entry.name, [pr, c, &oracle](CheckRecord& rec) {
                if (pr->group->order() > 12) {
                    rec.status = CheckStatus::NA;
                    rec.notes.push_back("order-exceeds-battery-bound");
                    return;
                }
                auto subs = fingrp::all_subgroups(pr->group);
                size_t explore = 0;
                int mismatches = 0, underdetermined = 0, passes = 0;
                ordered_json instances = ordered_json::array();
                for (size_t k = 0; k < subs.size(); ++k) {
                    bool contains_n = true;
                    for (int x : pr->normal.elements)
                        if (!subs[k].contains(x)) {
                            contains_n = false;
                            break;
                        }
                    if (!contains_n && explore >= 2) continue;
                    if (!contains_n) ++explore;
                    pairmult::Verdict v =
                        pairmult::mn_check(pr->group, subs[k], pr->normal, c, oracle);
                    ordered_json inst;
                    inst["M"] = "M" + std::to_string(k);
                    inst["order"] = subs[k].order();
                    inst["status"] = status_name(v.status);
                    for (const auto& [key, val] : v.values) inst[key] = val;
                    if (!v.notes.empty()) inst["note"] = v.notes.front();
                    instances.push_back(std::move(inst));
                    if (v.status == CheckStatus::MISMATCH) ++mismatches;
                    if (v.status == CheckStatus::UNDERDETERMINED) ++underdetermined;
                    if (v.status == CheckStatus::PASS) ++passes;
                }
                rec.values["instances"] = std::move(instances);
                rec.status = mismatches       ? CheckStatus::MISMATCH
                             : underdetermined ? CheckStatus::UNDERDETERMINED
                             : passes          ? CheckStatus::PASS
                                               : CheckStatus::NA;
            }});
        }
    }

    if (want("thm41-eval")) {
        uint64_t seed = cfg.seed;
        tasks.push_back({"thm41-eval", "symmetry", [seed](CheckRecord& rec) {
                             Rng rng{seed ^ 0x41u};
                             for (int iter = 0; iter < 100; ++iter) {
                                 auto d1 = random_tuple(rng);
                                 auto d2 = random_tuple(rng);
                                 auto a1 = freeprod::eval_c1(d1, d2);
                                 auto b1 = freeprod::eval_c1(d2, d1);
                                 auto a2 = freeprod::eval_c2(d1, d2);
                                 auto b2 = freeprod::eval_c2(d2, d1);
                                 if (!(*a1.value == *b1.value) || !(*a2.value == *b2.value)) {
                                     rec.status = CheckStatus::FAIL;
                                     rec.notes.push_back("swap symmetry violated at iteration " +
                                                         std::to_string(iter));
                                     return;
                                 }
                             }
                             rec.status = CheckStatus::PASS;
                             rec.values["tuples"] = 100;
                         }});
        tasks.push_back(
            {"thm41-eval", "burns-ellis-shape", [seed](CheckRecord& rec) {
                 Rng rng{seed ^ 0xBEu};
                 for (int iter = 0; iter < 50; ++iter) {
                     auto d1 = random_tuple(rng);
                     auto d2 = random_tuple(rng);
                     for (auto* d : {&d1, &d2}) {
                         d->q_ab = AbelianGroup();
                         d->m_q = AbelianGroup();
                         d->n_mod = d->g_ab;
                     }
                     auto terms = freeprod::eval_c2_terms(d1, d2);
                     for (size_t idx : {4, 5, 6, 7, 9, 10})
                         if (!(*terms.value)[idx].second.is_trivial()) {
                             rec.status = CheckStatus::FAIL;
                             rec.notes.push_back("quotient-dependent term " +
                                                 (*terms.value)[idx].first +
                                                 " nonzero under N = G");
                             return;
                         }
                     AbelianGroup expect = abgrp::direct_sum(
                         abgrp::direct_sum(*d1.m2, *d2.m2),
                         abgrp::direct_sum(abgrp::direct_sum(abgrp::tensor(*d1.m1, *d2.g_ab),
                                                             abgrp::tensor(*d2.m1, *d1.g_ab)),
                                           abgrp::tor(*d1.g_ab, *d2.g_ab)));
                     if (!(*freeprod::eval_c2(d1, d2).value == expect)) {
                         rec.status = CheckStatus::FAIL;
                         rec.notes.push_back("five-term free-product shape violated");
                         return;
                     }
                 }
                 rec.status = CheckStatus::PASS;
                 rec.values["tuples"] = 50;
             }});
        // N = 1 specialization over corpus tuples
        {
            std::vector<size_t> trivial_pairs;
            for (size_t i = 0; i < corpus.pairs.size(); ++i)
                if (corpus.pairs[i].pair.normal.order() == 1) trivial_pairs.push_back(i);
            tasks.push_back(
                {"thm41-eval", "n1-vanishing", [trivial_pairs, &contexts, &oracle](CheckRecord& rec) {
                     int count = 0;
                     for (size_t i : trivial_pairs) {
                         auto d = freeprod::tuple_from_pair(contexts[i], oracle);
                         auto r1 = freeprod::eval_c1(d, d);
                         auto r2 = freeprod::eval_c2(d, d);
                         if (r1.ok() && !r1.value->is_trivial()) {
                             rec.status = CheckStatus::FAIL;
                             rec.notes.push_back("eval_c1 nonzero on trivial normal subgroups");
                             return;
                         }
                         if (r2.ok() && !r2.value->is_trivial()) {
                             rec.status = CheckStatus::FAIL;
                             rec.notes.push_back("eval_c2 nonzero on trivial normal subgroups");
                             return;
                         }
                         ++count;
                     }
                     rec.status = CheckStatus::PASS;
                     rec.values["pairs"] = count;
                 }});
        }
        // evaluations over small (G, G) corpus pairs
        std::vector<size_t> full_small;
        for (size_t i = 0; i < corpus.pairs.size(); ++i)
            if (corpus.pairs[i].pair.normal.order() == corpus.pairs[i].pair.group->order() &&
                corpus.pairs[i].pair.group->order() <= 6)
                full_small.push_back(i);
        for (size_t a = 0; a < full_small.size(); ++a)
            for (size_t b = a; b < full_small.size(); ++b) {
                size_t ia = full_small[a], ib = full_small[b];
                tasks.push_back(
                    {"thm41-eval",
                     corpus.pairs[ia].name + " x " + corpus.pairs[ib].name,
                     [ia, ib, &contexts, &oracle](CheckRecord& rec) {
                         auto d1 = freeprod::tuple_from_pair(contexts[ia], oracle);
                         auto d2 = freeprod::tuple_from_pair(contexts[ib], oracle);
                         auto r1 = freeprod::eval_c1(d1, d2);
                         auto r2 = freeprod::eval_c2(d1, d2);
                         if (r1.ok())
                             rec.values["M(c=1)"] = canonical_json(*r1.value);
                         if (r2.ok())
                             rec.values["M(c=2)"] = canonical_json(*r2.value);
                         rec.status = (r1.ok() && r2.ok()) ? CheckStatus::PASS
                                                           : CheckStatus::UNDERDETERMINED;
                         if (!r1.ok()) rec.notes.push_back("c=1: " + r1.na_reason);
                         if (!r2.ok()) rec.notes.push_back("c=2: " + r2.na_reason);
                     }});
            }
    }

    if (want("thm43")) {
        std::vector<std::pair<size_t, size_t>> combos;
        auto index_of_pair = [&](const std::string& name) -> std::optional<size_t> {
            for (size_t i = 0; i < corpus.pairs.size(); ++i)
                if (corpus.pairs[i].name == name) return i;
            return std::nullopt;
        };
        // the two pinned instances when present
        for (auto [a, b] : std::initializer_list<std::pair<const char*, const char*>>{
                 {"S3/N1", "C3/N1"}, {"C2/N1", "C4/N2"}}) {
            auto ia = index_of_pair(a), ib = index_of_pair(b);
            if (ia && ib) combos.emplace_back(*ia, *ib);
        }
        Rng rng{cfg.seed ^ 0x43u};
        if (!corpus.pairs.empty())
            while (combos.size() < 50) {
                size_t a = rng.below(corpus.pairs.size());
                size_t b = rng.below(corpus.pairs.size());
                combos.emplace_back(a, b);
            }
        for (auto [ia, ib] : combos) {
            tasks.push_back(
                {"thm43", corpus.pairs[ia].name + " x " + corpus.pairs[ib].name,
                 [ia, ib, &contexts, &oracle](CheckRecord& rec) {
                     auto d1 = freeprod::tuple_from_pair(contexts[ia], oracle);
                     auto d2 = freeprod::tuple_from_pair(contexts[ib], oracle);
                     freeprod::ConditionReport cr = freeprod::thm43_hypotheses(d1, d2);
                     rec.values["overall"] = freeprod::battery_outcome_name(cr.overall);
                     ordered_json qc = ordered_json::array(), gc = ordered_json::array();
                     for (const auto& c : cr.quotient_conditions) qc.push_back(condition_json(c));
                     for (const auto& c : cr.g_conditions) gc.push_back(condition_json(c));
                     rec.values["quotient_conditions"] = std::move(qc);
                     rec.values["g_conditions"] = std::move(gc);
                     rec.status = cr.overall == freeprod::BatteryOutcome::underdetermined
                                      ? CheckStatus::UNDERDETERMINED
                                      : CheckStatus::PASS;
                     if (cr.overall == freeprod::BatteryOutcome::violated)
                         rec.notes.push_back("hypothesis battery violated (recorded, not a failure)");
                 }});
        }
    }

    if (want("cor44")) {
        for (size_t a = 0; a < corpus.groups.size(); ++a)
            for (size_t b = a + 1; b < corpus.groups.size(); ++b) {
                tasks.push_back(
                    {"cor44", corpus.groups[a].first + " x " + corpus.groups[b].first,
                     [a, b, &corpus, &oracle](CheckRecord& rec) {
                         freeprod::CoprimeReport r = freeprod::cor44_coprime(
                             corpus.groups[a].second, corpus.groups[b].second, oracle);
                         rec.values["ab_orders"] = {r.ab_order1, r.ab_order2};
                         rec.values["coprime"] = r.coprime;
                         if (!r.coprime) {
                             rec.status = CheckStatus::PASS;
                             return;
                         }
                         rec.values["conclusion"] = r.conclusion;
                         ordered_json gc = ordered_json::array();
                         for (const auto& c : r.g_conditions) gc.push_back(condition_json(c));
                         rec.values["g_conditions"] = std::move(gc);
                         if (!r.implication_holds.has_value()) {
                             rec.status = CheckStatus::UNDERDETERMINED;
                             rec.notes.push_back("G-level conditions not fully computable");
                         } else if (*r.implication_holds) {
                             rec.status = CheckStatus::PASS;
                         } else {
                             rec.status = CheckStatus::MISMATCH;
                             rec.notes.push_back(
                                 "coprime abelianizations do not force the G-level conditions "
                                 "(recorded as a finding)");
                         }
                     }});
            }
    }

    if (want("oracle-cross")) {
        for (size_t gi = 0; gi < corpus.groups.size(); ++gi) {
            tasks.push_back({"oracle-cross", corpus.groups[gi].first,
                             [gi, &corpus, &oracle, &cfg](CheckRecord& rec) {
                                 const fingrp::GroupPtr& g = corpus.groups[gi].second;
                                 if (g->order() > cfg.max_order) {
                                     rec.status = CheckStatus::NA;
                                     rec.notes.push_back("order-exceeds-h2-bound");
                                     return;
                                 }
                                 auto h0 = oracle.homology(g, 0);
                                 auto h1 = oracle.homology(g, 1);
                                 auto h2 = oracle.schur_multiplier(g);
                                 AbelianGroup ab = fingrp::abelianize(g).group;
                                 bool ok = h0.ok() && *h0.value == AbelianGroup(1, {}) &&
                                           h1.ok() && *h1.value == ab && h2.ok();
                                 if (ok && !h2.value->torsion.empty())
                                     ok = g->order() % h2.value->torsion.back() == 0;
                                 rec.values["H1"] = canonical_json(h1.ok() ? *h1.value
                                                                           : AbelianGroup());
                                 rec.values["abelianization"] = canonical_json(ab);
                                 if (h2.ok()) rec.values["H2"] = canonical_json(*h2.value);
                                 rec.status = ok ? CheckStatus::PASS : CheckStatus::FAIL;
                                 if (!ok) rec.notes.push_back("bar oracle sanity violation");
                             }});
        }
        for (size_t i = 0; i < corpus.pairs.size(); ++i) {
            const pairmult::PairContext* ctx = &contexts[i];
            tasks.push_back(
                {"oracle-cross", corpus.pairs[i].name, [ctx, &oracle](CheckRecord& rec) {
                     // dual routes must agree whenever both apply
                     pairmult::RouteResult h = pairmult::hopf_route(*ctx, 1);
                     pairmult::RouteResult s = pairmult::semidirect_kernel(*ctx, oracle);
                     if (!h.applicable || !s.applicable) {
                         rec.status = CheckStatus::NA;
                         rec.notes.push_back(!h.applicable ? "hopf: " + h.na_reason
                                                           : "semidirect: " + s.na_reason);
                         return;
                     }
                     rec.values["hopf"] = canonical_json(*h.value);
                     rec.values["semidirect"] = canonical_json(*s.value);
                     bool ok = *h.value == *s.value;
                     // N = G: both must equal the bar oracle's absolute value
                     if (ok && ctx->pair.normal.order() == ctx->pair.group->order()) {
                         auto mg = oracle.schur_multiplier(ctx->pair.group);
                         if (mg.ok()) {
                             rec.values["bar"] = canonical_json(*mg.value);
                             ok = *h.value == *mg.value;
                         }
                     }
                     rec.status = ok ? CheckStatus::PASS : CheckStatus::FAIL;
                     if (!ok) rec.notes.push_back("independent routes disagree");
                 }});
        }
    }

    run_tasks(tasks, report.records, cfg.sequential);

    std::stable_sort(report.records.begin(), report.records.end(),
                     [](const CheckRecord& a, const CheckRecord& b) {
                         if (a.subject != b.subject) return a.subject < b.subject;
                         return a.check < b.check;
                     });
    for (const CheckRecord& r : report.records) {
        if (r.status == CheckStatus::MISMATCH)
            report.findings.push_back(r.check + " " + r.subject + ": MISMATCH" +
                                      (r.notes.empty() ? "" : " (" + r.notes.front() + ")"));
        if (r.status == CheckStatus::FAIL)
            report.findings.push_back(r.check + " " + r.subject + ": FAIL" +
                                      (r.notes.empty() ? "" : " (" + r.notes.front() + ")"));
    }
    return report;
}

int run_compute(const Corpus& corpus, const RunConfig& cfg, const std::string& what,
                const std::vector<std::string>& group_names,
                const std::vector<std::string>& pair_names,
                const std::vector<std::string>& presentation_names, std::ostream& out) {
    homology::Oracle oracle(cfg.oracle_config());

    auto group_of = [&](const std::string& name) {
        const fingrp::GroupPtr* g = corpus.find_group(name);
        if (!g) throw CorpusError(CorpusError::Kind::parse, "unknown group '" + name + "'");
        return *g;
    };
    auto pair_of = [&](const std::string& name) {
        const Corpus::PairEntry* p = corpus.find_pair(name);
        if (!p) throw CorpusError(CorpusError::Kind::parse, "unknown pair '" + name + "'");
        return p;
    };

    auto print_group_invariant = [&](const std::string& name, size_t degree) {
        auto r = oracle.homology(group_of(name), degree);
        if (r.ok())
            out << name << ": " << format_canonical(*r.value) << "\n";
        else
            out << name << ": NA (" << r.na_reason << ")\n";
    };

    if (what == "M" || what == "audit") {
        for (const std::string& name : group_names) print_group_invariant(name, 2);
        for (const std::string& name : pair_names) {
            const Corpus::PairEntry* p = pair_of(name);
            pairmult::PairContext ctx = pairmult::make_pair_context(p->pair);
            pairmult::ConsistencyVerdict cv = pairmult::consistency_audit(ctx, cfg.c, oracle);
            out << name << " (c=" << cfg.c << "): status "
                << pairmult::status_name(cv.status) << "\n";
            for (const pairmult::RouteResult& r : cv.routes) {
                out << "  " << pairmult::route_name(r.route) << ": ";
                if (r.applicable)
                    out << format_canonical(*r.value);
                else
                    out << "NA (" << r.na_reason << ")";
                for (const std::string& n : r.notes) out << "  [" << n << "]";
                out << "\n";
            }
            if (cv.headline)
                out << "  headline (" << cv.headline_route
                    << "): " << format_canonical(*cv.headline) << "\n";
        }
        return 0;
    }
    if (what == "h1" || what == "h2" || what == "h3") {
        size_t deg = static_cast<size_t>(what[1] - '0');
        for (const std::string& name : group_names) print_group_invariant(name, deg);
        return 0;
    }
    if (what == "ab") {
        for (const std::string& name : group_names)
            out << name << ": " << format_canonical(fingrp::abelianize(group_of(name)).group)
                << "\n";
        return 0;
    }
    if (what == "central") {
        for (const std::string& name : pair_names) {
            const Corpus::PairEntry* p = pair_of(name);
            pairmult::PairContext ctx = pairmult::make_pair_context(p->pair);
            pairmult::RouteResult r =
                pairmult::central_formula(ctx, cfg.c, cfg.interpretation);
            if (r.applicable)
                out << name << ": " << format_canonical(*r.value) << "\n";
            else
                out << name << ": NA (" << r.na_reason << ")\n";
        }
        return 0;
    }
    if (what == "evalc1" || what == "evalc2") {
        if (pair_names.size() != 2)
            throw CorpusError(CorpusError::Kind::parse, what + " needs exactly two --pair names");
        pairmult::PairContext a = pairmult::make_pair_context(pair_of(pair_names[0])->pair);
        pairmult::PairContext b = pairmult::make_pair_context(pair_of(pair_names[1])->pair);
        auto d1 = freeprod::tuple_from_pair(a, oracle);
        auto d2 = freeprod::tuple_from_pair(b, oracle);
        auto r = what == "evalc1" ? freeprod::eval_c1(d1, d2) : freeprod::eval_c2(d1, d2);
        if (r.ok())
            out << pair_names[0] << " * " << pair_names[1] << ": " << format_canonical(*r.value)
                << "\n";
        else
            out << pair_names[0] << " * " << pair_names[1] << ": NA (" << r.na_reason << ")\n";
        return 0;
    }
    if (what == "baer") {
        for (const std::string& name : presentation_names) {
            const Corpus::PresentationEntry* pe = nullptr;
            for (const auto& e : corpus.presentations)
                if (e.name == name) pe = &e;
            if (!pe)
                throw CorpusError(CorpusError::Kind::parse, "unknown presentation '" + name + "'");
            auto r = nilfree::baer_section(pe->pres, cfg.c);
            if (r.ok())
                out << name << " (c=" << cfg.c << "): " << format_canonical(*r.value) << "\n";
            else
                out << name << " (c=" << cfg.c << "): NA (" << r.na_reason << ")\n";
        }
        return 0;
    }
    throw CorpusError(CorpusError::Kind::parse, "unknown compute target '" + what + "'");
}

} // namespace cli
