// Acceptance suite: one line per criterion. Criteria that fail only in the
// documented falsifying pattern (see the analysis notes printed with them)
// are reported as FAIL (expected) and do not flip the exit code; any other
// red is unexpected and fails the binary.

#include "pairmult/report.hpp"
#include "support/quotient_oracle.hpp"

#include <atomic>
#include <chrono>
#include <cstring>
#include <iostream>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>

using namespace std::chrono;
using abgrp::AbelianGroup;
using abgrp::IntMatrix;
using pairmult::CheckStatus;

namespace {

int unexpected_failures = 0;
int expected_failures = 0;

void report(int criterion, bool pass, const std::string& detail, bool expected_red = false) {
    if (pass) {
        std::cout << "criterion " << criterion << " [PASS] " << detail << "\n";
    } else if (expected_red) {
        ++expected_failures;
        std::cout << "criterion " << criterion << " [FAIL] " << detail
                  << " -- matches the recorded defect analysis (expected red)\n";
    } else {
        ++unexpected_failures;
        std::cout << "criterion " << criterion << " [FAIL] " << detail << "\n";
    }
}

double secs_since(steady_clock::time_point t0) {
    return duration_cast<milliseconds>(steady_clock::now() - t0).count() / 1000.0;
}

// ---------------------------------------------------------------- criterion 1

// stack-based canonical triangular lattice basis, independent of the
// production normal-form code; returns false when rank < cols
bool lean_lattice_key(const int64_t* data, size_t r, size_t c, int64_t* key) {
    int64_t work[9 * 9];
    size_t nrows = r;
    std::memcpy(work, data, r * c * sizeof(int64_t));
    size_t nb = 0;  // basis rows stored at key[nb*c ..]
    for (size_t col = 0; col < c; ++col) {
        for (;;) {
            size_t i = SIZE_MAX, j = SIZE_MAX;
            for (size_t k = 0; k < nrows; ++k) {
                int64_t v = work[k * c + col];
                if (v == 0) continue;
                auto less = [&](size_t x, size_t y) {
                    int64_t a = work[x * c + col], b = work[y * c + col];
                    return std::abs(a) < std::abs(b);
                };
                if (i == SIZE_MAX || less(k, i)) {
                    j = i;
                    i = k;
                } else if (j == SIZE_MAX || less(k, j)) {
                    j = k;
                }
            }
            if (j == SIZE_MAX) {
                if (i != SIZE_MAX) {
                    // move to basis
                    if (work[i * c + col] < 0)
                        for (size_t t = 0; t < c; ++t) work[i * c + t] = -work[i * c + t];
                    std::memcpy(key + nb * c, work + i * c, c * sizeof(int64_t));
                    ++nb;
                    std::memcpy(work + i * c, work + (nrows - 1) * c, c * sizeof(int64_t));
                    --nrows;
                }
                break;
            }
            int64_t q = work[j * c + col] / work[i * c + col];
            for (size_t t = col; t < c; ++t) work[j * c + t] -= q * work[i * c + t];
        }
        if (nb != col + 1) return false;  // no pivot in this column: infinite quotient
    }
    // back-reduce above pivots
    for (size_t jrow = 0; jrow < nb; ++jrow) {
        int64_t piv = key[jrow * c + jrow];
        for (size_t krow = 0; krow < jrow; ++krow) {
            int64_t v = key[krow * c + jrow];
            int64_t q = v / piv;
            if ((v % piv != 0) && (v < 0)) --q;
            if (q != 0)
                for (size_t t = jrow; t < c; ++t) key[krow * c + t] -= q * key[jrow * c + t];
        }
    }
    return true;
}

struct SweepResult {
    uint64_t total = 0, finite = 0, checked = 0, mismatches = 0;
    std::string first_mismatch;
};

void criterion1() {
    auto t0 = steady_clock::now();
    constexpr int64_t kBound = 200;

    // sharded memo of oracle values keyed by the triangular basis
    constexpr size_t kShards = 64;
    std::mutex mu[kShards];
    std::unordered_map<std::string, std::vector<int64_t>> memo[kShards];

    auto oracle_torsion = [&](const int64_t* key, size_t c) -> const std::vector<int64_t>* {
        std::string k(reinterpret_cast<const char*>(key), c * c * sizeof(int64_t));
        size_t shard = std::hash<std::string>{}(k) % kShards;
        std::lock_guard<std::mutex> lock(mu[shard]);
        auto it = memo[shard].find(k);
        if (it != memo[shard].end()) return &it->second;
        IntMatrix m(c, c);
        for (size_t i = 0; i < c; ++i)
            for (size_t j = 0; j < c; ++j) m.at(i, j) = key[i * c + j];
        auto g = testsupport::enumerate_quotient(m, c, kBound);
        if (!g) return nullptr;  // larger than the bound
        return &memo[shard].emplace(std::move(k), g->torsion).first->second;
    };

    SweepResult grand;
    std::mutex grand_mu;

    for (size_t r = 1; r <= 3; ++r)
        for (size_t c = 1; c <= 3; ++c) {
            size_t cells = r * c;
            uint64_t count = 1;
            for (size_t i = 0; i < cells; ++i) count *= 7;
            unsigned nthreads = std::min(std::thread::hardware_concurrency(), 8u);
            if (nthreads == 0) nthreads = 1;
            std::vector<std::thread> workers;
            for (unsigned w = 0; w < nthreads; ++w) {
                workers.emplace_back([&, w, r, c, cells, count, nthreads] {
                    SweepResult local;
                    int64_t entries[9], divisors[3], key[9];
                    uint64_t lo = count * w / nthreads, hi = count * (w + 1) / nthreads;
                    for (uint64_t idx = lo; idx < hi; ++idx) {
                        uint64_t x = idx;
                        for (size_t i = 0; i < cells; ++i) {
                            entries[i] = static_cast<int64_t>(x % 7) - 3;
                            x /= 7;
                        }
                        ++local.total;
                        size_t nd = abgrp::small_divisors(entries, r, c, divisors);
                        bool finite = nd == c;
                        bool key_ok = lean_lattice_key(entries, r, c, key);
                        if (finite != key_ok) {
                            ++local.mismatches;
                            if (local.first_mismatch.empty())
                                local.first_mismatch = "rank disagreement on a matrix";
                            continue;
                        }
                        if (!finite) continue;
                        ++local.finite;
                        int64_t order = 1;
                        bool in_bound = true;
                        for (size_t i = 0; i < nd; ++i) {
                            order *= divisors[i];
                            if (order > kBound) {
                                in_bound = false;
                                break;
                            }
                        }
                        if (!in_bound) continue;
                        const std::vector<int64_t>* expect = oracle_torsion(key, c);
                        if (!expect) continue;
                        ++local.checked;
                        std::vector<int64_t> got;
                        for (size_t i = 0; i < nd; ++i)
                            if (divisors[i] >= 2) got.push_back(divisors[i]);
                        if (got != *expect) {
                            ++local.mismatches;
                            if (local.first_mismatch.empty()) {
                                std::string s = "matrix [";
                                for (size_t i = 0; i < cells; ++i)
                                    s += (i ? "," : "") + std::to_string(entries[i]);
                                s += "] (" + std::to_string(r) + "x" + std::to_string(c) + ")";
                                local.first_mismatch = s;
                            }
                        }
                    }
                    std::lock_guard<std::mutex> lock(grand_mu);
                    grand.total += local.total;
                    grand.finite += local.finite;
                    grand.checked += local.checked;
                    grand.mismatches += local.mismatches;
                    if (grand.first_mismatch.empty() && !local.first_mismatch.empty())
                        grand.first_mismatch = local.first_mismatch;
                });
            }
            for (auto& t : workers) t.join();
        }

    double dt = secs_since(t0);
    bool pass = grand.mismatches == 0 && dt < 60.0;
    std::string detail = "abelian sweep: " + std::to_string(grand.total) + " matrices, " +
                         std::to_string(grand.checked) + " finite quotients checked against " +
                         "brute-force enumeration, " + std::to_string(grand.mismatches) +
                         " mismatches, " + std::to_string(dt) + " s";
    if (!grand.first_mismatch.empty()) detail += "; first: " + grand.first_mismatch;
    report(1, pass, detail);
}

// ---------------------------------------------------------------- criterion 2

void criterion2(const cli::Corpus& corpus, const homology::Oracle& oracle) {
    auto t0 = steady_clock::now();
    int groups = 0, violations = 0;
    std::string first;
    for (const auto& [name, g] : corpus.groups) {
        if (g->order() > 16) continue;
        ++groups;
        auto h0 = oracle.homology(g, 0);
        auto h1 = oracle.homology(g, 1);
        auto h2 = oracle.schur_multiplier(g);
        bool ok = h0.ok() && *h0.value == AbelianGroup(1, {}) && h1.ok() &&
                  *h1.value == fingrp::abelianize(g).group && h2.ok();
        if (ok && !h2.value->torsion.empty())
            ok = static_cast<int64_t>(g->order()) % h2.value->torsion.back() == 0;
        if (!ok) {
            ++violations;
            if (first.empty()) first = name;
        }
    }
    double dt = secs_since(t0);
    bool pass = violations == 0 && dt < 300.0;
    report(2, pass,
           "homology sanity (H0 = Z, H1 = abelianization, exp H2 | |G|, d o d = 0 at "
           "construction) on " +
               std::to_string(groups) + " groups, " + std::to_string(violations) +
               " violations, " + std::to_string(dt) + " s" +
               (first.empty() ? "" : "; first: " + first));
}

// ---------------------------------------------------------------- criterion 3

void criterion3(const cli::Corpus& corpus, const homology::Oracle& oracle) {
    int instances = 0, mismatches = 0;
    std::string first;
    for (const auto& [name, g] : corpus.groups) {
        if (!g->is_abelian()) continue;
        if (fingrp::abelianize(g).group.gen_count() > 2) continue;
        for (const auto& n : fingrp::normal_subgroups(g)) {
            fingrp::PairOfGroups pair(g, n);
            if (!fingrp::find_complement(pair)) continue;
            pairmult::PairContext ctx = pairmult::make_pair_context(pair);
            pairmult::RouteResult hopf = pairmult::hopf_route(ctx, 1);
            pairmult::RouteResult semi = pairmult::semidirect_kernel(ctx, oracle);
            if (!hopf.applicable || !semi.applicable) continue;
            ++instances;
            bool ok = *hopf.value == *semi.value;
            if (ok && n.order() == g->order())
                ok = *hopf.value == *oracle.schur_multiplier(g).value;
            if (!ok) {
                ++mismatches;
                if (first.empty()) first = name;
            }
        }
    }
    report(3, instances > 0 && mismatches == 0,
           "dual-route agreement at c=1 on " + std::to_string(instances) +
               " complemented abelian instances, " + std::to_string(mismatches) +
               " mismatches" + (first.empty() ? "" : "; first: " + first));
}

// ---------------------------------------------------------------- criterion 4

void criterion4(const cli::Corpus& corpus, const homology::Oracle& oracle) {
    int checked = 0, na = 0, violations = 0;
    std::string first;
    for (const auto& [name, g] : corpus.groups) {
        // (G, G): the kernel route must reproduce the bar oracle
        pairmult::PairContext full =
            pairmult::make_pair_context(fingrp::PairOfGroups(g, fingrp::full_subgroup(g)));
        pairmult::RouteResult k = pairmult::semidirect_kernel(full, oracle);
        auto h2 = oracle.schur_multiplier(g);
        if (!k.applicable || !h2.ok()) {
            ++na;
        } else {
            ++checked;
            if (!(*k.value == *h2.value)) {
                ++violations;
                if (first.empty()) first = name + " (G,G)";
            }
        }
        // (G, 1): every applicable route is trivial
        pairmult::PairContext triv =
            pairmult::make_pair_context(fingrp::PairOfGroups(g, fingrp::trivial_subgroup(g)));
        pairmult::ConsistencyVerdict cv = pairmult::consistency_audit(triv, 1, oracle);
        for (const pairmult::RouteResult& r : cv.routes)
            if (r.applicable) {
                ++checked;
                if (!r.value->is_trivial()) {
                    ++violations;
                    if (first.empty()) first = name + " (G,1) via " + route_name(r.route);
                }
            }
    }
    report(4, violations == 0,
           "absolute-case instantiation: " + std::to_string(checked) + " route values, " +
               std::to_string(na) + " NA (bounds), " + std::to_string(violations) +
               " violations" + (first.empty() ? "" : "; first: " + first));
}

// ------------------------------------------------------------- criteria 5 & 6

void criteria56(const cli::Corpus& corpus, const std::vector<pairmult::PairContext>& contexts,
                const homology::Oracle& oracle) {
    auto t0 = steady_clock::now();
    int ft_pass = 0, ft_fail = 0, ft_na = 0;
    std::string ft_first;
    for (size_t i = 0; i < contexts.size(); ++i) {
        pairmult::Verdict v = pairmult::five_term_check(contexts[i], oracle);
        if (v.status == CheckStatus::PASS)
            ++ft_pass;
        else if (v.status == CheckStatus::NA)
            ++ft_na;
        else {
            ++ft_fail;
            if (ft_first.empty()) ft_first = corpus.pairs[i].name;
        }
    }
    double dt = secs_since(t0);
    report(5,
           ft_fail == 0 && ft_pass >= 40 && dt < 600.0,
           "five-term suite: " + std::to_string(ft_pass) + " PASS, " + std::to_string(ft_fail) +
               " FAIL, " + std::to_string(ft_na) + " NA over " +
               std::to_string(contexts.size()) + " pairs, " + std::to_string(dt) + " s" +
               (ft_first.empty() ? "" : "; first FAIL: " + ft_first));

    int l_pass = 0, l_fail = 0;
    std::vector<std::string> witnesses;
    bool only_noncomplemented = true;
    for (size_t i = 0; i < contexts.size(); ++i) {
        pairmult::Verdict v = pairmult::lemma38_check(contexts[i]);
        if (v.status == CheckStatus::PASS) {
            ++l_pass;
        } else {
            ++l_fail;
            bool complemented = fingrp::find_complement(contexts[i].pair).has_value();
            if (complemented) only_noncomplemented = false;
            std::string w = corpus.pairs[i].name + " {";
            for (const auto& [k, val] : v.values) w += k + "=" + val + "; ";
            w += complemented ? "complemented}" : "no complement}";
            witnesses.push_back(std::move(w));
        }
    }
    bool pass = l_fail == 0;
    // documented defect: the printed head-injectivity fails exactly on pairs
    // without a complement, where the proof's rank count does not apply
    bool expected = !pass && only_noncomplemented;
    std::string detail = "kernel-isomorphism + surjectivity: " + std::to_string(l_pass) +
                         " PASS, " + std::to_string(l_fail) + " FAIL";
    report(6, pass, detail, expected);
    for (const std::string& w : witnesses) std::cout << "    witness: " << w << "\n";
}

// ---------------------------------------------------------------- criterion 7

AbelianGroup rand_ab(uint64_t& state) {
    auto next = [&state] {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    AbelianGroup g;
    for (uint64_t i = 0, n = next() % 3; i < n; ++i)
        g = abgrp::direct_sum(g, AbelianGroup(0, {2 + static_cast<int64_t>(next() % 8)}));
    return g;
}

freeprod::PairInvariantData rand_tuple(uint64_t& state) {
    freeprod::PairInvariantData d;
    d.source = "supplied";
    d.m1 = rand_ab(state);
    d.m2 = rand_ab(state);
    d.n_mod = rand_ab(state);
    d.q_ab = rand_ab(state);
    d.m_q = rand_ab(state);
    d.g_ab = rand_ab(state);
    return d;
}

void criterion7(const cli::Corpus& corpus, const std::vector<pairmult::PairContext>& contexts,
                const homology::Oracle& oracle) {
    auto t0 = steady_clock::now();
    int violations = 0;
    std::string first;

    uint64_t state = 0xC7;
    for (int iter = 0; iter < 100; ++iter) {
        auto d1 = rand_tuple(state), d2 = rand_tuple(state);
        if (!(*freeprod::eval_c1(d1, d2).value == *freeprod::eval_c1(d2, d1).value) ||
            !(*freeprod::eval_c2(d1, d2).value == *freeprod::eval_c2(d2, d1).value)) {
            ++violations;
            if (first.empty()) first = "swap symmetry, tuple " + std::to_string(iter);
        }
    }
    for (size_t i = 0; i < contexts.size(); ++i) {
        if (contexts[i].pair.normal.order() != 1) continue;
        auto d = freeprod::tuple_from_pair(contexts[i], oracle);
        auto r1 = freeprod::eval_c1(d, d);
        auto r2 = freeprod::eval_c2(d, d);
        if ((r1.ok() && !r1.value->is_trivial()) || (r2.ok() && !r2.value->is_trivial())) {
            ++violations;
            if (first.empty()) first = "N=1 vanishing on " + corpus.pairs[i].name;
        }
    }
    state = 0xBE7;
    for (int iter = 0; iter < 50; ++iter) {
        auto d1 = rand_tuple(state), d2 = rand_tuple(state);
        for (auto* d : {&d1, &d2}) {
            d->q_ab = AbelianGroup();
            d->m_q = AbelianGroup();
            d->n_mod = d->g_ab;
        }
        auto terms = freeprod::eval_c2_terms(d1, d2);
        for (size_t idx : {4, 5, 6, 7, 9, 10})
            if (!(*terms.value)[idx].second.is_trivial()) {
                ++violations;
                if (first.empty()) first = "surviving quotient term under N=G";
            }
        AbelianGroup expect = abgrp::direct_sum(
            abgrp::direct_sum(*d1.m2, *d2.m2),
            abgrp::direct_sum(abgrp::direct_sum(abgrp::tensor(*d1.m1, *d2.g_ab),
                                                abgrp::tensor(*d2.m1, *d1.g_ab)),
                              abgrp::tor(*d1.g_ab, *d2.g_ab)));
        if (!(*freeprod::eval_c2(d1, d2).value == expect)) {
            ++violations;
            if (first.empty()) first = "five-term shape under N=G";
        }
    }
    double dt = secs_since(t0);
    report(7, violations == 0 && dt < 30.0,
           "free-product evaluator: 100 symmetry tuples, N=1 vanishing, 50 five-term-shape "
           "tuples, " +
               std::to_string(violations) + " violations, " + std::to_string(dt) + " s" +
               (first.empty() ? "" : "; first: " + first));
}

// ---------------------------------------------------------------- criterion 8

void criterion8(const cli::Corpus& corpus, const std::vector<pairmult::PairContext>& contexts,
                const homology::Oracle& oracle) {
    bool named_ok = true;
    std::string named_note;
    auto ctx_for = [&](const std::string& name) -> const pairmult::PairContext* {
        for (size_t i = 0; i < corpus.pairs.size(); ++i)
            if (corpus.pairs[i].name == name) return &contexts[i];
        return nullptr;
    };
    {
        const pairmult::PairContext* a = ctx_for("S3/N1");
        const pairmult::PairContext* b = ctx_for("C3/N1");
        if (!a || !b) {
            named_ok = false;
            named_note = "named pairs missing";
        } else {
            auto cr = freeprod::thm43_hypotheses(freeprod::tuple_from_pair(*a, oracle),
                                                 freeprod::tuple_from_pair(*b, oracle));
            if (cr.overall != freeprod::BatteryOutcome::all_hold) {
                named_ok = false;
                named_note = "(S3,A3)x(C3,C3) did not report all-hold";
            }
        }
        const pairmult::PairContext* c = ctx_for("C2/N1");
        const pairmult::PairContext* d = ctx_for("C4/N2");
        if (named_ok && c && d) {
            auto cr = freeprod::thm43_hypotheses(freeprod::tuple_from_pair(*c, oracle),
                                                 freeprod::tuple_from_pair(*d, oracle));
            bool g_tensor_violated =
                cr.g_conditions.size() == 4 && cr.g_conditions[0].holds.has_value() &&
                !*cr.g_conditions[0].holds &&
                cr.overall == freeprod::BatteryOutcome::violated;
            if (!g_tensor_violated) {
                named_ok = false;
                named_note = "(C2,C2)x(C4,C4) did not report the G-level tensor violation";
            }
        } else if (!c || !d) {
            named_ok = false;
            named_note = "named pairs missing";
        }
    }

    // implication audit: cor44 coprime => all G-level conditions trivial,
    // on 50 seeded random corpus group pairs
    uint64_t state = 0xC8;
    auto next = [&state] {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    int coprime_cases = 0, implication_violations = 0;
    bool only_a4 = true;
    std::string first;
    for (int iter = 0; iter < 50; ++iter) {
        size_t a = next() % corpus.groups.size();
        size_t b = next() % corpus.groups.size();
        freeprod::CoprimeReport r =
            freeprod::cor44_coprime(corpus.groups[a].second, corpus.groups[b].second, oracle);
        if (!r.coprime || !r.implication_holds.has_value()) continue;
        ++coprime_cases;
        if (!*r.implication_holds) {
            ++implication_violations;
            bool has_a4 = corpus.groups[a].first == "A4" || corpus.groups[b].first == "A4";
            if (!has_a4) only_a4 = false;
            if (first.empty())
                first = corpus.groups[a].first + " x " + corpus.groups[b].first;
        }
    }
    bool pass = named_ok && implication_violations == 0;
    bool expected = named_ok && implication_violations > 0 && only_a4;
    std::string detail = "hypothesis batteries: named instances " +
                         std::string(named_ok ? "ok" : ("BAD (" + named_note + ")")) + "; " +
                         std::to_string(coprime_cases) + " coprime samples, " +
                         std::to_string(implication_violations) +
                         " implication violations" + (first.empty() ? "" : " (e.g. " + first + ")");
    report(8, pass, detail, expected);
    if (!pass && expected)
        std::cout << "    analysis: exp M(A4) = 2 does not divide |A4^ab| = 3, so coprime "
                     "abelianization orders cannot force M(A4) (x) G2^ab = 0\n";
}

// ---------------------------------------------------------------- criterion 9

void criterion9(const cli::Corpus& corpus) {
    cli::RunConfig cfg;
    cfg.checks = {"thm36-audit"};
    cfg.sequential = true;
    cli::VerificationReport rep = cli::run_checks(corpus, cfg);
    bool found = false, values_ok = false, finding_ok = false;
    for (const cli::CheckRecord& r : rep.records) {
        if (r.subject != "C2xC2/N2" || r.check != "thm36-audit") continue;
        found = r.status == CheckStatus::MISMATCH;
        AbelianGroup semi, central;
        for (const auto& route : r.values["routes"]) {
            if (route["route"] == "semidirect-kernel" && route["applicable"].get<bool>())
                semi = AbelianGroup(route["value"]["free_rank"].get<uint64_t>(),
                                    route["value"]["torsion"].get<std::vector<int64_t>>());
            if (route["route"] == "central-formula" && route["applicable"].get<bool>())
                central = AbelianGroup(route["value"]["free_rank"].get<uint64_t>(),
                                       route["value"]["torsion"].get<std::vector<int64_t>>());
        }
        values_ok = semi == AbelianGroup(0, {2}) && central == AbelianGroup(0, {2, 2});
    }
    for (const std::string& f : rep.findings)
        if (f.find("thm36-audit C2xC2/N2") != std::string::npos) finding_ok = true;
    bool pass = found && values_ok && finding_ok && rep.exit_code() == 0;
    report(9, pass,
           std::string("discrepancy-reporting contract on (C2xC2, factor): mismatch=") +
               (found ? "yes" : "no") + " values=" + (values_ok ? "ok" : "BAD") +
               " finding=" + (finding_ok ? "yes" : "no") +
               " exit=" + std::to_string(rep.exit_code()));
}

// --------------------------------------------------------------- criterion 10

void criterion10(const cli::Corpus& corpus) {
    cli::RunConfig cfg;
    cfg.seed = 20240808;
    auto j1 = cli::run_checks(corpus, cfg);
    auto j2 = cli::run_checks(corpus, cfg);
    std::string a = j1.to_json(false).dump(2);
    std::string b = j2.to_json(false).dump(2);
    // the timed variant must differ from the stripped one only through ms keys
    std::string timed = j1.to_json(true).dump(2);
    bool pass = a == b && timed.find("\"ms\"") != std::string::npos;
    report(10, pass,
           "determinism: two full runs agree byte-for-byte after stripping timing fields (" +
               std::to_string(a.size()) + " bytes)");
}

} // namespace

int main() {
    auto t0 = steady_clock::now();
    cli::Corpus corpus = cli::default_corpus();
    homology::Oracle oracle;

    std::vector<pairmult::PairContext> contexts;
    contexts.reserve(corpus.pairs.size());
    for (const auto& p : corpus.pairs) contexts.push_back(pairmult::make_pair_context(p.pair));

    criterion1();
    criterion2(corpus, oracle);
    criterion3(corpus, oracle);
    criterion4(corpus, oracle);
    criteria56(corpus, contexts, oracle);
    criterion7(corpus, contexts, oracle);
    criterion8(corpus, contexts, oracle);
    criterion9(corpus);
    criterion10(corpus);

    std::cout << "acceptance: " << (10 - expected_failures - unexpected_failures) << " green, "
              << expected_failures << " expected-red (documented defects), "
              << unexpected_failures << " unexpected-red; total "
              << secs_since(t0) << " s\n";
    return unexpected_failures ? 1 : 0;
}
