#include "pairmult/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

struct CommonOpts {
    std::string corpus_path;
    int c = 1;
    std::string interpretation = "reduced";
    size_t max_order = 16;
    size_t h3_max_order = 12;
    uint64_t seed = 0;
    bool sequential = false;
};

void add_common(CLI::App* app, CommonOpts& opts) {
    app->add_option("--corpus", opts.corpus_path, "corpus JSON file (default: built-in corpus)");
    app->add_option("--c", opts.c, "nilpotency class for pair invariants (1 or 2)")
        ->check(CLI::Range(1, 2));
    app->add_option("--interpretation", opts.interpretation,
                    "reading of the central formula at c >= 2")
        ->check(CLI::IsMember({"literal", "reduced"}));
    app->add_option("--max-order", opts.max_order, "bar-oracle order bound for H1/H2");
    app->add_option("--h3-max-order", opts.h3_max_order, "bar-oracle order bound for H3");
    app->add_option("--seed", opts.seed, "seed for the randomized property batches");
    app->add_flag("--sequential", opts.sequential, "disable the parallel runner");
}

cli::RunConfig to_config(const CommonOpts& opts) {
    cli::RunConfig cfg;
    cfg.c = opts.c;
    cfg.interpretation = opts.interpretation == "literal"
                             ? pairmult::Interpretation::literal
                             : pairmult::Interpretation::reduced;
    cfg.max_order = opts.max_order;
    cfg.h3_max_order = opts.h3_max_order;
    cfg.seed = opts.seed;
    cfg.sequential = opts.sequential;
    return cfg;
}

cli::Corpus load(const CommonOpts& opts) {
    return opts.corpus_path.empty() ? cli::default_corpus() : cli::load_corpus(opts.corpus_path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pairmult: Schur multipliers and nilpotent multipliers of pairs of finite "
                 "groups, with cross-route verification"};
    app.require_subcommand(1);

    CommonOpts run_opts;
    std::string checks_csv, out_path;
    CLI::App* run = app.add_subcommand("run", "run verification checks over a corpus");
    add_common(run, run_opts);
    run->add_option("--checks", checks_csv,
                    "comma-separated check ids (default: all); known: five-term, lemma38, "
                    "thm33, thm35, thm36-audit, thm39-tail, thm41-eval, thm43, cor44, "
                    "oracle-cross");
    run->add_option("--out", out_path, "write the JSON report to this path");

    CommonOpts comp_opts;
    std::string what;
    std::vector<std::string> group_names, pair_names, pres_names;
    CLI::App* compute = app.add_subcommand("compute", "compute one invariant and print it");
    add_common(compute, comp_opts);
    compute->add_option("what", what,
                        "one of: M, audit, h1, h2, h3, ab, central, evalc1, evalc2, baer")
        ->required();
    compute->add_option("--group", group_names, "group name(s) from the corpus");
    compute->add_option("--pair", pair_names, "pair name(s) from the corpus");
    compute->add_option("--presentation", pres_names, "presentation name(s) from the corpus");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            cli::RunConfig cfg = to_config(run_opts);
            if (!checks_csv.empty()) {
                std::stringstream ss(checks_csv);
                std::string item;
                while (std::getline(ss, item, ','))
                    if (!item.empty()) cfg.checks.push_back(item);
            }
            cli::Corpus corpus = load(run_opts);
            cli::VerificationReport report = cli::run_checks(corpus, cfg);
            std::cout << report.table();
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                if (!out) {
                    std::cerr << "cannot write report to " << out_path << "\n";
                    return 2;
                }
                out << report.to_json(true).dump(2) << "\n";
            }
            return report.exit_code();
        }
        if (compute->parsed()) {
            cli::Corpus corpus = load(comp_opts);
            return cli::run_compute(corpus, to_config(comp_opts), what, group_names, pair_names,
                                    pres_names, std::cout);
        }
    } catch (const cli::CorpusError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind == cli::CorpusError::Kind::validation ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
