#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "prowras/dataset.hpp"
#include "prowras/format.hpp"
#include "prowras/harness.hpp"
#include "prowras/metrics.hpp"
#include "prowras/partition.hpp"
#include "prowras/samplers.hpp"

namespace {

using namespace prowras;

std::uint64_t resolve_seed(const std::string& text) {
    if (text == "random") {
        std::random_device rd;
        return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    }
    try {
        std::size_t pos = 0;
        const std::uint64_t v = std::stoull(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw CLI::ValidationError("--seed", "expected an unsigned integer or 'random'");
    }
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open output file: " + path);
    out << content;
}

std::optional<std::string> opt_label(const std::string& minority) {
    return minority.empty() ? std::nullopt : std::optional<std::string>(minority);
}

struct OversampleArgs {
    std::string method = "prowras";
    std::string scheme = "auto";
    std::size_t n = 0;
    std::string in, out;
    std::string label = "label";
    std::string minority;
    ProwrasParams params;
    std::size_t knn_k = 5;
    std::size_t n_aff = 0;
};

int run_oversample(const OversampleArgs& a, std::uint64_t seed) {
    const Dataset d = load_csv(a.in, a.label, opt_label(a.minority));
    const Normalizer norm = fit_normalizer(d);
    Dataset dn = d;
    dn.features = apply_normalizer(norm, d.features);

    const std::size_t deficit =
        d.majority_indices().size() > d.minority_count()
            ? d.majority_indices().size() - d.minority_count()
            : 0;
    const std::size_t n = a.n ? a.n : deficit;

    SyntheticBatch batch;
    if (a.method == "prowras") {
        ProwrasParams p = a.params;
        p.num_samples_to_generate = n;
        if (a.scheme == "custom") {
            batch = prowras::prowras(dn, p, seed);
        } else {
            std::string scheme = a.scheme;
            if (scheme == "auto") {
                const SchemePreset pick = select_scheme(
                    d, ClassifierKind::Knn, SeedMixer(seed).mix("scheme-select").value(), p);
                scheme = scheme_name(pick);
                std::cerr << "scheme: " << scheme << "\n";
            }
            const auto preset = scheme_from_name(scheme);
            if (!preset) throw CLI::ValidationError("--scheme", "unknown scheme: " + scheme);
            batch = prowras_scheme(dn, *preset, p, seed);
        }
    } else if (a.method == "smote") {
        batch = smote(dn, n, a.knn_k, seed);
    } else if (a.method == "prowsyn") {
        batch = prowsyn(dn, n, a.params.max_levels, a.params.n_neighbours_max, a.params.theta, seed);
    } else if (a.method == "loras") {
        const std::size_t n_aff = a.n_aff ? a.n_aff : loras_default_n_aff(d.n_feats());
        batch = loras(dn, n, a.knn_k, a.params.shadow, a.params.sigma, n_aff, seed);
    } else if (a.method == "pfsmote") {
        batch = pf_smote_star(dn, n, seed);
    } else {
        throw CLI::ValidationError("--method", "unknown method: " + a.method);
    }

    Dataset synth;
    synth.features = invert_normalizer(norm, batch.points);
    synth.labels.assign(batch.points.rows, d.minority_label);
    synth.minority_label = d.minority_label;
    synth.feature_names = d.feature_names;
    synth.label_name = d.label_name;
    synth.label_col_pos = d.label_col_pos;
    write_output(a.out, csv_string(synth));
    std::cerr << "wrote " << batch.points.rows << " synthetic points\n";
    return 0;
}

std::vector<std::vector<double>> read_columns(const std::string& path,
                                              const std::vector<std::string>& names) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open scores file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw DataError("empty scores file: " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> header;
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) header.push_back(cell);
    }
    std::vector<std::size_t> cols;
    for (const auto& name : names) {
        const auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) throw DataError("column not found: " + name);
        cols.push_back(static_cast<std::size_t>(it - header.begin()));
    }
    std::vector<std::vector<double>> out(names.size());
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (cols[i] >= cells.size())
                throw DataError("line " + std::to_string(line_no) + ": missing column " + names[i]);
            try {
                out[i].push_back(std::stod(cells[cols[i]]));
            } catch (const std::exception&) {
                throw DataError("line " + std::to_string(line_no) + ": non-numeric cell '" +
                                cells[cols[i]] + "'");
            }
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prowras: multi-schematic oversampling for imbalanced binary data"};
    app.require_subcommand(1);
    std::string seed_text = "42";
    bool verbose = false;
    app.add_option("--seed", seed_text,
                   "RNG seed: unsigned integer or 'random' (default 42)")
        ->capture_default_str();
    app.add_flag("--verbose", verbose, "chatty diagnostics on stderr");

    OversampleArgs oa;
    auto* ov = app.add_subcommand("oversample", "generate synthetic minority points");
    ov->fallthrough();
    ov->add_option("--method", oa.method, "prowras|smote|prowsyn|loras|pfsmote")
        ->capture_default_str()
        ->check(CLI::IsMember({"prowras", "smote", "prowsyn", "loras", "pfsmote"}));
    ov->add_option("--scheme", oa.scheme, "prowras scheme: hgv|lgv|hlv|llv|auto|custom")
        ->capture_default_str()
        ->check(CLI::IsMember({"hgv", "lgv", "hlv", "llv", "auto", "custom"}));
    ov->add_option("--n", oa.n, "synthetic points to generate (0 = majority deficit)")
        ->capture_default_str();
    ov->add_option("--in", oa.in, "input CSV")->required();
    ov->add_option("--out", oa.out, "output CSV ('-' = stdout)")->required();
    ov->add_option("--label", oa.label, "label column name or 0-based index")
        ->capture_default_str();
    ov->add_option("--minority", oa.minority, "minority label (default: rarer label)");
    ov->add_option("--max-levels", oa.params.max_levels, "partition levels (default 5)")
        ->capture_default_str();
    ov->add_option("--n-neighbours-max", oa.params.n_neighbours_max,
                   "neighbors per majority point when partitioning (default 5)")
        ->capture_default_str();
    ov->add_option("--theta", oa.params.theta, "level weight decay (default 1)")
        ->capture_default_str();
    ov->add_option("--shadow", oa.params.shadow, "shadow points per parent (default 100)")
        ->capture_default_str();
    ov->add_option("--sigma", oa.params.sigma, "shadow noise stddev (default 0.001)")
        ->capture_default_str();
    ov->add_option("--max-conv", oa.params.max_conv,
                   "scheme=custom: max points per convex combination (default 2)")
        ->capture_default_str();
    ov->add_option("--neb-conv", oa.params.neb_conv,
                   "scheme=custom: neighborhood size (default 1000)")
        ->capture_default_str();
    ov->add_option("--k", oa.knn_k, "smote/loras neighbor count (default 5)")
        ->capture_default_str();
    ov->add_option("--n-aff", oa.n_aff, "loras affine points (0 = max(2,min(30,n_feats)))")
        ->capture_default_str();

    std::string pt_in, pt_out, pt_label = "label", pt_minority;
    ProwrasParams pt_params;
    auto* pt = app.add_subcommand("partition", "proximity-weighted minority partition as JSON");
    pt->fallthrough();
    pt->add_option("--in", pt_in, "input CSV")->required();
    pt->add_option("--out", pt_out, "output path (default stdout)");
    pt->add_option("--label", pt_label, "label column name or 0-based index")
        ->capture_default_str();
    pt->add_option("--minority", pt_minority, "minority label (default: rarer label)");
    pt->add_option("--max-levels", pt_params.max_levels, "partition levels (default 5)")
        ->capture_default_str();
    pt->add_option("--n-neighbours-max", pt_params.n_neighbours_max,
                   "neighbors per majority point (default 5)")
        ->capture_default_str();
    pt->add_option("--theta", pt_params.theta, "level weight decay (default 1)")
        ->capture_default_str();

    std::string bm_config, bm_out, bm_table_dir, bm_folds_out;
    auto* bm = app.add_subcommand("benchmark", "stratified CV benchmark over a JSON config");
    bm->fallthrough();
    bm->add_option("--config", bm_config, "benchmark config JSON")->required();
    bm->add_option("--out", bm_out, "results JSONL path (default stdout)");
    bm->add_option("--table-dir", bm_table_dir, "write per-classifier CSV tables here");
    bm->add_option("--dump-folds", bm_folds_out,
                   "write fold assignments CSV (for external classifiers)");

    std::string is_in, is_target, is_metric = "f1", is_out;
    double is_tol = 0.0;
    auto* is = app.add_subcommand("iscore", "I-score of one oversampler from results JSONL");
    is->fallthrough();
    is->add_option("--in", is_in, "results JSONL")->required();
    is->add_option("--target", is_target, "oversampler to score (default: each in turn)");
    is->add_option("--metric", is_metric, "f1|kappa")
        ->capture_default_str()
        ->check(CLI::IsMember({"f1", "kappa"}));
    is->add_option("--tolerance", is_tol, "tie tolerance (default 0)")->capture_default_str();
    is->add_option("--out", is_out, "output path (default stdout)");

    std::string ws_in, ws_a, ws_b, ws_out;
    auto* ws = app.add_subcommand("wsrt", "Wilcoxon signed-rank test on two score columns");
    ws->fallthrough();
    ws->add_option("--in", ws_in, "CSV of per-dataset scores")->required();
    ws->add_option("--a", ws_a, "first column name")->required();
    ws->add_option("--b", ws_b, "second column name")->required();
    ws->add_option("--out", ws_out, "output path (default stdout)");

    auto* vs = app.add_subcommand("version", "print version");
    vs->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        const std::uint64_t seed = resolve_seed(seed_text);
        std::cerr << "seed: " << seed << "\n";

        if (*vs) {
            std::cout << "prowras " << PROWRAS_VERSION << "\n";
            return 0;
        }
        if (*ov) return run_oversample(oa, seed);
        if (*pt) {
            const Dataset d = load_csv(pt_in, pt_label, opt_label(pt_minority));
            const Normalizer norm = fit_normalizer(d);
            Dataset dn = d;
            dn.features = apply_normalizer(norm, d.features);
            const WeightedPartition p = partition_minority(
                dn, pt_params.max_levels, pt_params.n_neighbours_max, pt_params.theta);
            write_output(pt_out, partition_json(p) + "\n");
            return 0;
        }
        if (*bm) {
            BenchmarkConfig cfg = load_benchmark_config(bm_config);
            if (app.count("--seed")) cfg.seed = seed;
            if (verbose)
                std::cerr << "benchmark: " << cfg.datasets.size() << " datasets, "
                          << cfg.oversamplers.size() << " oversamplers, "
                          << cfg.classifiers.size() << " classifiers, " << cfg.repeats << "x"
                          << cfg.folds << " CV\n";
            if (!bm_folds_out.empty()) {
                std::string dump;
                for (const auto& entry : cfg.datasets) {
                    const Dataset d = load_csv(entry.path, entry.label_column,
                                               opt_label(entry.minority_label));
                    const FoldPlan plan = stratified_folds(
                        d, cfg.repeats, cfg.folds,
                        SeedMixer(cfg.seed).mix("folds").mix(entry.name).value());
                    std::string one = fold_dump_csv(entry.name, plan);
                    if (!dump.empty()) one = one.substr(one.find('\n') + 1);
                    dump += one;
                }
                write_output(bm_folds_out, dump);
                std::cerr << "wrote fold plan: " << bm_folds_out << "\n";
            }
            const ResultsTable rt = run_benchmark(cfg);
            write_output(bm_out, results_jsonl(rt));
            if (!bm_table_dir.empty()) {
                std::vector<std::string> clfs;
                for (const auto& row : rt.rows)
                    if (std::find(clfs.begin(), clfs.end(), row.classifier) == clfs.end())
                        clfs.push_back(row.classifier);
                for (const auto& c : clfs)
                    write_output(bm_table_dir + "/table_" + c + ".csv",
                                 results_table_csv(rt, c));
                std::cerr << "wrote " << clfs.size() << " tables to " << bm_table_dir << "\n";
            }
            std::size_t failed = 0;
            for (const auto& row : rt.rows) failed += row.failed;
            if (failed) std::cerr << failed << " result rows failed; see 'error' fields\n";
            return 0;
        }
        if (*is) {
            const ResultsTable rt = load_results_jsonl(is_in);
            const ComparisonCube cube = cube_from_results(rt, is_metric);
            std::vector<std::string> targets;
            if (!is_target.empty())
                targets.push_back(is_target);
            else
                targets = cube.oversamplers;
            std::string out = "{";
            for (std::size_t i = 0; i < targets.size(); ++i)
                out += std::string(i ? "," : "") + "\"" + targets[i] +
                       "\":" + fmt_sig(iscore(cube, targets[i], is_tol));
            out += "}\n";
            write_output(is_out, out);
            return 0;
        }
        if (*ws) {
            const auto cols = read_columns(ws_in, {ws_a, ws_b});
            write_output(ws_out, wsrt_json(wsrt(cols[0], cols[1])) + "\n");
            return 0;
        }
        return 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
