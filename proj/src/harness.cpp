#include "prowras/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "prowras/classifiers.hpp"
#include "prowras/format.hpp"

namespace prowras {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

double round_to(double v, int decimals) {
    if (decimals < 0) return v;
    const double scale = std::pow(10.0, decimals);
    return std::round(v * scale) / scale;
}

std::size_t worker_count() {
    const char* env = std::getenv("PROWRAS_THREADS");
    if (!env) return 1;
    const long v = std::atol(env);
    return static_cast<std::size_t>(std::clamp<long>(v, 1, 64));
}

ClassifierKind classifier_kind(const ClassifierSpec& spec) {
    if (spec.kind == "knn") return ClassifierKind::Knn;
    if (spec.kind == "logreg") return ClassifierKind::LogReg;
    throw DataError("unknown classifier kind: " + spec.kind);
}

SyntheticBatch synthesize(const Dataset& train_n, const OversamplerSpec& ovs, std::size_t n,
                          double sigma, const std::string& scheme, std::uint64_t seed) {
    SyntheticBatch empty;
    empty.points = Matrix(0, train_n.n_feats());
    empty.label = train_n.minority_label;
    empty.seed = seed;
    if (n == 0 || ovs.method == "baseline") return empty;

    ProwrasParams p = ovs.params;
    p.sigma = sigma;
    p.num_samples_to_generate = n;
    if (ovs.method == "prowras") {
        if (scheme == "custom") return prowras(train_n, p, seed);
        const auto preset = scheme_from_name(scheme);
        if (!preset) throw DataError("unresolved scheme: " + scheme);
        return prowras_scheme(train_n, *preset, p, seed);
    }
    if (ovs.method == "smote") return smote(train_n, n, ovs.knn_k, seed);
    if (ovs.method == "prowsyn")
        return prowsyn(train_n, n, p.max_levels, p.n_neighbours_max, p.theta, seed);
    if (ovs.method == "loras") {
        const std::size_t n_aff = ovs.n_aff ? ovs.n_aff : loras_default_n_aff(train_n.n_feats());
        return loras(train_n, n, ovs.knn_k, p.shadow, sigma, n_aff, seed);
    }
    if (ovs.method == "pfsmote") return pf_smote_star(train_n, n, seed);
    throw DataError("unknown oversampling method: " + ovs.method);
}

std::vector<std::string> predict_with(const ClassifierSpec& spec, Matrix train_x,
                                      std::vector<std::string> train_y,
                                      const std::string& minority, const Matrix& test_x) {
    if (spec.kind == "knn")
        return knn_predict(knn_fit(std::move(train_x), std::move(train_y), minority, spec.k),
                           test_x);
    if (spec.kind == "logreg")
        return logreg_predict(logreg_fit(train_x, train_y, minority, spec.l2), test_x);
    throw DataError("unknown classifier kind: " + spec.kind);
}

struct FoldOutcome {
    double f1 = 0.0;
    double kappa = 0.0;
    std::string error;
};

}  // namespace

ResultsTable run_benchmark(const BenchmarkConfig& cfg, FoldObserver observer) {
    if (cfg.datasets.empty() || cfg.oversamplers.empty() || cfg.classifiers.empty())
        throw DataError("benchmark config needs datasets, oversamplers and classifiers");
    if (cfg.folds < 2) throw DataError("benchmark needs folds >= 2");
    if (cfg.repeats < 1) throw DataError("benchmark needs repeats >= 1");

    const std::size_t threads = worker_count();
    std::mutex observer_mutex;
    ResultsTable table;

    // external prediction files load once
    std::map<std::string, ExternalPredictions> ext_cache;
    for (const auto& clf : cfg.classifiers)
        if (clf.kind == "external" && !ext_cache.count(clf.path))
            ext_cache.emplace(clf.path, load_external_predictions(clf.path));

    for (const auto& entry : cfg.datasets) {
        const Dataset ds = load_csv(entry.path, entry.label_column,
                                    entry.minority_label.empty()
                                        ? std::nullopt
                                        : std::optional<std::string>(entry.minority_label));
        const std::string& ds_name = entry.name;
        const FoldPlan plan = stratified_folds(
            ds, cfg.repeats, cfg.folds, SeedMixer(cfg.seed).mix("folds").mix(ds_name).value());

        // one scheme choice per (dataset, classifier), before CV, on the full data
        std::map<std::string, std::string> auto_scheme;
        const OversamplerSpec* auto_base = nullptr;
        for (const auto& ovs : cfg.oversamplers)
            if (ovs.method == "prowras" && ovs.scheme == "auto") {
                auto_base = &ovs;
                break;
            }
        if (auto_base)
            for (const auto& clf : cfg.classifiers) {
                if (clf.kind == "external") continue;
                ProwrasParams base = auto_base->params;
                base.sigma = cfg.sigma;
                auto_scheme[clf.name] = scheme_name(select_scheme(
                    ds, classifier_kind(clf),
                    SeedMixer(cfg.seed).mix("scheme-select").mix(ds_name).mix(clf.name).value(),
                    base));
            }

        // row layout: oversamplers x in-process classifiers, then external slots
        struct RowPlan {
            const OversamplerSpec* ovs;
            const ClassifierSpec* clf;
            std::string scheme;
        };
        std::vector<RowPlan> row_plans;
        for (const auto& ovs : cfg.oversamplers)
            for (const auto& clf : cfg.classifiers) {
                if (clf.kind == "external") continue;
                std::string scheme;
                if (ovs.method == "prowras")
                    scheme = ovs.scheme == "auto" ? auto_scheme[clf.name] : ovs.scheme;
                row_plans.push_back({&ovs, &clf, scheme});
            }

        const std::size_t nfolds = cfg.repeats * cfg.folds;
        std::vector<std::vector<FoldOutcome>> outcomes(row_plans.size(),
                                                       std::vector<FoldOutcome>(nfolds));

        struct Task {
            std::size_t row, r, f;
        };
        std::vector<Task> tasks;
        tasks.reserve(row_plans.size() * nfolds);
        for (std::size_t row = 0; row < row_plans.size(); ++row)
            for (std::size_t r = 0; r < cfg.repeats; ++r)
                for (std::size_t f = 0; f < cfg.folds; ++f) tasks.push_back({row, r, f});

        auto run_task = [&](const Task& t) {
            const RowPlan& rp = row_plans[t.row];
            FoldOutcome& slot = outcomes[t.row][t.r * cfg.folds + t.f];
            try {
                const auto train_idx = plan.train_indices(t.r, t.f);
                const auto test_idx = plan.test_indices(t.r, t.f);
                const Dataset train = ds.subset(train_idx);
                const Dataset test = ds.subset(test_idx);
                const Normalizer norm = fit_normalizer(train);
                const Dataset train_n = apply_normalizer(norm, train);
                const Matrix test_x = apply_normalizer(norm, test.features);

                const std::size_t min_count = train_n.minority_count();
                const std::size_t deficit = train_n.n() - 2 * min_count;
                const std::uint64_t task_seed = SeedMixer(cfg.seed)
                                                    .mix(ds_name)
                                                    .mix(rp.ovs->id)
                                                    .mix(rp.clf->name)
                                                    .mix(std::uint64_t{t.r})
                                                    .mix(std::uint64_t{t.f})
                                                    .value();
                const SyntheticBatch batch =
                    synthesize(train_n, *rp.ovs, deficit, cfg.sigma, rp.scheme, task_seed);

                Matrix aug_x = train_n.features;
                std::vector<std::string> aug_y = train_n.labels;
                for (std::size_t i = 0; i < batch.points.rows; ++i) {
                    aug_x.append_row(batch.points.row(i));
                    aug_y.push_back(batch.label);
                }
                const auto preds = predict_with(*rp.clf, std::move(aug_x), std::move(aug_y),
                                                ds.minority_label, test_x);
                const auto cm = confusion(test.labels, preds, ds.minority_label);
                slot.f1 = f1_minority(cm);
                slot.kappa = cohen_kappa(cm);

                if (observer) {
                    FoldRecord rec;
                    rec.dataset = ds_name;
                    rec.oversampler = rp.ovs->id;
                    rec.classifier = rp.clf->name;
                    rec.repeat = t.r;
                    rec.fold = t.f;
                    rec.train_indices = train_idx;
                    rec.test_indices = test_idx;
                    rec.normalizer = norm;
                    rec.batch = &batch;
                    rec.predictions = &preds;
                    rec.truth = &test.labels;
                    std::lock_guard<std::mutex> lock(observer_mutex);
                    observer(rec);
                }
            } catch (const std::exception& e) {
                slot.error = e.what();
            }
        };

        if (threads <= 1) {
            for (const auto& t : tasks) run_task(t);
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> pool;
            for (std::size_t w = 0; w < threads; ++w)
                pool.emplace_back([&] {
                    for (;;) {
                        const std::size_t i = next.fetch_add(1);
                        if (i >= tasks.size()) break;
                        run_task(tasks[i]);
                    }
                });
            for (auto& th : pool) th.join();
        }

        for (std::size_t row = 0; row < row_plans.size(); ++row) {
            const RowPlan& rp = row_plans[row];
            ResultRow out;
            out.dataset = ds_name;
            out.oversampler = rp.ovs->id;
            out.scheme_used = rp.ovs->method == "prowras" ? rp.scheme : "";
            out.classifier = rp.clf->name;
            out.seed = cfg.seed;
            for (const auto& slot : outcomes[row]) {
                if (!slot.error.empty()) {
                    out.failed = true;
                    if (out.error.empty()) out.error = slot.error;
                    continue;
                }
                out.fold_f1.push_back(slot.f1);
                out.fold_kappa.push_back(slot.kappa);
            }
            if (out.failed) {
                out.fold_f1.clear();
                out.fold_kappa.clear();
                out.mean_f1 = 0.0;
                out.mean_kappa = 0.0;
            } else {
                double sf = 0.0, sk = 0.0;
                for (double v : out.fold_f1) sf += v;
                for (double v : out.fold_kappa) sk += v;
                out.mean_f1 = sf / static_cast<double>(out.fold_f1.size());
                out.mean_kappa = sk / static_cast<double>(out.fold_kappa.size());
            }
            table.rows.push_back(std::move(out));
        }

        // external prediction slots: fixed predictions, one row per slot
        for (const auto& clf : cfg.classifiers) {
            if (clf.kind != "external") continue;
            const ExternalPredictions& ext = ext_cache.at(clf.path);
            ResultRow out;
            out.dataset = ds_name;
            out.oversampler = clf.oversampler.empty() ? "external" : clf.oversampler;
            out.classifier = clf.name;
            out.seed = cfg.seed;
            std::vector<std::string> missing;
            std::size_t extras = 0;
            for (std::size_t r = 0; r < cfg.repeats && missing.size() <= 32; ++r)
                for (std::size_t f = 0; f < cfg.folds; ++f) {
                    const auto test_idx = plan.test_indices(r, f);
                    const auto git = ext.groups.find({ds_name, r, f});
                    if (git == ext.groups.end()) {
                        missing.push_back("(" + std::to_string(r) + "," + std::to_string(f) + ")");
                        continue;
                    }
                    std::vector<std::string> preds;
                    bool gap = false;
                    for (std::size_t idx : test_idx) {
                        const auto pit = git->second.find(idx);
                        if (pit == git->second.end()) {
                            gap = true;
                            break;
                        }
                        preds.push_back(pit->second);
                    }
                    extras += git->second.size() - (gap ? 0 : preds.size());
                    if (gap) {
                        missing.push_back("(" + std::to_string(r) + "," + std::to_string(f) + ")");
                        continue;
                    }
                    std::vector<std::string> truth;
                    for (std::size_t idx : test_idx) truth.push_back(ds.labels[idx]);
                    const auto cm = confusion(truth, preds, ds.minority_label);
                    out.fold_f1.push_back(f1_minority(cm));
                    out.fold_kappa.push_back(cohen_kappa(cm));

                    if (observer) {
                        SyntheticBatch none;
                        none.points = Matrix(0, ds.n_feats());
                        none.label = ds.minority_label;
                        FoldRecord rec;
                        rec.dataset = ds_name;
                        rec.oversampler = out.oversampler;
                        rec.classifier = clf.name;
                        rec.repeat = r;
                        rec.fold = f;
                        rec.test_indices = test_idx;
                        rec.train_indices = plan.train_indices(r, f);
                        rec.batch = &none;
                        rec.predictions = &preds;
                        rec.truth = &truth;
                        std::lock_guard<std::mutex> lock(observer_mutex);
                        observer(rec);
                    }
                }
            if (!missing.empty()) {
                out.failed = true;
                std::string list;
                for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
                out.error = "external predictions missing (repeat,fold): " + list;
                out.fold_f1.clear();
                out.fold_kappa.clear();
            } else {
                if (extras > 0)
                    std::cerr << "warning: " << extras << " extra external prediction rows for "
                              << ds_name << "/" << clf.name << " ignored\n";
                double sf = 0.0, sk = 0.0;
                for (double v : out.fold_f1) sf += v;
                for (double v : out.fold_kappa) sk += v;
                out.mean_f1 = sf / static_cast<double>(out.fold_f1.size());
                out.mean_kappa = sk / static_cast<double>(out.fold_kappa.size());
            }
            table.rows.push_back(std::move(out));
        }
    }
    return table;
}

std::vector<std::vector<std::size_t>> pairwise_counts(const ResultsTable& rt,
                                                      const std::string& classifier,
                                                      const std::string& metric,
                                                      std::vector<std::string>* oversamplers_out) {
    std::vector<std::string> datasets, oversamplers;
    std::map<std::pair<std::string, std::string>, double> score;
    for (const auto& row : rt.rows) {
        if (row.classifier != classifier || row.failed) continue;
        if (std::find(datasets.begin(), datasets.end(), row.dataset) == datasets.end())
            datasets.push_back(row.dataset);
        if (std::find(oversamplers.begin(), oversamplers.end(), row.oversampler) ==
            oversamplers.end())
            oversamplers.push_back(row.oversampler);
        score[{row.dataset, row.oversampler}] =
            round_to(metric == "kappa" ? row.mean_kappa : row.mean_f1, 3);
    }
    if (datasets.empty()) throw DataError("no rows for classifier " + classifier);
    for (const auto& d : datasets)
        for (const auto& o : oversamplers)
            if (!score.count({d, o}))
                throw DataError("incomplete table: missing (" + d + ", " + o + ")");

    const std::size_t no = oversamplers.size();
    std::vector<std::vector<std::size_t>> counts(no, std::vector<std::size_t>(no, 0));
    for (std::size_t i = 0; i < no; ++i)
        for (std::size_t j = 0; j < no; ++j)
            for (const auto& d : datasets)
                if (score[{d, oversamplers[i]}] >= score[{d, oversamplers[j]}]) ++counts[i][j];
    if (oversamplers_out) *oversamplers_out = oversamplers;
    return counts;
}

std::string results_jsonl(const ResultsTable& rt) {
    std::string out;
    for (const auto& row : rt.rows) {
        out += "{\"dataset\":\"" + json_escape(row.dataset) + "\",\"oversampler\":\"" +
               json_escape(row.oversampler) + "\",\"scheme\":\"" + json_escape(row.scheme_used) +
               "\",\"classifier\":\"" + json_escape(row.classifier) + "\",\"mean_f1\":" +
               fmt_sig(row.mean_f1) + ",\"mean_kappa\":" + fmt_sig(row.mean_kappa) +
               ",\"fold_f1\":[";
        for (std::size_t i = 0; i < row.fold_f1.size(); ++i)
            out += (i ? "," : "") + fmt_sig(row.fold_f1[i]);
        out += "],\"fold_kappa\":[";
        for (std::size_t i = 0; i < row.fold_kappa.size(); ++i)
            out += (i ? "," : "") + fmt_sig(row.fold_kappa[i]);
        out += "],\"seed\":" + std::to_string(row.seed) +
               ",\"failed\":" + (row.failed ? "true" : "false") + ",\"error\":\"" +
               json_escape(row.error) + "\"}\n";
    }
    return out;
}

ResultsTable parse_results_jsonl(const std::string& text) {
    ResultsTable rt;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const std::exception& e) {
            throw DataError("results line " + std::to_string(line_no) + ": " + e.what());
        }
        ResultRow row;
        row.dataset = j.value("dataset", "");
        row.oversampler = j.value("oversampler", "");
        row.scheme_used = j.value("scheme", "");
        row.classifier = j.value("classifier", "");
        row.mean_f1 = j.value("mean_f1", 0.0);
        row.mean_kappa = j.value("mean_kappa", 0.0);
        if (j.contains("fold_f1")) row.fold_f1 = j["fold_f1"].get<std::vector<double>>();
        if (j.contains("fold_kappa")) row.fold_kappa = j["fold_kappa"].get<std::vector<double>>();
        row.seed = j.value("seed", std::uint64_t{0});
        row.failed = j.value("failed", false);
        row.error = j.value("error", "");
        rt.rows.push_back(std::move(row));
    }
    return rt;
}

ResultsTable load_results_jsonl(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open results file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_results_jsonl(ss.str());
}

std::string results_table_csv(const ResultsTable& rt, const std::string& classifier) {
    std::vector<std::string> datasets, oversamplers;
    std::map<std::pair<std::string, std::string>, const ResultRow*> cell;
    for (const auto& row : rt.rows) {
        if (row.classifier != classifier) continue;
        if (std::find(datasets.begin(), datasets.end(), row.dataset) == datasets.end())
            datasets.push_back(row.dataset);
        if (std::find(oversamplers.begin(), oversamplers.end(), row.oversampler) ==
            oversamplers.end())
            oversamplers.push_back(row.oversampler);
        cell[{row.dataset, row.oversampler}] = &row;
    }
    std::string out = "dataset";
    for (const auto& o : oversamplers) out += "," + o;
    out += "\n";
    for (const auto& d : datasets) {
        out += d;
        for (const auto& o : oversamplers) {
            const auto it = cell.find({d, o});
            if (it == cell.end() || it->second->failed)
                out += ",NA";
            else
                out += "," + fmt_fixed(it->second->mean_f1, 3) + "/" +
                       fmt_fixed(it->second->mean_kappa, 3);
        }
        out += "\n";
    }
    return out;
}

ComparisonCube cube_from_results(const ResultsTable& rt, const std::string& metric,
                                 int round_decimals) {
    std::vector<std::string> classifiers, datasets, oversamplers;
    for (const auto& row : rt.rows) {
        if (row.failed) continue;
        if (std::find(classifiers.begin(), classifiers.end(), row.classifier) == classifiers.end())
            classifiers.push_back(row.classifier);
        if (std::find(datasets.begin(), datasets.end(), row.dataset) == datasets.end())
            datasets.push_back(row.dataset);
        if (std::find(oversamplers.begin(), oversamplers.end(), row.oversampler) ==
            oversamplers.end())
            oversamplers.push_back(row.oversampler);
    }
    ComparisonCube cube = make_cube(classifiers, datasets, oversamplers);
    for (const auto& row : rt.rows) {
        if (row.failed) continue;
        const auto c = std::find(cube.classifiers.begin(), cube.classifiers.end(), row.classifier) -
                       cube.classifiers.begin();
        const auto d =
            std::find(cube.datasets.begin(), cube.datasets.end(), row.dataset) - cube.datasets.begin();
        const auto o = std::find(cube.oversamplers.begin(), cube.oversamplers.end(),
                                 row.oversampler) -
                       cube.oversamplers.begin();
        cube.at(static_cast<std::size_t>(c), static_cast<std::size_t>(d), static_cast<std::size_t>(o)) =
            round_to(metric == "kappa" ? row.mean_kappa : row.mean_f1, round_decimals);
    }
    return cube;
}

std::string fold_dump_csv(const std::string& dataset, const FoldPlan& plan) {
    std::string out = "dataset,repeat,fold,sample_index\n";
    for (std::size_t r = 0; r < plan.repeats; ++r)
        for (std::size_t i = 0; i < plan.assignments[r].size(); ++i)
            out += dataset + "," + std::to_string(r) + "," + std::to_string(plan.assignments[r][i]) +
                   "," + std::to_string(i) + "\n";
    return out;
}

ExternalPredictions load_external_predictions(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open predictions file: " + path);
    ExternalPredictions out;
    std::string line;
    if (!std::getline(in, line)) throw DataError("empty predictions file: " + path);
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string ds, r, f, idx, label;
        if (!std::getline(ss, ds, ',') || !std::getline(ss, r, ',') || !std::getline(ss, f, ',') ||
            !std::getline(ss, idx, ',') || !std::getline(ss, label))
            throw DataError("predictions line " + std::to_string(line_no) + ": expected 5 cells");
        try {
            out.groups[{ds, std::stoul(r), std::stoul(f)}][std::stoul(idx)] = label;
        } catch (const std::exception&) {
            throw DataError("predictions line " + std::to_string(line_no) + ": bad number");
        }
    }
    return out;
}

BenchmarkConfig load_benchmark_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open config: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw DataError(std::string("config parse error: ") + e.what());
    }

    BenchmarkConfig cfg;
    if (!j.contains("datasets")) throw DataError("config needs 'datasets'");
    if (j["datasets"].is_string()) {
        cfg.datasets = load_manifest(j["datasets"].get<std::string>());
    } else {
        for (const auto& e : j["datasets"]) {
            ManifestEntry m;
            m.name = e.at("name").get<std::string>();
            m.path = e.at("path").get<std::string>();
            if (e.contains("label_column")) {
                const auto& lc = e["label_column"];
                m.label_column =
                    lc.is_string() ? lc.get<std::string>() : std::to_string(lc.get<long long>());
            } else {
                m.label_column = "label";
            }
            if (e.contains("minority_label")) m.minority_label = e["minority_label"].get<std::string>();
            cfg.datasets.push_back(std::move(m));
        }
    }

    for (const auto& e : j.value("oversamplers", nlohmann::json::array())) {
        OversamplerSpec o;
        o.method = e.at("name").get<std::string>();
        o.id = e.value("id", o.method);
        if (o.method == "prowras") o.scheme = e.value("scheme", "auto");
        if (e.contains("max_levels")) o.params.max_levels = e["max_levels"].get<std::size_t>();
        if (e.contains("n_neighbours_max"))
            o.params.n_neighbours_max = e["n_neighbours_max"].get<std::size_t>();
        if (e.contains("theta")) o.params.theta = e["theta"].get<double>();
        if (e.contains("shadow")) o.params.shadow = e["shadow"].get<std::size_t>();
        if (e.contains("max_conv")) o.params.max_conv = e["max_conv"].get<std::size_t>();
        if (e.contains("neb_conv")) o.params.neb_conv = e["neb_conv"].get<std::size_t>();
        if (e.contains("k")) o.knn_k = e["k"].get<std::size_t>();
        if (e.contains("n_aff")) o.n_aff = e["n_aff"].get<std::size_t>();
        cfg.oversamplers.push_back(std::move(o));
    }

    for (const auto& e : j.value("classifiers", nlohmann::json::array())) {
        ClassifierSpec c;
        c.name = e.at("name").get<std::string>();
        c.kind = e.value("kind", c.name == "logreg" ? "logreg" : (c.name == "knn" ? "knn" : ""));
        if (c.kind.empty()) throw DataError("classifier '" + c.name + "' needs a 'kind'");
        if (e.contains("k")) c.k = e["k"].get<std::size_t>();
        if (e.contains("l2")) c.l2 = e["l2"].get<double>();
        if (e.contains("path")) c.path = e["path"].get<std::string>();
        if (e.contains("oversampler")) c.oversampler = e["oversampler"].get<std::string>();
        if (c.kind == "external" && c.path.empty())
            throw DataError("external classifier '" + c.name + "' needs 'path'");
        cfg.classifiers.push_back(std::move(c));
    }

    cfg.repeats = j.value("repeats", std::size_t{5});
    cfg.folds = j.value("folds", std::size_t{5});
    cfg.seed = j.value("seed", kDefaultSeed);
    cfg.sigma = j.value("sigma", 0.001);
    return cfg;
}

}  // namespace prowras
