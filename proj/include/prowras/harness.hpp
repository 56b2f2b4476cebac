#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "prowras/dataset.hpp"
#include "prowras/metrics.hpp"
#include "prowras/samplers.hpp"

namespace prowras {

inline constexpr std::uint64_t kDefaultSeed = 42;

struct OversamplerSpec {
    std::string id;         // row label; defaults to method
    std::string method;     // baseline | prowras | smote | prowsyn | loras | pfsmote
    std::string scheme;     // prowras only: hgv | lgv | hlv | llv | auto | custom
    ProwrasParams params;   // prowras/prowsyn knobs (sigma overridden by the config profile)
    std::size_t knn_k = 5;  // smote/loras neighbor count
    std::size_t n_aff = 0;  // loras; 0 -> default
};

struct ClassifierSpec {
    std::string name;
    std::string kind = "knn";  // knn | logreg | external
    std::size_t k = 5;
    double l2 = 1.0;
    std::string path;         // external predictions CSV
    std::string oversampler;  // row tag for external predictions
};

struct BenchmarkConfig {
    std::vector<ManifestEntry> datasets;
    std::vector<OversamplerSpec> oversamplers;
    std::vector<ClassifierSpec> classifiers;
    std::size_t repeats = 5;
    std::size_t folds = 5;
    std::uint64_t seed = kDefaultSeed;
    double sigma = 0.001;  // shadow-noise profile applied to every sampler
};

BenchmarkConfig load_benchmark_config(const std::string& path);

struct ResultRow {
    std::string dataset;
    std::string oversampler;
    std::string scheme_used;
    std::string classifier;
    double mean_f1 = 0.0;
    double mean_kappa = 0.0;
    std::vector<double> fold_f1;
    std::vector<double> fold_kappa;
    std::uint64_t seed = 0;
    bool failed = false;
    std::string error;
};

struct ResultsTable {
    std::vector<ResultRow> rows;
};

// Everything one CV fold produced; handed to the observer for inspection
// (leakage tests, prediction round-trips). Pointers are valid only during
// the callback.
struct FoldRecord {
    std::string dataset;
    std::string oversampler;
    std::string classifier;
    std::size_t repeat = 0;
    std::size_t fold = 0;
    std::vector<std::size_t> train_indices;
    std::vector<std::size_t> test_indices;
    Normalizer normalizer;
    const SyntheticBatch* batch = nullptr;
    const std::vector<std::string>* predictions = nullptr;
    const std::vector<std::string>* truth = nullptr;
};

using FoldObserver = std::function<void(const FoldRecord&)>;

// 5x5 stratified CV protocol: per fold fit the normalizer on the training
// part only, oversample the normalized training fold up to class balance,
// train, and score F1/kappa on the untouched test fold. Failures are recorded
// per row and the run continues. PROWRAS_THREADS (default 1) sets the worker
// count; results are seed-determined either way.
ResultsTable run_benchmark(const BenchmarkConfig& cfg, FoldObserver observer = {});

// entry (i,j) = datasets where oversampler i's mean metric >= oversampler j's
// (values rounded to table precision, 3 decimals); diagonal = |D|.
std::vector<std::vector<std::size_t>> pairwise_counts(const ResultsTable& rt,
                                                      const std::string& classifier,
                                                      const std::string& metric,
                                                      std::vector<std::string>* oversamplers_out = nullptr);

// one JSON object per row, key order fixed, 6 significant digits
std::string results_jsonl(const ResultsTable& rt);
ResultsTable parse_results_jsonl(const std::string& text);
ResultsTable load_results_jsonl(const std::string& path);

// paper-style table: one row per dataset, one column per oversampler,
// cells "F1/kappa" at 3 decimals
std::string results_table_csv(const ResultsTable& rt, const std::string& classifier);

// cube over distinct (classifier, dataset, oversampler) mean scores;
// round_decimals = -1 keeps raw values
ComparisonCube cube_from_results(const ResultsTable& rt, const std::string& metric,
                                 int round_decimals = 3);

// test-fold membership dump so external classifiers can align predictions
std::string fold_dump_csv(const std::string& dataset, const FoldPlan& plan);

struct ExternalPredictions {
    // (dataset, repeat, fold) -> sample index -> predicted label
    std::map<std::tuple<std::string, std::size_t, std::size_t>,
             std::map<std::size_t, std::string>>
        groups;
};

ExternalPredictions load_external_predictions(const std::string& path);

}  // namespace prowras
