#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "prowras/harness.hpp"
#include "prowras/rng.hpp"

using namespace prowras;

namespace {

std::string write_tmp(const std::string& name, const std::string& content) {
    const auto path = (std::filesystem::temp_directory_path() / name).string();
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

// two soft blobs, optionally with a sentinel spike on feature 2 of one
// minority row (value far outside every other observation)
std::string blob_csv(std::size_t n_min, std::size_t n_maj, std::uint64_t seed,
                     bool sentinel = false) {
    Rng rng(seed);
    std::string csv = "f0,f1,f2,label\n";
    for (std::size_t i = 0; i < n_min + n_maj; ++i) {
        const bool minority = i < n_min;
        const double x = (minority ? 0.25 : 0.75) + 0.1 * rng.normal();
        const double y = (minority ? 0.75 : 0.25) + 0.1 * rng.normal();
        double z = 0.5 + 0.1 * rng.normal();
        if (sentinel && i == 0) z = 999.0;
        csv += std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) +
               (minority ? ",pos\n" : ",neg\n");
    }
    return csv;
}

BenchmarkConfig small_config(const std::string& csv_path) {
    BenchmarkConfig cfg;
    cfg.datasets.push_back({"blob", csv_path, "label", ""});
    OversamplerSpec baseline;
    baseline.id = "baseline";
    baseline.method = "baseline";
    OversamplerSpec sm;
    sm.id = "smote";
    sm.method = "smote";
    sm.knn_k = 3;
    OversamplerSpec pw;
    pw.id = "prowras";
    pw.method = "prowras";
    pw.scheme = "hlv";
    pw.params.max_levels = 1;  // tiny folds: avoid singleton leftover clusters
    cfg.oversamplers = {baseline, sm, pw};
    ClassifierSpec knn;
    knn.name = "knn";
    knn.kind = "knn";
    knn.k = 5;
    cfg.classifiers = {knn};
    cfg.repeats = 2;
    cfg.folds = 2;
    cfg.seed = 11;
    return cfg;
}

}  // namespace

TEST_CASE("identical config and seed give byte-identical results") {
    const auto path = write_tmp("hb_det.csv", blob_csv(12, 48, 3));
    const auto cfg = small_config(path);
    const std::string run1 = results_jsonl(run_benchmark(cfg));
    const std::string run2 = results_jsonl(run_benchmark(cfg));
    CHECK(run1 == run2);
    CHECK(run1.find("\"failed\":true") == std::string::npos);
}

TEST_CASE("baseline rows are reproducible and zero-deficit folds match baseline") {
    // balanced data: every train fold has zero deficit, so every oversampler
    // degenerates to the baseline and scores identically
    const auto path = write_tmp("hb_bal.csv", blob_csv(30, 30, 5));
    auto cfg = small_config(path);
    const auto rt = run_benchmark(cfg);
    REQUIRE(rt.rows.size() == 3);
    for (const auto& row : rt.rows) {
        CHECK_FALSE(row.failed);
        CHECK(row.fold_f1 == rt.rows[0].fold_f1);
        CHECK(row.fold_kappa == rt.rows[0].fold_kappa);
    }
}

TEST_CASE("synthetic points never touch test-fold information") {
    const auto path = write_tmp("hb_sent.csv", blob_csv(12, 48, 7, true));
    auto cfg = small_config(path);
    const Dataset d = load_csv(path, "label");
    REQUIRE(d.features(0, 2) == 999.0);

    std::size_t checked = 0;
    run_benchmark(cfg, [&](const FoldRecord& rec) {
        const bool sentinel_in_test =
            std::find(rec.test_indices.begin(), rec.test_indices.end(), 0u) !=
            rec.test_indices.end();
        if (!sentinel_in_test || rec.batch->points.rows == 0) return;
        // map synthetic points back to data scale and look for the spike
        const Matrix raw = invert_normalizer(rec.normalizer, rec.batch->points);
        for (std::size_t i = 0; i < raw.rows; ++i)
            for (std::size_t j = 0; j < raw.cols; ++j)
                CHECK(std::fabs(raw(i, j) - 999.0) > 1.0);
        ++checked;
    });
    CHECK(checked > 0);  // the sentinel row landed in some test fold
}

TEST_CASE("oversampled training folds reach class balance") {
    const auto path = write_tmp("hb_bal2.csv", blob_csv(12, 48, 9));
    auto cfg = small_config(path);
    const Dataset d = load_csv(path, "label");
    run_benchmark(cfg, [&](const FoldRecord& rec) {
        if (rec.oversampler == "baseline") {
            CHECK(rec.batch->points.rows == 0);
            return;
        }
        std::size_t min_n = 0, maj_n = 0;
        for (const auto i : rec.train_indices) (d.labels[i] == "pos" ? min_n : maj_n)++;
        const std::size_t total = min_n + rec.batch->points.rows;
        CHECK(total >= maj_n);
        CHECK(total <= maj_n + 5);  // ceiling overshoot bounded by cluster count
    });
}

TEST_CASE("row failures are recorded without aborting the run") {
    const auto path = write_tmp("hb_fail.csv", blob_csv(12, 48, 11));
    auto cfg = small_config(path);
    cfg.classifiers[0].k = 1000;  // k > n_train for every fold
    const auto rt = run_benchmark(cfg);
    REQUIRE(rt.rows.size() == 3);
    for (const auto& row : rt.rows) {
        CHECK(row.failed);
        CHECK_FALSE(row.error.empty());
        CHECK(row.mean_f1 == 0.0);
        CHECK(row.fold_f1.empty());
    }
}

TEST_CASE("results jsonl round-trips through the parser") {
    const auto path = write_tmp("hb_round.csv", blob_csv(12, 48, 13));
    const auto rt = run_benchmark(small_config(path));
    const std::string text = results_jsonl(rt);
    const auto back = parse_results_jsonl(text);
    REQUIRE(back.rows.size() == rt.rows.size());
    for (std::size_t i = 0; i < rt.rows.size(); ++i) {
        CHECK(back.rows[i].dataset == rt.rows[i].dataset);
        CHECK(back.rows[i].oversampler == rt.rows[i].oversampler);
        CHECK(back.rows[i].scheme_used == rt.rows[i].scheme_used);
        CHECK(back.rows[i].fold_f1.size() == rt.rows[i].fold_f1.size());
        CHECK(back.rows[i].seed == rt.rows[i].seed);
    }
    // 6-significant-digit serialization
    CHECK(std::fabs(back.rows[0].mean_f1 - rt.rows[0].mean_f1) < 1e-6);
}

TEST_CASE("pairwise counts match a hand enumeration") {
    ResultsTable rt;
    const char* datasets[] = {"d1", "d2", "d3"};
    const char* methods[] = {"A", "B", "C"};
    // mean F1 values rounded to 3 decimals before comparison
    const double f1[3][3] = {
        {0.5, 0.4, 0.4},   // d1: A > B = C
        {0.2, 0.3, 0.25},  // d2: B > C > A
        {0.7, 0.7, 0.1},   // d3: A = B > C
    };
    for (int d = 0; d < 3; ++d)
        for (int m = 0; m < 3; ++m) {
            ResultRow row;
            row.dataset = datasets[d];
            row.oversampler = methods[m];
            row.classifier = "knn";
            row.mean_f1 = f1[d][m];
            rt.rows.push_back(row);
        }
    std::vector<std::string> order;
    const auto counts = pairwise_counts(rt, "knn", "f1", &order);
    CHECK(order == std::vector<std::string>{"A", "B", "C"});
    // hand count: entry (i,j) = #{d : f1[d][i] >= f1[d][j]}
    const std::vector<std::vector<std::size_t>> expect = {
        {3, 2, 2},
        {2, 3, 3},
        {1, 1, 3},
    };
    CHECK(counts == expect);

    rt.rows.pop_back();  // drop (d3, C) -> incomplete
    CHECK_THROWS_AS(pairwise_counts(rt, "knn", "f1", nullptr), DataError);
    CHECK_THROWS_AS(pairwise_counts(rt, "nope", "f1", nullptr), DataError);
}

TEST_CASE("results table csv mirrors the row/column layout") {
    ResultsTable rt;
    ResultRow r1;
    r1.dataset = "d1";
    r1.oversampler = "A";
    r1.classifier = "knn";
    r1.mean_f1 = 0.51234;
    r1.mean_kappa = 0.41234;
    ResultRow r2 = r1;
    r2.oversampler = "B";
    r2.failed = true;
    rt.rows = {r1, r2};
    const std::string csv = results_table_csv(rt, "knn");
    CHECK(csv == "dataset,A,B\nd1,0.512/0.412,NA\n");
}

TEST_CASE("cube built from results feeds iscore") {
    const auto path = write_tmp("hb_cube.csv", blob_csv(12, 48, 17));
    const auto rt = run_benchmark(small_config(path));
    const auto cube = cube_from_results(rt, "f1");
    CHECK(cube.classifiers == std::vector<std::string>{"knn"});
    CHECK(cube.datasets == std::vector<std::string>{"blob"});
    CHECK(cube.oversamplers.size() == 3);
    const double s = iscore(cube, "smote");
    CHECK(s >= 0.0);
    CHECK(s <= 1.0);
}

TEST_CASE("external predictions round-trip the in-process classifier") {
    const auto path = write_tmp("hb_ext.csv", blob_csv(12, 48, 19));
    auto cfg = small_config(path);

    // capture in-process knn predictions per (repeat, fold, sample)
    std::string pred_csv = "dataset,repeat,fold,sample_index,predicted_label\n";
    const auto rt1 = run_benchmark(cfg, [&](const FoldRecord& rec) {
        if (rec.oversampler != "smote") return;
        for (std::size_t i = 0; i < rec.test_indices.size(); ++i)
            pred_csv += rec.dataset + "," + std::to_string(rec.repeat) + "," +
                        std::to_string(rec.fold) + "," + std::to_string(rec.test_indices[i]) +
                        "," + (*rec.predictions)[i] + "\n";
    });
    const auto pred_path = write_tmp("hb_ext_pred.csv", pred_csv);

    ClassifierSpec ext;
    ext.name = "gb";
    ext.kind = "external";
    ext.path = pred_path;
    ext.oversampler = "smote";
    cfg.classifiers.push_back(ext);
    const auto rt2 = run_benchmark(cfg);

    const ResultRow* in_process = nullptr;
    const ResultRow* external = nullptr;
    for (const auto& row : rt2.rows) {
        if (row.classifier == "knn" && row.oversampler == "smote") in_process = &row;
        if (row.classifier == "gb") external = &row;
    }
    REQUIRE(in_process != nullptr);
    REQUIRE(external != nullptr);
    CHECK_FALSE(external->failed);
    CHECK(external->oversampler == "smote");
    CHECK(std::fabs(external->mean_f1 - in_process->mean_f1) <= 1e-12);
    CHECK(std::fabs(external->mean_kappa - in_process->mean_kappa) <= 1e-12);

    // dropping one fold's rows must fail the slot and name the gap
    std::string truncated = "dataset,repeat,fold,sample_index,predicted_label\n";
    std::istringstream in(pred_csv);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line))
        if (line.find("blob,1,1,") != 0) truncated += line + "\n";
    const auto trunc_path = write_tmp("hb_ext_trunc.csv", truncated);
    cfg.classifiers[1].path = trunc_path;
    const auto rt3 = run_benchmark(cfg);
    for (const auto& row : rt3.rows)
        if (row.classifier == "gb") {
            CHECK(row.failed);
            CHECK(row.error.find("(1,1)") != std::string::npos);
        }
}

TEST_CASE("benchmark config parses datasets, methods and knobs") {
    const auto csv = write_tmp("hb_cfg_data.csv", blob_csv(12, 48, 23));
    const std::string json = std::string(R"({
      "datasets": [{"name": "blob", "path": ")") + csv + R"("}],
      "oversamplers": [
        {"name": "baseline"},
        {"name": "prowras", "scheme": "auto", "theta": 2.0},
        {"name": "smote", "id": "smote-k3", "k": 3}
      ],
      "classifiers": [{"name": "knn", "k": 7}, {"name": "logreg", "l2": 0.5}],
      "repeats": 3, "folds": 4, "seed": 99, "sigma": 0.002
    })";
    const auto cfg = load_benchmark_config(write_tmp("hb_cfg.json", json));
    CHECK(cfg.datasets.size() == 1);
    CHECK(cfg.datasets[0].label_column == "label");
    REQUIRE(cfg.oversamplers.size() == 3);
    CHECK(cfg.oversamplers[0].method == "baseline");
    CHECK(cfg.oversamplers[1].scheme == "auto");
    CHECK(cfg.oversamplers[1].params.theta == 2.0);
    CHECK(cfg.oversamplers[2].id == "smote-k3");
    CHECK(cfg.oversamplers[2].knn_k == 3);
    REQUIRE(cfg.classifiers.size() == 2);
    CHECK(cfg.classifiers[0].k == 7);
    CHECK(cfg.classifiers[1].kind == "logreg");
    CHECK(cfg.classifiers[1].l2 == 0.5);
    CHECK(cfg.repeats == 3);
    CHECK(cfg.folds == 4);
    CHECK(cfg.seed == 99);
    CHECK(cfg.sigma == 0.002);

    CHECK_THROWS_AS(load_benchmark_config("/nonexistent.json"), DataError);
}

TEST_CASE("auto scheme is resolved once per dataset and recorded") {
    const auto path = write_tmp("hb_auto.csv", blob_csv(14, 56, 29));
    auto cfg = small_config(path);
    cfg.oversamplers[2].scheme = "auto";
    const auto rt = run_benchmark(cfg);
    for (const auto& row : rt.rows)
        if (row.oversampler == "prowras") {
            CHECK((row.scheme_used == "hgv" || row.scheme_used == "lgv" ||
                   row.scheme_used == "hlv" || row.scheme_used == "llv"));
        } else {
            CHECK(row.scheme_used.empty());
        }
}

TEST_CASE("fold dump enumerates every sample once per repeat") {
    const auto path = write_tmp("hb_dump.csv", blob_csv(10, 30, 31));
    const Dataset d = load_csv(path, "label");
    const auto plan = stratified_folds(d, 2, 2, 5);
    const std::string csv = fold_dump_csv("blob", plan);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "dataset,repeat,fold,sample_index");
    std::size_t rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 2 * 40);
}
