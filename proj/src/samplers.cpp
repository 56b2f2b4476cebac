#include "prowras/samplers.hpp"

#include <algorithm>
#include <cmath>

#include "prowras/classifiers.hpp"
#include "prowras/metrics.hpp"
#include "prowras/neighbors.hpp"

namespace prowras {

const char* scheme_name(SchemePreset s) {
    switch (s) {
        case SchemePreset::HGV: return "hgv";
        case SchemePreset::LGV: return "lgv";
        case SchemePreset::HLV: return "hlv";
        case SchemePreset::LLV: return "llv";
    }
    return "?";
}

std::optional<SchemePreset> scheme_from_name(const std::string& name) {
    if (name == "hgv") return SchemePreset::HGV;
    if (name == "lgv") return SchemePreset::LGV;
    if (name == "hlv") return SchemePreset::HLV;
    if (name == "llv") return SchemePreset::LLV;
    return std::nullopt;
}

std::pair<std::size_t, std::size_t> scheme_params(SchemePreset s, std::size_t n_feats,
                                                  std::size_t minority_size) {
    const std::size_t global_neb = std::max<std::size_t>(1000, minority_size);
    switch (s) {
        case SchemePreset::HGV: return {2, global_neb};
        case SchemePreset::LGV: return {n_feats, global_neb};
        case SchemePreset::HLV: return {2, 5};
        case SchemePreset::LLV: return {n_feats, 5};
    }
    return {2, global_neb};
}

namespace {

std::size_t ceil_count(double x) { return static_cast<std::size_t>(std::ceil(x)); }

std::size_t default_n(const Dataset& d, std::size_t requested) {
    if (requested != 0) return requested;
    const std::size_t m = d.minority_count();
    return d.n() - 2 * m;  // |C_maj| - |C_min|
}

SyntheticBatch empty_batch(const Dataset& d, std::uint64_t seed) {
    SyntheticBatch b;
    b.points = Matrix(0, d.n_feats());
    b.label = d.minority_label;
    b.seed = seed;
    return b;
}

}  // namespace

SyntheticBatch prowras(const Dataset& d, const ProwrasParams& p, std::uint64_t seed,
                       bool record_provenance) {
    if (p.max_conv < 1) throw DataError("max_conv must be >= 1");
    if (p.neb_conv < 1) throw DataError("neb_conv must be >= 1");
    const std::size_t total = default_n(d, p.num_samples_to_generate);
    const auto part = partition_minority(d, p.max_levels, p.n_neighbours_max, p.theta);
    const double w_max = *std::max_element(part.weights.begin(), part.weights.end());
    const auto cfg = make_shadow_config(p.shadow, p.sigma, d.n_feats());

    SyntheticBatch batch = empty_batch(d, seed);
    batch.scheme = "custom";
    for (std::size_t i = 0; i < part.clusters.size(); ++i) {
        const double w = part.weights[i];
        const std::size_t num_samples = ceil_count(static_cast<double>(total) * w);
        const std::size_t num_convcomb =
            ceil_count(static_cast<double>(p.max_conv) * w / w_max);
        if (num_samples == 0) continue;
        Rng rng(SeedMixer(seed).mix("prowras-cluster").mix(std::uint64_t{i}).value());
        std::vector<SampleProvenance> prov;
        const Matrix cluster = d.features.take_rows(part.clusters[i]);
        const Matrix pts = generate_points(cluster, num_samples, num_convcomb, p.neb_conv, cfg,
                                           d.n_feats(), rng, record_provenance ? &prov : nullptr);
        for (std::size_t r = 0; r < pts.rows; ++r) {
            batch.points.append_row(pts.row(r));
            batch.cluster_level.push_back(i + 1);
        }
        if (record_provenance)
            for (auto& rec : prov) {
                rec.cluster_level = i + 1;
                batch.provenance.push_back(std::move(rec));
            }
    }
    return batch;
}

SyntheticBatch prowras_scheme(const Dataset& d, SchemePreset s, ProwrasParams p,
                              std::uint64_t seed, bool record_provenance) {
    const auto [max_conv, neb_conv] = scheme_params(s, d.n_feats(), d.minority_count());
    p.max_conv = max_conv;
    p.neb_conv = neb_conv;
    SyntheticBatch b = prowras(d, p, seed, record_provenance);
    b.scheme = scheme_name(s);
    return b;
}

SchemePreset select_scheme(const Dataset& d, ClassifierKind clf, std::uint64_t seed,
                           const ProwrasParams& base) {
    auto [train, test] = selection_split(d, 0.5, 0.2, SeedMixer(seed).mix("scheme-selection").value());
    const Normalizer norm = fit_normalizer(train);
    const Dataset train_n = apply_normalizer(norm, train);
    const Dataset test_n = apply_normalizer(norm, test);
    const std::size_t deficit = train_n.n() - 2 * train_n.minority_count();

    constexpr SchemePreset presets[] = {SchemePreset::HGV, SchemePreset::LGV, SchemePreset::HLV,
                                        SchemePreset::LLV};
    SchemePreset best = SchemePreset::HGV;
    double best_f1 = -1.0;
    for (SchemePreset s : presets) {
        ProwrasParams p = base;
        p.num_samples_to_generate = deficit;
        const std::uint64_t run_seed =
            SeedMixer(seed).mix("scheme-eval").mix(scheme_name(s)).value();
        double f1 = 0.0;
        try {
            const SyntheticBatch batch =
                deficit > 0 ? prowras_scheme(train_n, s, p, run_seed) : empty_batch(train_n, run_seed);
            Matrix aug_x = train_n.features;
            std::vector<std::string> aug_y = train_n.labels;
            for (std::size_t r = 0; r < batch.points.rows; ++r) {
                aug_x.append_row(batch.points.row(r));
                aug_y.push_back(batch.label);
            }
            std::vector<std::string> preds;
            if (clf == ClassifierKind::Knn) {
                const std::size_t k = std::min<std::size_t>(5, aug_x.rows);
                preds = knn_predict(knn_fit(std::move(aug_x), std::move(aug_y), d.minority_label, k),
                                    test_n.features);
            } else {
                preds = logreg_predict(logreg_fit(aug_x, aug_y, d.minority_label), test_n.features);
            }
            f1 = f1_minority(confusion(test_n.labels, preds, d.minority_label));
        } catch (const DataError&) {
            f1 = -0.5;  // a scheme that cannot run never wins
        }
        if (f1 > best_f1) {
            best_f1 = f1;
            best = s;
        }
    }
    return best;
}

SyntheticBatch smote(const Dataset& d, std::size_t n, std::size_t k, std::uint64_t seed) {
    const auto min_idx = d.minority_indices();
    const std::size_t m = min_idx.size();
    if (m < k + 1)
        throw DataError("smote: minority class (" + std::to_string(m) +
                        ") must exceed k=" + std::to_string(k));
    const Matrix mx = d.features.take_rows(min_idx);
    NeighborIndex ix{mx};
    std::vector<std::vector<std::size_t>> nbrs(m);
    for (std::size_t i = 0; i < m; ++i) nbrs[i] = knn(ix, mx.row(i), k, i);

    SyntheticBatch batch = empty_batch(d, seed);
    batch.points = Matrix(n, d.n_feats());
    Rng rng(SeedMixer(seed).mix("smote").value());
    for (std::size_t s = 0; s < n; ++s) {
        const std::size_t a = rng.uniform_index(m);
        const std::size_t b = nbrs[a][rng.uniform_index(k)];
        const double u = rng.uniform01();
        for (std::size_t j = 0; j < mx.cols; ++j)
            batch.points(s, j) = mx(a, j) + u * (mx(b, j) - mx(a, j));
    }
    return batch;
}

SyntheticBatch prowsyn(const Dataset& d, std::size_t n, std::size_t max_levels,
                       std::size_t n_neighbours_max, double theta, std::uint64_t seed) {
    const auto part = partition_minority(d, max_levels, n_neighbours_max, theta);
    SyntheticBatch batch = empty_batch(d, seed);
    for (std::size_t i = 0; i < part.clusters.size(); ++i) {
        const std::size_t count = ceil_count(static_cast<double>(n) * part.weights[i]);
        if (count == 0) continue;
        Rng rng(SeedMixer(seed).mix("prowsyn-cluster").mix(std::uint64_t{i}).value());
        const Matrix cluster = d.features.take_rows(part.clusters[i]);
        for (std::size_t s = 0; s < count; ++s) {
            std::vector<double> row(cluster.cols);
            if (cluster.rows == 1) {
                for (std::size_t j = 0; j < cluster.cols; ++j) row[j] = cluster(0, j);
            } else {
                const auto pick = rng.sample_without_replacement(cluster.rows, 2);
                const double u = rng.uniform01();
                for (std::size_t j = 0; j < cluster.cols; ++j)
                    row[j] = cluster(pick[0], j) + u * (cluster(pick[1], j) - cluster(pick[0], j));
            }
            batch.points.append_row(row);
            batch.cluster_level.push_back(i + 1);
        }
    }
    return batch;
}

std::size_t loras_default_n_aff(std::size_t n_feats) {
    return std::max<std::size_t>(2, std::min<std::size_t>(30, n_feats));
}

SyntheticBatch loras(const Dataset& d, std::size_t n, std::size_t k, std::size_t shadow,
                     double sigma, std::size_t n_aff, std::uint64_t seed) {
    const auto min_idx = d.minority_indices();
    const std::size_t m = min_idx.size();
    if (m < k + 1)
        throw DataError("loras: minority class (" + std::to_string(m) +
                        ") must exceed k=" + std::to_string(k));
    if (n_aff < 2 || n_aff > shadow * (k + 1))
        throw DataError("loras: n_aff=" + std::to_string(n_aff) + " outside [2, " +
                        std::to_string(shadow * (k + 1)) + "]");
    const Matrix mx = d.features.take_rows(min_idx);
    NeighborIndex ix{mx};
    const auto cfg = make_shadow_config(shadow, sigma, d.n_feats());

    SyntheticBatch batch = empty_batch(d, seed);
    batch.points = Matrix(n, d.n_feats());
    Rng rng(SeedMixer(seed).mix("loras").value());
    for (std::size_t s = 0; s < n; ++s) {
        const std::size_t anchor = s % m;  // even spread over minority anchors
        std::vector<std::size_t> nb{anchor};
        const auto near = knn(ix, mx.row(anchor), k, anchor);
        nb.insert(nb.end(), near.begin(), near.end());
        const auto pt = shadow_pool_combination(mx.take_rows(nb), cfg, n_aff, rng);
        for (std::size_t j = 0; j < mx.cols; ++j) batch.points(s, j) = pt[j];
    }
    return batch;
}

SyntheticBatch pf_smote_star(const Dataset& d, std::size_t n, std::uint64_t seed) {
    const auto min_idx = d.minority_indices();
    const std::size_t m = min_idx.size();
    if (m < 1) throw DataError("pf_smote_star: empty minority class");
    const Matrix mx = d.features.take_rows(min_idx);
    std::vector<double> mean(mx.cols, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < mx.cols; ++j) mean[j] += mx(i, j);
    for (auto& v : mean) v /= static_cast<double>(m);

    SyntheticBatch batch = empty_batch(d, seed);
    batch.points = Matrix(n, d.n_feats());
    Rng rng(SeedMixer(seed).mix("pfsmote").value());
    for (std::size_t s = 0; s < n; ++s) {
        const std::size_t i = rng.uniform_index(m);
        const double u = rng.uniform01();
        for (std::size_t j = 0; j < mx.cols; ++j)
            batch.points(s, j) = mean[j] + u * (mx(i, j) - mean[j]);
    }
    return batch;
}

}  // namespace prowras
