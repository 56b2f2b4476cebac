#include "prowras/synth.hpp"

#include <string>

#include "prowras/neighbors.hpp"

namespace prowras {

ShadowConfig make_shadow_config(std::size_t shadow, double sigma, std::size_t n_feats) {
    if (shadow < 1) throw DataError("shadow must be >= 1");
    if (sigma < 0.0) throw DataError("sigma must be >= 0");
    return ShadowConfig{shadow, std::vector<double>(n_feats, sigma)};
}

Matrix make_shadows(const Matrix& parents, const ShadowConfig& cfg, Rng& rng) {
    if (parents.rows == 0) throw DataError("make_shadows: no parent points");
    if (cfg.sigma.size() < parents.cols) throw DataError("make_shadows: sigma size mismatch");
    Matrix out(parents.rows * cfg.shadow, parents.cols);
    std::size_t r = 0;
    for (std::size_t p = 0; p < parents.rows; ++p)
        for (std::size_t s = 0; s < cfg.shadow; ++s, ++r)
            for (std::size_t j = 0; j < parents.cols; ++j)
                out(r, j) = parents(p, j) + rng.normal() * cfg.sigma[j];
    return out;
}

std::vector<double> random_convex_combination(const Matrix& points, std::size_t k, Rng& rng) {
    if (k < 1 || k > points.rows)
        throw DataError("convex combination arity k=" + std::to_string(k) +
                        " outside [1, " + std::to_string(points.rows) + "]");
    const auto rows = rng.sample_without_replacement(points.rows, k);
    const auto w = rng.simplex_weights(k);
    std::vector<double> out(points.cols, 0.0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < points.cols; ++j) out[j] += w[i] * points(rows[i], j);
    return out;
}

std::vector<double> shadow_pool_combination(const Matrix& parents, const ShadowConfig& cfg,
                                            std::size_t k, Rng& rng, SampleProvenance* rec) {
    const std::size_t pool_size = parents.rows * cfg.shadow;
    if (k < 1 || k > pool_size)
        throw DataError("combination arity k=" + std::to_string(k) + " outside [1, " +
                        std::to_string(pool_size) + "]");
    if (cfg.sigma.size() < parents.cols) throw DataError("sigma size mismatch");

    const auto pool_rows = rng.sample_without_replacement(pool_size, k);
    Matrix chosen(k, parents.cols);
    for (std::size_t i = 0; i < k; ++i) {
        const double* src = parents.row(pool_rows[i] / cfg.shadow);
        for (std::size_t j = 0; j < parents.cols; ++j)
            chosen(i, j) = src[j] + rng.normal() * cfg.sigma[j];
    }
    const auto w = rng.simplex_weights(k);
    std::vector<double> out(parents.cols, 0.0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < parents.cols; ++j) out[j] += w[i] * chosen(i, j);
    if (rec) {
        rec->shadow_pool = true;
        rec->k = k;
        rec->pool_rows = pool_rows;
        rec->weights = w;
        rec->combined_points = std::move(chosen);
    }
    return out;
}

Matrix generate_points(const Matrix& cluster, std::size_t num_samples, std::size_t num_convcomb,
                       std::size_t neb_conv, const ShadowConfig& cfg, std::size_t num_feats,
                       Rng& rng, std::vector<SampleProvenance>* provenance) {
    if (cluster.rows == 0) throw DataError("generate_points: empty cluster");
    if (cluster.cols != num_feats) throw DataError("generate_points: feature count mismatch");
    if (num_convcomb < 1) throw DataError("generate_points: num_convcomb must be >= 1");

    const auto neb_list = neighborhoods(cluster, neb_conv);
    const bool raw_pool = num_convcomb < num_feats;
    const std::size_t k = raw_pool ? 2 : num_convcomb;
    if (!raw_pool && cfg.sigma.size() < num_feats)
        throw DataError("generate_points: sigma size mismatch");

    Matrix out(num_samples, num_feats);
    for (std::size_t s = 0; s < num_samples; ++s) {
        const std::size_t nbi = rng.uniform_index(neb_list.size());
        const auto& nb = neb_list[nbi];
        SampleProvenance rec;
        if (raw_pool) {
            if (k > nb.size())
                throw DataError("generate_points: combination arity " + std::to_string(k) +
                                " exceeds raw pool of " + std::to_string(nb.size()) +
                                " (cluster size " + std::to_string(cluster.rows) + ")");
            const auto pool_rows = rng.sample_without_replacement(nb.size(), k);
            Matrix chosen(k, num_feats);
            for (std::size_t i = 0; i < k; ++i) {
                const double* src = cluster.row(nb[pool_rows[i]]);
                for (std::size_t j = 0; j < num_feats; ++j) chosen(i, j) = src[j];
            }
            const auto w = rng.simplex_weights(k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < num_feats; ++j) out(s, j) += w[i] * chosen(i, j);
            rec.shadow_pool = false;
            rec.k = k;
            rec.pool_rows = pool_rows;
            rec.weights = w;
            rec.combined_points = std::move(chosen);
        } else {
            const auto pt = shadow_pool_combination(cluster.take_rows(nb), cfg, k, rng,
                                                    provenance ? &rec : nullptr);
            for (std::size_t j = 0; j < num_feats; ++j) out(s, j) = pt[j];
        }
        if (provenance) {
            rec.neighborhood = nbi;
            provenance->push_back(std::move(rec));
        }
    }
    return out;
}

}  // namespace prowras
