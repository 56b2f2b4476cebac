#pragma once

#include <cstddef>
#include <vector>

#include "prowras/rng.hpp"
#include "prowras/types.hpp"

namespace prowras {

// Gaussian shadowsampling parameters. sigma holds one std per feature
// (a scalar is broadcast via make_shadow_config).
struct ShadowConfig {
    std::size_t shadow = 100;
    std::vector<double> sigma;
};

ShadowConfig make_shadow_config(std::size_t shadow, double sigma, std::size_t n_feats);

// |parents| * shadow rows; row (p,s) = parent p plus iid N(0, sigma_j) noise.
Matrix make_shadows(const Matrix& parents, const ShadowConfig& cfg, Rng& rng);

// One synthetic point = sum of w_i * points[row_i] for k distinct rows chosen
// uniformly without replacement and flat-Dirichlet weights.
std::vector<double> random_convex_combination(const Matrix& points, std::size_t k, Rng& rng);

// Where a generated point came from; enough to rebuild it exactly.
struct SampleProvenance {
    std::size_t cluster_level = 0;  // 1-based, filled by the orchestrator
    std::size_t neighborhood = 0;   // index into the cluster's neighborhood list
    bool shadow_pool = false;       // true -> combined shadowsamples, false -> raw points
    std::size_t k = 0;
    std::vector<std::size_t> pool_rows;  // row ids within the (possibly virtual) pool
    std::vector<double> weights;
    Matrix combined_points;  // the k pool rows that were combined
};

// One k-way combination over the virtual pool of shadow * |parents|
// shadowsamples. The pool is sampled lazily: only the k selected rows are
// materialized, which is distribution-identical to drawing the full pool.
std::vector<double> shadow_pool_combination(const Matrix& parents, const ShadowConfig& cfg,
                                            std::size_t k, Rng& rng,
                                            SampleProvenance* rec = nullptr);

// Cluster-wise generation: neighborhood list from `neighborhoods(cluster,
// neb_conv)`, k = 2 when num_convcomb < num_feats (raw-point pool), otherwise
// k = num_convcomb over a pool of shadow * |neighborhood| shadowsamples.
Matrix generate_points(const Matrix& cluster, std::size_t num_samples, std::size_t num_convcomb,
                       std::size_t neb_conv, const ShadowConfig& cfg, std::size_t num_feats,
                       Rng& rng, std::vector<SampleProvenance>* provenance = nullptr);

}  // namespace prowras
