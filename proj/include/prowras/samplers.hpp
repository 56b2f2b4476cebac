#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prowras/dataset.hpp"
#include "prowras/partition.hpp"
#include "prowras/synth.hpp"
#include "prowras/types.hpp"

namespace prowras {

struct ProwrasParams {
    std::size_t max_levels = 5;
    std::size_t n_neighbours_max = 5;
    // 0 -> default |C_maj| - |C_min|
    std::size_t num_samples_to_generate = 0;
    double theta = 1.0;
    std::size_t shadow = 100;
    double sigma = 0.001;
    std::size_t max_conv = 2;
    std::size_t neb_conv = 1000;
};

enum class SchemePreset { HGV, LGV, HLV, LLV };

const char* scheme_name(SchemePreset s);
std::optional<SchemePreset> scheme_from_name(const std::string& name);

// (max_conv, neb_conv) per preset:
// HGV (2, max(1000, |C_min|)), LGV (n_feats, max(1000, |C_min|)),
// HLV (2, 5), LLV (n_feats, 5)
std::pair<std::size_t, std::size_t> scheme_params(SchemePreset s, std::size_t n_feats,
                                                  std::size_t minority_size);

struct SyntheticBatch {
    Matrix points;
    std::string label;            // minority tag
    std::vector<std::size_t> cluster_level;  // 1-based level per point
    std::string scheme;           // preset name or "custom"
    std::uint64_t seed = 0;
    std::vector<SampleProvenance> provenance;  // filled only when requested
};

// Algorithm: partition the minority class, then per cluster generate
// ceil(N * w) samples with num_convcomb = ceil(max_conv * w / w_max).
SyntheticBatch prowras(const Dataset& d, const ProwrasParams& p, std::uint64_t seed,
                       bool record_provenance = false);
SyntheticBatch prowras_scheme(const Dataset& d, SchemePreset s, ProwrasParams p,
                              std::uint64_t seed, bool record_provenance = false);

enum class ClassifierKind { Knn, LogReg };

// Train/test on disjoint 50%/20% stratified subsets, pick the preset with the
// best minority F1; ties resolve in order HGV < LGV < HLV < LLV.
SchemePreset select_scheme(const Dataset& d, ClassifierKind clf, std::uint64_t seed,
                           const ProwrasParams& base = {});

SyntheticBatch smote(const Dataset& d, std::size_t n, std::size_t k, std::uint64_t seed);
SyntheticBatch prowsyn(const Dataset& d, std::size_t n, std::size_t max_levels,
                       std::size_t n_neighbours_max, double theta, std::uint64_t seed);
SyntheticBatch loras(const Dataset& d, std::size_t n, std::size_t k, std::size_t shadow,
                     double sigma, std::size_t n_aff, std::uint64_t seed);
std::size_t loras_default_n_aff(std::size_t n_feats);
SyntheticBatch pf_smote_star(const Dataset& d, std::size_t n, std::uint64_t seed);

}  // namespace prowras
