#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prowras/types.hpp"

namespace prowras {

// Immutable-by-convention binary-labeled dataset. Labels stay as strings;
// minority_label marks the positive class for every metric downstream.
struct Dataset {
    Matrix features;
    std::vector<std::string> labels;
    std::string minority_label;
    std::vector<std::string> feature_names;  // header order, label column removed
    std::string label_name = "label";
    std::size_t label_col_pos = 0;  // original column position, for CSV round-trips

    std::size_t n() const { return features.rows; }
    std::size_t n_feats() const { return features.cols; }
    std::string majority_label() const;
    std::vector<std::size_t> minority_indices() const;
    std::vector<std::size_t> majority_indices() const;
    std::size_t minority_count() const { return minority_indices().size(); }
    Dataset subset(const std::vector<std::size_t>& rows) const;
};

// label_column: header name, or 0-based column index if no header matches.
Dataset load_csv(const std::string& path, const std::string& label_column,
                 const std::optional<std::string>& minority_label = std::nullopt);
Dataset dataset_from_parts(Matrix features, std::vector<std::string> labels,
                           const std::optional<std::string>& minority_label = std::nullopt);
void write_csv(const std::string& path, const Dataset& d);
std::string csv_string(const Dataset& d);

struct Normalizer {
    std::vector<double> mins;
    std::vector<double> maxs;
};

Normalizer fit_normalizer(const Dataset& train);
Normalizer fit_normalizer(const Matrix& train);
// (x - min) / (max - min), constant features -> 0, then clipped to [0, 1]
Matrix apply_normalizer(const Normalizer& norm, const Matrix& m);
Dataset apply_normalizer(const Normalizer& norm, const Dataset& d);
// inverse map (no clipping); used to take synthetic points back to data scale
Matrix invert_normalizer(const Normalizer& norm, const Matrix& m);

struct FoldPlan {
    std::size_t repeats = 0;
    std::size_t folds = 0;
    // assignments[repeat][sample index] = fold id
    std::vector<std::vector<std::size_t>> assignments;
    std::uint64_t seed = 0;

    std::vector<std::size_t> test_indices(std::size_t repeat, std::size_t fold) const;
    std::vector<std::size_t> train_indices(std::size_t repeat, std::size_t fold) const;
};

FoldPlan stratified_folds(const Dataset& d, std::size_t repeats, std::size_t folds,
                          std::uint64_t seed);

// Disjoint stratified subsets (defaults 50% / 20%) used for scheme selection.
std::pair<Dataset, Dataset> selection_split(const Dataset& d, double train_frac,
                                            double test_frac, std::uint64_t seed);

struct ManifestEntry {
    std::string name;
    std::string path;
    std::string label_column;
    std::string minority_label;  // empty -> rarer class
};

std::vector<ManifestEntry> load_manifest(const std::string& path);

}  // namespace prowras
