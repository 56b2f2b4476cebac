#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "prowras/dataset.hpp"
#include "prowras/types.hpp"

namespace prowras {

// Ordered minority clusters; level 1 sits closest to the majority class.
// weights[i] = exp(-theta * i) / sum, strictly decreasing across levels.
struct WeightedPartition {
    std::vector<std::vector<std::size_t>> clusters;  // dataset row indices, each sorted
    std::vector<double> raw_weights;
    std::vector<double> weights;  // normalized
    double theta = 1.0;
    std::size_t max_levels = 1;
};

// Proximity-weighted minority partitioning: levels 1..L-1 each take the union,
// over every majority point, of its min(|remaining|, n_neighbours_max) nearest
// remaining minority points; leftovers form the final cluster.
WeightedPartition partition_minority(const Dataset& d, std::size_t max_levels,
                                     std::size_t n_neighbours_max, double theta);

// JSON document used by the `partition` CLI subcommand:
// {levels: [{indices, raw_weight, normalized_weight}], theta, max_levels}
std::string partition_json(const WeightedPartition& p);

}  // namespace prowras
