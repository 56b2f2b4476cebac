#include "prowras/partition.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "prowras/format.hpp"
#include "prowras/neighbors.hpp"

namespace prowras {

WeightedPartition partition_minority(const Dataset& d, std::size_t max_levels,
                                     std::size_t n_neighbours_max, double theta) {
    if (max_levels < 1) throw DataError("max_levels must be >= 1");
    if (n_neighbours_max < 1) throw DataError("n_neighbours_max must be >= 1");
    if (!(theta > 0.0)) throw DataError("theta must be > 0");
    std::vector<std::size_t> remaining = d.minority_indices();
    const auto maj = d.majority_indices();
    if (remaining.empty() || maj.empty()) throw DataError("both classes must be non-empty");

    WeightedPartition part;
    part.theta = theta;
    part.max_levels = max_levels;

    // levels 1..L-1; leftovers become level L below
    for (std::size_t level = 1; level < max_levels; ++level) {
        if (remaining.empty()) break;
        const std::size_t k = std::min(remaining.size(), n_neighbours_max);
        // remaining stays sorted by global index, so kNN index ties resolve
        // to the smaller global index
        NeighborIndex ix{d.features.take_rows(remaining)};
        std::set<std::size_t> claimed;  // local positions into `remaining`
        for (std::size_t b : maj) {
            for (std::size_t loc : knn(ix, d.features.row(b), k)) claimed.insert(loc);
        }
        std::vector<std::size_t> cluster;
        cluster.reserve(claimed.size());
        std::vector<std::size_t> rest;
        rest.reserve(remaining.size() - claimed.size());
        for (std::size_t loc = 0; loc < remaining.size(); ++loc) {
            if (claimed.count(loc))
                cluster.push_back(remaining[loc]);
            else
                rest.push_back(remaining[loc]);
        }
        part.clusters.push_back(std::move(cluster));
        remaining = std::move(rest);
    }
    if (!remaining.empty()) part.clusters.push_back(std::move(remaining));

    double sum = 0.0;
    for (std::size_t i = 0; i < part.clusters.size(); ++i) {
        const double w = std::exp(-theta * static_cast<double>(i));
        part.raw_weights.push_back(w);
        sum += w;
    }
    for (double w : part.raw_weights) part.weights.push_back(w / sum);
    return part;
}

std::string partition_json(const WeightedPartition& p) {
    std::string out = "{\"levels\":[";
    for (std::size_t i = 0; i < p.clusters.size(); ++i) {
        if (i) out += ',';
        out += "{\"indices\":[";
        for (std::size_t j = 0; j < p.clusters[i].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(p.clusters[i][j]);
        }
        out += "],\"raw_weight\":" + fmt_sig(p.raw_weights[i]) +
               ",\"normalized_weight\":" + fmt_sig(p.weights[i]) + "}";
    }
    out += "],\"theta\":" + fmt_sig(p.theta) +
           ",\"max_levels\":" + std::to_string(p.max_levels) + "}";
    return out;
}

}  // namespace prowras
