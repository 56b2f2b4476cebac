#pragma once

#include <cstddef>
#include <vector>

#include "prowras/types.hpp"

namespace prowras {

// Brute-force exact kNN over a fixed point set (datasets here are small).
struct NeighborIndex {
    Matrix points;
};

inline constexpr std::size_t kNoExclude = static_cast<std::size_t>(-1);

double sq_distance(const double* a, const double* b, std::size_t dim);

// k indices sorted by nondecreasing Euclidean distance, ties by smaller index.
// exclude: index of the query itself when querying an indexed point.
std::vector<std::size_t> knn(const NeighborIndex& index, const double* query, std::size_t k,
                             std::size_t exclude = kNoExclude);

// All neb_conv-sized neighborhoods of a cluster: one per anchor point (anchor
// first, then its size-1 nearest cluster-mates). A cluster no bigger than
// `size` yields the single whole-cluster neighborhood.
std::vector<std::vector<std::size_t>> neighborhoods(const Matrix& cluster, std::size_t size);

}  // namespace prowras
