#include "prowras/neighbors.hpp"

#include <algorithm>
#include <numeric>

namespace prowras {

double sq_distance(const double* a, const double* b, std::size_t dim) {
    double s = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
        const double d = a[j] - b[j];
        s += d * d;
    }
    return s;
}

std::vector<std::size_t> knn(const NeighborIndex& index, const double* query, std::size_t k,
                             std::size_t exclude) {
    const std::size_t m = index.points.rows;
    const std::size_t avail = m - (exclude < m ? 1 : 0);
    if (k > avail)
        throw DataError("knn: k=" + std::to_string(k) + " exceeds available points (" +
                        std::to_string(avail) + ")");
    std::vector<std::pair<double, std::size_t>> dist;
    dist.reserve(avail);
    for (std::size_t i = 0; i < m; ++i) {
        if (i == exclude) continue;
        dist.emplace_back(sq_distance(index.points.row(i), query, index.points.cols), i);
    }
    std::sort(dist.begin(), dist.end());
    std::vector<std::size_t> out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = dist[i].second;
    return out;
}

std::vector<std::vector<std::size_t>> neighborhoods(const Matrix& cluster, std::size_t size) {
    std::vector<std::vector<std::size_t>> out;
    if (cluster.rows <= size) {
        std::vector<std::size_t> all(cluster.rows);
        std::iota(all.begin(), all.end(), std::size_t{0});
        out.push_back(std::move(all));
        return out;
    }
    NeighborIndex ix{cluster};
    out.reserve(cluster.rows);
    for (std::size_t anchor = 0; anchor < cluster.rows; ++anchor) {
        std::vector<std::size_t> nb{anchor};
        auto near = knn(ix, cluster.row(anchor), size - 1, anchor);
        nb.insert(nb.end(), near.begin(), near.end());
        out.push_back(std::move(nb));
    }
    return out;
}

}  // namespace prowras
