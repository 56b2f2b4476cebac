#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "prowras/neighbors.hpp"
#include "prowras/rng.hpp"

using namespace prowras;

namespace {

Matrix points_1d(const std::vector<double>& xs) {
    Matrix m(xs.size(), 1);
    for (std::size_t i = 0; i < xs.size(); ++i) m(i, 0) = xs[i];
    return m;
}

}  // namespace

TEST_CASE("knn on a 1-D line with self-exclusion") {
    const NeighborIndex index{points_1d({0.0, 1.0, 3.0})};
    const double q = 0.0;
    CHECK(knn(index, &q, 2, 0) == std::vector<std::size_t>{1, 2});
}

TEST_CASE("knn finds an exact match at distance zero") {
    const NeighborIndex index{points_1d({5.0, 2.0, 9.0})};
    const double q = 2.0;
    CHECK(knn(index, &q, 1) == std::vector<std::size_t>{1});
}

TEST_CASE("knn breaks distance ties by smaller index") {
    const NeighborIndex index{points_1d({1.0, -1.0, 1.0, -1.0})};
    const double q = 0.0;
    CHECK(knn(index, &q, 4) == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("knn rejects k larger than the candidate count") {
    const NeighborIndex index{points_1d({0.0, 1.0})};
    const double q = 0.0;
    CHECK_THROWS_AS(knn(index, &q, 3), DataError);
    CHECK_THROWS_AS(knn(index, &q, 2, 0), DataError);  // exclusion shrinks the pool
}

TEST_CASE("knn matches an independent full distance sort on random points") {
    Rng rng(1234);
    Matrix pts(20, 3);
    for (std::size_t i = 0; i < 20; ++i)
        for (std::size_t j = 0; j < 3; ++j) pts(i, j) = rng.uniform01();
    const NeighborIndex index{pts};

    for (int trial = 0; trial < 10; ++trial) {
        double q[3] = {rng.uniform01(), rng.uniform01(), rng.uniform01()};
        // oracle: sort every (distance, index) pair
        std::vector<std::pair<double, std::size_t>> all;
        for (std::size_t i = 0; i < 20; ++i) {
            double d2 = 0.0;
            for (std::size_t j = 0; j < 3; ++j) {
                const double diff = pts(i, j) - q[j];
                d2 += diff * diff;
            }
            all.emplace_back(d2, i);
        }
        std::sort(all.begin(), all.end());
        std::vector<std::size_t> expect;
        for (int i = 0; i < 5; ++i) expect.push_back(all[static_cast<std::size_t>(i)].second);
        CHECK(knn(index, q, 5) == expect);
    }
}

TEST_CASE("small clusters collapse into one whole-cluster neighborhood") {
    const auto nbs = neighborhoods(points_1d({0.0, 1.0, 2.0}), 5);
    REQUIRE(nbs.size() == 1);
    CHECK(nbs[0] == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("large clusters get one anchored neighborhood per point") {
    Matrix pts(10, 2);
    Rng rng(5);
    for (std::size_t i = 0; i < 10; ++i) {
        pts(i, 0) = rng.uniform01();
        pts(i, 1) = rng.uniform01();
    }
    const auto nbs = neighborhoods(pts, 5);
    REQUIRE(nbs.size() == 10);
    for (std::size_t a = 0; a < 10; ++a) {
        REQUIRE(nbs[a].size() == 5);
        CHECK(nbs[a][0] == a);  // anchor first
        const std::set<std::size_t> uniq(nbs[a].begin(), nbs[a].end());
        CHECK(uniq.size() == 5);  // no duplicates
    }
}

TEST_CASE("collinear neighborhood picks adjacent points") {
    const auto nbs =
        neighborhoods(points_1d({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}), 3);
    REQUIRE(nbs.size() == 10);
    CHECK(nbs[0] == std::vector<std::size_t>{0, 1, 2});
}
