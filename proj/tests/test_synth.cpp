#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "prowras/synth.hpp"

using namespace prowras;

namespace {

Matrix grid_points(std::size_t n, std::size_t dim, std::uint64_t seed) {
    Rng rng(seed);
    Matrix m(n, dim);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = rng.uniform01();
    return m;
}

double reconstruction_residual(const std::vector<double>& point, const SampleProvenance& rec) {
    double worst = 0.0;
    for (std::size_t j = 0; j < point.size(); ++j) {
        double v = 0.0;
        for (std::size_t i = 0; i < rec.weights.size(); ++i)
            v += rec.weights[i] * rec.combined_points(i, j);
        worst = std::max(worst, std::fabs(v - point[j]));
    }
    return worst;
}

}  // namespace

TEST_CASE("zero-noise shadows replicate their parents") {
    const Matrix parents = grid_points(3, 4, 1);
    Rng rng(2);
    const Matrix s = make_shadows(parents, make_shadow_config(5, 0.0, 4), rng);
    REQUIRE(s.rows == 15);
    for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 4; ++j) CHECK(s(p * 5 + i, j) == parents(p, j));
}

TEST_CASE("shadow noise has the configured spread") {
    Matrix parent(1, 2);  // at the origin
    Rng rng(3);
    const Matrix s = make_shadows(parent, make_shadow_config(100000, 0.001, 2), rng);
    REQUIRE(s.rows == 100000);
    for (std::size_t j = 0; j < 2; ++j) {
        double sum = 0.0, sq = 0.0;
        for (std::size_t i = 0; i < s.rows; ++i) {
            sum += s(i, j);
            sq += s(i, j) * s(i, j);
        }
        const double mean = sum / static_cast<double>(s.rows);
        const double sd = std::sqrt(sq / static_cast<double>(s.rows) - mean * mean);
        CHECK(sd > 0.00095);
        CHECK(sd < 0.00105);
    }
}

TEST_CASE("one-point convex combination returns an input row") {
    const Matrix pts = grid_points(4, 3, 4);
    Rng rng(5);
    const auto p = random_convex_combination(pts, 1, rng);
    bool matches_row = false;
    for (std::size_t i = 0; i < pts.rows; ++i) {
        bool eq = true;
        for (std::size_t j = 0; j < 3; ++j) eq = eq && pts(i, j) == p[j];
        matches_row = matches_row || eq;
    }
    CHECK(matches_row);
}

TEST_CASE("two-point combinations stay on the segment") {
    Matrix pts(2, 2);
    pts(0, 0) = 0.0; pts(0, 1) = 0.0;
    pts(1, 0) = 1.0; pts(1, 1) = 2.0;  // segment y = 2x
    Rng rng(6);
    for (int i = 0; i < 100; ++i) {
        const auto p = random_convex_combination(pts, 2, rng);
        CHECK(std::fabs(p[1] - 2.0 * p[0]) < 1e-10);
        CHECK(p[0] >= 0.0);
        CHECK(p[0] <= 1.0);
    }
}

TEST_CASE("three-point combinations average to the centroid") {
    Matrix tri(3, 2);
    tri(0, 0) = 0.0; tri(0, 1) = 0.0;
    tri(1, 0) = 1.0; tri(1, 1) = 0.0;
    tri(2, 0) = 0.0; tri(2, 1) = 1.0;
    Rng rng(7);
    double mx = 0.0, my = 0.0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        const auto p = random_convex_combination(tri, 3, rng);
        mx += p[0];
        my += p[1];
    }
    CHECK(std::fabs(mx / n - 1.0 / 3.0) < 0.02);
    CHECK(std::fabs(my / n - 1.0 / 3.0) < 0.02);
}

TEST_CASE("convex combination needs enough rows") {
    const Matrix pts = grid_points(3, 2, 8);
    Rng rng(9);
    CHECK_THROWS_AS(random_convex_combination(pts, 4, rng), DataError);
}

TEST_CASE("raw branch: pairwise combinations of raw cluster points") {
    // num_convcomb < num_feats selects the 2-point raw pool
    const Matrix cluster = grid_points(6, 10, 10);
    Rng rng(11);
    std::vector<SampleProvenance> prov;
    const Matrix out = generate_points(cluster, 50, 2, 1000, make_shadow_config(100, 0.001, 10),
                                       10, rng, &prov);
    REQUIRE(out.rows == 50);
    REQUIRE(prov.size() == 50);
    for (std::size_t s = 0; s < 50; ++s) {
        CHECK_FALSE(prov[s].shadow_pool);
        CHECK(prov[s].k == 2);
        REQUIRE(prov[s].weights.size() == 2);
        double wsum = 0.0;
        for (const double w : prov[s].weights) {
            CHECK(w >= 0.0);
            wsum += w;
        }
        CHECK(std::fabs(wsum - 1.0) < 1e-12);
        std::vector<double> point(out.row(s), out.row(s) + 10);
        CHECK(reconstruction_residual(point, prov[s]) < 1e-10);
    }
}

TEST_CASE("shadow branch: k-way combinations over the virtual pool") {
    // num_convcomb == num_feats selects the shadowsample pool
    const Matrix cluster = grid_points(5, 4, 12);
    Rng rng(13);
    std::vector<SampleProvenance> prov;
    const Matrix out =
        generate_points(cluster, 40, 4, 1000, make_shadow_config(100, 0.001, 4), 4, rng, &prov);
    REQUIRE(out.rows == 40);
    for (std::size_t s = 0; s < 40; ++s) {
        CHECK(prov[s].shadow_pool);
        CHECK(prov[s].k == 4);
        REQUIRE(prov[s].pool_rows.size() == 4);
        const std::set<std::size_t> uniq(prov[s].pool_rows.begin(), prov[s].pool_rows.end());
        CHECK(uniq.size() == 4);  // drawn without replacement
        for (const auto r : prov[s].pool_rows) CHECK(r < 5 * 100);  // virtual pool bound
        std::vector<double> point(out.row(s), out.row(s) + 4);
        CHECK(reconstruction_residual(point, prov[s]) < 1e-10);
    }
}

TEST_CASE("zero-noise shadow branch stays in the cluster hull") {
    // 1-D cluster spanning [0, 1]: with sigma=0 every shadow equals a raw
    // point, so combinations must stay inside the interval
    Matrix cluster(5, 1);
    for (std::size_t i = 0; i < 5; ++i) cluster(i, 0) = static_cast<double>(i) / 4.0;
    Rng rng(14);
    const Matrix out =
        generate_points(cluster, 200, 1, 1000, make_shadow_config(100, 0.0, 1), 1, rng);
    for (std::size_t s = 0; s < out.rows; ++s) {
        CHECK(out(s, 0) >= 0.0);
        CHECK(out(s, 0) <= 1.0);
    }
}

TEST_CASE("no samples requested gives an empty matrix") {
    const Matrix cluster = grid_points(4, 3, 15);
    Rng rng(16);
    const Matrix out =
        generate_points(cluster, 0, 2, 1000, make_shadow_config(100, 0.001, 3), 3, rng);
    CHECK(out.rows == 0);
    CHECK(out.cols == 3);
}

TEST_CASE("neighborhood size splits the cluster when neb_conv is small") {
    // |cluster| > neb_conv = 3: pools come from anchored 3-point neighborhoods
    const Matrix cluster = grid_points(8, 2, 17);
    Rng rng(18);
    std::vector<SampleProvenance> prov;
    const Matrix out =
        generate_points(cluster, 30, 2, 3, make_shadow_config(100, 0.0, 2), 2, rng, &prov);
    REQUIRE(out.rows == 30);
    for (const auto& rec : prov) {
        CHECK(rec.shadow_pool);            // k=2 = num_feats -> shadow branch
        CHECK(rec.neighborhood < 8);       // one neighborhood per anchor
        for (const auto r : rec.pool_rows) CHECK(r < 3 * 100);
    }
}

TEST_CASE("combining more shadowsamples shrinks the spread") {
    // fixed 5-point neighborhood, fixed sigma: per-feature variance of the
    // outputs decreases as k grows (variance law of convex combinations)
    Matrix nb(5, 1);
    nb(0, 0) = 0.0; nb(1, 0) = 0.2; nb(2, 0) = 0.55; nb(3, 0) = 0.8; nb(4, 0) = 1.0;
    const auto cfg = make_shadow_config(100, 0.001, 1);
    double prev = 1e9;
    for (const std::size_t k : {2, 5, 10}) {
        Rng rng(19);
        double sum = 0.0, sq = 0.0;
        const int n = 20000;
        for (int i = 0; i < n; ++i) {
            const auto p = shadow_pool_combination(nb, cfg, k, rng);
            sum += p[0];
            sq += p[0] * p[0];
        }
        const double mean = sum / n;
        const double var = sq / n - mean * mean;
        CHECK(var < prev);
        prev = var;
    }
}
