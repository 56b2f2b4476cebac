#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "prowras/types.hpp"

namespace prowras {

// minority = positive class
struct ConfusionMatrix {
    std::uint64_t tp = 0, fp = 0, fn = 0, tn = 0;
    std::uint64_t total() const { return tp + fp + fn + tn; }
};

ConfusionMatrix confusion(const std::vector<std::string>& truth,
                          const std::vector<std::string>& predicted,
                          const std::string& minority_label);

// harmonic mean of precision and recall; 0 when tp == 0
double f1_minority(const ConfusionMatrix& cm);

// (P_o - P_e) / (1 - P_e); 0 when P_e == 1
double cohen_kappa(const ConfusionMatrix& cm);

// score[classifier][dataset][oversampler], complete over C x D x O
struct ComparisonCube {
    std::vector<std::string> classifiers;
    std::vector<std::string> datasets;
    std::vector<std::string> oversamplers;
    std::vector<double> scores;  // c-major, then d, then o

    double& at(std::size_t c, std::size_t d, std::size_t o) {
        return scores[(c * datasets.size() + d) * oversamplers.size() + o];
    }
    double at(std::size_t c, std::size_t d, std::size_t o) const {
        return scores[(c * datasets.size() + d) * oversamplers.size() + o];
    }
};

ComparisonCube make_cube(std::vector<std::string> classifiers, std::vector<std::string> datasets,
                         std::vector<std::string> oversamplers);

// Geometric mean over classifiers of the average, over competing oversamplers,
// of the fraction of datasets where the target scores >= competitor - tol.
double iscore(const ComparisonCube& cube, const std::string& target, double tie_tolerance = 0.0);

struct WsrtResult {
    double w_plus = 0.0;
    double w_minus = 0.0;
    double z = 0.0;
    double p_one_sided = 1.0;  // favoring a > b
    double p_two_sided = 1.0;
    double r = 0.0;
    std::size_t n_effective = 0;
    bool degenerate = false;  // every difference was zero
};

// Wilcoxon signed-rank test with average ranks, tie-corrected variance, and a
// continuity-corrected normal tail for the p-values.
WsrtResult wsrt(const std::vector<double>& a, const std::vector<double>& b);

std::string wsrt_json(const WsrtResult& r);

}  // namespace prowras
