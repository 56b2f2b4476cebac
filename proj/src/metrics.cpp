#include "prowras/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "prowras/format.hpp"

namespace prowras {

ConfusionMatrix confusion(const std::vector<std::string>& truth,
                          const std::vector<std::string>& predicted,
                          const std::string& minority_label) {
    if (truth.size() != predicted.size()) throw DataError("confusion: size mismatch");
    ConfusionMatrix cm;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const bool pos = truth[i] == minority_label;
        const bool pred_pos = predicted[i] == minority_label;
        if (pos && pred_pos)
            ++cm.tp;
        else if (!pos && pred_pos)
            ++cm.fp;
        else if (pos && !pred_pos)
            ++cm.fn;
        else
            ++cm.tn;
    }
    return cm;
}

double f1_minority(const ConfusionMatrix& cm) {
    if (cm.tp == 0) return 0.0;
    const double tp = static_cast<double>(cm.tp);
    const double prec = tp / static_cast<double>(cm.tp + cm.fp);
    const double rec = tp / static_cast<double>(cm.tp + cm.fn);
    return 2.0 * prec * rec / (prec + rec);
}

double cohen_kappa(const ConfusionMatrix& cm) {
    const double n = static_cast<double>(cm.total());
    if (n < 1.0) throw DataError("kappa: empty confusion matrix");
    const double po = (static_cast<double>(cm.tp) + static_cast<double>(cm.tn)) / n;
    const double pe = (static_cast<double>(cm.tp + cm.fp) * static_cast<double>(cm.tp + cm.fn) +
                       static_cast<double>(cm.fn + cm.tn) * static_cast<double>(cm.fp + cm.tn)) /
                      (n * n);
    if (pe == 1.0) return 0.0;
    return (po - pe) / (1.0 - pe);
}

ComparisonCube make_cube(std::vector<std::string> classifiers, std::vector<std::string> datasets,
                         std::vector<std::string> oversamplers) {
    ComparisonCube cube;
    cube.classifiers = std::move(classifiers);
    cube.datasets = std::move(datasets);
    cube.oversamplers = std::move(oversamplers);
    cube.scores.assign(cube.classifiers.size() * cube.datasets.size() * cube.oversamplers.size(),
                       std::numeric_limits<double>::quiet_NaN());
    return cube;
}

double iscore(const ComparisonCube& cube, const std::string& target, double tie_tolerance) {
    const std::size_t nc = cube.classifiers.size();
    const std::size_t nd = cube.datasets.size();
    const std::size_t no = cube.oversamplers.size();
    if (nc < 1 || nd < 1 || no < 2) throw DataError("iscore: need |C|>=1, |D|>=1, |O|>=2");
    const auto it = std::find(cube.oversamplers.begin(), cube.oversamplers.end(), target);
    if (it == cube.oversamplers.end()) throw DataError("iscore: unknown oversampler " + target);
    const std::size_t o = static_cast<std::size_t>(it - cube.oversamplers.begin());
    for (double v : cube.scores)
        if (std::isnan(v)) throw DataError("iscore: incomplete cube");

    double geo = 1.0;
    for (std::size_t c = 0; c < nc; ++c) {
        double inner = 0.0;
        for (std::size_t oo = 0; oo < no; ++oo) {
            if (oo == o) continue;
            std::size_t wins = 0;
            for (std::size_t d = 0; d < nd; ++d)
                if (cube.at(c, d, o) >= cube.at(c, d, oo) - tie_tolerance) ++wins;
            inner += static_cast<double>(wins) / static_cast<double>(nd);
        }
        geo *= inner / static_cast<double>(no - 1);
    }
    return std::pow(geo, 1.0 / static_cast<double>(nc));
}

namespace {

double phi(double x) { return 0.5 * std::erfc(-x / 1.4142135623730950488016887242097); }

}  // namespace

WsrtResult wsrt(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw DataError("wsrt: length mismatch");
    if (a.empty()) throw DataError("wsrt: empty input");
    const std::size_t big_n = a.size();

    std::vector<double> diff;
    for (std::size_t i = 0; i < big_n; ++i) {
        const double d = a[i] - b[i];
        if (d != 0.0) diff.push_back(d);
    }
    WsrtResult res;
    res.n_effective = diff.size();
    if (diff.empty()) {
        res.degenerate = true;
        return res;
    }
    const std::size_t n = diff.size();

    // average ranks of |d| with tie groups
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return std::fabs(diff[x]) < std::fabs(diff[y]);
    });
    std::vector<double> rank(n, 0.0);
    double tie_term = 0.0;  // sum of t^3 - t over tie groups
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && std::fabs(diff[order[j + 1]]) == std::fabs(diff[order[i]])) ++j;
        const double avg = 0.5 * static_cast<double>(i + j) + 1.0;  // ranks are 1-based
        for (std::size_t t = i; t <= j; ++t) rank[order[t]] = avg;
        const double tsize = static_cast<double>(j - i + 1);
        tie_term += tsize * tsize * tsize - tsize;
        i = j + 1;
    }

    for (std::size_t t = 0; t < n; ++t) {
        if (diff[t] > 0.0)
            res.w_plus += rank[t];
        else
            res.w_minus += rank[t];
    }

    const double dn = static_cast<double>(n);
    const double mu = dn * (dn + 1.0) / 4.0;
    const double var = dn * (dn + 1.0) * (2.0 * dn + 1.0) / 24.0 - tie_term / 48.0;
    const double sd = std::sqrt(var);
    const double w_r = std::min(res.w_plus, res.w_minus);
    res.z = (w_r - mu) / sd;

    // continuity-corrected normal tails; one-sided favors a > b (small W-)
    res.p_one_sided = phi((res.w_minus - mu + 0.5) / sd);
    res.p_two_sided = std::min(1.0, 2.0 * phi((w_r - mu + 0.5) / sd));
    res.r = std::fabs(res.z) / std::sqrt(static_cast<double>(big_n));
    return res;
}

std::string wsrt_json(const WsrtResult& r) {
    std::string out = "{\"w_plus\":" + fmt_sig(r.w_plus) + ",\"w_minus\":" + fmt_sig(r.w_minus) +
                      ",\"z\":" + fmt_sig(r.z) + ",\"p_one_sided\":" + fmt_sig(r.p_one_sided) +
                      ",\"p_two_sided\":" + fmt_sig(r.p_two_sided) + ",\"r\":" + fmt_sig(r.r) +
                      ",\"n_effective\":" + std::to_string(r.n_effective) +
                      ",\"degenerate\":" + (r.degenerate ? "true" : "false") + "}";
    return out;
}

}  // namespace prowras
