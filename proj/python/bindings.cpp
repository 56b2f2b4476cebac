#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "prowras/dataset.hpp"
#include "prowras/metrics.hpp"
#include "prowras/partition.hpp"
#include "prowras/samplers.hpp"

namespace py = pybind11;
using namespace prowras;

namespace {

Matrix matrix_from_numpy(const py::array_t<double, py::array::c_style | py::array::forcecast>& x) {
    if (x.ndim() != 2) throw DataError("features must be a 2-D array");
    Matrix m(static_cast<std::size_t>(x.shape(0)), static_cast<std::size_t>(x.shape(1)));
    const auto r = x.unchecked<2>();
    for (py::ssize_t i = 0; i < x.shape(0); ++i)
        for (py::ssize_t j = 0; j < x.shape(1); ++j)
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = r(i, j);
    return m;
}

py::array_t<double> numpy_from_matrix(const Matrix& m) {
    py::array_t<double> out({m.rows, m.cols});
    auto w = out.mutable_unchecked<2>();
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            w(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j)) = m(i, j);
    return out;
}

std::vector<std::string> labels_from_py(const py::iterable& y) {
    std::vector<std::string> out;
    for (const auto& item : y) out.push_back(py::str(item).cast<std::string>());
    return out;
}

Dataset dataset_from_py(const py::array_t<double, py::array::c_style | py::array::forcecast>& x,
                        const py::iterable& y, const std::optional<std::string>& minority) {
    const Matrix m = matrix_from_numpy(x);
    std::vector<std::string> labels = labels_from_py(y);
    if (labels.size() != m.rows) throw DataError("features and labels disagree on length");
    return dataset_from_parts(m, labels, minority);
}

py::dict oversample_py(const py::array_t<double, py::array::c_style | py::array::forcecast>& x,
                       const py::iterable& y, const std::string& method,
                       const std::string& scheme, std::size_t n, std::uint64_t seed,
                       const std::optional<std::string>& minority, bool normalize,
                       std::size_t max_levels, std::size_t n_neighbours_max, double theta,
                       std::size_t shadow, double sigma, std::size_t max_conv,
                       std::size_t neb_conv, std::size_t k, std::size_t n_aff) {
    Dataset d = dataset_from_py(x, y, minority);
    const Normalizer norm = fit_normalizer(d);
    Dataset work = d;
    if (normalize) work.features = apply_normalizer(norm, d.features);

    const std::size_t maj = d.n() - d.minority_count();
    const std::size_t count = n ? n : (maj > d.minority_count() ? maj - d.minority_count() : 0);

    ProwrasParams p;
    p.max_levels = max_levels;
    p.n_neighbours_max = n_neighbours_max;
    p.theta = theta;
    p.shadow = shadow;
    p.sigma = sigma;
    p.max_conv = max_conv;
    p.neb_conv = neb_conv;
    p.num_samples_to_generate = count;

    SyntheticBatch batch;
    std::string used_scheme = scheme;
    if (method == "prowras") {
        if (scheme == "custom") {
            batch = prowras::prowras(work, p, seed);
        } else {
            if (used_scheme == "auto")
                used_scheme = scheme_name(select_scheme(
                    d, ClassifierKind::Knn, SeedMixer(seed).mix("scheme-select").value(), p));
            const auto preset = scheme_from_name(used_scheme);
            if (!preset) throw DataError("unknown scheme: " + used_scheme);
            batch = prowras_scheme(work, *preset, p, seed);
        }
    } else if (method == "smote") {
        batch = smote(work, count, k, seed);
    } else if (method == "prowsyn") {
        batch = prowsyn(work, count, max_levels, n_neighbours_max, theta, seed);
    } else if (method == "loras") {
        batch = loras(work, count, k, shadow, sigma,
                      n_aff ? n_aff : loras_default_n_aff(d.n_feats()), seed);
    } else if (method == "pfsmote") {
        batch = pf_smote_star(work, count, seed);
    } else {
        throw DataError("unknown method: " + method);
    }

    py::dict out;
    out["points"] =
        numpy_from_matrix(normalize ? invert_normalizer(norm, batch.points) : batch.points);
    out["label"] = batch.label;
    out["scheme"] = method == "prowras" ? used_scheme : std::string();
    out["seed"] = batch.seed;
    return out;
}

py::dict partition_py(const py::array_t<double, py::array::c_style | py::array::forcecast>& x,
                      const py::iterable& y, std::size_t max_levels,
                      std::size_t n_neighbours_max, double theta,
                      const std::optional<std::string>& minority, bool normalize) {
    Dataset d = dataset_from_py(x, y, minority);
    if (normalize) d.features = apply_normalizer(fit_normalizer(d), d.features);
    const WeightedPartition p = partition_minority(d, max_levels, n_neighbours_max, theta);
    py::list levels;
    for (std::size_t i = 0; i < p.clusters.size(); ++i) {
        py::dict lvl;
        lvl["indices"] = p.clusters[i];
        lvl["raw_weight"] = p.raw_weights[i];
        lvl["normalized_weight"] = p.weights[i];
        levels.append(lvl);
    }
    py::dict out;
    out["levels"] = levels;
    out["theta"] = p.theta;
    out["max_levels"] = p.max_levels;
    return out;
}

double metric_py(const std::vector<std::string>& truth, const std::vector<std::string>& pred,
                 const std::string& minority, bool kappa) {
    const ConfusionMatrix cm = confusion(truth, pred, minority);
    return kappa ? cohen_kappa(cm) : f1_minority(cm);
}

py::dict wsrt_py(const std::vector<double>& a, const std::vector<double>& b) {
    const WsrtResult r = wsrt(a, b);
    py::dict out;
    out["w_plus"] = r.w_plus;
    out["w_minus"] = r.w_minus;
    out["z"] = r.z;
    out["p_one_sided"] = r.p_one_sided;
    out["p_two_sided"] = r.p_two_sided;
    out["r"] = r.r;
    out["n_effective"] = r.n_effective;
    out["degenerate"] = r.degenerate;
    return out;
}

double iscore_py(const py::array_t<double, py::array::c_style | py::array::forcecast>& scores,
                 const std::vector<std::string>& classifiers,
                 const std::vector<std::string>& datasets,
                 const std::vector<std::string>& oversamplers, const std::string& target,
                 double tolerance) {
    if (scores.ndim() != 3) throw DataError("scores must be a 3-D array [classifier,dataset,oversampler]");
    ComparisonCube cube = make_cube(classifiers, datasets, oversamplers);
    const auto r = scores.unchecked<3>();
    if (static_cast<std::size_t>(scores.shape(0)) != classifiers.size() ||
        static_cast<std::size_t>(scores.shape(1)) != datasets.size() ||
        static_cast<std::size_t>(scores.shape(2)) != oversamplers.size())
        throw DataError("scores shape disagrees with the name lists");
    for (std::size_t c = 0; c < classifiers.size(); ++c)
        for (std::size_t d = 0; d < datasets.size(); ++d)
            for (std::size_t o = 0; o < oversamplers.size(); ++o)
                cube.at(c, d, o) = r(static_cast<py::ssize_t>(c), static_cast<py::ssize_t>(d),
                                     static_cast<py::ssize_t>(o));
    return iscore(cube, target, tolerance);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "prowras core bindings";
    m.def("oversample", &oversample_py, py::arg("x"), py::arg("y"), py::arg("method") = "prowras",
          py::arg("scheme") = "auto", py::arg("n") = 0, py::arg("seed") = 42,
          py::arg("minority") = std::nullopt, py::arg("normalize") = true,
          py::arg("max_levels") = 5, py::arg("n_neighbours_max") = 5, py::arg("theta") = 1.0,
          py::arg("shadow") = 100, py::arg("sigma") = 0.001, py::arg("max_conv") = 2,
          py::arg("neb_conv") = 1000, py::arg("k") = 5, py::arg("n_aff") = 0,
          "Generate synthetic minority points; returns dict(points, label, scheme, seed).");
    m.def("partition", &partition_py, py::arg("x"), py::arg("y"), py::arg("max_levels") = 5,
          py::arg("n_neighbours_max") = 5, py::arg("theta") = 1.0,
          py::arg("minority") = std::nullopt, py::arg("normalize") = true,
          "Proximity-weighted minority partition as dict(levels, theta, max_levels).");
    m.def("f1_score", &metric_py, py::arg("truth"), py::arg("pred"), py::arg("minority"),
          py::arg("kappa") = false, "Minority-class F1 (kappa=True for Cohen's kappa).");
    m.def("wsrt", &wsrt_py, py::arg("a"), py::arg("b"),
          "Wilcoxon signed-rank test of paired scores.");
    m.def("iscore", &iscore_py, py::arg("scores"), py::arg("classifiers"), py::arg("datasets"),
          py::arg("oversamplers"), py::arg("target"), py::arg("tolerance") = 0.0,
          "I-score of `target` from a [classifier, dataset, oversampler] score array.");
    m.attr("__version__") = PROWRAS_VERSION;
}
