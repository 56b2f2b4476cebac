#include "prowras/classifiers.hpp"

#include <algorithm>
#include <cmath>

#include "prowras/neighbors.hpp"

namespace prowras {

KnnModel knn_fit(Matrix train_x, std::vector<std::string> train_y, std::string minority_label,
                 std::size_t k) {
    if (k < 1 || k > train_x.rows)
        throw DataError("knn: k=" + std::to_string(k) + " outside [1, " +
                        std::to_string(train_x.rows) + "]");
    if (train_x.rows != train_y.size()) throw DataError("knn: feature/label size mismatch");
    return KnnModel{std::move(train_x), std::move(train_y), std::move(minority_label), k};
}

std::vector<std::string> knn_predict(const KnnModel& model, const Matrix& queries) {
    NeighborIndex ix{model.train_x};
    std::string majority;
    for (const auto& l : model.train_y)
        if (l != model.minority_label) {
            majority = l;
            break;
        }
    std::vector<std::string> out;
    out.reserve(queries.rows);
    for (std::size_t i = 0; i < queries.rows; ++i) {
        std::size_t votes = 0;
        for (std::size_t nb : knn(ix, queries.row(i), model.k))
            if (model.train_y[nb] == model.minority_label) ++votes;
        out.push_back(2 * votes >= model.k ? model.minority_label : majority);
    }
    return out;
}

namespace {

// log(1 + e^z) without overflow
double log1pexp(double z) { return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

double sigmoid(double z) { return z > 0.0 ? 1.0 / (1.0 + std::exp(-z)) : std::exp(z) / (1.0 + std::exp(z)); }

double dot_row(const Matrix& x, std::size_t i, const std::vector<double>& params) {
    double z = params[x.cols];  // bias
    for (std::size_t j = 0; j < x.cols; ++j) z += params[j] * x(i, j);
    return z;
}

}  // namespace

double logreg_loss(const Matrix& x, const std::vector<int>& y, const std::vector<double>& params,
                   double l2) {
    double loss = 0.0;
    for (std::size_t i = 0; i < x.rows; ++i) {
        const double z = dot_row(x, i, params);
        loss += log1pexp(z) - static_cast<double>(y[i]) * z;
    }
    for (std::size_t j = 0; j < x.cols; ++j) loss += 0.5 * l2 * params[j] * params[j];
    return loss;
}

std::vector<double> logreg_gradient(const Matrix& x, const std::vector<int>& y,
                                    const std::vector<double>& params, double l2) {
    std::vector<double> g(x.cols + 1, 0.0);
    for (std::size_t i = 0; i < x.rows; ++i) {
        const double r = sigmoid(dot_row(x, i, params)) - static_cast<double>(y[i]);
        for (std::size_t j = 0; j < x.cols; ++j) g[j] += r * x(i, j);
        g[x.cols] += r;
    }
    for (std::size_t j = 0; j < x.cols; ++j) g[j] += l2 * params[j];
    return g;
}

LogRegModel logreg_fit(const Matrix& train_x, const std::vector<std::string>& train_y,
                       const std::string& minority_label, double l2, std::size_t max_iter,
                       double tol, std::vector<double>* loss_trace) {
    if (train_x.rows != train_y.size()) throw DataError("logreg: feature/label size mismatch");
    LogRegModel model;
    model.l2 = l2;
    model.minority_label = minority_label;
    for (const auto& l : train_y)
        if (l != minority_label) {
            model.majority_label = l;
            break;
        }

    std::vector<int> y(train_y.size());
    std::size_t positives = 0;
    for (std::size_t i = 0; i < train_y.size(); ++i) {
        y[i] = train_y[i] == minority_label ? 1 : 0;
        positives += y[i];
    }
    if (positives == 0 || positives == train_y.size()) {
        model.degenerate = true;
        model.note = "one-class training data; constant predictor";
        model.w.assign(train_x.cols, 0.0);
        model.bias = positives == 0 ? -1.0 : 1.0;  // sign picks the constant class
        return model;
    }

    std::vector<double> params(train_x.cols + 1, 0.0);
    double loss = logreg_loss(train_x, y, params, l2);
    if (loss_trace) loss_trace->push_back(loss);
    double step = 1.0;
    for (std::size_t it = 0; it < max_iter; ++it) {
        const auto g = logreg_gradient(train_x, y, params, l2);
        double gnorm2 = 0.0;
        for (double v : g) gnorm2 += v * v;
        if (std::sqrt(gnorm2) < tol) break;

        // backtracking Armijo line search
        step = std::min(step * 2.0, 1.0e4);
        std::vector<double> trial(params.size());
        double new_loss = loss;
        for (;;) {
            for (std::size_t j = 0; j < params.size(); ++j) trial[j] = params[j] - step * g[j];
            new_loss = logreg_loss(train_x, y, trial, l2);
            if (std::isfinite(new_loss) && new_loss <= loss - 1e-4 * step * gnorm2) break;
            step *= 0.5;
            if (step < 1e-18) {
                trial = params;
                new_loss = loss;
                break;
            }
        }
        if (!std::isfinite(new_loss))
            throw DataError("logreg: divergent loss");
        if (new_loss >= loss && step < 1e-18) break;  // no progress possible
        params = trial;
        loss = new_loss;
        if (loss_trace) loss_trace->push_back(loss);
    }

    model.w.assign(params.begin(), params.begin() + train_x.cols);
    model.bias = params[train_x.cols];
    return model;
}

std::vector<double> logreg_prob(const LogRegModel& model, const Matrix& queries) {
    std::vector<double> out(queries.rows);
    for (std::size_t i = 0; i < queries.rows; ++i) {
        double z = model.bias;
        for (std::size_t j = 0; j < queries.cols; ++j) z += model.w[j] * queries(i, j);
        out[i] = sigmoid(z);
    }
    return out;
}

std::vector<std::string> logreg_predict(const LogRegModel& model, const Matrix& queries) {
    if (model.degenerate) {
        const std::string& only = model.bias > 0 ? model.minority_label : model.majority_label;
        return std::vector<std::string>(queries.rows, only);
    }
    const auto p = logreg_prob(model, queries);
    std::vector<std::string> out;
    out.reserve(queries.rows);
    for (double v : p) out.push_back(v >= 0.5 ? model.minority_label : model.majority_label);
    return out;
}

}  // namespace prowras
