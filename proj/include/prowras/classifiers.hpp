#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "prowras/types.hpp"

namespace prowras {

// k-nearest-neighbor majority vote; even-vote ties go to the minority label.
struct KnnModel {
    Matrix train_x;
    std::vector<std::string> train_y;
    std::string minority_label;
    std::size_t k = 5;
};

KnnModel knn_fit(Matrix train_x, std::vector<std::string> train_y, std::string minority_label,
                 std::size_t k = 5);
std::vector<std::string> knn_predict(const KnnModel& model, const Matrix& queries);

// L2-regularized logistic regression, full-batch gradient descent with
// backtracking line search. Minority class is the positive class.
struct LogRegModel {
    std::vector<double> w;
    double bias = 0.0;
    double l2 = 1.0;
    std::string minority_label;
    std::string majority_label;
    bool degenerate = false;  // one-class training data -> constant predictor
    std::string note;
};

LogRegModel logreg_fit(const Matrix& train_x, const std::vector<std::string>& train_y,
                       const std::string& minority_label, double l2 = 1.0,
                       std::size_t max_iter = 1000, double tol = 1e-6,
                       std::vector<double>* loss_trace = nullptr);
std::vector<std::string> logreg_predict(const LogRegModel& model, const Matrix& queries);
std::vector<double> logreg_prob(const LogRegModel& model, const Matrix& queries);

// objective pieces exposed for the finite-difference check:
// params = [w_0..w_{d-1}, bias], y in {0,1} (1 = minority)
double logreg_loss(const Matrix& x, const std::vector<int>& y, const std::vector<double>& params,
                   double l2);
std::vector<double> logreg_gradient(const Matrix& x, const std::vector<int>& y,
                                    const std::vector<double>& params, double l2);

}  // namespace prowras
