#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace prowras {

// Dense row-major matrix of doubles. Small datasets only (<= a few thousand
// rows), so no view/expression machinery.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    double* row(std::size_t i) { return data.data() + i * cols; }
    const double* row(std::size_t i) const { return data.data() + i * cols; }

    void append_row(const double* p) {
        data.insert(data.end(), p, p + cols);
        ++rows;
    }
    void append_row(const std::vector<double>& v) { append_row(v.data()); }

    Matrix take_rows(const std::vector<std::size_t>& idx) const {
        Matrix out(idx.size(), cols);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(idx[i], j);
        return out;
    }
};

// Invalid or unusable input data (bad CSV cell, impossible parameters, ...).
// The CLI maps this to exit code 2.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace prowras
