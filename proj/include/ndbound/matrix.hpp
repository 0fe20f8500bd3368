#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ndbound/exec.hpp"

namespace ndbound {

// Dense row-major matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);
    static Matrix constant(std::size_t rows, std::size_t cols, double value) {
        return Matrix(rows, cols, value);
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const double> row(std::size_t r) const {
        return std::span<const double>(data_).subspan(r * cols_, cols_);
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// Throws Error{InvalidArgument} on a shape mismatch.
Matrix multiply(const Matrix& a, const Matrix& b, Exec exec = Exec::Parallel);
std::vector<double> multiply(const Matrix& a, std::span<const double> x, Exec exec = Exec::Parallel);
Matrix power(const Matrix& a, unsigned exponent, Exec exec = Exec::Parallel);

// max_{r,c} |a(r,c) - b(r,c)|
double max_abs_difference(const Matrix& a, const Matrix& b);

}  // namespace ndbound
