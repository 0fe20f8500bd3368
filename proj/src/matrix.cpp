#include "ndbound/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "ndbound/error.hpp"

namespace ndbound {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix multiply(const Matrix& a, const Matrix& b, Exec exec) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidArgument, "matrix shapes do not conform");
    Matrix c(a.rows(), b.cols());
    const auto rows = static_cast<std::int64_t>(a.rows());
    // i-k-j order; each output row is owned by one thread so the summation
    // order is the same on every path.
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel && rows >= 64)
    for (std::int64_t i = 0; i < rows; ++i) {
        const auto r = static_cast<std::size_t>(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(r, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(r, j) += aik * b(k, j);
        }
    }
    return c;
}

std::vector<double> multiply(const Matrix& a, std::span<const double> x, Exec exec) {
    if (a.cols() != x.size()) throw Error(ErrorCode::InvalidArgument, "matrix and vector do not conform");
    std::vector<double> y(a.rows(), 0.0);
    const auto rows = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel && rows >= 256)
    for (std::int64_t i = 0; i < rows; ++i) {
        const auto r = static_cast<std::size_t>(i);
        double sum = 0.0;
        for (std::size_t k = 0; k < a.cols(); ++k) sum += a(r, k) * x[k];
        y[r] = sum;
    }
    return y;
}

Matrix power(const Matrix& a, unsigned exponent, Exec exec) {
    if (!a.square()) throw Error(ErrorCode::NotSquare, "matrix power needs a square matrix");
    Matrix result = Matrix::identity(a.rows());
    for (unsigned u = 0; u < exponent; ++u) result = multiply(result, a, exec);
    return result;
}

double max_abs_difference(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::InvalidArgument, "matrix shapes differ");
    }
    double worst = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
    }
    return worst;
}

}  // namespace ndbound
