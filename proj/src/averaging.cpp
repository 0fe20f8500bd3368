#include "ndbound/averaging.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ndbound/exact_expectation.hpp"

namespace ndbound {
namespace {

constexpr double kSweepTolerance = 1e-15;

double deviation_from(std::span<const double> x, double mean) {
    double worst = 0.0;
    for (double v : x) worst = std::max(worst, std::abs(v - mean));
    return worst;
}

}  // namespace

SweepMatrix::SweepMatrix(Matrix m) : m_(std::move(m)) {
    if (!is_doubly_stochastic(m_, kSweepTolerance)) {
        throw Error(ErrorCode::InvalidArgument, "sweep matrix is not doubly stochastic");
    }
}

ProbabilityVector pair_average(const ProbabilityVector& p, NeighborPair pair) {
    if (pair.j() >= p.size() || pair.k() >= p.size()) {
        throw Error(ErrorCode::BadPair, "pair does not index this vector");
    }
    std::vector<double> values(p.values().begin(), p.values().end());
    const double mean = 0.5 * (values[pair.j()] + values[pair.k()]);
    values[pair.j()] = mean;
    values[pair.k()] = mean;
    return ProbabilityVector::validate(values);
}

SweepMatrix build_omega(std::size_t n, std::size_t u, bool shifted) {
    if (n < 2 || u == 0) {
        throw Error(ErrorCode::BlockOutOfRange, "omega needs n >= 2 and u >= 1");
    }
    const std::size_t start = shifted ? 2 * u - 1 : 2 * u - 2;
    if (start + 1 >= n) {
        throw Error(ErrorCode::BlockOutOfRange,
                    "block for u = " + std::to_string(u) + " does not fit in n = " + std::to_string(n));
    }
    Matrix m = Matrix::identity(n);
    m(start, start) = 0.5;
    m(start, start + 1) = 0.5;
    m(start + 1, start) = 0.5;
    m(start + 1, start + 1) = 0.5;
    return SweepMatrix(std::move(m));
}

Sweep build_sweep(std::size_t n) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "sweep needs n >= 2");
    Matrix omega = Matrix::identity(n);
    for (std::size_t u = 1; u <= n / 2; ++u) omega = multiply(omega, build_omega(n, u, false).matrix());
    Matrix omega_tilde = Matrix::identity(n);
    for (std::size_t u = 1; u <= (n - 1) / 2; ++u) {
        omega_tilde = multiply(omega_tilde, build_omega(n, u, true).matrix());
    }
    Matrix w = multiply(omega_tilde, omega);
    return {SweepMatrix(std::move(omega)), SweepMatrix(std::move(omega_tilde)), SweepMatrix(std::move(w))};
}

ConvergenceTrace iterate_average(std::span<const double> p, double tol, std::size_t max_iters,
                                 Exec exec) {
    if (p.empty()) throw Error(ErrorCode::EmptyVector, "cannot average an empty vector");
    if (!(tol > 0.0)) throw Error(ErrorCode::OutOfRange, "tol must be positive");
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!std::isfinite(p[i])) throw Error(ErrorCode::NonFinite, "non-finite entry", i);
    }

    ConvergenceTrace trace;
    trace.mean = std::accumulate(p.begin(), p.end(), 0.0) / static_cast<double>(p.size());
    trace.final.assign(p.begin(), p.end());
    trace.max_deviation = deviation_from(trace.final, trace.mean);
    trace.deviations.push_back(trace.max_deviation);
    if (p.size() == 1) return trace;

    const Matrix w = build_sweep(p.size()).w.matrix();
    while (trace.max_deviation > tol) {
        if (trace.iterations >= max_iters) {
            throw ConvergenceError("no convergence after " + std::to_string(max_iters) + " sweeps",
                                   std::move(trace));
        }
        trace.final = multiply(w, trace.final, exec);
        ++trace.iterations;
        trace.max_deviation = deviation_from(trace.final, trace.mean);
        trace.deviations.push_back(trace.max_deviation);
    }
    return trace;
}

bool is_doubly_stochastic(const Matrix& m, double tol) {
    if (!m.square()) throw Error(ErrorCode::NotSquare, "matrix is not square");
    const std::size_t n = m.rows();
    std::vector<double> column_sums(n, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
        double row_sum = 0.0;
        for (std::size_t c = 0; c < n; ++c) {
            const double v = m(r, c);
            if (!(v >= -tol)) return false;
            row_sum += v;
            column_sums[c] += v;
        }
        if (!(std::abs(row_sum - 1.0) <= tol)) return false;
    }
    return std::all_of(column_sums.begin(), column_sums.end(),
                       [tol](double s) { return std::abs(s - 1.0) <= tol; });
}

AveragedTimes averaged_expected_time(const ProbabilityVector& p, NeighborPair pair,
                                     std::size_t max_exact_n) {
    return {expected_discovery_time(p, max_exact_n).value,
            expected_discovery_time(pair_average(p, pair), max_exact_n).value};
}

}  // namespace ndbound
