#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ndbound/core_model.hpp"
#include "ndbound/error.hpp"
#include "ndbound/exec.hpp"
#include "ndbound/matrix.hpp"

namespace ndbound {

/// Non-negative square matrix whose rows and columns each sum to 1 within
/// 1e-15. Construction validates.
class SweepMatrix {
public:
    /// Throws Error{NotSquare} or Error{InvalidArgument} when not doubly stochastic.
    explicit SweepMatrix(Matrix m);

    const Matrix& matrix() const noexcept { return m_; }
    std::size_t n() const noexcept { return m_.rows(); }
    double operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

private:
    Matrix m_;
};

struct Sweep {
    SweepMatrix omega;        // averages pairs (1,2), (3,4), ... (1-based)
    SweepMatrix omega_tilde;  // averages pairs (2,3), (4,5), ...
    SweepMatrix w;            // omega_tilde * omega
};

struct ConvergenceTrace {
    std::size_t iterations = 0;
    std::vector<double> final;
    double max_deviation = 0.0;  // ||final - mean * 1||_inf
    double mean = 0.0;
    // deviations[u] is the deviation after u applications of W; deviations[0]
    // is the input's.
    std::vector<double> deviations;
};

class ConvergenceError : public Error {
public:
    ConvergenceError(std::string message, ConvergenceTrace trace)
        : Error(ErrorCode::NoConvergence, std::move(message)), trace_(std::move(trace)) {}
    const ConvergenceTrace& trace() const noexcept { return trace_; }

private:
    ConvergenceTrace trace_;
};

/// Replace p_j and p_k with their mean; all other entries are untouched.
ProbabilityVector pair_average(const ProbabilityVector& p, NeighborPair pair);

/// Identity with one 2x2 block of 1/2. The block starts at 1-based diagonal
/// position 2u-1, or 2u when `shifted`. Throws Error{BlockOutOfRange}.
SweepMatrix build_omega(std::size_t n, std::size_t u, bool shifted);

/// n >= 2. For odd n this is the textbook construction; for even n the
/// unshifted sweep covers (n-1, n) and the shifted one stops at (n-2, n-1).
Sweep build_sweep(std::size_t n);

/// Repeatedly apply W until ||p_u - mean||_inf <= tol. Throws
/// ConvergenceError carrying the trace when max_iters applications do not
/// suffice. Accepts any real vector, not only probabilities.
ConvergenceTrace iterate_average(std::span<const double> p, double tol, std::size_t max_iters,
                                 Exec exec = Exec::Parallel);

/// Entries >= -tol and every row and column sum within tol of 1.
/// Throws Error{NotSquare}.
bool is_doubly_stochastic(const Matrix& m, double tol);

struct AveragedTimes {
    double before = 0.0;
    double after = 0.0;
};

/// Expected discovery time before and after averaging the pair.
AveragedTimes averaged_expected_time(const ProbabilityVector& p, NeighborPair pair,
                                     std::size_t max_exact_n = kDefaultMaxExactN);

}  // namespace ndbound
