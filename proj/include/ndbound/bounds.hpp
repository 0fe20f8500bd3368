#pragma once

#include <cstddef>
#include <optional>

#include "ndbound/core_model.hpp"

namespace ndbound {

/// 1 + 1/2 + ... + 1/n, summed smallest term first. n must be >= 1.
double harmonic_number(std::size_t n);

struct BoundReport {
    double harmonic = 0.0;
    double mean_probability = 0.0;
    double bound = 0.0;                 // harmonic / mean_probability
    std::optional<double> exact;        // present when n <= max_exact_n
    std::optional<double> gap;          // exact - bound, never clamped
};

/// H_n / mean(p), a lower bound on expected_discovery_time(p) that is tight
/// exactly when all probabilities are equal. The exact value and the gap are
/// filled when the vector is small enough to enumerate.
BoundReport lower_bound(const ProbabilityVector& p, std::size_t max_exact_n = kDefaultMaxExactN);

}  // namespace ndbound
