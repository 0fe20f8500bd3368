#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ndbound/exec.hpp"

namespace ndbound {

struct VerifyOptions {
    std::size_t instances = 1000;
    std::size_t min_n = 2;
    std::size_t max_n = 8;
    double min_probability = 0.01;
    double x_step = 0.01;  // convexity grid over (0, 1]
    double t_step = 0.1;   // Z grid over [0, t_max]
    double t_max = 50.0;
    std::uint64_t seed = 42;
};

struct CheckResult {
    std::string name;
    std::uint64_t evaluations = 0;
    std::uint64_t violations = 0;
    // Signed margin of the worst case; >= 0 means the check held everywhere.
    double worst_margin = 0.0;
    std::string tolerance;

    bool passed() const noexcept { return violations == 0; }
};

/// Random-instance sweeps over the averaging argument: convexity of F on the
/// x grid, Z >= 0 on the t grid, the four-part decomposition residual,
/// Jensen's inequality for the averaged pair, the H_n / mean bound, and
/// closure of the sweep matrix powers under double stochasticity.
/// Instance i is drawn from CounterStream(seed, i), so results are independent
/// of the thread count.
std::vector<CheckResult> run_verification(const VerifyOptions& options,
                                          Exec exec = Exec::Parallel);

}  // namespace ndbound
