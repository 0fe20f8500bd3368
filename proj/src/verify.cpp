#include "ndbound/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "ndbound/averaging.hpp"
#include "ndbound/bounds.hpp"
#include "ndbound/convexity.hpp"
#include "ndbound/exact_expectation.hpp"
#include "ndbound/rng.hpp"

namespace ndbound {
namespace {

enum Check : std::size_t {
    kConvexity,
    kZNonNegative,
    kDecomposition,
    kJensen,
    kAveragingMonotone,
    kLowerBound,
    kCheckCount
};

constexpr std::array<const char*, kCheckCount> kNames = {
    "convexity: F''(x) >= 0 on x grid",
    "Z(t) >= 0 on t grid",
    "decomposition residual",
    "Jensen: 2F(mid) <= F(p_j) + F(p_k)",
    "pair averaging never increases expected time",
    "expected time >= H_n / mean(p)",
};
constexpr std::array<const char*, kCheckCount> kTolerances = {
    "-1e-12 absolute", "-1e-15 absolute", "1e-12 relative",
    "1e-12 absolute",  "1e-12 absolute",  "1e-12 absolute",
};

struct Tally {
    std::uint64_t evaluations = 0;
    std::uint64_t violations = 0;
    double worst = std::numeric_limits<double>::infinity();

    // slack >= 0 means the inequality held.
    void record(double slack) {
        ++evaluations;
        if (!(slack >= 0.0)) ++violations;
        worst = std::min(worst, slack);
    }
    void merge(const Tally& other) {
        evaluations += other.evaluations;
        violations += other.violations;
        worst = std::min(worst, other.worst);
    }
};

struct Instance {
    ProbabilityVector p;
    NeighborPair pair;
};

Instance draw_instance(const VerifyOptions& options, std::uint64_t index) {
    CounterStream rng(options.seed, index);
    const std::size_t span = options.max_n - options.min_n + 1;
    const std::size_t n = options.min_n + static_cast<std::size_t>(rng() % span);
    std::vector<double> values(n);
    for (double& v : values) {
        v = options.min_probability + (1.0 - options.min_probability) * rng.uniform_positive();
    }
    const std::size_t j = static_cast<std::size_t>(rng() % n);
    std::size_t k = static_cast<std::size_t>(rng() % (n - 1));
    if (k >= j) ++k;
    return {ProbabilityVector::validate(values), NeighborPair::make(j, k, n)};
}

std::array<Tally, kCheckCount> check_instance(const VerifyOptions& options, const Instance& inst) {
    std::array<Tally, kCheckCount> t;
    const auto& [p, pair] = inst;

    const auto x_points = static_cast<std::size_t>(std::llround(1.0 / options.x_step));
    for (std::size_t i = 1; i <= x_points; ++i) {
        const double x = std::min(1.0, static_cast<double>(i) * options.x_step);
        t[kConvexity].record(f_second_derivative(p, pair, x) + 1e-12);
    }
    const auto t_points = static_cast<std::size_t>(std::llround(options.t_max / options.t_step));
    for (std::size_t i = 0; i <= t_points; ++i) {
        t[kZNonNegative].record(z_value(p, pair, static_cast<double>(i) * options.t_step) + 1e-15);
    }

    const DecompositionReport d = verify_decomposition(p, pair);
    const double exact = expected_discovery_time(p).value;
    t[kDecomposition].record(1e-12 * exact - d.residual);

    const double mid = 0.5 * (p[pair.j()] + p[pair.k()]);
    t[kJensen].record(f_term(p, pair, p[pair.j()]) + f_term(p, pair, p[pair.k()]) + 1e-12 -
                      2.0 * f_term(p, pair, mid));

    const AveragedTimes avg = averaged_expected_time(p, pair);
    t[kAveragingMonotone].record(avg.before + 1e-12 - avg.after);

    t[kLowerBound].record(exact - lower_bound(p, 0).bound + 1e-12);
    return t;
}

CheckResult to_result(std::size_t check, const Tally& tally) {
    return {kNames[check], tally.evaluations, tally.violations,
            tally.evaluations ? tally.worst : 0.0, kTolerances[check]};
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options, Exec exec) {
    if (options.min_n < 2 || options.max_n < options.min_n || options.max_n > kDefaultMaxExactN) {
        throw Error(ErrorCode::InvalidArgument, "need 2 <= min_n <= max_n <= 24");
    }
    if (!(options.min_probability > 0.0 && options.min_probability < 1.0)) {
        throw Error(ErrorCode::OutOfRange, "min_probability must lie in (0, 1)");
    }
    if (!(options.x_step > 0.0 && options.x_step <= 1.0) || !(options.t_step > 0.0) ||
        !(options.t_max >= 0.0)) {
        throw Error(ErrorCode::OutOfRange, "grid steps must be positive");
    }

    std::vector<std::array<Tally, kCheckCount>> per_instance(options.instances);
#pragma omp parallel for schedule(dynamic, 8) if (exec == Exec::Parallel)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(options.instances); ++i) {
        const auto idx = static_cast<std::size_t>(i);
        per_instance[idx] = check_instance(options, draw_instance(options, idx));
    }

    std::array<Tally, kCheckCount> totals;
    for (const auto& tallies : per_instance) {
        for (std::size_t c = 0; c < kCheckCount; ++c) totals[c].merge(tallies[c]);
    }
    std::vector<CheckResult> results;
    for (std::size_t c = 0; c < kCheckCount; ++c) results.push_back(to_result(c, totals[c]));

    // Powers of the sweep matrix stay doubly stochastic.
    Tally closure;
    for (std::size_t n = 2; n <= 25; ++n) {
        const Matrix w = build_sweep(n).w.matrix();
        Matrix wu = Matrix::identity(n);
        unsigned applied = 0;
        for (unsigned u : {1U, 2U, 5U, 10U, 50U}) {
            for (; applied < u; ++applied) wu = multiply(wu, w, exec);
            closure.record(is_doubly_stochastic(wu, 1e-12) ? 0.0 : -1.0);
        }
    }
    results.push_back({"W^u doubly stochastic, n in [2,25], u in {1,2,5,10,50}", closure.evaluations,
                       closure.violations, closure.worst, "1e-12"});
    return results;
}

}  // namespace ndbound
