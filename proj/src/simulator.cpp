#include "ndbound/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <vector>

#include "ndbound/rng.hpp"

namespace ndbound {
namespace {

constexpr std::uint64_t kBlockSize = 1024;

struct Moments {
    double count = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void push(double x) {
        count += 1.0;
        const double delta = x - mean;
        mean += delta / count;
        m2 += delta * (x - mean);
    }

    void merge(const Moments& other) {
        if (other.count == 0.0) return;
        const double total = count + other.count;
        const double delta = other.mean - mean;
        mean += delta * (other.count / total);
        m2 += other.m2 + delta * delta * (count * other.count / total);
        count = total;
    }
};

double exponential_replication(std::span<const double> p, CounterStream& rng) {
    double last = 0.0;
    for (double rate : p) last = std::max(last, -std::log(rng.uniform_positive()) / rate);
    return last;
}

// log_miss[j] = log(1 - p_j); first success slot by inversion of the geometric CDF.
double slotted_replication(std::span<const double> log_miss, CounterStream& rng) {
    double last = 1.0;
    for (double lm : log_miss) {
        const double u = rng.uniform_positive();
        if (lm == -INFINITY) continue;  // p = 1: slot 1
        last = std::max(last, 1.0 + std::floor(std::log(u) / lm));
    }
    return last;
}

}  // namespace

SimulationReport simulate_discovery(const ProbabilityVector& p, TimeModel model, std::uint64_t reps,
                                    std::uint64_t seed, Exec exec) {
    if (reps < kMinReps) {
        throw Error(ErrorCode::TooFewReps,
                    "need at least " + std::to_string(kMinReps) + " replications, got " + std::to_string(reps));
    }
    std::vector<double> params;
    params.reserve(p.size());
    for (double v : p.values()) {
        params.push_back(model == TimeModel::ContinuousExponential ? v : std::log1p(-v));
    }

    const std::uint64_t blocks = (reps + kBlockSize - 1) / kBlockSize;
    std::vector<Moments> partial(blocks);
    std::atomic<bool> cap_exceeded{false};

#pragma omp parallel for schedule(dynamic, 4) if (exec == Exec::Parallel)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
        const std::uint64_t first = static_cast<std::uint64_t>(b) * kBlockSize;
        const std::uint64_t last = std::min(reps, first + kBlockSize);
        Moments& m = partial[static_cast<std::size_t>(b)];
        for (std::uint64_t r = first; r < last; ++r) {
            CounterStream rng(seed, r);
            double value = 0.0;
            if (model == TimeModel::ContinuousExponential) {
                value = exponential_replication(params, rng);
            } else {
                value = slotted_replication(params, rng);
                if (value > kMaxSlots) cap_exceeded.store(true, std::memory_order_relaxed);
            }
            m.push(value);
        }
    }
    if (cap_exceeded.load()) {
        throw Error(ErrorCode::SlotCapExceeded, "a replication ran past the slot cap");
    }

    Moments total;
    for (const Moments& m : partial) total.merge(m);

    SimulationReport report;
    report.reps = reps;
    report.model = model;
    report.seed = seed;
    report.mean = total.mean;
    const double variance = total.m2 / (total.count - 1.0);
    report.std_error = std::sqrt(variance / total.count);
    report.ci95_low = report.mean - 1.96 * report.std_error;
    report.ci95_high = report.mean + 1.96 * report.std_error;
    return report;
}

}  // namespace ndbound
