#pragma once

#include <cstdint>

#include "ndbound/core_model.hpp"
#include "ndbound/exec.hpp"

namespace ndbound {

inline constexpr std::uint64_t kMinReps = 100;
inline constexpr double kMaxSlots = 1e9;

struct SimulationReport {
    double mean = 0.0;
    double std_error = 0.0;  // sample std / sqrt(reps)
    double ci95_low = 0.0;   // mean - 1.96 std_error
    double ci95_high = 0.0;
    std::uint64_t reps = 0;
    TimeModel model = TimeModel::ContinuousExponential;
    std::uint64_t seed = 0;

    friend bool operator==(const SimulationReport&, const SimulationReport&) = default;
};

/// Monte Carlo estimate of the time to discover every neighbor.
///
/// ContinuousExponential: each neighbor is heard after an Exp(p_j) wait; a
/// replication records the largest wait. SlottedGeometric: each neighbor is
/// heard at its first Bernoulli(p_j) success in slots 1, 2, ...; a replication
/// records the slot of the last first-success.
///
/// Replication r draws from CounterStream(seed, r). Replications are reduced
/// in fixed-size blocks merged in index order, so the report is bit-identical
/// for every thread count and for Exec::Serial.
///
/// Throws Error{TooFewReps} for reps < 100, Error{SlotCapExceeded} if a
/// slotted replication runs past 1e9 slots.
SimulationReport simulate_discovery(const ProbabilityVector& p, TimeModel model, std::uint64_t reps,
                                    std::uint64_t seed, Exec exec = Exec::Parallel);

}  // namespace ndbound
