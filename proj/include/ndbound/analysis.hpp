#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ndbound/core_model.hpp"
#include "ndbound/exec.hpp"
#include "ndbound/simulator.hpp"

namespace ndbound {

struct AnalysisOptions {
    bool exact = true;
    bool simulate = false;
    TimeModel model = TimeModel::ContinuousExponential;
    std::uint64_t reps = 100000;
    std::uint64_t seed = 42;
    std::size_t max_exact_n = kDefaultMaxExactN;
};

struct AnalysisRow {
    std::string node_id;
    std::size_t n = 0;
    double bound = 0.0;
    std::optional<double> exact;          // exponential-model expectation
    std::optional<double> gap;            // exact - bound
    std::optional<double> slotted_exact;  // slotted expectation, slotted model only
    std::optional<SimulationReport> simulation;
    std::optional<std::string> error;  // per-node failure, e.g. TooManyNeighbors
};

/// One row per node, sorted by node id. Per-node failures are recorded in
/// the row and never abort the other nodes. Nodes are analyzed in parallel.
/// exact and gap always refer to the exponential-model sum, the quantity the
/// H_n / mean(p) bound is proved for. With the slotted model the slotted sum
/// is reported separately, since it can fall below the bound.
std::vector<AnalysisRow> analyze_topology(const NetworkTopology& topology,
                                          const AnalysisOptions& options,
                                          Exec exec = Exec::Parallel);

}  // namespace ndbound
