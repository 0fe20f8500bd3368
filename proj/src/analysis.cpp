#include "ndbound/analysis.hpp"

#include <cstdint>
#include <iterator>

#include "ndbound/bounds.hpp"
#include "ndbound/exact_expectation.hpp"

namespace ndbound {

std::vector<AnalysisRow> analyze_topology(const NetworkTopology& topology,
                                          const AnalysisOptions& options, Exec exec) {
    std::vector<const NetworkTopology::NodeMap::value_type*> nodes;
    for (const auto& entry : topology.nodes()) nodes.push_back(&entry);
    std::vector<AnalysisRow> rows(nodes.size());

#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(nodes.size()); ++i) {
        const auto& [id, p] = *nodes[static_cast<std::size_t>(i)];
        AnalysisRow& row = rows[static_cast<std::size_t>(i)];
        row.node_id = id;
        row.n = p.size();
        row.bound = lower_bound(p, 0).bound;  // cap 0: bound only
        try {
            if (options.exact) {
                // Inner kernels run serially; parallelism is across nodes here.
                row.exact = expected_discovery_time(p, options.max_exact_n, Exec::Serial).value;
                row.gap = *row.exact - row.bound;
                if (options.model == TimeModel::SlottedGeometric) {
                    row.slotted_exact = slotted_expected_time(p, options.max_exact_n, Exec::Serial).value;
                }
            }
            if (options.simulate) {
                row.simulation = simulate_discovery(p, options.model, options.reps, options.seed,
                                                    Exec::Serial);
            }
        } catch (const Error& e) {
            row.error = std::string(to_string(e.code())) + ": " + e.what();
        }
    }
    return rows;
}

}  // namespace ndbound
