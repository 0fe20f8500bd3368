#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "ndbound/core_model.hpp"
#include "ndbound/exec.hpp"

namespace ndbound {

enum class ExpectationMethod { InclusionExclusion, Quadrature, SlottedInclusionExclusion };

std::string_view to_string(ExpectationMethod method);

struct ExpectationReport {
    double value = 0.0;
    std::size_t n = 0;
    ExpectationMethod method = ExpectationMethod::InclusionExclusion;
    // Subset terms for the inclusion-exclusion methods, integrand evaluations
    // for quadrature.
    std::uint64_t terms_evaluated = 0;
};

/// Expected time for a node to hear from every neighbor when neighbor j is
/// heard after an exponential wait of rate p_j:
///
///     sum over non-empty S of (-1)^{|S|+1} / sum_{j in S} p_j
///
/// Throws Error{TooManyNeighbors} when p.size() > max_exact_n.
ExpectationReport expected_discovery_time(const ProbabilityVector& p,
                                          std::size_t max_exact_n = kDefaultMaxExactN,
                                          Exec exec = Exec::Parallel);

/// Same quantity as expected_discovery_time, by adaptive Gauss-Kronrod
/// integration of the survival function 1 - prod_j (1 - exp(-p_j t)) over a
/// truncated half-line. rel_tol must lie in (0, 1e-3].
/// Throws Error{NoConvergence} when the panel budget runs out.
ExpectationReport expected_time_quadrature(const ProbabilityVector& p, double rel_tol);

/// Expected slot of the last first-success when neighbor j succeeds in each
/// slot independently with probability p_j (max of geometric variables):
///
///     sum over non-empty S of (-1)^{|S|+1} / (1 - prod_{j in S} (1 - p_j))
ExpectationReport slotted_expected_time(const ProbabilityVector& p,
                                        std::size_t max_exact_n = kDefaultMaxExactN,
                                        Exec exec = Exec::Parallel);

/// Dispatch on the time model: exponential -> expected_discovery_time,
/// slotted -> slotted_expected_time.
ExpectationReport expected_time(const ProbabilityVector& p, TimeModel model,
                                std::size_t max_exact_n = kDefaultMaxExactN);

// Throws Error{TooManyNeighbors} when n > cap.
void check_enumeration_cap(std::size_t n, std::size_t cap);

}  // namespace ndbound
