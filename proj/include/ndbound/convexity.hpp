#pragma once

#include <cstddef>

#include "ndbound/core_model.hpp"

// Numerical checks of the pairwise-averaging argument. For a pair (j, k) the
// inclusion-exclusion sum splits into four parts: terms holding p_j but not
// p_k, terms holding p_k but not p_j, terms holding both, and terms holding
// neither. The first two parts are the same function F of a single argument,
// and F is convex, which is what makes averaging p_j and p_k never increase
// the expected time.
namespace ndbound {

/// F(x) = sum over R subset of rest of (-1)^{|R|} / (x + sum_{r in R} p_r),
/// where rest = all neighbors except pair.j() and pair.k(). The empty R is
/// included. Symmetric in the pair by construction.
/// Throws Error{OutOfRange} unless x in (0, 1]; Error{TooManyNeighbors}.
double f_term(const ProbabilityVector& p, NeighborPair pair, double x,
              std::size_t max_exact_n = kDefaultMaxExactN);

/// F''(x) = sum over R of (-1)^{|R|} * 2 / (x + sum_R p_r)^3.
double f_second_derivative(const ProbabilityVector& p, NeighborPair pair, double x,
                           std::size_t max_exact_n = kDefaultMaxExactN);

/// Z(t) = prod_{r in rest} (1 - exp(-p_r t)), which equals 1 - V(t) with V the
/// inclusion-exclusion expansion of the union probability of independent events
/// of probability exp(-p_r t). F''(x) is the Laplace transform of t^2 Z(t) at x,
/// so Z >= 0 implies convexity. Throws Error{OutOfRange} for t < 0.
double z_value(const ProbabilityVector& p, NeighborPair pair, double t,
               std::size_t max_exact_n = kDefaultMaxExactN);

struct DecompositionReport {
    double f_j = 0.0;     // F(p_j)
    double f_k = 0.0;     // F(p_k)
    double c_term = 0.0;  // terms containing both p_j and p_k
    double i_term = 0.0;  // terms containing neither
    double total = 0.0;
    double residual = 0.0;  // |total - expected_discovery_time(p)|
};

/// Requires n >= 2 (a pair exists). Throws Error{TooManyNeighbors}.
DecompositionReport verify_decomposition(const ProbabilityVector& p, NeighborPair pair,
                                         std::size_t max_exact_n = kDefaultMaxExactN);

}  // namespace ndbound
