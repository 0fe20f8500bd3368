#include "ndbound/convexity.hpp"

#include <cmath>
#include <vector>

#include "ndbound/exact_expectation.hpp"
#include "ndbound/gray_sum.hpp"

namespace ndbound {
namespace {

std::vector<double> remainder(const ProbabilityVector& p, NeighborPair pair) {
    std::vector<double> rest;
    rest.reserve(p.size() - 2);
    for (std::size_t r = 0; r < p.size(); ++r) {
        if (r != pair.j() && r != pair.k()) rest.push_back(p[r]);
    }
    return rest;
}

void check_x(double x) {
    if (!(x > 0.0 && x <= 1.0)) throw Error(ErrorCode::OutOfRange, "x must lie in (0, 1]");
}

// sum over R subset of rest (empty included) of (-1)^{|R|} / (x + sum_R)
double shifted_reciprocal_sum(const std::vector<double>& rest, dd::DD x) {
    auto term = [x](dd::DD sum) { return dd::reciprocal(dd::add(sum, x)); };
    return alternating_subset_sum(rest, term, true).value();
}

}  // namespace

double f_term(const ProbabilityVector& p, NeighborPair pair, double x, std::size_t max_exact_n) {
    check_x(x);
    check_enumeration_cap(p.size(), max_exact_n);
    return shifted_reciprocal_sum(remainder(p, pair), dd::DD{x, 0.0});
}

double f_second_derivative(const ProbabilityVector& p, NeighborPair pair, double x,
                           std::size_t max_exact_n) {
    check_x(x);
    check_enumeration_cap(p.size(), max_exact_n);
    auto term = [x](dd::DD sum) {
        const dd::DD r = dd::reciprocal(dd::add(sum, x));
        return dd::scale(dd::mul(dd::mul(r, r), r), 2.0);
    };
    return alternating_subset_sum(remainder(p, pair), term, true).value();
}

double z_value(const ProbabilityVector& p, NeighborPair pair, double t, std::size_t max_exact_n) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw Error(ErrorCode::OutOfRange, "t must be finite and >= 0");
    check_enumeration_cap(p.size(), max_exact_n);
    double z = 1.0;
    for (double v : remainder(p, pair)) z *= -std::expm1(-v * t);
    return z;
}

DecompositionReport verify_decomposition(const ProbabilityVector& p, NeighborPair pair,
                                         std::size_t max_exact_n) {
    check_enumeration_cap(p.size(), max_exact_n);
    const std::vector<double> rest = remainder(p, pair);
    const double pj = p[pair.j()];
    const double pk = p[pair.k()];

    DecompositionReport report;
    report.f_j = shifted_reciprocal_sum(rest, dd::DD{pj, 0.0});
    report.f_k = shifted_reciprocal_sum(rest, dd::DD{pk, 0.0});
    // Terms {j, k} + R carry sign (-1)^{|R|+3}.
    report.c_term = -shifted_reciprocal_sum(rest, dd::two_sum(pj, pk));
    if (!rest.empty()) {
        auto term = [](dd::DD sum) { return dd::reciprocal(sum); };
        report.i_term = -alternating_subset_sum(rest, term, false).value();
    }
    report.total = report.f_j + report.f_k + report.c_term + report.i_term;
    report.residual = std::abs(report.total - expected_discovery_time(p, max_exact_n).value);
    return report;
}

}  // namespace ndbound
