#include "ndbound/bounds.hpp"

#include "ndbound/exact_expectation.hpp"

namespace ndbound {

double harmonic_number(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "harmonic number needs n >= 1");
    double sum = 0.0;
    for (std::size_t k = n; k >= 1; --k) sum += 1.0 / static_cast<double>(k);
    return sum;
}

BoundReport lower_bound(const ProbabilityVector& p, std::size_t max_exact_n) {
    BoundReport report;
    report.harmonic = harmonic_number(p.size());
    report.mean_probability = p.mean();
    report.bound = report.harmonic / report.mean_probability;
    if (p.size() <= max_exact_n) {
        report.exact = expected_discovery_time(p, max_exact_n).value;
        report.gap = *report.exact - report.bound;
    }
    return report;
}

}  // namespace ndbound
