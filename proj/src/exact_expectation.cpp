#include "ndbound/exact_expectation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "ndbound/gray_sum.hpp"

namespace ndbound {

std::string_view to_string(ExpectationMethod method) {
    switch (method) {
        case ExpectationMethod::InclusionExclusion: return "InclusionExclusion";
        case ExpectationMethod::Quadrature: return "Quadrature";
        case ExpectationMethod::SlottedInclusionExclusion: return "SlottedInclusionExclusion";
    }
    return "Unknown";
}

void check_enumeration_cap(std::size_t n, std::size_t cap) {
    if (n > cap) {
        throw Error(ErrorCode::TooManyNeighbors,
                    "n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap));
    }
    if (n >= 63) {
        throw Error(ErrorCode::TooManyNeighbors, "n = " + std::to_string(n) + " cannot be enumerated");
    }
}

ExpectationReport expected_discovery_time(const ProbabilityVector& p, std::size_t max_exact_n,
                                          Exec exec) {
    check_enumeration_cap(p.size(), max_exact_n);
    auto term = [](dd::DD sum) { return dd::reciprocal(sum); };
    // Non-empty subsets carry (-1)^{|S|+1}, the kernel's sign negated.
    const dd::DD total = alternating_subset_sum(p.values(), term, false, exec);
    return {-total.value(), p.size(), ExpectationMethod::InclusionExclusion,
            (std::uint64_t{1} << p.size()) - 1};
}

ExpectationReport slotted_expected_time(const ProbabilityVector& p, std::size_t max_exact_n,
                                        Exec exec) {
    check_enumeration_cap(p.size(), max_exact_n);
    const std::uint64_t terms = (std::uint64_t{1} << p.size()) - 1;

    // Subsets holding a certain neighbor (p = 1) have denominator 1, and their
    // signed contributions cancel unless every neighbor is certain. So the
    // answer is 1 in that case and the sum over uncertain neighbors otherwise.
    std::vector<double> log_miss;
    for (double v : p.values()) {
        if (v < 1.0) log_miss.push_back(std::log1p(-v));
    }
    if (log_miss.empty()) return {1.0, p.size(), ExpectationMethod::SlottedInclusionExclusion, terms};

    auto term = [](dd::DD log_all_miss) {
        return dd::reciprocal(-std::expm1(log_all_miss.hi + log_all_miss.lo));
    };
    const dd::DD total = alternating_subset_sum(log_miss, term, false, exec);
    return {-total.value(), p.size(), ExpectationMethod::SlottedInclusionExclusion, terms};
}

ExpectationReport expected_time(const ProbabilityVector& p, TimeModel model, std::size_t max_exact_n) {
    return model == TimeModel::ContinuousExponential ? expected_discovery_time(p, max_exact_n)
                                                     : slotted_expected_time(p, max_exact_n);
}

namespace {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1] (non-negative half).
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd Kronrod nodes 1, 3, 5, 7.
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr std::size_t kMaxPanels = 20000;
constexpr std::size_t kInitialPanels = 16;

struct Panel {
    double a;
    double b;
    double estimate;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel gauss_kronrod(const F& f, double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(centre);
    double kronrod = kKronrodWeights[7] * fc;
    double gauss = kGaussWeights[3] * fc;
    for (std::size_t i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[i];
        const double pair = f(centre - dx) + f(centre + dx);
        kronrod += kKronrodWeights[i] * pair;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

ExpectationReport expected_time_quadrature(const ProbabilityVector& p, double rel_tol) {
    if (!(rel_tol > 0.0 && rel_tol <= 1e-3)) {
        throw Error(ErrorCode::OutOfRange, "rel_tol must lie in (0, 1e-3]");
    }
    const auto probs = p.values();
    const double n = static_cast<double>(p.size());
    const double p_min = p.min();

    std::uint64_t evaluations = 0;
    // P(T > t) = 1 - prod(1 - e^{-p t}), evaluated in log space so neither end
    // of the range loses digits to cancellation.
    auto survival = [&](double t) {
        ++evaluations;
        double log_all_found = 0.0;
        for (double v : probs) log_all_found += std::log(-std::expm1(-v * t));
        return -std::expm1(log_all_found);
    };

    // Beyond T the tail integral is at most n e^{-p_min T} / p_min. Keep it
    // below a tenth of the tolerance, measured against the floor 1 / max(p)
    // that the answer can never go under.
    const double tail_budget = 0.1 * rel_tol / p.max();
    const double upper = std::log(n / (p_min * tail_budget)) / p_min;
    const double target = 0.25 * rel_tol;

    std::priority_queue<Panel> panels;
    double estimate = 0.0;
    double error = 0.0;
    for (std::size_t i = 0; i < kInitialPanels; ++i) {
        const double a = upper * static_cast<double>(i) / kInitialPanels;
        const double b = upper * static_cast<double>(i + 1) / kInitialPanels;
        Panel panel = gauss_kronrod(survival, a, b);
        estimate += panel.estimate;
        error += panel.error;
        panels.push(panel);
    }

    while (error > target * std::abs(estimate)) {
        if (panels.size() >= kMaxPanels) {
            throw Error(ErrorCode::NoConvergence, "quadrature panel budget exhausted");
        }
        const Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Panel left = gauss_kronrod(survival, worst.a, mid);
        const Panel right = gauss_kronrod(survival, mid, worst.b);
        estimate += left.estimate + right.estimate - worst.estimate;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }

    // Re-sum from the panels to shed drift from the running updates.
    double total = 0.0;
    while (!panels.empty()) {
        total += panels.top().estimate;
        panels.pop();
    }
    return {total, p.size(), ExpectationMethod::Quadrature, evaluations};
}

}  // namespace ndbound
