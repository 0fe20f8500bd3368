#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include <omp.h>

#include "ndbound/exact_expectation.hpp"
#include "oracles.hpp"

using namespace ndbound;

namespace {

// Frozen from oracle::naive_expectation / naive_slotted_expectation; each test
// below re-derives them from the oracle as well.
constexpr double kPairExact = 5.571428571428571;     // 1/0.2 + 1/0.5 - 1/0.7
constexpr double kTripleHalf = 3.6666666666666665;   // H_3 / 0.5
constexpr double kSlottedHalfPair = 2.6666666666666665;  // 2 + 2 - 1/0.75

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(ExpectedDiscoveryTime, SpecExamples) {
    EXPECT_EQ(expected_discovery_time(ProbabilityVector::validate({0.5})).value, 2.0);

    EXPECT_NEAR(oracle::naive_expectation({0.2, 0.5}), kPairExact, 1e-15);
    const auto pair = expected_discovery_time(ProbabilityVector::validate({0.2, 0.5}));
    EXPECT_NEAR(pair.value, kPairExact, 1e-14);
    EXPECT_EQ(pair.terms_evaluated, 3U);
    EXPECT_EQ(pair.method, ExpectationMethod::InclusionExclusion);

    EXPECT_NEAR(oracle::naive_expectation({0.5, 0.5, 0.5}), kTripleHalf, 1e-15);
    EXPECT_NEAR(expected_discovery_time(ProbabilityVector::validate({0.5, 0.5, 0.5})).value, kTripleHalf,
                1e-14);
}

TEST(ExpectedDiscoveryTime, MatchesNaiveOracle) {
    std::mt19937_64 rng(1);
    for (std::size_t n = 1; n <= 14; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto v = oracle::random_probabilities(rng, n);
            EXPECT_LT(rel(expected_discovery_time(ProbabilityVector::validate(v)).value,
                          oracle::naive_expectation(v)),
                      1e-13)
                << "n=" << n;
        }
    }
}

TEST(ExpectedDiscoveryTime, CapIsEnforced) {
    const std::vector<double> v(25, 0.5);
    try {
        expected_discovery_time(ProbabilityVector::validate(v));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TooManyNeighbors);
    }
    EXPECT_THROW(expected_discovery_time(ProbabilityVector::validate({0.5, 0.5, 0.5}), 2), Error);
    EXPECT_NO_THROW(expected_discovery_time(ProbabilityVector::validate({0.5, 0.5}), 2));
}

TEST(ExpectedDiscoveryTime, SingleNeighborIsReciprocal) {
    for (double p : {1.0, 0.5, 0.3, 0.01, 1e-6, 0.7777}) {
        EXPECT_EQ(expected_discovery_time(ProbabilityVector::validate({p})).value, 1.0 / p);
    }
}

TEST(ExpectedDiscoveryTime, PermutationInvariant) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        auto v = oracle::random_probabilities(rng, 1 + trial % 14);
        const double reference = expected_discovery_time(ProbabilityVector::validate(v)).value;
        for (int shuffle = 0; shuffle < 5; ++shuffle) {
            std::shuffle(v.begin(), v.end(), rng);
            EXPECT_LE(rel(expected_discovery_time(ProbabilityVector::validate(v)).value, reference), 1e-15);
        }
    }
}

TEST(ExpectedDiscoveryTime, MonotoneInEachCoordinate) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        auto v = oracle::random_probabilities(rng, 1 + trial % 10);
        const std::size_t j = static_cast<std::size_t>(trial) % v.size();
        if (v[j] >= 0.999) continue;
        const double before = expected_discovery_time(ProbabilityVector::validate(v)).value;
        v[j] += (1.0 - v[j]) * std::max(1e-4, unit(rng));
        const double after = expected_discovery_time(ProbabilityVector::validate(v)).value;
        EXPECT_LE(after, before * (1.0 + 1e-15));
    }
}

TEST(ExpectedDiscoveryTime, FloorIsOneOverMaxProbability) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 500; ++trial) {
        const auto p = ProbabilityVector::validate(oracle::random_probabilities(rng, 1 + trial % 12));
        EXPECT_GE(expected_discovery_time(p).value, 1.0 / p.max() * (1.0 - 1e-15));
    }
}

TEST(ExpectedDiscoveryTime, SerialAndParallelAreBitIdentical) {
    std::mt19937_64 rng(13);
    const int saved = omp_get_max_threads();
    for (std::size_t n : {3U, 12U, 16U, 18U}) {
        const auto p = ProbabilityVector::validate(oracle::random_probabilities(rng, n));
        const double serial = expected_discovery_time(p, 24, Exec::Serial).value;
        for (int threads : {1, 2, 4}) {
            omp_set_num_threads(threads);
            EXPECT_EQ(expected_discovery_time(p, 24, Exec::Parallel).value, serial);
            EXPECT_EQ(slotted_expected_time(p, 24, Exec::Parallel).value,
                      slotted_expected_time(p, 24, Exec::Serial).value);
        }
    }
    omp_set_num_threads(saved);
}

TEST(Quadrature, SpecExamples) {
    EXPECT_NEAR(expected_time_quadrature(ProbabilityVector::validate({0.5}), 1e-9).value, 2.0, 2e-9);
    EXPECT_NEAR(expected_time_quadrature(ProbabilityVector::validate({0.2, 0.5}), 1e-9).value, kPairExact,
                6e-9);
    const auto q = expected_time_quadrature(ProbabilityVector::validate({0.5, 0.5, 0.5}), 1e-9);
    EXPECT_NEAR(q.value, kTripleHalf, 4e-9);
    EXPECT_EQ(q.method, ExpectationMethod::Quadrature);
    EXPECT_GT(q.terms_evaluated, 0U);
}

TEST(Quadrature, RejectsBadTolerance) {
    const auto p = ProbabilityVector::validate({0.5});
    EXPECT_THROW(expected_time_quadrature(p, 0.0), Error);
    EXPECT_THROW(expected_time_quadrature(p, 1e-2), Error);
    EXPECT_NO_THROW(expected_time_quadrature(p, 1e-3));
}

TEST(Quadrature, AgreesWithInclusionExclusion) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto p = ProbabilityVector::validate(oracle::random_probabilities(rng, 1 + trial % 10));
        const double ie = expected_discovery_time(p).value;
        EXPECT_LE(rel(expected_time_quadrature(p, 1e-10).value, ie), 1e-8);
    }
}

TEST(Slotted, SpecExamples) {
    EXPECT_EQ(slotted_expected_time(ProbabilityVector::validate({1.0})).value, 1.0);
    EXPECT_NEAR(slotted_expected_time(ProbabilityVector::validate({0.5})).value, 2.0, 1e-15);
    EXPECT_NEAR(oracle::naive_slotted_expectation({0.5, 0.5}), kSlottedHalfPair, 1e-15);
    const auto r = slotted_expected_time(ProbabilityVector::validate({0.5, 0.5}));
    EXPECT_NEAR(r.value, kSlottedHalfPair, 1e-15);
    EXPECT_EQ(r.method, ExpectationMethod::SlottedInclusionExclusion);
}

// The frozen slotted value, checked against brute-force Bernoulli stepping.
TEST(Slotted, BruteForceMonteCarloAgrees) {
    const auto mc = oracle::brute_force_slotted({0.5, 0.5}, 10'000'000, 2024);
    EXPECT_LE(std::abs(mc.mean - kSlottedHalfPair), 3.0 * mc.std_error);
}

TEST(Slotted, MatchesNaiveOracleIncludingCertainNeighbors) {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 300; ++trial) {
        auto v = oracle::random_probabilities(rng, 1 + trial % 12);
        if (trial % 3 == 0) v[0] = 1.0;
        EXPECT_LT(rel(slotted_expected_time(ProbabilityVector::validate(v)).value,
                      oracle::naive_slotted_expectation(v)),
                  1e-12);
    }
    EXPECT_EQ(slotted_expected_time(ProbabilityVector::validate({1.0, 1.0, 1.0})).value, 1.0);
    EXPECT_NEAR(slotted_expected_time(ProbabilityVector::validate({1.0, 0.5})).value, 2.0, 1e-15);
}

TEST(Slotted, CapIsEnforced) {
    EXPECT_THROW(slotted_expected_time(ProbabilityVector::validate({0.5, 0.5, 0.5}), 2), Error);
}
