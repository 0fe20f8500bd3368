#include <gtest/gtest.h>

#include <random>

#include "ndbound/bounds.hpp"
#include "ndbound/exact_expectation.hpp"
#include "oracles.hpp"

using namespace ndbound;

TEST(HarmonicNumber, SmallValues) {
    EXPECT_EQ(harmonic_number(1), 1.0);
    EXPECT_EQ(harmonic_number(2), 1.5);
    EXPECT_NEAR(harmonic_number(4), 1.0 + 0.5 + 1.0 / 3.0 + 0.25, 1e-15);
    EXPECT_NEAR(harmonic_number(4), 2.0833333333333335, 1e-15);
    EXPECT_THROW(harmonic_number(0), Error);
}

TEST(LowerBound, SpecExamples) {
    const auto single = lower_bound(ProbabilityVector::validate({0.5}));
    EXPECT_EQ(single.bound, 2.0);
    EXPECT_EQ(*single.exact, 2.0);
    EXPECT_EQ(*single.gap, 0.0);

    const auto pair = lower_bound(ProbabilityVector::validate({0.2, 0.5}));
    EXPECT_NEAR(pair.mean_probability, 0.35, 1e-16);
    EXPECT_NEAR(pair.bound, 1.5 / 0.35, 1e-14);
    EXPECT_NEAR(*pair.exact, oracle::naive_expectation({0.2, 0.5}), 1e-14);
    EXPECT_NEAR(*pair.gap, 1.2857142857142856, 1e-13);

    const auto triple = lower_bound(ProbabilityVector::validate({0.5, 0.5, 0.5}));
    EXPECT_NEAR(triple.bound, 3.6666666666666665, 1e-14);
    EXPECT_LE(std::abs(*triple.gap), 1e-12);
}

TEST(LowerBound, BoundOnlyAboveCap) {
    const std::vector<double> v(30, 0.5);
    const auto r = lower_bound(ProbabilityVector::validate(v));
    EXPECT_FALSE(r.exact);
    EXPECT_FALSE(r.gap);
    EXPECT_NEAR(r.bound, harmonic_number(30) / 0.5, 1e-12);
}

TEST(LowerBound, HoldsOnRandomVectors) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10000; ++trial) {
        const auto p = ProbabilityVector::validate(oracle::random_probabilities(rng, 1 + trial % 12));
        const auto r = lower_bound(p);
        ASSERT_TRUE(r.exact);
        EXPECT_GE(*r.exact, r.bound - 1e-12);
        EXPECT_EQ(*r.gap, *r.exact - r.bound);
    }
}

TEST(LowerBound, TightForEqualProbabilities) {
    for (std::size_t n = 1; n <= 16; ++n) {
        for (double p : {0.01, 0.1, 0.37, 0.5, 0.9, 1.0}) {
            const auto r = lower_bound(ProbabilityVector::validate(std::vector<double>(n, p)));
            EXPECT_LE(std::abs(*r.exact - r.bound) / r.bound, 1e-12) << "n=" << n << " p=" << p;
        }
    }
}

TEST(LowerBound, ScalesInverselyWithProbabilities) {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> unit(0.05, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        const auto v = oracle::random_probabilities(rng, 1 + trial % 12);
        const double c = unit(rng);
        std::vector<double> scaled(v);
        for (double& x : scaled) x *= c;
        const double base = lower_bound(ProbabilityVector::validate(v), 0).bound;
        const double after = lower_bound(ProbabilityVector::validate(scaled), 0).bound;
        EXPECT_NEAR(after, base / c, 1e-14 * base / c);
    }
}
