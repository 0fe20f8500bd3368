#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "ndbound/core_model.hpp"
#include "ndbound/topology_io.hpp"
#include "oracles.hpp"

using namespace ndbound;

namespace {

ErrorCode code_of(std::vector<double> values) {
    try {
        ProbabilityVector::validate(values);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected validation to fail";
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Validate, AcceptsValidVectors) {
    EXPECT_EQ(ProbabilityVector::validate({0.5}).size(), 1U);
    EXPECT_EQ(ProbabilityVector::validate({0.2, 0.5}).size(), 2U);
    EXPECT_EQ(ProbabilityVector::validate({1.0, 1.0}).size(), 2U);
    EXPECT_EQ(ProbabilityVector::validate({0.3, 0.3, 0.3}).size(), 3U);  // duplicates are fine
}

TEST(Validate, ZeroIsOutOfRangeAtItsIndex) {
    try {
        ProbabilityVector::validate({0.2, 0.0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::OutOfRange);
        ASSERT_TRUE(e.index());
        EXPECT_EQ(*e.index(), 1U);
    }
}

TEST(Validate, ReportsFirstOffender) {
    try {
        ProbabilityVector::validate({0.5, 1.5, -1.0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(*e.index(), 1U);
    }
}

TEST(Validate, ErrorKinds) {
    EXPECT_EQ(code_of({}), ErrorCode::EmptyVector);
    EXPECT_EQ(code_of({-0.1}), ErrorCode::OutOfRange);
    EXPECT_EQ(code_of({1.0000001}), ErrorCode::OutOfRange);
    EXPECT_EQ(code_of({0.5, std::nan("")}), ErrorCode::NonFinite);
    EXPECT_EQ(code_of({std::numeric_limits<double>::infinity()}), ErrorCode::NonFinite);
}

// Accepts exactly the vectors whose every element lies in (0, 1].
TEST(Validate, PropertyAcceptsExactlyTheInvariant) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> wide(-0.5, 1.5);
    std::uniform_int_distribution<std::size_t> len(1, 8);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<double> v(len(rng));
        for (double& x : v) x = wide(rng);
        if (trial % 5 == 0) v[0] = 1.0;
        const bool valid = std::all_of(v.begin(), v.end(), [](double x) { return x > 0.0 && x <= 1.0; });
        bool accepted = true;
        try {
            ProbabilityVector::validate(v);
        } catch (const Error&) {
            accepted = false;
        }
        EXPECT_EQ(accepted, valid);
    }
}

TEST(Validate, SerializationRoundTripIsLossless) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        NetworkTopology::NodeMap nodes;
        for (int node = 0; node < 3; ++node) {
            nodes.emplace("n" + std::to_string(node),
                          ProbabilityVector::validate(oracle::random_probabilities(rng, 1 + trial % 7, 1e-9)));
        }
        const NetworkTopology original(std::move(nodes));
        const NetworkTopology back = parse_topology(write_topology(original));
        EXPECT_EQ(back.nodes(), original.nodes());
    }
}

TEST(NeighborPair, RejectsBadPairs) {
    EXPECT_NO_THROW(NeighborPair::make(0, 1, 2));
    EXPECT_THROW(NeighborPair::make(1, 1, 3), Error);
    EXPECT_THROW(NeighborPair::make(0, 2, 2), Error);
    EXPECT_THROW(NeighborPair::make(5, 0, 2), Error);
    const auto pair = NeighborPair::make(2, 0, 3).swapped();
    EXPECT_EQ(pair.j(), 0U);
    EXPECT_EQ(pair.k(), 2U);
}

TEST(NetworkTopology, MustBeNonEmpty) {
    EXPECT_THROW(NetworkTopology(NetworkTopology::NodeMap{}), Error);
}

TEST(ProbabilityVector, Summaries) {
    const auto p = ProbabilityVector::validate({0.2, 0.5, 0.8});
    EXPECT_DOUBLE_EQ(p.min(), 0.2);
    EXPECT_DOUBLE_EQ(p.max(), 0.8);
    EXPECT_DOUBLE_EQ(p.mean(), 0.5);
}
