#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ndbound/error.hpp"

namespace ndbound {

inline constexpr std::size_t kDefaultMaxExactN = 24;

/// Per-neighbor discovery probabilities seen by one node. Every element lies
/// in (0, 1]. Instances can only be obtained through validate(), so holding
/// one is proof the invariant holds.
class ProbabilityVector {
public:
    /// Throws Error{EmptyVector | NonFinite | OutOfRange} naming the first
    /// offending index.
    static ProbabilityVector validate(std::span<const double> values);
    static ProbabilityVector validate(std::initializer_list<double> values) {
        return validate(std::span<const double>(values.begin(), values.size()));
    }

    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    double min() const;
    double max() const;
    double mean() const;

    friend bool operator==(const ProbabilityVector&, const ProbabilityVector&) = default;

private:
    explicit ProbabilityVector(std::vector<double> v) : values_(std::move(v)) {}

    std::vector<double> values_;
};

/// An ordered pair of distinct indices into a ProbabilityVector of size n.
class NeighborPair {
public:
    /// Throws Error{BadPair} when j == k or either index is >= n.
    static NeighborPair make(std::size_t j, std::size_t k, std::size_t n);

    std::size_t j() const noexcept { return j_; }
    std::size_t k() const noexcept { return k_; }
    NeighborPair swapped() const noexcept { return NeighborPair(k_, j_); }

private:
    NeighborPair(std::size_t j, std::size_t k) : j_(j), k_(k) {}
    std::size_t j_;
    std::size_t k_;
};

enum class TimeModel { ContinuousExponential, SlottedGeometric };

std::string_view to_string(TimeModel model);

/// Named nodes, each with its own neighbor probability vector. Iteration
/// order is sorted by node id.
class NetworkTopology {
public:
    using NodeMap = std::map<std::string, ProbabilityVector, std::less<>>;

    /// Throws Error{EmptyVector} when `nodes` is empty.
    explicit NetworkTopology(NodeMap nodes);

    const NodeMap& nodes() const noexcept { return nodes_; }
    std::size_t size() const noexcept { return nodes_.size(); }

private:
    NodeMap nodes_;
};

}  // namespace ndbound
