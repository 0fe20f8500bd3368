#include "ndbound/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ndbound {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyVector: return "EmptyVector";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::TooManyNeighbors: return "TooManyNeighbors";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::BadPair: return "BadPair";
        case ErrorCode::BlockOutOfRange: return "BlockOutOfRange";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::TooFewReps: return "TooFewReps";
        case ErrorCode::SlotCapExceeded: return "SlotCapExceeded";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

std::string_view to_string(TimeModel model) {
    return model == TimeModel::ContinuousExponential ? "exponential" : "slotted";
}

ProbabilityVector ProbabilityVector::validate(std::span<const double> values) {
    if (values.empty()) throw Error(ErrorCode::EmptyVector, "probability vector is empty");
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double v = values[i];
        if (!std::isfinite(v)) {
            throw Error(ErrorCode::NonFinite,
                        "probability at index " + std::to_string(i) + " is not finite", i);
        }
        if (!(v > 0.0 && v <= 1.0)) {
            throw Error(ErrorCode::OutOfRange,
                        "probability at index " + std::to_string(i) + " is outside (0, 1]", i);
        }
    }
    return ProbabilityVector(std::vector<double>(values.begin(), values.end()));
}

double ProbabilityVector::min() const { return *std::min_element(values_.begin(), values_.end()); }
double ProbabilityVector::max() const { return *std::max_element(values_.begin(), values_.end()); }

double ProbabilityVector::mean() const {
    return std::accumulate(values_.begin(), values_.end(), 0.0) / static_cast<double>(values_.size());
}

NeighborPair NeighborPair::make(std::size_t j, std::size_t k, std::size_t n) {
    if (j == k) throw Error(ErrorCode::BadPair, "pair indices must differ", j);
    if (j >= n) throw Error(ErrorCode::BadPair, "pair index " + std::to_string(j) + " out of range", j);
    if (k >= n) throw Error(ErrorCode::BadPair, "pair index " + std::to_string(k) + " out of range", k);
    return NeighborPair(j, k);
}

NetworkTopology::NetworkTopology(NodeMap nodes) : nodes_(std::move(nodes)) {
    if (nodes_.empty()) throw Error(ErrorCode::EmptyVector, "topology has no nodes");
}

}  // namespace ndbound
