#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "ndbound/core_model.hpp"

// JSON topology documents:
//   {"nodes": {"<id>": {"probabilities": [<float>, ...]}, ...}}
namespace ndbound {

/// Throws Error{ParseError} for malformed JSON or schema violations, and the
/// validation errors of ProbabilityVector (message names node and index).
NetworkTopology parse_topology(std::string_view json_text);
NetworkTopology read_topology(std::istream& in);

/// Inverse of parse_topology; doubles are written round-trip exact.
std::string write_topology(const NetworkTopology& topology, int indent = 2);

}  // namespace ndbound
