#include "ndbound/topology_io.hpp"

#include <iterator>
#include <vector>

#include <json.hpp>

namespace ndbound {

using nlohmann::json;

NetworkTopology parse_topology(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_object()) {
        throw Error(ErrorCode::ParseError, "topology must be an object with a \"nodes\" object");
    }

    NetworkTopology::NodeMap nodes;
    for (const auto& [id, node] : doc["nodes"].items()) {
        if (!node.is_object() || !node.contains("probabilities") || !node["probabilities"].is_array()) {
            throw Error(ErrorCode::ParseError, "node \"" + id + "\" needs a \"probabilities\" array");
        }
        std::vector<double> values;
        for (const auto& v : node["probabilities"]) {
            if (!v.is_number()) {
                throw Error(ErrorCode::ParseError, "node \"" + id + "\" has a non-numeric probability");
            }
            values.push_back(v.get<double>());
        }
        try {
            nodes.emplace(id, ProbabilityVector::validate(values));
        } catch (const Error& e) {
            throw Error(e.code(), "node \"" + id + "\": " + e.what(), e.index());
        }
    }
    if (nodes.empty()) throw Error(ErrorCode::EmptyVector, "topology has no nodes");
    return NetworkTopology(std::move(nodes));
}

NetworkTopology read_topology(std::istream& in) {
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_topology(text);
}

std::string write_topology(const NetworkTopology& topology, int indent) {
    json nodes = json::object();
    for (const auto& [id, p] : topology.nodes()) {
        nodes[id] = {{"probabilities", std::vector<double>(p.values().begin(), p.values().end())}};
    }
    return json{{"nodes", nodes}}.dump(indent);
}

}  // namespace ndbound
