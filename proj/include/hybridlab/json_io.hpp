#pragma once

#include <string>

#include <json.hpp>

#include "hybridlab/graph.hpp"
#include "hybridlab/lowerbound.hpp"
#include "hybridlab/schemes.hpp"
#include "hybridlab/sim.hpp"

namespace hybridlab {

using nlohmann::json;

// Graph: { "n": int, "edges": [[u, v, w], ...] } with deterministic edge order.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

// Stats: { "rounds", "global_bits_total", "per_node": [...], "cuts": {...} }
json stats_to_json(const RoundStats& s);

// Instance: graph + { "kind", "k", "h", "ell", "X", "roles", "weights" }
json instance_to_json(const GammaInstance& inst);
GammaInstance instance_from_json(const json& j);

// Scheme dump: labels per node, S, parameters, measured stats.
json scheme_to_json(const Scheme& sc);

void write_json_file(const std::string& path, const json& j);
json read_json_file(const std::string& path);

}  // namespace hybridlab
