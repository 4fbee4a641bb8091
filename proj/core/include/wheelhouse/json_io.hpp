#pragma once

#include "graph_sum.hpp"
#include "preset.hpp"
#include <json.hpp>

namespace wheelhouse {

// Graph interchange: {"preset": str, "vertices": [{"gen": str, "hbar": int?}],
// "edges": [[sv,ss,tv,ts]...], "inputs": [[label,v,slot]...],
// "outputs": [[label,v,slot]...], "marks": [edge_index...]}.  Canonical
// serialization writes the canonical form with sorted fields, so equal
// classes serialize byte-identically.
nlohmann::json graph_to_json(const DecoratedGraph& g, const std::string& preset_name);
DecoratedGraph graph_from_json(const nlohmann::json& j, const Preset& preset);

nlohmann::json sum_to_json(const GraphSum& s, const std::string& preset_name);
GraphSum sum_from_json(const nlohmann::json& j, const Preset& preset);

std::string canonical_dump(const nlohmann::json& j);

} // namespace wheelhouse
