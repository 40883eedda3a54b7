#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "spg/graph.hpp"
#include "json.hpp"

namespace spg {

// Graph documents: {"directed", "n", "labels"?, "edges": [[u, v, cost]...], "s", "t"}.
// Throws SchemaError naming the offending field.
GraphSpec graph_from_json(const nlohmann::json& doc);
nlohmann::ordered_json graph_to_json(const GraphSpec& spec);

GraphSpec parse_graph(std::string_view text);
// Canonical single-line form with fields in schema order.
std::string serialize_graph(const GraphSpec& spec);

GraphSpec read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const GraphSpec& spec);

} // namespace spg
