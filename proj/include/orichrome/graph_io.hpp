#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "orichrome/graph.hpp"

namespace orichrome {

// Edge-list text: a header line "n m" then m lines "u v" (arc u->v). Blank
// lines and anything after '#' are ignored. Throws ParseError (with the line
// number) on malformed input and Error(kInvariantViolation) on a loop,
// duplicate or anti-parallel arc.
OrientedGraph parse_edge_list(std::string_view text);
// Normalized form: header plus arcs in lexicographic order.
std::string serialize_edge_list(const OrientedGraph& g);

// {"n": int, "arcs": [[u,v], ...]} with arcs sorted.
nlohmann::json graph_to_json(const OrientedGraph& g);
OrientedGraph graph_from_json(const nlohmann::json& j);

// Accepts either format, sniffing for a leading '{'.
OrientedGraph parse_graph(std::string_view text);
OrientedGraph read_graph_file(const std::string& path);
std::string read_text_file(const std::string& path);

}  // namespace orichrome
