#pragma once

#include <string>

#include "edfk/graph.hpp"

namespace edfk {

// Document format:
//   {"t": int, "labels": [string...],
//    "vertices": [{"id": string, "lab": [string...], "bidx": int|null}...],
//    "edges": [[id, id]...]}
// Serialization is canonical: labels sorted, vertices sorted by id, edges
// sorted as ordered pairs. parse(serialize(g)) is isomorphic to g.
graph parse_graph(const std::string& text);
std::string serialize_graph(const graph& g, bool pretty = false);

graph load_graph_file(const std::string& path);
void save_graph_file(const graph& g, const std::string& path);

}  // namespace edfk
