#pragma once

#include <vector>

#include "edfk/graph.hpp"

namespace edfk {

// Connected components as sorted vertex-index lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const graph& g);

bool is_connected(const graph& g);  // empty graph counts as connected

// Biconnected components (blocks) as sorted vertex sets. Every edge lies in
// exactly one block; an isolated vertex forms its own block.
std::vector<std::vector<int>> biconnected_components(const graph& g);

std::vector<int> cut_vertices(const graph& g);

bool is_biconnected(const graph& g);  // >= 3 vertices, connected, no cut vertex

// Vertices reachable from v in g (including v).
std::vector<int> reachable_from(const graph& g, int v);

}  // namespace edfk
