#pragma once

#include <string>

#include "edfk/graph.hpp"

namespace edfk {

// Canonical byte string for a labeled boundaried graph. Two graphs get equal
// keys iff there is an isomorphism preserving adjacency, labelsets, and
// boundary indices. The boundary capacity t is not part of the key; the
// label atoms that actually occur are (by name).
//
// Ordered exhaustive search over vertex orderings with color refinement;
// intended for small graphs (guarded by max_vertices).
std::string canonical_key(const graph& g, int max_vertices = 24);

bool are_isomorphic(const graph& g1, const graph& g2);

// Canonical order of the vertices (position -> vertex index) realizing the key.
std::vector<int> canonical_order(const graph& g, int max_vertices = 24);

}  // namespace edfk
