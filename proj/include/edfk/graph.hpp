#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "edfk/errors.hpp"

namespace edfk {

// A simple graph whose vertices carry a set of labels (a subset of a finite
// label universe) and optionally an injective boundary index in {1..t}.
// Values are immutable once built; every operation returns a new graph.
struct graph {
    int t = 0;                             // boundary capacity
    std::vector<std::string> atoms;        // label universe, sorted and unique
    std::vector<std::string> ids;          // one opaque id per vertex
    std::vector<uint32_t> lab;             // per-vertex label mask over atoms
    std::vector<int> bidx;                 // per-vertex boundary index, 0 = none
    std::vector<std::pair<int, int>> edges;  // normalized (u < v), sorted
    std::vector<std::vector<int>> adj;     // derived adjacency lists

    int n() const { return static_cast<int>(ids.size()); }
    int m() const { return static_cast<int>(edges.size()); }
    bool empty() const { return ids.empty(); }

    int index_of(const std::string& id) const;       // -1 if absent
    int vertex_with_bidx(int index) const;           // -1 if absent
    bool has_edge(int u, int v) const;
    std::vector<int> boundary_vertices() const;      // sorted by index value
    std::set<std::string> labels_of(int v) const;    // atom names
    uint32_t atom_mask(const std::string& atom) const;

    // Vertices ordered by id (the canonical vertex order used for
    // deterministic witnesses).
    std::vector<int> vertices_by_id() const;

    void check_invariants() const;  // throws argument_error on violation
};

// --- construction helpers -------------------------------------------------

struct graph_builder {
    graph g;

    graph_builder(int t, std::vector<std::string> atoms);
    int add_vertex(const std::string& id, const std::set<std::string>& labels = {},
                   int boundary_index = 0);
    void add_edge(const std::string& a, const std::string& b);
    void add_edge(int u, int v);
    graph build();  // validates and finalizes adjacency
};

// plain unlabeled, unboundaried graph from an edge list on n vertices "v0".."v{n-1}"
graph make_plain(int n, const std::vector<std::pair<int, int>>& edges);

// --- basic operations -----------------------------------------------------

// Induced subgraph on the given vertex indices; ids, labels, boundary kept.
graph induced(const graph& g, const std::vector<int>& keep);
graph remove_vertices(const graph& g, const std::vector<int>& drop);
graph remove_vertices_by_id(const graph& g, const std::set<std::string>& drop);

// Strip labels and boundary status, keep structure and ids.
graph strip_decorations(const graph& g);

// Forget boundary indices above k; the result is a k-boundaried graph.
// Labels are unchanged.
graph forget(const graph& g, int k);
inline graph forget(const graph& g) { return forget(g, 0); }

struct glue_result {
    graph g;
    std::map<std::string, std::string> from_left;   // old id -> new id
    std::map<std::string, std::string> from_right;  // old id -> new id
};

// Identify equal boundary indices of two graphs over the same universe and
// capacity. Fresh ids; label sets of identified vertices are unioned; no
// parallel edges are created.
glue_result glue(const graph& g1, const graph& g2);
graph glue_graph(const graph& g1, const graph& g2);

// Change the label universe (labels must be a subset of the new universe
// after the restriction). Drops any label not present in keep_atoms.
graph restrict_labels(const graph& g, const std::set<std::string>& keep_atoms);

// Same structure, new boundary assignment (id -> index) and capacity.
graph with_boundary(const graph& g, int t, const std::map<std::string, int>& assignment);

}  // namespace edfk
