#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "edfk/graph.hpp"
#include "edfk/minor.hpp"

namespace edfk {

// A set of graphs deduplicated by canonical key, iteration in key order.
struct graph_set {
    std::map<std::string, graph> members;

    bool insert(const graph& g);  // false if an isomorphic member exists
    bool contains_key(const std::string& key) const { return members.count(key) > 0; }
    size_t size() const { return members.size(); }
    std::vector<graph> list() const;
    std::set<std::string> keys() const;
};

// The pieces of a boundaried labeled graph: bare boundary vertices, one
// single-label vertex per boundary label, boundary-boundary edges, and each
// interior component with its labeled interior plus a stripped boundary copy.
// A multiset; gluing all pieces back together reproduces the graph.
std::vector<graph> pcs(const graph& g);

// All nonempty glue-combinations of pieces, deduplicated up to isomorphism.
graph_set mpcs(const graph& g);
graph_set mpcs(const std::vector<graph>& set_of_graphs);

// One extension step: do nothing / promote a vertex to boundary index t+1 /
// split a boundary vertex, distributing its edges and labels.
graph_set ext1(const graph& g);
graph_set ext(const graph& g, int steps);
graph_set ext(const std::vector<graph>& q, int steps);

// mpcs_plus(Q, t) = mpcs(ext^t(Q))
graph_set mpcs_plus(const std::vector<graph>& q, int t);

// All minors of g with 1..detail vertices in the requested flavor, one
// representative per isomorphism class. The empty graph is excluded.
graph_set folio(const graph& g, int detail, minor_flavor flavor,
                const search_limits& limits = {});

// folio(g) restricted to mpcs_plus(q, t): members of mpcs_plus(q, t) that are
// boundaried labeled minors of g. Requires g.t == t.
graph_set folio_qt(const graph& g, const std::vector<graph>& q, int t,
                   const search_limits& limits = {});

// --- fragment sets ---------------------------------------------------------

// Connected labeled graphs used as forbidden cross-boundary patterns.
struct fragment_set {
    std::vector<graph> members;
    int size_cap = 0;             // max vertices per member
    int saturation = 0;           // s, or 0 when not saturated by construction
};

// true iff (a) for every s-subset L of universe some member is a single
// vertex whose labelset contains L, and (b) every member with >= s labels on
// one vertex is a single-vertex graph.
bool is_saturated(const fragment_set& q, int s, const std::vector<std::string>& universe);

// All single-vertex fragments whose labelset is exactly an s-subset of universe.
fragment_set saturate(const std::vector<std::string>& universe, int s);

}  // namespace edfk
