#pragma once

#include <map>
#include <string>
#include <vector>

#include "edfk/folio.hpp"
#include "edfk/graph.hpp"
#include "edfk/minor.hpp"

namespace edfk {

// One 1-boundaried gadget per label plus the default gadget for "*".
// Gadgets are biconnected and pairwise incomparable under the minor
// relation; none is a minor of the host the function was built for.
struct gadgets_function {
    std::vector<std::string> atoms;        // label universe the function covers
    std::map<std::string, graph> gadgets;  // atom or "*" -> 1-boundaried gadget
    int clique_order = 0;

    static const std::string star;
};

// Each gadget is a theta graph (two hubs joined by three internally disjoint
// paths, lengths 2+f, 2+f, 2|X|+2-2f for the label's rank f) attached by two
// edges to a clique of order max(7, max|V(F)| + eta). Distinct ranks give
// provably incomparable thetas; the first hub is the boundary vertex.
gadgets_function build_nice_gadgets(const std::vector<std::string>& universe,
                                    const std::vector<graph>& family_f, int eta);

// Checks biconnectivity, pairwise incomparability, and that no gadget is a
// minor of the host; exhaustive minor tests (resource error on large hosts).
bool verify_nice(const gadgets_function& gf, const graph& host,
                 const search_limits& limits = {});

struct extension_result {
    graph g;  // unlabeled
    // new vertex id -> (anchor vertex id in the original, gadget label, position)
    struct origin_info {
        std::string anchor;
        std::string label;
        int position = -1;  // -1 for original vertices
    };
    std::map<std::string, origin_info> origin;
    std::vector<std::string> original_ids;
};

// Glue Gadgets(*) to every vertex and Gadgets(l) for every label l of the
// vertex, then drop all labels.
extension_result extend_graph(const graph& g, const gadgets_function& gf);

struct unlabel_result {
    graph g_plus;
    std::vector<graph> f_plus;
    std::vector<graph> q_plus;
    gadgets_function gf;
    extension_result provenance;
    graph g_restricted;  // input after dropping labels that do not occur in q
};

// The labeled-to-unlabeled reduction: restrict labels to those occurring in
// q, build one shared gadgets function, extend the instance and both
// families. Requires ed_F(g) <= eta.
unlabel_result unlabel_instance(const graph& g, const std::vector<graph>& family_f,
                                const fragment_set& q, int eta,
                                const search_limits& limits = {});

}  // namespace edfk
