#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "edfk/graph.hpp"
#include "edfk/minor.hpp"

namespace edfk {

// Rooted forest partitioning V(G): internal bags are singletons, leaf bags
// induce connected F-minor-free subgraphs, edges run within a leaf bag or
// along ancestor-descendant lines. Depth is counted in edges.
struct elimination_forest {
    struct node {
        int parent = -1;
        std::vector<std::string> bag;  // vertex ids
    };
    std::vector<node> nodes;
    int depth = 0;

    std::vector<int> children_of(int i) const;
    int node_depth(int i) const;  // edges from its root
};

struct elim_limits {
    int exact_ceiling = 12;   // memoized branching up to this many vertices
    int max_depth = 8;        // iterative deepening cap for large graphs
    search_limits minor;
};

// Exact elimination distance to the F-minor-free class, with a witness
// forest. Labels and boundary status of g are ignored. Small graphs go
// through memoized branching over all root choices; larger graphs through
// iterative deepening with found-model reuse for refutations.
std::pair<int, elimination_forest> compute_ed(const graph& g, const std::vector<graph>& family_f,
                                              const elim_limits& limits = {});

// Decision variant: is ed_F(g) <= d? Exact; used directly by tests that
// verify equalities on large extended graphs.
bool ed_at_most(const graph& g, const std::vector<graph>& family_f, int d,
                elimination_forest* witness = nullptr, const elim_limits& limits = {});

bool validate_elimination_forest(const graph& g, const std::vector<graph>& family_f,
                                 const elimination_forest& forest,
                                 const search_limits& limits = {});

// Minimum depth in vertices of a treedepth decomposition (exact).
int treedepth(const graph& g, const elim_limits& limits = {});

// Tree decomposition with designated base vertices L that live in unique
// leaf bags and induce F-minor-free graphs per bag.
struct tree_h_decomposition {
    struct node {
        int parent = -1;
        std::vector<std::string> bag;
    };
    std::vector<node> nodes;
    std::set<std::string> base;
    int width = 0;

    std::vector<int> children_of(int i) const;
};

tree_h_decomposition forest_to_tree_decomposition(const elimination_forest& forest, const graph& g);

bool validate_tree_h_decomposition(const graph& g, const std::vector<graph>& family_f,
                                   const tree_h_decomposition& dec,
                                   const search_limits& limits = {});

struct tri_separation {
    std::set<std::string> a, x, b;
};

// (vertices confined to the subtree of the node, bag boundary, rest)
tri_separation tri_separation_at(const tree_h_decomposition& dec, int node, const graph& g);

bool validate_tri_separation(const graph& g, const tri_separation& sep);

}  // namespace edfk
