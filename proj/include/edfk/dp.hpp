#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "edfk/elim.hpp"
#include "edfk/graph.hpp"
#include "edfk/solvers.hpp"

namespace edfk {

struct dp_limits {
    int rep_size_bound = 6;  // enumeration bound for representative graphs
    solver_limits solver;
};

// Equal boundary index sets inducing the same subgraph under the index map.
bool compatible(const graph& g1, const graph& g2);

// Gluing-equivalence signature: which multipieces of the extended target
// family embed as boundaried minors. Graphs are treated unlabeled.
std::set<std::string> equivalence_signature(const graph& g, const std::vector<graph>& targets,
                                            int t, int detail, const search_limits& limits = {});

// Compatible and equal signatures at the given detail (defaults to
// max member size + t when detail <= 0).
bool equivalent(const graph& g1, const graph& g2, const std::vector<graph>& targets, int t,
                int detail = 0, const search_limits& limits = {});

struct representative_family {
    // by_t[t] holds target-minor-free graphs with boundary indices exactly
    // {1..t}, one minimum-size member per equivalence signature
    std::vector<std::vector<graph>> by_t;

    size_t total() const;
    size_t volume() const;  // sum of vertex counts
};

// Enumerate all boundaried target-minor-free graphs up to size_bound
// vertices for every boundary size t <= k and keep one minimum
// representative per signature class.
representative_family compute_representatives(const std::vector<graph>& targets, int k,
                                              const dp_limits& limits = {});

struct exhaustive_family {
    std::set<std::string> region;                  // A, as vertex ids
    std::vector<std::set<std::string>> sets;       // subsets of the region
    size_t bound = 0;                              // the producing lemma's size bound
};

// Partial solutions inside the F-minor-free region A of the tri-separation:
// for every subset of X and every compatible representative, the glued
// instance is solved with the region as the only deletable part.
exhaustive_family leaf_exhaustive(const tri_separation& sep, const graph& g,
                                  const representative_family& reps,
                                  const std::vector<graph>& family_f,
                                  const std::vector<graph>& targets, int k,
                                  const dp_limits& limits = {});

// Keep one minimum member per (subset of X, representative) context.
exhaustive_family prune_exhaustive(const tri_separation& sep, const graph& g,
                                   const exhaustive_family& family,
                                   const representative_family& reps,
                                   const std::vector<graph>& targets,
                                   const dp_limits& limits = {});

exhaustive_family combine_exhaustive(const exhaustive_family& s1, const exhaustive_family& s2,
                                     const std::set<std::string>& region);

struct dp_stats {
    struct node_record {
        int node = 0;
        size_t family_size = 0;
        size_t lemma_bound = 0;
    };
    std::vector<node_record> nodes;
    size_t representative_count = 0;
    int width = 0;
};

// Bottom-up exhaustive-family dynamic program over a tree F-decomposition.
// Returns an optimal F-deletion set that also hits all q-minors, or nothing
// when no optimal solution does. Runs twice: once against F alone to pin the
// optimum, once against F and q together.
std::optional<solution> dp_solve(const graph& g, const tree_h_decomposition& dec,
                                 const std::vector<graph>& family_f, const std::vector<graph>& q,
                                 const dp_limits& limits = {}, dp_stats* stats = nullptr);

}  // namespace edfk
