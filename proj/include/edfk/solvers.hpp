#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "edfk/folio.hpp"
#include "edfk/graph.hpp"
#include "edfk/minor.hpp"

namespace edfk {

struct solution {
    std::set<std::string> vertices;
    bool hits_q = false;
};

struct solver_limits {
    int enumeration_ceiling = 14;  // max vertices for subset enumeration
    search_limits minor;
};

// Exact minimum F-minor deletion set by subset enumeration in increasing
// size; the witness is the lexicographically first optimal set.
std::pair<int, solution> opt_deletion(const graph& g, const std::vector<graph>& family_f,
                                      const solver_limits& limits = {});

// All optimal deletion sets, lexicographic order.
std::vector<solution> enumerate_optimal(const graph& g, const std::vector<graph>& family_f,
                                        const solver_limits& limits = {});

// Minimum F-deletion set avoiding the undeletable vertices, if one of size
// at most s exists.
std::optional<solution> disjoint_deletion(const graph& g, const std::vector<graph>& family_f,
                                          const std::set<std::string>& undeletable, int s,
                                          const solver_limits& limits = {});

// Some optimal F-deletion set whose removal also kills every labeled
// q-minor, or nothing. The ground-truth oracle for the dynamic program.
std::optional<solution> hitting_q_labeled(const graph& c, const std::vector<graph>& family_f,
                                          const fragment_set& q, const solver_limits& limits = {});

std::optional<solution> hitting_q_unlabeled(const graph& g, const std::vector<graph>& family_f,
                                            const std::vector<graph>& q,
                                            const solver_limits& limits = {});

// Exact optimum on large structured graphs: iterated minimum hitting sets
// over found minor models until the candidate is a valid deletion set.
// Patterns and host are treated plain.
std::pair<int, std::set<std::string>> opt_implicit(const graph& g,
                                                   const std::vector<graph>& patterns,
                                                   const search_limits& limits = {});

// Is there an optimal F-deletion set hitting all q-minors? Decided exactly
// via opt_implicit(F) == opt_implicit(F and q together). Plain flavors.
bool hitting_q_implicit(const graph& g, const std::vector<graph>& family_f,
                        const std::vector<graph>& q, const search_limits& limits = {});

// Exact minimum hitting set over explicit vertex-set constraints.
std::vector<int> min_hitting_set(const std::vector<std::vector<int>>& constraints);

// Optimal solutions of gA + gB + gC that avoid the shared boundary and leave
// exactly the given folio on the B side.
struct optsolst_result {
    graph glued;
    std::vector<std::set<std::string>> solutions;  // ids in glued
};
optsolst_result optsolst_simple(const graph& g_a, const graph& g_b, const graph& g_c,
                                const std::set<std::string>& r_b_keys,
                                const std::vector<graph>& family_f, const fragment_set& q, int t,
                                const solver_limits& limits = {});

// Inclusion-wise minimal folios left by a family of solutions, split by
// whether some member still carries a q-minor after forgetting the boundary.
struct remainder_set {
    struct remainder {
        std::set<std::string> folio_keys;
        std::vector<graph> reps;
        std::vector<int> solution_indices;  // positions in the input list
        bool leaves_q = false;
    };
    std::vector<remainder> all;

    std::vector<remainder> r_q() const;
    std::vector<remainder> r_n() const;
};
remainder_set remainders(const graph& g_ab, const std::vector<std::set<std::string>>& solutions,
                         const fragment_set& q, int t, const solver_limits& limits = {});

}  // namespace edfk
