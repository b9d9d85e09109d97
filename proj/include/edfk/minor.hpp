#pragma once

#include <map>
#include <optional>
#include <vector>

#include "edfk/graph.hpp"

namespace edfk {

enum class minor_flavor { plain, labeled, boundaried, boundaried_labeled };

inline bool flavor_uses_labels(minor_flavor f) {
    return f == minor_flavor::labeled || f == minor_flavor::boundaried_labeled;
}
inline bool flavor_uses_boundary(minor_flavor f) {
    return f == minor_flavor::boundaried || f == minor_flavor::boundaried_labeled;
}

// branch[p] lists the host vertices assigned to pattern vertex p.
struct minor_model {
    std::vector<std::vector<int>> branch;

    std::vector<int> branch_union() const;
};

struct search_limits {
    int max_host_vertices = 26;   // direct exhaustive search ceiling
    long node_budget = 200'000'000;
};

// Exhaustive search for a minor model of pattern in host. Complete: returns
// a model iff one exists. Pattern may be disconnected. Host size is limited
// by limits.max_host_vertices (resource_limit_error above it; is_minor
// dispatches large plain-flavored hosts to the block-structured solver).
std::optional<minor_model> find_minor_model(const graph& pattern, const graph& host,
                                            minor_flavor flavor, const search_limits& limits = {});

bool is_minor(const graph& pattern, const graph& host, minor_flavor flavor,
              const search_limits& limits = {});

// Variant with per-pattern-vertex pin masks: branch sets must contain their
// pinned host vertices and may not touch host vertices pinned to other
// pattern vertices. Used by the block-structured solver. Plain flavor.
std::optional<minor_model> find_minor_model_pinned(const graph& pattern, const graph& host,
                                                   const std::vector<uint64_t>& pin_masks,
                                                   const search_limits& limits = {});

// Model validity per flavor; used by tests and by minimize_model.
bool validate_model(const graph& pattern, const graph& host, const minor_model& m,
                    minor_flavor flavor);

// Remove vertices from branch sets until no single removal keeps the model valid.
minor_model minimize_model(const minor_model& m, const graph& pattern, const graph& host,
                           minor_flavor flavor);

// True iff host \ Y contains no member of the family as a minor.
bool family_minor_free(const std::vector<graph>& family, const graph& host, minor_flavor flavor,
                       const search_limits& limits = {});

// Process-wide memo for is_minor on small graphs, keyed by canonical keys.
void clear_minor_cache();
bool is_minor_cached(const graph& pattern, const graph& host, minor_flavor flavor,
                     const search_limits& limits = {});

}  // namespace edfk
