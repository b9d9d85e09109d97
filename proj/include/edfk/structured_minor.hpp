#pragma once

#include <optional>

#include "edfk/graph.hpp"
#include "edfk/minor.hpp"

namespace edfk {

// Complete plain-flavor minor decision for hosts that are large but whose
// biconnected blocks are small (glued gadget graphs and the like). Works by
// peeling leaf blocks of the host and splitting the pattern at the cut
// vertex, reducing everything to exhaustive searches on single blocks.
// Throws resource_limit_error when a host block itself is too large.
std::optional<minor_model> structured_is_minor(const graph& pattern, const graph& host,
                                               const search_limits& limits = {});

}  // namespace edfk
