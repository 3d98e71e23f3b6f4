#pragma once

#include <optional>
#include <vector>

#include "hyperlab/hypercore/hypergraph.hpp"

namespace hyperlab {

/// Length of a shortest edge path; nullopt when disconnected.
/// Throws DomainError for unknown labels.
std::optional<int> distance(const Hypergraph& g, Vertex x, Vertex y);

/// Distances by vertex index from `source` (an index); -1 when unreachable.
std::vector<int> distances_from(const Hypergraph& g, int source);

}  // namespace hyperlab
