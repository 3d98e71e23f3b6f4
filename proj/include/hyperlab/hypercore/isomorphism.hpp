#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hyperlab/hypercore/hypergraph.hpp"
#include "hyperlab/hypercore/limits.hpp"
#include "hyperlab/hypercore/rational.hpp"

namespace hyperlab {

/// Optional colouring restricting which automorphisms count. Empty vectors
/// mean "all the same colour".
struct Coloring {
  std::vector<int> vertex;  // by vertex index
  std::vector<int> edge;    // by edge id
};

/// |Aut(G)|. Throws CapacityError above limits.search_vertices.
BigInt automorphism_count(const Hypergraph& g, const Limits& limits = {});

/// Number of automorphisms preserving the vertex and edge colours.
BigInt automorphism_count(const Hypergraph& g, const Coloring& coloring,
                          const Limits& limits = {});

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b, const Limits& limits = {});

/// Called with the image (host index) of every motif vertex, by motif index.
/// Return false to stop.
using EmbeddingVisitor = std::function<bool(std::span<const int>)>;

/// Enumerates injective edge-preserving maps motif -> host (non-induced).
void for_each_embedding(const Hypergraph& motif, const Hypergraph& host,
                        const EmbeddingVisitor& visit);

std::uint64_t count_embeddings(const Hypergraph& motif, const Hypergraph& host);

/// Number of (not necessarily induced) sub-hypergraphs of host isomorphic to motif.
BigInt count_copies(const Hypergraph& motif, const Hypergraph& host,
                    const Limits& limits = {});

}  // namespace hyperlab
