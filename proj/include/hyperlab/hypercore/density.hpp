#pragma once

#include "hyperlab/hypercore/hypergraph.hpp"
#include "hyperlab/hypercore/limits.hpp"
#include "hyperlab/hypercore/rational.hpp"
#include "hyperlab/hypercore/rooted_pair.hpp"

namespace hyperlab {

/// e / v. Throws DomainError for the empty hypergraph.
Rational density(const Hypergraph& g);

struct MaxDensity {
  Rational value;
  /// Induced sub-hypergraph attaining the value. Ties prefer more vertices.
  Hypergraph witness;
};

/// Maximum density over non-empty sub-hypergraphs.
/// Throws CapacityError above limits.enumeration_vertices.
MaxDensity max_density(const Hypergraph& g, const Limits& limits = {});

/// Every proper non-empty sub-hypergraph has strictly smaller density.
bool is_strictly_balanced(const Hypergraph& g, const Limits& limits = {});

/// Every K with H strictly inside K strictly inside G has rho(K,H) < rho(G,H).
bool is_strictly_balanced(const RootedPair& pair, const Limits& limits = {});

}  // namespace hyperlab
