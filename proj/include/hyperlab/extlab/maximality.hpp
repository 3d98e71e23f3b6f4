#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperlab/hypercore/hypergraph.hpp"
#include "hyperlab/hypercore/limits.hpp"
#include "hyperlab/hypercore/rational.hpp"
#include "hyperlab/hypercore/rooted_pair.hpp"

namespace hyperlab::ext {

/// A strict extension of some T' inside G' that leaves G' in the host.
struct MaximalityViolation {
  std::vector<Vertex> base;       // vertex set of T', a subset of V(G')
  std::vector<Vertex> added;      // new host vertices, outside V(G')
};

/// Searches for a violation of (K, T)-maximality of `tilde` (G', H') in
/// `host`. T' ranges over induced sub-hypergraphs G'[W] with |W| = v(T) not
/// contained in H'; the extension K' is the host hypergraph induced on W plus
/// the new vertices, and no host edge avoiding W may meet both the new
/// vertices and V(G') \ W. Throws DomainError unless G' is a sub-hypergraph of
/// the host, CapacityError when v(G') exceeds limits.enumeration_vertices.
std::optional<MaximalityViolation> find_kt_violation(const RootedPair& tilde, const RootedPair& kt,
                                                     const Hypergraph& host, const Limits& limits = {});

inline bool is_kt_maximal(const RootedPair& tilde, const RootedPair& kt, const Hypergraph& host,
                          const Limits& limits = {}) {
  return !find_kt_violation(tilde, kt, host, limits).has_value();
}

/// Violation of (K, T)-maximality for some alpha-rigid or alpha-neutral pair
/// (K, T) with v(T) <= v(G') and v(K, T) <= r. The rigid and neutral pairs are
/// not enumerated; the host is searched for attached vertex sets (every new
/// vertex linked to W by host edges inside W plus the new set) whose induced
/// pair over G'[W] is rigid or neutral.
std::optional<MaximalityViolation> find_r_violation(const RootedPair& tilde, const Hypergraph& host,
                                                    const Rational& alpha, int r, const Limits& limits = {});

/// Number of strict (G, H)-extensions of the tuple (host vertices listed in the
/// order of H's vertices) that are maximal for every rigid or neutral pair
/// with at most r added vertices. Extensions are counted as induced
/// sub-hypergraphs of the host.
std::uint64_t count_maximal_extensions(const RootedPair& templ, const std::vector<Vertex>& tuple,
                                       const Hypergraph& host, const Rational& alpha, int r,
                                       const Limits& limits = {});

}  // namespace hyperlab::ext
