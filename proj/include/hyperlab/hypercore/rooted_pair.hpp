#pragma once

#include <map>
#include <vector>

#include "hyperlab/hypercore/hypergraph.hpp"
#include "hyperlab/hypercore/rational.hpp"

namespace hyperlab {

/// A pair (G, H) with H a sub-hypergraph of G, both in G's labels.
class RootedPair {
 public:
  /// Throws DomainError unless inner is a sub-hypergraph of outer.
  RootedPair(Hypergraph outer, Hypergraph inner);

  /// Relabels `inner` through `embedding` (inner label -> outer label) first.
  static RootedPair embed(Hypergraph outer, const Hypergraph& inner,
                          const std::map<Vertex, Vertex>& embedding);

  const Hypergraph& outer() const noexcept { return outer_; }
  const Hypergraph& inner() const noexcept { return inner_; }

  /// v(G, H) and e(G, H).
  long extra_vertices() const;
  long extra_edges() const;

  bool is_inner_vertex(int outer_index) const { return inner_vertex_[static_cast<std::size_t>(outer_index)]; }
  bool is_inner_edge(std::size_t outer_edge) const { return inner_edge_[outer_edge]; }
  /// Outer indices of inner vertices, ascending.
  const std::vector<int>& inner_indices() const noexcept { return inner_indices_; }
  /// Outer indices of the remaining vertices, ascending.
  const std::vector<int>& free_indices() const noexcept { return free_indices_; }

  /// e(G, H) / v(G, H). Throws DomainError when v(G, H) = 0.
  Rational density() const;

 private:
  Hypergraph outer_;
  Hypergraph inner_;
  std::vector<bool> inner_vertex_;
  std::vector<bool> inner_edge_;
  std::vector<int> inner_indices_;
  std::vector<int> free_indices_;
};

}  // namespace hyperlab
