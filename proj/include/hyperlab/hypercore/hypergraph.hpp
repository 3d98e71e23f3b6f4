#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

namespace hyperlab {

using Vertex = std::int64_t;

/// Finite s-uniform hypergraph with integer vertex labels.
///
/// Immutable. Vertices are stored in ascending label order and addressed
/// either by label or by their position ("index") in that order. Each edge
/// is a sorted list of vertex indices; edges are kept in lexicographic order.
class Hypergraph {
 public:
  /// Empty 3-uniform hypergraph.
  Hypergraph();
  explicit Hypergraph(int arity);

  /// Throws DomainError if arity < 3, an edge has the wrong size, repeats a
  /// vertex, mentions an unknown vertex, or appears twice. Duplicate vertex
  /// labels are merged.
  Hypergraph(int arity, std::vector<Vertex> vertices,
             const std::vector<std::vector<Vertex>>& edges);

  /// Vertex set is the union of the edges.
  static Hypergraph from_edges(int arity, const std::vector<std::vector<Vertex>>& edges);

  /// Edges given as indices into `labels`, which must be strictly increasing.
  static Hypergraph from_indices(int arity, std::vector<Vertex> labels,
                                 std::vector<std::vector<int>> edges);

  int arity() const noexcept { return arity_; }
  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> vertices() const noexcept { return labels_; }
  Vertex label(int index) const { return labels_[static_cast<std::size_t>(index)]; }
  std::optional<int> find(Vertex v) const;
  /// Throws DomainError for an unknown label.
  int index_of(Vertex v) const;
  bool contains_vertex(Vertex v) const { return find(v).has_value(); }

  std::span<const int> edge(std::size_t e) const {
    return {edge_data_.data() + e * static_cast<std::size_t>(arity_),
            static_cast<std::size_t>(arity_)};
  }
  std::vector<Vertex> edge_labels(std::size_t e) const;
  std::vector<std::vector<Vertex>> edge_list() const;

  std::span<const int> incident_edges(int v) const { return incidence_[static_cast<std::size_t>(v)]; }
  /// Vertices sharing an edge with v, ascending, v excluded.
  std::span<const int> neighbors(int v) const { return neighbors_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(incidence_[static_cast<std::size_t>(v)].size()); }

  /// Indices in any order. False for repeated indices or wrong length.
  bool has_edge(std::span<const int> indices) const;
  bool has_edge_labels(std::span<const Vertex> labels) const;
  /// Position of the edge with these (any order) indices.
  std::optional<std::size_t> edge_id(std::span<const int> indices) const;

  /// Sub-hypergraph induced on the given vertex indices.
  Hypergraph induced(std::span<const int> indices) const;
  Hypergraph induced_labels(std::span<const Vertex> labels) const;
  /// Sub-hypergraph on the given vertex indices keeping only the given edges.
  Hypergraph subgraph(std::span<const int> indices, std::span<const std::size_t> edges) const;

  bool operator==(const Hypergraph& other) const;

 private:
  void build();
  std::optional<std::uint64_t> encode(std::span<const int> sorted) const;

  int arity_ = 3;
  std::vector<Vertex> labels_;
  std::vector<int> edge_data_;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<int>> incidence_;
  std::vector<std::vector<int>> neighbors_;
  bool encodable_ = true;
  std::unordered_set<std::uint64_t> edge_keys_;
};

}  // namespace hyperlab
