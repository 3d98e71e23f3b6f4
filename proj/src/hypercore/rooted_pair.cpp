#include "hyperlab/hypercore/rooted_pair.hpp"

#include <string>

#include "hyperlab/hypercore/errors.hpp"

namespace hyperlab {

RootedPair::RootedPair(Hypergraph outer, Hypergraph inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (outer_.arity() != inner_.arity()) throw DomainError("pair members have different arity");
  inner_vertex_.assign(outer_.vertex_count(), false);
  inner_edge_.assign(outer_.edge_count(), false);
  for (Vertex v : inner_.vertices()) {
    auto idx = outer_.find(v);
    if (!idx) throw DomainError("inner vertex " + std::to_string(v) + " is not in the outer hypergraph");
    inner_vertex_[static_cast<std::size_t>(*idx)] = true;
  }
  std::vector<int> mapped(static_cast<std::size_t>(inner_.arity()));
  for (std::size_t e = 0; e < inner_.edge_count(); ++e) {
    auto ev = inner_.edge(e);
    for (std::size_t i = 0; i < ev.size(); ++i) mapped[i] = *outer_.find(inner_.label(ev[i]));
    auto id = outer_.edge_id(mapped);
    if (!id) throw DomainError("inner edge is not an edge of the outer hypergraph");
    inner_edge_[*id] = true;
  }
  for (int v = 0; v < static_cast<int>(outer_.vertex_count()); ++v)
    (inner_vertex_[static_cast<std::size_t>(v)] ? inner_indices_ : free_indices_).push_back(v);
}

RootedPair RootedPair::embed(Hypergraph outer, const Hypergraph& inner,
                             const std::map<Vertex, Vertex>& embedding) {
  std::vector<Vertex> vertices;
  std::vector<Vertex> seen;
  for (Vertex v : inner.vertices()) {
    auto it = embedding.find(v);
    if (it == embedding.end()) throw DomainError("embedding misses vertex " + std::to_string(v));
    vertices.push_back(it->second);
  }
  seen = vertices;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw DomainError("embedding is not injective");
  std::vector<std::vector<Vertex>> edges;
  for (const auto& e : inner.edge_list()) {
    std::vector<Vertex> image;
    for (Vertex v : e) image.push_back(embedding.at(v));
    edges.push_back(std::move(image));
  }
  Hypergraph relabeled(inner.arity(), std::move(vertices), edges);
  return RootedPair(std::move(outer), std::move(relabeled));
}

long RootedPair::extra_vertices() const {
  return static_cast<long>(outer_.vertex_count()) - static_cast<long>(inner_.vertex_count());
}

long RootedPair::extra_edges() const {
  return static_cast<long>(outer_.edge_count()) - static_cast<long>(inner_.edge_count());
}

Rational RootedPair::density() const {
  if (extra_vertices() == 0) throw DomainError("pair density undefined: no extra vertices");
  return Rational(extra_edges(), extra_vertices());
}

}  // namespace hyperlab
