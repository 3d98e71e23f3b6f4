#include "hyperlab/extlab/counters.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "hyperlab/hypercore/errors.hpp"
#include "hyperlab/hypercore/isomorphism.hpp"

namespace hyperlab::ext {

namespace {

struct Copy {
  std::vector<int> vertices;
  std::vector<std::size_t> edges;
  bool operator<(const Copy& o) const {
    return std::tie(vertices, edges) < std::tie(o.vertices, o.edges);
  }
};

std::set<Copy> copies_of(const Hypergraph& motif, const Hypergraph& host) {
  std::set<Copy> out;
  std::vector<int> mapped(static_cast<std::size_t>(motif.arity()));
  for_each_embedding(motif, host, [&](std::span<const int> image) {
    Copy c;
    c.vertices.assign(image.begin(), image.end());
    std::sort(c.vertices.begin(), c.vertices.end());
    for (std::size_t e = 0; e < motif.edge_count(); ++e) {
      auto ev = motif.edge(e);
      for (std::size_t i = 0; i < ev.size(); ++i) mapped[i] = image[static_cast<std::size_t>(ev[i])];
      c.edges.push_back(*host.edge_id(mapped));
    }
    std::sort(c.edges.begin(), c.edges.end());
    out.insert(std::move(c));
    return true;
  });
  return out;
}

bool includes(const std::vector<int>& big, const std::vector<int>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool includes(const std::vector<std::size_t>& big, const std::vector<std::size_t>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

BigInt count_uncovered_copies(const Hypergraph& inner, const Hypergraph& outer, const Hypergraph& host,
                              const Limits& limits) {
  if (inner.arity() != host.arity() || outer.arity() != host.arity())
    throw DomainError("motifs and host have different arity");
  for (const Hypergraph* m : {&inner, &outer})
    if (m->vertex_count() > limits.enumeration_vertices)
      throw CapacityError("motif with " + std::to_string(m->vertex_count()) + " vertices exceeds the cap of " +
                          std::to_string(limits.enumeration_vertices));
  const auto small = copies_of(inner, host);
  if (small.empty()) return 0;
  const auto big = copies_of(outer, host);
  // A covering copy contains the first vertex of the covered one.
  std::map<int, std::vector<const Copy*>> by_vertex;
  for (const auto& c : big)
    for (int v : c.vertices) by_vertex[v].push_back(&c);
  BigInt uncovered = 0;
  for (const auto& c : small) {
    bool covered = false;
    if (!c.vertices.empty()) {
      auto it = by_vertex.find(c.vertices.front());
      if (it != by_vertex.end())
        for (const Copy* g : it->second)
          if (includes(g->vertices, c.vertices) && includes(g->edges, c.edges)) {
            covered = true;
            break;
          }
    } else {
      covered = !big.empty();
    }
    if (!covered) ++uncovered;
  }
  return uncovered;
}

Rational PoissonParameter::scale() const { return Rational(BigInt(1), a); }

Rational PoissonParameter::exponent() const { return Rational(a, a1 * a2); }

double PoissonParameter::lambda() const { return to_double(scale()) * std::exp(-to_double(exponent())); }

PoissonParameter poisson_parameter(const RootedPair& pair, const Limits& limits) {
  const Hypergraph& g = pair.outer();
  PoissonParameter out;
  out.a = automorphism_count(pair.inner(), limits);
  // Automorphisms of G fixing V(H) pointwise: each inner vertex gets its own colour.
  Coloring pointwise;
  pointwise.vertex.assign(g.vertex_count(), 0);
  int colour = 1;
  for (int v : pair.inner_indices()) pointwise.vertex[static_cast<std::size_t>(v)] = colour++;
  out.a2 = automorphism_count(g, pointwise, limits);
  // Automorphisms of G mapping H onto itself; their restrictions to V(H) are
  // the extendable automorphisms of H, each met a2 times.
  Coloring setwise;
  setwise.vertex.assign(g.vertex_count(), 0);
  for (int v : pair.inner_indices()) setwise.vertex[static_cast<std::size_t>(v)] = 1;
  setwise.edge.assign(g.edge_count(), 0);
  for (std::size_t e = 0; e < g.edge_count(); ++e) setwise.edge[e] = pair.is_inner_edge(e) ? 1 : 0;
  const BigInt stabilizer = automorphism_count(g, setwise, limits);
  out.a1 = stabilizer / out.a2;
  return out;
}

}  // namespace hyperlab::ext
