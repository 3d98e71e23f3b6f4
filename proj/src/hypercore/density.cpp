#include "hyperlab/hypercore/density.hpp"

#include <cstdint>
#include <string>

#include "hyperlab/hypercore/errors.hpp"
#include "hyperlab/hypercore/subset_walk.hpp"

namespace hyperlab {

namespace {

void check_cap(std::size_t count, const Limits& limits) {
  if (count > limits.enumeration_vertices || count > 62)
    throw CapacityError("subset enumeration over " + std::to_string(count) +
                        " vertices exceeds the cap of " + std::to_string(limits.enumeration_vertices));
}

std::vector<std::vector<int>> components(const Hypergraph& g) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (comp[static_cast<std::size_t>(start)] >= 0) continue;
    std::vector<int> members{start};
    comp[static_cast<std::size_t>(start)] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (int w : g.neighbors(members[i]))
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = static_cast<int>(out.size());
          members.push_back(w);
        }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace

Rational density(const Hypergraph& g) {
  if (g.vertex_count() == 0) throw DomainError("density of the empty hypergraph");
  return Rational(static_cast<long>(g.edge_count()), static_cast<long>(g.vertex_count()));
}

MaxDensity max_density(const Hypergraph& g, const Limits& limits) {
  if (g.vertex_count() == 0) throw DomainError("maximum density of the empty hypergraph");
  if (g.edge_count() == 0) return {Rational(0), g};
  // A disjoint union is never denser than its densest part, so each
  // component with edges is searched on its own.
  long best_e = -1, best_v = 1;
  std::vector<int> best;
  for (const auto& comp : components(g)) {
    if (comp.size() == 1) continue;
    check_cap(comp.size(), limits);
    std::vector<int> cnt(g.edge_count(), 0);
    std::uint64_t local_mask = 0;
    long local_e = -1, local_v = 1;
    subset_walk(g, comp, cnt, 0, [&](std::uint64_t mask, long size, long inside) {
      const long lhs = inside * local_v, rhs = local_e * size;
      if (lhs > rhs || (lhs == rhs && (size > local_v || (size == local_v && mask < local_mask)))) {
        local_e = inside;
        local_v = size;
        local_mask = mask;
      }
      return true;
    });
    const long lhs = local_e * best_v, rhs = best_e * local_v;
    if (lhs > rhs || (lhs == rhs && local_v > best_v)) {
      best_e = local_e;
      best_v = local_v;
      best.clear();
      for (std::size_t i = 0; i < comp.size(); ++i)
        if (local_mask >> i & 1) best.push_back(comp[i]);
    }
  }
  return {Rational(best_e, best_v), g.induced(best)};
}

bool is_strictly_balanced(const Hypergraph& g, const Limits& limits) {
  const auto n = static_cast<long>(g.vertex_count());
  if (n == 0) throw DomainError("balance of the empty hypergraph");
  if (n == 1) return true;
  if (g.edge_count() == 0) return false;
  if (components(g).size() != 1) return false;
  check_cap(g.vertex_count(), limits);
  const long e = static_cast<long>(g.edge_count());
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  bool ok = true;
  subset_walk(g, all, std::vector<int>(g.edge_count(), 0), 0, [&](std::uint64_t, long size, long inside) {
    if (size == n) return true;
    if (inside * n >= e * size) ok = false;
    return ok;
  });
  return ok;
}

bool is_strictly_balanced(const RootedPair& pair, const Limits& limits) {
  const Hypergraph& g = pair.outer();
  const long v_extra = pair.extra_vertices();
  const long e_extra = pair.extra_edges();
  if (v_extra == 0) throw DomainError("pair balance undefined: no extra vertices");
  const auto& free = pair.free_indices();
  check_cap(free.size(), limits);
  std::vector<int> cnt(g.edge_count(), 0);
  long inside = 0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    for (int v : g.edge(e))
      if (pair.is_inner_vertex(v)) ++cnt[e];
    if (cnt[e] == g.arity()) ++inside;
  }
  const long inner_edges = static_cast<long>(pair.inner().edge_count());
  // K = G[V(H)] with extra edges would have zero extra vertices.
  if (inside > inner_edges) return false;
  bool ok = true;
  subset_walk(g, free, cnt, inside, [&](std::uint64_t, long size, long in) {
    if (size == v_extra) return true;
    if ((in - inner_edges) * v_extra >= e_extra * size) ok = false;
    return ok;
  });
  return ok;
}

}  // namespace hyperlab
