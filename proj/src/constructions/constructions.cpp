#include "hyperlab/constructions/constructions.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "hyperlab/hypercore/density.hpp"
#include "hyperlab/hypercore/errors.hpp"

namespace hyperlab {

namespace {

using EdgeList = std::vector<std::vector<Vertex>>;

// Appends a loose path from `from` to `to` with t edges; internal vertices
// take fresh labels from `next`. Returns the path vertices in order.
std::vector<Vertex> add_path(EdgeList& edges, int s, int t, Vertex from, std::optional<Vertex> to, Vertex& next) {
  std::vector<Vertex> seq{from};
  const int internal = t * (s - 1) - (to ? 1 : 0);
  for (int i = 0; i < internal; ++i) seq.push_back(next++);
  if (to) seq.push_back(*to);
  for (int e = 0; e < t; ++e)
    edges.emplace_back(seq.begin() + e * (s - 1), seq.begin() + (e + 1) * (s - 1) + 1);
  return seq;
}

void record(std::vector<Check>& checks, std::string name, bool ok) {
  if (!ok) throw VerificationError("construction check failed: " + name);
  checks.push_back({std::move(name), true, ""});
}

void record_capped(std::vector<Check>& checks, std::string name, const std::function<bool()>& run) {
  try {
    record(checks, std::move(name), run());
  } catch (const CapacityError& e) {
    checks.push_back({std::move(name), std::nullopt, std::string("skipped: ") + e.what()});
  }
}

std::vector<Vertex> sorted_labels(const EdgeList& edges, std::vector<Vertex> extra = {}) {
  for (const auto& e : edges) extra.insert(extra.end(), e.begin(), e.end());
  std::sort(extra.begin(), extra.end());
  extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
  return extra;
}

}  // namespace

Hypergraph loose_path(int s, int t, Vertex first) {
  if (s < 3) throw DomainError("s must be at least 3");
  if (t < 1) throw DomainError("path length must be at least 1");
  EdgeList edges;
  Vertex next = first + 1;
  add_path(edges, s, t, first, std::nullopt, next);
  return Hypergraph::from_edges(s, edges);
}

LimitPointPair limit_point_pair(int s, int l, int m, const Limits& limits) {
  if (s < 3) throw DomainError("s must be at least 3");
  if (l < 1) throw DomainError("l must be at least 1");
  if (m < 2) throw DomainError("m must be at least 2");
  if (l > 16) throw CapacityError("path length 2^l is too large");
  const int len = 1 << l;
  const int half = (len / 2) * (s - 1);

  LimitPointPair out;
  out.s = s;
  out.l = l;
  out.m = m;
  Vertex next = 3;
  EdgeList inner;
  for (int p = 0; p < 2 * m; ++p) {
    auto seq = add_path(inner, s, len, out.a, out.b, next);
    out.middles.push_back(seq[static_cast<std::size_t>(half)]);
  }
  out.z = next++;
  EdgeList outer = inner;
  for (int p = 0; p < m; ++p) add_path(outer, s, len, out.z, out.middles[static_cast<std::size_t>(p)], next);

  Hypergraph h = Hypergraph::from_edges(s, inner);
  Hypergraph g = Hypergraph::from_edges(s, outer);
  out.pair = RootedPair(g, h);
  out.alpha = Rational(s - 1) - make_rational(1, len) + make_rational(1, static_cast<std::int64_t>(len) * m);

  const Rational inverse = Rational(1) / out.alpha;
  record(out.checks, "rho(H) = 1/alpha", density(h) == inverse);
  record(out.checks, "rho(G,H) = 1/alpha", out.pair.density() == inverse);
  record(out.checks, "v(G,H) = m(2^l(s-1)-1)+1",
         out.pair.extra_vertices() == static_cast<long>(m) * (static_cast<long>(len) * (s - 1) - 1) + 1);
  record_capped(out.checks, "H strictly balanced", [&] { return is_strictly_balanced(h, limits); });
  record_capped(out.checks, "(G,H) strictly balanced", [&] { return is_strictly_balanced(out.pair, limits); });
  return out;
}

SpectrumWitness spectrum_witnesses(int s, int k, int a1, int a2, const Limits& limits) {
  (void)limits;
  if (s < 3) throw DomainError("s must be at least 3");
  if (k < s + 1) throw DomainError("k must be at least s + 1");
  if (k - s > 20) throw CapacityError("k - s is too large");
  SpectrumWitness out;
  out.s = s;
  out.k = k;
  const long top = 1L << (k - s + 1);

  // Loose cycles: H1 on x1..x_{2(s-1)}, H2 on x1..x_{3(s-1)}.
  auto cycle = [&](int edges_in_cycle, Vertex root, Vertex& next) {
    std::vector<Vertex> seq{root};
    for (int i = 1; i < edges_in_cycle * (s - 1); ++i) seq.push_back(next++);
    seq.push_back(root);
    EdgeList out_edges;
    for (int e = 0; e < edges_in_cycle; ++e)
      out_edges.emplace_back(seq.begin() + e * (s - 1), seq.begin() + (e + 1) * (s - 1) + 1);
    return out_edges;
  };

  EdgeList edges;
  if (k == s + 1) {
    out.a = 1;
    out.x = 1;
    Vertex next = 2;
    EdgeList c1 = cycle(2, out.x, next);
    EdgeList c2 = cycle(3, out.x, next);
    out.h1 = Hypergraph::from_edges(s, c1);
    out.h2 = Hypergraph::from_edges(s, c2);
    edges = c1;
    edges.insert(edges.end(), c2.begin(), c2.end());
  } else {
    const long half = top / 2;
    if (a1 < 1 || a2 < 1 || a1 > half || a2 > half)
      throw DomainError("a1 and a2 must lie in 1.." + std::to_string(half));
    out.a = a1 + a2 - 3;
    if (out.a < 1 || out.a > top - 3) throw DomainError("a1 + a2 - 3 must lie in 1.." + std::to_string(top - 3));
    out.a1 = a1;
    out.a2 = a2;
    out.x = 1;
    Vertex next = 2;
    const Vertex root1 = next++;
    EdgeList c1 = cycle(2, root1, next);
    const Vertex root2 = next++;
    EdgeList c2 = cycle(3, root2, next);
    out.h1 = Hypergraph::from_edges(s, c1);
    out.h2 = Hypergraph::from_edges(s, c2);
    edges = c1;
    edges.insert(edges.end(), c2.begin(), c2.end());
    add_path(edges, s, a1 + static_cast<int>(half) - 4, out.x, root1, next);
    add_path(edges, s, a2 + static_cast<int>(half) - 4, out.x, root2, next);
  }
  out.h = Hypergraph(s, sorted_labels(edges), edges);
  out.alpha = Rational(s - 1) - make_rational(1, top + out.a);

  const long e = static_cast<long>(out.h.edge_count());
  const long v = static_cast<long>(out.h.vertex_count());
  record(out.checks, "1/rho(H) = alpha", Rational(1) / density(out.h) == out.alpha);
  record(out.checks, "e(H) = 2^(k-s+1)+a", e == top + out.a);
  record(out.checks, "v(H) = e(H)(s-1)-1", v == e * (s - 1) - 1);
  record(out.checks, "H1 has 2(s-1) vertices and 2 edges",
         out.h1.vertex_count() == static_cast<std::size_t>(2 * (s - 1)) && out.h1.edge_count() == 2);
  record(out.checks, "H2 has 3(s-1) vertices and 3 edges",
         out.h2.vertex_count() == static_cast<std::size_t>(3 * (s - 1)) && out.h2.edge_count() == 3);
  return out;
}

bool omega_tilde_check(const Hypergraph& g, const Rational& alpha, std::size_t size_cap, const Limits& limits) {
  if (alpha <= 0) throw DomainError("alpha must be positive");
  if (g.vertex_count() == 0 || g.edge_count() == 0 || size_cap == 0) return true;
  // rho > 1/alpha  <=>  e * alpha > v
  auto too_dense = [&](long e, long v) { return Rational(e) * alpha > Rational(v); };
  if (g.vertex_count() <= size_cap) {
    const auto best = max_density(g, limits);
    return !too_dense(static_cast<long>(best.witness.edge_count()), static_cast<long>(best.witness.vertex_count()));
  }
  if (size_cap > limits.enumeration_vertices)
    throw CapacityError("size cap " + std::to_string(size_cap) + " exceeds the enumeration cap of " +
                        std::to_string(limits.enumeration_vertices));
  // A densest vertex set can be taken connected, so grow connected sets.
  const std::size_t n = g.vertex_count();
  std::unordered_set<std::string> seen;
  std::vector<std::string> frontier;
  for (std::size_t v = 0; v < n; ++v) {
    std::string key(n, '0');
    key[v] = '1';
    if (seen.insert(key).second) frontier.push_back(key);
  }
  for (std::size_t size = 1; size <= size_cap && !frontier.empty(); ++size) {
    std::vector<std::string> grown;
    for (const auto& key : frontier) {
      std::vector<int> idx;
      for (std::size_t v = 0; v < n; ++v)
        if (key[v] == '1') idx.push_back(static_cast<int>(v));
      const Hypergraph sub = g.induced(idx);
      if (too_dense(static_cast<long>(sub.edge_count()), static_cast<long>(sub.vertex_count()))) return false;
      if (size == size_cap) continue;
      for (int v : idx)
        for (int w : g.neighbors(v)) {
          std::string next = key;
          next[static_cast<std::size_t>(w)] = '1';
          if (next != key && seen.insert(next).second) grown.push_back(std::move(next));
        }
    }
    frontier = std::move(grown);
  }
  return true;
}

}  // namespace hyperlab
