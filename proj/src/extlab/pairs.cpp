#include "hyperlab/extlab/pairs.hpp"

#include <set>

#include "hyperlab/hypercore/errors.hpp"
#include "hyperlab/hypercore/subset_walk.hpp"

namespace hyperlab::ext {

Rational f_alpha(const RootedPair& pair, const Rational& alpha) {
  return Rational(pair.extra_vertices()) - alpha * pair.extra_edges();
}

std::string to_string(PairClass c) {
  switch (c) {
    case PairClass::Safe: return "safe";
    case PairClass::Rigid: return "rigid";
    case PairClass::Neutral: return "neutral";
    case PairClass::Other: return "other";
  }
  return "other";
}

namespace {

__extension__ using Wide = __int128;

std::int64_t narrow(const BigInt& z) {
  if (z > BigInt(std::numeric_limits<std::int64_t>::max()) || z < BigInt(std::numeric_limits<std::int64_t>::min()))
    throw DomainError("alpha has too large a numerator or denominator");
  return z.convert_to<std::int64_t>();
}

}  // namespace

PairClass classify_pair(const RootedPair& pair, const Rational& alpha, const Limits& limits) {
  if (pair.extra_vertices() == 0 && pair.extra_edges() == 0) return PairClass::Other;
  const Hypergraph& g = pair.outer();
  const auto& free = pair.free_indices();
  if (free.size() > limits.enumeration_vertices || free.size() > 62)
    throw CapacityError("pair classification over " + std::to_string(free.size()) +
                        " extra vertices exceeds the cap of " + std::to_string(limits.enumeration_vertices));
  // alpha = p / q; all comparisons are done as q*v - p*e against 0.
  const Wide p = narrow(numerator_of(alpha));
  const Wide q = narrow(denominator_of(alpha));
  const long v_total = pair.extra_vertices();
  const long e_outer = static_cast<long>(g.edge_count());
  const long e_inner = static_cast<long>(pair.inner().edge_count());

  std::vector<int> cnt(g.edge_count(), 0);
  long inside = 0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    for (int v : g.edge(e))
      if (pair.is_inner_vertex(v)) ++cnt[e];
    if (cnt[e] == g.arity()) ++inside;
  }

  bool safe = true, rigid = true, neutral_inner = true;
  auto visit = [&](long x, long e_w) {
    const bool full = x == v_total;
    // Least f(K, H) over K on this vertex set with K != H.
    if (x > 0 || e_w > e_inner) {
      const bool positive = q * x - p * (e_w - e_inner) > 0;
      if (!positive) {
        safe = false;
        if (!full) neutral_inner = false;
      }
    }
    // Largest f(G, K) over K on this vertex set with K != G.
    if (!full && q * (v_total - x) - p * (e_outer - e_w) >= 0) rigid = false;
  };
  visit(0, inside);
  subset_walk(g, free, cnt, inside, [&](std::uint64_t, long size, long in) {
    visit(size, in);
    return true;
  });
  const bool balanced = q * v_total - p * (e_outer - e_inner) == 0;
  if (safe) return PairClass::Safe;
  if (rigid) return PairClass::Rigid;
  if (balanced && neutral_inner) return PairClass::Neutral;
  return PairClass::Other;
}

bool is_extension(const RootedPair& candidate, const RootedPair& templ, const Correspondence& map, bool strict) {
  const Hypergraph& g = templ.outer();
  const Hypergraph& c = candidate.outer();
  if (map.size() != g.vertex_count() || g.vertex_count() != c.vertex_count())
    throw DomainError("correspondence must be a bijection between the outer vertex sets");
  std::vector<int> image(g.vertex_count(), -1);
  std::set<Vertex> seen;
  for (const auto& [from, to] : map) {
    auto fi = g.find(from);
    auto ti = c.find(to);
    if (!fi || !ti) throw DomainError("correspondence uses an unknown vertex");
    if (!seen.insert(to).second) throw DomainError("correspondence is not injective");
    if (templ.is_inner_vertex(*fi) != candidate.is_inner_vertex(*ti))
      throw DomainError("correspondence must map inner vertices to inner vertices");
    image[static_cast<std::size_t>(*fi)] = *ti;
  }
  std::vector<int> mapped(static_cast<std::size_t>(g.arity()));
  std::size_t matched = 0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (templ.is_inner_edge(e)) continue;
    auto ev = g.edge(e);
    for (std::size_t i = 0; i < ev.size(); ++i) mapped[i] = image[static_cast<std::size_t>(ev[i])];
    auto id = c.edge_id(mapped);
    if (!id || candidate.is_inner_edge(*id)) return false;
    ++matched;
  }
  if (!strict) return true;
  // The forward images are distinct, so equal counts give the converse.
  return matched == static_cast<std::size_t>(candidate.extra_edges());
}

}  // namespace hyperlab::ext
