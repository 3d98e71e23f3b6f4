#include "hyperlab/hypercore/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "hyperlab/hypercore/errors.hpp"

namespace hyperlab {

namespace {

/// One side of a simultaneous colour refinement.
struct Side {
  const Hypergraph* g;
  const std::vector<int>* edge_color;  // may be empty
  std::vector<int> color;
};

int edge_colour(const Side& side, std::size_t e) {
  return side.edge_color->empty() ? 0 : (*side.edge_color)[e];
}

std::vector<int> signature(const Side& side, int v) {
  const Hypergraph& g = *side.g;
  std::vector<std::vector<int>> parts;
  for (int e : g.incident_edges(v)) {
    std::vector<int> part{edge_colour(side, static_cast<std::size_t>(e))};
    for (int w : g.edge(static_cast<std::size_t>(e)))
      if (w != v) part.push_back(side.color[static_cast<std::size_t>(w)]);
    std::sort(part.begin() + 1, part.end());
    parts.push_back(std::move(part));
  }
  std::sort(parts.begin(), parts.end());
  std::vector<int> sig{side.color[static_cast<std::size_t>(v)], static_cast<int>(parts.size())};
  for (const auto& p : parts) sig.insert(sig.end(), p.begin(), p.end());
  return sig;
}

int count_colours(const std::vector<int>& c) {
  std::vector<int> copy = c;
  std::sort(copy.begin(), copy.end());
  return static_cast<int>(std::unique(copy.begin(), copy.end()) - copy.begin());
}

/// Refines both colourings in lock step with canonical colour ids. Returns
/// false as soon as the colour histograms disagree.
bool refine(Side& a, Side& b) {
  const std::size_t n = a.color.size();
  if (b.color.size() != n) return false;
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> sa(n), sb(n);
    for (std::size_t v = 0; v < n; ++v) {
      sa[v] = signature(a, static_cast<int>(v));
      sb[v] = signature(b, static_cast<int>(v));
    }
    std::map<std::vector<int>, int> ids;
    for (const auto& s : sa) ids.emplace(s, 0);
    for (const auto& s : sb) ids.emplace(s, 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    std::vector<int> hist(static_cast<std::size_t>(next), 0);
    for (std::size_t v = 0; v < n; ++v) {
      a.color[v] = ids[sa[v]];
      b.color[v] = ids[sb[v]];
      ++hist[static_cast<std::size_t>(a.color[v])];
      --hist[static_cast<std::size_t>(b.color[v])];
    }
    if (std::any_of(hist.begin(), hist.end(), [](int h) { return h != 0; })) return false;
    const int now = count_colours(a.color);
    if (now == classes) return true;
    classes = now;
  }
}

/// First vertex of the smallest non-singleton colour class, or -1.
int pick_target(const std::vector<int>& color) {
  std::map<int, std::vector<int>> cells;
  for (std::size_t v = 0; v < color.size(); ++v) cells[color[v]].push_back(static_cast<int>(v));
  int best = -1;
  std::size_t best_size = 0;
  for (const auto& [c, members] : cells) {
    if (members.size() > 1 && (best < 0 || members.size() < best_size)) {
      best = members.front();
      best_size = members.size();
    }
  }
  return best;
}

void individualize(std::vector<int>& color, int v) {
  color[static_cast<std::size_t>(v)] = *std::max_element(color.begin(), color.end()) + 1;
}

bool check_map(const Side& a, const Side& b) {
  const std::size_t n = a.color.size();
  std::vector<int> image(n);
  std::vector<int> by_colour(n + 1, -1);
  for (std::size_t v = 0; v < n; ++v) by_colour[static_cast<std::size_t>(b.color[v])] = static_cast<int>(v);
  for (std::size_t v = 0; v < n; ++v) image[v] = by_colour[static_cast<std::size_t>(a.color[v])];
  const Hypergraph& ga = *a.g;
  const Hypergraph& gb = *b.g;
  if (ga.edge_count() != gb.edge_count()) return false;
  std::vector<int> mapped(static_cast<std::size_t>(ga.arity()));
  for (std::size_t e = 0; e < ga.edge_count(); ++e) {
    auto ev = ga.edge(e);
    for (std::size_t i = 0; i < ev.size(); ++i) mapped[i] = image[static_cast<std::size_t>(ev[i])];
    auto id = gb.edge_id(mapped);
    if (!id || edge_colour(a, e) != edge_colour(b, *id)) return false;
  }
  return true;
}

/// Is there an isomorphism respecting both (already individualized) colourings?
bool extendable(Side a, Side b) {
  if (!refine(a, b)) return false;
  const int v = pick_target(a.color);
  if (v < 0) return check_map(a, b);
  const int cell = a.color[static_cast<std::size_t>(v)];
  for (std::size_t w = 0; w < b.color.size(); ++w) {
    if (b.color[w] != cell) continue;
    Side a2 = a, b2 = b;
    individualize(a2.color, v);
    individualize(b2.color, static_cast<int>(w));
    if (extendable(std::move(a2), std::move(b2))) return true;
  }
  return false;
}

void check_search_cap(const Hypergraph& g, const Limits& limits) {
  if (g.vertex_count() > limits.search_vertices)
    throw CapacityError("automorphism search over " + std::to_string(g.vertex_count()) +
                        " vertices exceeds the cap of " + std::to_string(limits.search_vertices));
}

}  // namespace

BigInt automorphism_count(const Hypergraph& g, const Limits& limits) {
  return automorphism_count(g, Coloring{}, limits);
}

BigInt automorphism_count(const Hypergraph& g, const Coloring& coloring, const Limits& limits) {
  check_search_cap(g, limits);
  const std::size_t n = g.vertex_count();
  if (!coloring.vertex.empty() && coloring.vertex.size() != n)
    throw DomainError("vertex colouring has the wrong length");
  if (!coloring.edge.empty() && coloring.edge.size() != g.edge_count())
    throw DomainError("edge colouring has the wrong length");
  Side base{&g, &coloring.edge, coloring.vertex.empty() ? std::vector<int>(n, 0) : coloring.vertex};
  Side twin = base;
  refine(base, twin);
  // Orbit-stabilizer chain: |Aut_B| = |orbit of v under Aut_B| * |Aut_{B+v}|.
  BigInt total = 1;
  while (true) {
    const int v = pick_target(base.color);
    if (v < 0) break;
    const int cell = base.color[static_cast<std::size_t>(v)];
    long orbit = 0;
    for (std::size_t w = 0; w < n; ++w) {
      if (base.color[w] != cell) continue;
      if (static_cast<int>(w) == v) {
        ++orbit;
        continue;
      }
      Side a = base, b = base;
      individualize(a.color, v);
      individualize(b.color, static_cast<int>(w));
      if (extendable(std::move(a), std::move(b))) ++orbit;
    }
    total *= orbit;
    individualize(base.color, v);
    twin = base;
    refine(base, twin);
  }
  return total;
}

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b, const Limits& limits) {
  if (a.arity() != b.arity() || a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  check_search_cap(a, limits);
  const std::vector<int> no_colours;
  Side sa{&a, &no_colours, std::vector<int>(a.vertex_count(), 0)};
  Side sb{&b, &no_colours, std::vector<int>(b.vertex_count(), 0)};
  return extendable(std::move(sa), std::move(sb));
}

namespace {

struct EmbeddingPlan {
  std::vector<int> order;                             // motif vertices
  std::vector<std::vector<int>> earlier_neighbors;    // per position
  std::vector<std::vector<std::size_t>> closing;      // edges completed at this position
};

EmbeddingPlan plan(const Hypergraph& m) {
  const int n = static_cast<int>(m.vertex_count());
  EmbeddingPlan p;
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  std::vector<int> links(static_cast<std::size_t>(n), 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int u = 0; u < n; ++u) {
      if (placed[static_cast<std::size_t>(u)]) continue;
      if (best < 0) {
        best = u;
        continue;
      }
      const auto lu = links[static_cast<std::size_t>(u)], lb = links[static_cast<std::size_t>(best)];
      if (lu > lb || (lu == lb && m.degree(u) > m.degree(best))) best = u;
    }
    placed[static_cast<std::size_t>(best)] = 1;
    p.order.push_back(best);
    std::vector<int> earlier;
    for (int w : m.neighbors(best))
      if (placed[static_cast<std::size_t>(w)] && w != best) earlier.push_back(w);
    p.earlier_neighbors.push_back(std::move(earlier));
    std::vector<std::size_t> closing;
    for (int e : m.incident_edges(best)) {
      auto ev = m.edge(static_cast<std::size_t>(e));
      if (std::all_of(ev.begin(), ev.end(), [&](int w) { return placed[static_cast<std::size_t>(w)] != 0; }))
        closing.push_back(static_cast<std::size_t>(e));
    }
    p.closing.push_back(std::move(closing));
    for (int w : m.neighbors(best)) ++links[static_cast<std::size_t>(w)];
  }
  return p;
}

class Embedder {
 public:
  Embedder(const Hypergraph& motif, const Hypergraph& host, const EmbeddingVisitor& visit)
      : m_(motif), g_(host), visit_(visit), plan_(plan(motif)),
        image_(motif.vertex_count(), -1), used_(host.vertex_count(), 0),
        buffer_(static_cast<std::size_t>(motif.arity())) {}

  void run() {
    if (m_.arity() != g_.arity()) throw DomainError("motif and host have different arity");
    if (m_.vertex_count() > g_.vertex_count()) return;
    step(0);
  }

 private:
  bool step(std::size_t pos) {
    if (pos == plan_.order.size()) return visit_(image_);
    const int u = plan_.order[pos];
    const auto& earlier = plan_.earlier_neighbors[pos];
    if (earlier.empty()) {
      for (int w = 0; w < static_cast<int>(g_.vertex_count()); ++w)
        if (!try_vertex(pos, u, w)) return false;
    } else {
      // Candidates come from the host neighbourhood of one mapped neighbour.
      const int anchor = image_[static_cast<std::size_t>(earlier.front())];
      for (int w : g_.neighbors(anchor))
        if (!try_vertex(pos, u, w)) return false;
    }
    return true;
  }

  bool try_vertex(std::size_t pos, int u, int w) {
    if (used_[static_cast<std::size_t>(w)] || g_.degree(w) < m_.degree(u)) return true;
    for (int a : plan_.earlier_neighbors[pos]) {
      auto nb = g_.neighbors(image_[static_cast<std::size_t>(a)]);
      if (!std::binary_search(nb.begin(), nb.end(), w)) return true;
    }
    image_[static_cast<std::size_t>(u)] = w;
    for (std::size_t e : plan_.closing[pos]) {
      auto ev = m_.edge(e);
      for (std::size_t i = 0; i < ev.size(); ++i) buffer_[i] = image_[static_cast<std::size_t>(ev[i])];
      if (!g_.has_edge(buffer_)) {
        image_[static_cast<std::size_t>(u)] = -1;
        return true;
      }
    }
    used_[static_cast<std::size_t>(w)] = 1;
    const bool go_on = step(pos + 1);
    used_[static_cast<std::size_t>(w)] = 0;
    image_[static_cast<std::size_t>(u)] = -1;
    return go_on;
  }

  const Hypergraph& m_;
  const Hypergraph& g_;
  const EmbeddingVisitor& visit_;
  EmbeddingPlan plan_;
  std::vector<int> image_;
  std::vector<char> used_;
  std::vector<int> buffer_;
};

}  // namespace

void for_each_embedding(const Hypergraph& motif, const Hypergraph& host, const EmbeddingVisitor& visit) {
  Embedder(motif, host, visit).run();
}

std::uint64_t count_embeddings(const Hypergraph& motif, const Hypergraph& host) {
  std::uint64_t count = 0;
  for_each_embedding(motif, host, [&](std::span<const int>) {
    ++count;
    return true;
  });
  return count;
}

BigInt count_copies(const Hypergraph& motif, const Hypergraph& host, const Limits& limits) {
  if (motif.arity() != host.arity()) throw DomainError("motif and host have different arity");
  check_search_cap(motif, limits);
  // Isolated motif vertices can sit on any unused host vertex.
  std::vector<int> core_vertices;
  long isolated = 0;
  for (int v = 0; v < static_cast<int>(motif.vertex_count()); ++v) {
    if (motif.degree(v) > 0)
      core_vertices.push_back(v);
    else
      ++isolated;
  }
  const auto n = static_cast<std::int64_t>(host.vertex_count());
  if (core_vertices.empty()) return binomial(n, isolated);
  const Hypergraph core = motif.induced(core_vertices);
  const BigInt embeddings = count_embeddings(core, host);
  const BigInt aut = automorphism_count(core, limits);
  if (embeddings % aut != 0) throw Error("embedding count is not a multiple of the automorphism count");
  return embeddings / aut * binomial(n - static_cast<std::int64_t>(core.vertex_count()), isolated);
}

}  // namespace hyperlab
