#include "hyperlab/extlab/cyclic.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

#include "hyperlab/hypercore/density.hpp"
#include "hyperlab/hypercore/errors.hpp"

namespace hyperlab::ext {

namespace {

// A pattern found in a host, in host indices.
struct Step {
  PatternKind kind = PatternKind::SecondTypeEdge;
  int k = 0;
  int l = 0;
  int start = -1;
  int target = -1;
  std::vector<int> junctions;
  std::vector<int> reused;
  std::vector<int> added;
  std::vector<std::size_t> path;
  std::size_t closing = 0;

  std::vector<std::size_t> edges() const {
    std::vector<std::size_t> out = path;
    out.push_back(closing);
    std::sort(out.begin(), out.end());
    return out;
  }
};

using StepVisitor = std::function<bool(const Step&)>;

// Enumerates every pattern attached to the vertex set `in_w` inside `host`.
// Stops early when the visitor returns false.
class StepSearch {
 public:
  StepSearch(const Hypergraph& host, const std::vector<char>& in_w, int m, const StepVisitor& visit)
      : host_(host), in_w_(in_w), m_(m), visit_(visit), in_path_(host.vertex_count(), 0),
        used_edge_(host.edge_count(), 0) {}

  void run() {
    const int s = host_.arity();
    for (std::size_t e = 0; e < host_.edge_count() && !stop_; ++e) {
      auto ev = host_.edge(e);
      int old = 0;
      for (int v : ev) old += in_w_[static_cast<std::size_t>(v)] ? 1 : 0;
      if (old < 2 || old > s - 1) continue;
      Step st;
      st.kind = PatternKind::SecondTypeEdge;
      st.l = old;
      st.closing = e;
      for (int v : ev) {
        if (in_w_[static_cast<std::size_t>(v)]) {
          if (st.start < 0) st.start = v;
          st.reused.push_back(v);
        } else {
          st.added.push_back(v);
        }
      }
      if (!visit_(st)) stop_ = true;
    }
    if (m_ < 2) return;
    for (int x1 = 0; x1 < static_cast<int>(host_.vertex_count()) && !stop_; ++x1) {
      if (!in_w_[static_cast<std::size_t>(x1)]) continue;
      start_ = x1;
      extend(x1);
    }
  }

 private:
  bool fresh(int v) const {
    return !in_w_[static_cast<std::size_t>(v)] && !in_path_[static_cast<std::size_t>(v)];
  }

  // Adds a path edge through `from` (x1 or the last junction), then tries
  // every junction in it.
  void extend(int from) {
    for (int e : host_.incident_edges(from)) {
      if (stop_) return;
      const auto edge = static_cast<std::size_t>(e);
      if (used_edge_[edge]) continue;
      auto ev = host_.edge(edge);
      bool ok = true;
      for (int v : ev)
        if (v != from && !fresh(v)) ok = false;
      if (!ok) continue;
      used_edge_[edge] = 1;
      path_.push_back(edge);
      for (int v : ev)
        if (v != from) in_path_[static_cast<std::size_t>(v)] = 1, path_vertices_.push_back(v);
      for (int j : ev) {
        if (j == from || stop_) continue;
        junctions_.push_back(j);
        close(j);
        if (static_cast<int>(path_.size()) < m_ - 1) extend(j);
        junctions_.pop_back();
      }
      for (int v : ev)
        if (v != from) in_path_[static_cast<std::size_t>(v)] = 0, path_vertices_.pop_back();
      path_.pop_back();
      used_edge_[edge] = 0;
    }
  }

  void close(int j) {
    for (int e : host_.incident_edges(j)) {
      if (stop_) return;
      const auto edge = static_cast<std::size_t>(e);
      if (used_edge_[edge]) continue;
      std::vector<int> old, reused, added;
      for (int v : host_.edge(edge)) {
        if (v == j) continue;
        if (in_w_[static_cast<std::size_t>(v)]) old.push_back(v);
        else if (in_path_[static_cast<std::size_t>(v)]) reused.push_back(v);
        else added.push_back(v);
      }
      Step st;
      if (old.empty() || (old.size() == 1 && old[0] == start_)) {
        // All new vertices would make this a further path edge, not a closing one.
        if (added.size() == static_cast<std::size_t>(host_.arity() - 1)) continue;
        st.kind = PatternKind::FirstType;
        if (!old.empty()) reused.insert(reused.begin(), start_);
      } else if (old.size() == 1 && old[0] != start_) {
        st.kind = PatternKind::SecondTypePath;
        st.target = old[0];
      } else {
        continue;
      }
      st.k = static_cast<int>(path_.size());
      st.l = static_cast<int>(added.size());
      st.start = start_;
      st.junctions = junctions_;
      st.reused = std::move(reused);
      st.added = path_vertices_;
      st.added.insert(st.added.end(), added.begin(), added.end());
      st.path = path_;
      st.closing = edge;
      if (!visit_(st)) stop_ = true;
    }
  }

  const Hypergraph& host_;
  const std::vector<char>& in_w_;
  int m_;
  const StepVisitor& visit_;
  std::vector<char> in_path_;
  std::vector<char> used_edge_;
  std::vector<std::size_t> path_;
  std::vector<int> junctions_;
  std::vector<int> path_vertices_;
  int start_ = -1;
  bool stop_ = false;
};

void for_each_step(const Hypergraph& host, const std::vector<char>& in_w, int m, const StepVisitor& visit) {
  StepSearch(host, in_w, m, visit).run();
}

CyclicPattern to_pattern(const Hypergraph& host, const Step& st) {
  auto labels = [&](const std::vector<int>& idx) {
    std::vector<Vertex> out;
    for (int v : idx) out.push_back(host.label(v));
    return out;
  };
  CyclicPattern p;
  p.kind = st.kind;
  p.k = st.k;
  p.l = st.l;
  p.start = host.label(st.start);
  if (st.target >= 0) p.target = host.label(st.target);
  p.junctions = labels(st.junctions);
  p.reused = labels(st.reused);
  p.added = labels(st.added);
  std::sort(p.added.begin(), p.added.end());
  for (std::size_t e : st.path) p.path.push_back(host.edge_labels(e));
  p.closing = host.edge_labels(st.closing);
  return p;
}

int rank(PatternKind k) {
  switch (k) {
    case PatternKind::FirstType: return 0;
    case PatternKind::SecondTypePath: return 1;
    case PatternKind::SecondTypeEdge: return 2;
  }
  return 3;
}

void check_m(int m) {
  if (m < 1) throw DomainError("m must be at least 1");
}

bool below_bound(const Hypergraph& g, const Rational& bound, const Limits& limits) {
  return max_density(g, limits).value < bound;
}

}  // namespace

std::string to_string(PatternKind k) {
  switch (k) {
    case PatternKind::FirstType: return "first-type";
    case PatternKind::SecondTypePath: return "second-type-path";
    case PatternKind::SecondTypeEdge: return "second-type-edge";
  }
  return "unknown";
}

Rational cyclic_density_bound(int s, int m) {
  check_m(m);
  if (s < 3) throw DomainError("arity must be at least 3");
  return make_rational(m, static_cast<std::int64_t>(m) * (s - 1) - 1);
}

std::optional<CyclicPattern> match_cyclic_extension(const RootedPair& pair, int m, const Limits& limits) {
  check_m(m);
  const Hypergraph& g = pair.outer();
  if (g.vertex_count() > limits.enumeration_vertices)
    throw CapacityError("hypergraph with " + std::to_string(g.vertex_count()) + " vertices exceeds the cap of " +
                        std::to_string(limits.enumeration_vertices));
  if (pair.extra_edges() == 0) return std::nullopt;
  std::vector<char> in_w(g.vertex_count(), 0);
  for (int v : pair.inner_indices()) in_w[static_cast<std::size_t>(v)] = 1;
  std::vector<std::size_t> want_edges;
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (!pair.is_inner_edge(e)) want_edges.push_back(e);
  std::vector<int> want_vertices = pair.free_indices();
  std::sort(want_vertices.begin(), want_vertices.end());
  // Every pattern adds one more edge than path edges and at least one vertex.
  if (want_vertices.empty() || static_cast<int>(want_edges.size()) > m) return std::nullopt;

  std::optional<Step> best;
  for_each_step(g, in_w, m, [&](const Step& st) {
    if (st.edges() != want_edges) return true;
    std::vector<int> added = st.added;
    std::sort(added.begin(), added.end());
    if (added != want_vertices) return true;
    if (!best || rank(st.kind) < rank(best->kind)) best = st;
    return rank(best->kind) > 0;
  });
  if (!best) return std::nullopt;
  if (!below_bound(g, cyclic_density_bound(g.arity(), m), limits)) return std::nullopt;
  return to_pattern(g, *best);
}

std::optional<std::vector<Hypergraph>> find_m_decomposition(const Hypergraph& g, int m, Vertex root,
                                                            const Limits& limits) {
  check_m(m);
  if (g.vertex_count() > limits.enumeration_vertices)
    throw CapacityError("hypergraph with " + std::to_string(g.vertex_count()) + " vertices exceeds the cap of " +
                        std::to_string(limits.enumeration_vertices));
  auto r = g.find(root);
  if (!r) return std::nullopt;
  const Rational bound = cyclic_density_bound(g.arity(), m);
  const std::size_t n = g.vertex_count();

  // State: the edges taken so far; the vertex set is the root plus their vertices.
  std::unordered_set<std::string> dead;
  std::vector<std::vector<std::size_t>> chain;
  std::string used(g.edge_count(), '0');

  auto build = [&](const std::string& mask) {
    std::vector<char> in(n, 0);
    in[static_cast<std::size_t>(*r)] = 1;
    std::vector<std::size_t> edges;
    for (std::size_t e = 0; e < mask.size(); ++e)
      if (mask[e] == '1') {
        edges.push_back(e);
        for (int v : g.edge(e)) in[static_cast<std::size_t>(v)] = 1;
      }
    std::vector<int> idx;
    for (std::size_t v = 0; v < n; ++v)
      if (in[v]) idx.push_back(static_cast<int>(v));
    return std::make_pair(in, g.subgraph(idx, edges));
  };

  std::function<bool(const std::string&)> dfs = [&](const std::string& mask) -> bool {
    auto [in_w, current] = build(mask);
    if (current.vertex_count() == n) return true;
    if (dead.count(mask)) return false;
    bool found = false;
    std::set<std::string> tried;
    for_each_step(g, in_w, m, [&](const Step& st) {
      std::string next = mask;
      for (std::size_t e : st.edges()) next[e] = '1';
      if (!tried.insert(next).second || dead.count(next)) return true;
      if (!below_bound(build(next).second, bound, limits)) {
        dead.insert(next);
        return true;
      }
      chain.push_back(st.edges());
      if (dfs(next)) {
        found = true;
        return false;
      }
      chain.pop_back();
      return true;
    });
    if (!found) dead.insert(mask);
    return found;
  };

  if (!dfs(used)) return std::nullopt;
  std::vector<Hypergraph> out;
  out.push_back(build(used).second);
  for (const auto& step : chain) {
    for (std::size_t e : step) used[e] = '1';
    out.push_back(build(used).second);
  }
  return out;
}

bool in_cyclic_class(const Hypergraph& g, int m, const Limits& limits) {
  check_m(m);
  if (g.vertex_count() == 0) return false;
  if (g.vertex_count() == 1) return true;
  if (!below_bound(g, cyclic_density_bound(g.arity(), m), limits)) return false;
  // Edges on a fixed vertex set can always be added last, so membership
  // reduces to a spanning decomposition from some root.
  for (Vertex root : g.vertices())
    if (find_m_decomposition(g, m, root, limits)) return true;
  return false;
}

bool is_cyclically_maximal(const RootedPair& pair, const Hypergraph& host, int m, const Limits& limits) {
  check_m(m);
  const Hypergraph& g = pair.outer();
  const Hypergraph& h = pair.inner();
  if (host.arity() != g.arity()) throw DomainError("host has a different arity");
  std::vector<char> in_w(host.vertex_count(), 0);
  std::vector<int> g_idx;
  for (Vertex v : g.vertices()) {
    auto i = host.find(v);
    if (!i) throw DomainError("vertex " + std::to_string(v) + " is not in the host");
    in_w[static_cast<std::size_t>(*i)] = 1;
    g_idx.push_back(*i);
  }
  std::vector<std::size_t> g_edges;
  for (const auto& e : g.edge_list()) {
    std::vector<int> idx;
    for (Vertex v : e) idx.push_back(host.index_of(v));
    auto id = host.edge_id(idx);
    if (!id) throw DomainError("edge of G is not in the host");
    g_edges.push_back(*id);
  }
  const Rational bound = cyclic_density_bound(g.arity(), m);

  bool maximal = true;
  for_each_step(host, in_w, m, [&](const Step& st) {
    std::vector<int> idx = g_idx;
    idx.insert(idx.end(), st.added.begin(), st.added.end());
    std::vector<std::size_t> edges = g_edges;
    for (std::size_t e : st.edges()) edges.push_back(e);
    std::sort(idx.begin(), idx.end());
    std::sort(edges.begin(), edges.end());
    if (!below_bound(host.subgraph(idx, edges), bound, limits)) return true;

    // The same new part attached to H instead of G.
    std::vector<Vertex> labels(h.vertices().begin(), h.vertices().end());
    for (int v : st.added) labels.push_back(host.label(v));
    auto h_edges = h.edge_list();
    for (std::size_t e : st.edges()) {
      auto el = host.edge_labels(e);
      for (Vertex v : el)
        if (!h.contains_vertex(v) && std::find(st.added.begin(), st.added.end(), host.index_of(v)) == st.added.end()) {
          maximal = false;
          return false;
        }
      h_edges.push_back(std::move(el));
    }
    Hypergraph extended(h.arity(), labels, h_edges);
    if (!match_cyclic_extension(RootedPair(extended, h), m, limits)) {
      maximal = false;
      return false;
    }
    return true;
  });
  return maximal;
}

}  // namespace hyperlab::ext
