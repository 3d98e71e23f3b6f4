#include "hyperlab/extlab/maximality.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hyperlab/extlab/pairs.hpp"
#include "hyperlab/hypercore/errors.hpp"

namespace hyperlab::ext {

namespace {

/// Finds injective placements of the free vertices of a template (K, T) in a
/// host, given where T's vertices go, such that the host hypergraph induced on
/// the image is a strict extension: template edges outside T map to host
/// edges outside the protected set, and every other host edge inside the image
/// is such an image.
class StrictSearch {
 public:
  using Visit = std::function<bool(const std::vector<int>& image)>;

  StrictSearch(const Hypergraph& host, const RootedPair& templ, std::vector<int> base_image,
               const std::vector<char>& forbidden, const std::vector<char>& protected_edges,
               const std::vector<char>& cross_block)
      : host_(host), templ_(templ), image_(std::move(base_image)), forbidden_(forbidden),
        protected_(protected_edges), cross_(cross_block), in_set_(host.vertex_count(), 0),
        buffer_(static_cast<std::size_t>(host.arity())) {
    const Hypergraph& k = templ.outer();
    for (int v : templ.inner_indices()) in_set_[static_cast<std::size_t>(image_[static_cast<std::size_t>(v)])] = 1;
    std::vector<char> placed(k.vertex_count(), 0);
    for (int v : templ.inner_indices()) placed[static_cast<std::size_t>(v)] = 1;
    std::vector<int> free = templ.free_indices();
    while (!free.empty()) {
      auto best = free.begin();
      int best_links = -1;
      for (auto it = free.begin(); it != free.end(); ++it) {
        int links = 0;
        for (int w : k.neighbors(*it))
          if (placed[static_cast<std::size_t>(w)]) ++links;
        if (links > best_links) {
          best_links = links;
          best = it;
        }
      }
      order_.push_back(*best);
      placed[static_cast<std::size_t>(*best)] = 1;
      free.erase(best);
    }
  }

  /// Returns false if the visitor stopped the search.
  bool run(const Visit& visit) {
    if (!base_ok()) return true;
    return step(0, visit);
  }

 private:
  bool base_ok() {
    const Hypergraph& k = templ_.outer();
    std::size_t template_inside = 0;
    for (std::size_t e = 0; e < k.edge_count(); ++e) {
      if (templ_.is_inner_edge(e)) continue;
      auto ev = k.edge(e);
      if (!std::all_of(ev.begin(), ev.end(), [&](int v) { return templ_.is_inner_vertex(v); })) continue;
      for (std::size_t i = 0; i < ev.size(); ++i) buffer_[i] = image_[static_cast<std::size_t>(ev[i])];
      auto id = host_.edge_id(buffer_);
      if (!id || protected_[*id]) return false;
      ++template_inside;
    }
    std::size_t host_inside = 0;
    for (std::size_t e = 0; e < host_.edge_count(); ++e) {
      if (protected_[e]) continue;
      auto ev = host_.edge(e);
      if (std::all_of(ev.begin(), ev.end(), [&](int v) { return in_set_[static_cast<std::size_t>(v)] != 0; }))
        ++host_inside;
    }
    return host_inside == template_inside;
  }

  bool step(std::size_t pos, const Visit& visit) {
    if (pos == order_.size()) return visit(image_);
    const int u = order_[pos];
    const Hypergraph& k = templ_.outer();
    int anchor = -1;
    for (int w : k.neighbors(u))
      if (image_[static_cast<std::size_t>(w)] >= 0) {
        anchor = image_[static_cast<std::size_t>(w)];
        break;
      }
    if (anchor >= 0) {
      for (int h : host_.neighbors(anchor))
        if (!place(pos, u, h, visit)) return false;
    } else {
      for (int h = 0; h < static_cast<int>(host_.vertex_count()); ++h)
        if (!place(pos, u, h, visit)) return false;
    }
    return true;
  }

  bool place(std::size_t pos, int u, int h, const Visit& visit) {
    const auto hs = static_cast<std::size_t>(h);
    if (forbidden_[hs] || in_set_[hs]) return true;
    const Hypergraph& k = templ_.outer();
    image_[static_cast<std::size_t>(u)] = h;
    in_set_[hs] = 1;
    bool ok = true;
    std::size_t template_edges = 0;
    for (int e : k.incident_edges(u)) {
      auto ev = k.edge(static_cast<std::size_t>(e));
      bool complete = true;
      for (std::size_t i = 0; i < ev.size(); ++i) {
        buffer_[i] = image_[static_cast<std::size_t>(ev[i])];
        if (buffer_[i] < 0) complete = false;
      }
      if (!complete) continue;
      auto id = host_.edge_id(buffer_);
      if (!id || protected_[*id]) {
        ok = false;
        break;
      }
      ++template_edges;
    }
    if (ok) {
      std::size_t host_edges = 0;
      for (int e : host_.incident_edges(h)) {
        auto ev = host_.edge(static_cast<std::size_t>(e));
        bool touches_base = false, touches_block = false, complete = true;
        for (int v : ev) {
          const auto vs = static_cast<std::size_t>(v);
          if (!in_set_[vs]) complete = false;
          if (in_set_[vs] && !is_new(v)) touches_base = true;
          if (!cross_.empty() && cross_[vs]) touches_block = true;
        }
        if (complete) ++host_edges;
        if (!touches_base && touches_block) {
          ok = false;
          break;
        }
      }
      if (ok && host_edges != template_edges) ok = false;
    }
    bool go_on = true;
    if (ok) go_on = step(pos + 1, visit);
    in_set_[hs] = 0;
    image_[static_cast<std::size_t>(u)] = -1;
    return go_on;
  }

  bool is_new(int host_vertex) const {
    for (int v : templ_.inner_indices())
      if (image_[static_cast<std::size_t>(v)] == host_vertex) return false;
    return true;
  }

  const Hypergraph& host_;
  const RootedPair& templ_;
  std::vector<int> image_;
  const std::vector<char>& forbidden_;
  const std::vector<char>& protected_;
  const std::vector<char>& cross_;
  std::vector<char> in_set_;
  std::vector<int> buffer_;
  std::vector<int> order_;
};

struct Embedded {
  std::vector<int> host_of;       // tilde outer index -> host index
  std::vector<char> in_outer;     // host index -> belongs to V(G')
  std::vector<int> edge_in_host;  // tilde outer edge -> host edge id
};

Embedded locate(const RootedPair& tilde, const Hypergraph& host) {
  const Hypergraph& g = tilde.outer();
  if (g.arity() != host.arity()) throw DomainError("pair and host have different arity");
  Embedded out;
  out.in_outer.assign(host.vertex_count(), 0);
  for (Vertex v : g.vertices()) {
    auto idx = host.find(v);
    if (!idx) throw DomainError("vertex " + std::to_string(v) + " is not in the host");
    out.host_of.push_back(*idx);
    out.in_outer[static_cast<std::size_t>(*idx)] = 1;
  }
  std::vector<int> mapped(static_cast<std::size_t>(g.arity()));
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto ev = g.edge(e);
    for (std::size_t i = 0; i < ev.size(); ++i) mapped[i] = out.host_of[static_cast<std::size_t>(ev[i])];
    auto id = host.edge_id(mapped);
    if (!id) throw DomainError("the pair is not a sub-hypergraph of the host");
    out.edge_in_host.push_back(static_cast<int>(*id));
  }
  return out;
}

/// Is G'[W] (W given as tilde outer indices) contained in H'?
bool inside_inner(const RootedPair& tilde, const std::vector<int>& w) {
  const Hypergraph& g = tilde.outer();
  std::vector<char> mark(g.vertex_count(), 0);
  for (int v : w) {
    if (!tilde.is_inner_vertex(v)) return false;
    mark[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto ev = g.edge(e);
    if (std::all_of(ev.begin(), ev.end(), [&](int v) { return mark[static_cast<std::size_t>(v)] != 0; }) &&
        !tilde.is_inner_edge(e))
      return false;
  }
  return true;
}

template <class Visit>
bool for_each_combination(int n, int size, std::vector<int>& chosen, int start, Visit&& visit) {
  if (static_cast<int>(chosen.size()) == size) return visit(chosen);
  for (int i = start; i < n; ++i) {
    chosen.push_back(i);
    const bool go_on = for_each_combination(n, size, chosen, i + 1, visit);
    chosen.pop_back();
    if (!go_on) return false;
  }
  return true;
}

void check_cap(std::size_t count, const Limits& limits) {
  if (count > limits.enumeration_vertices)
    throw CapacityError("maximality search over " + std::to_string(count) + " vertices exceeds the cap of " +
                        std::to_string(limits.enumeration_vertices));
}

/// Host edge ids belonging to G'[W].
std::vector<char> protected_edges(const RootedPair& tilde, const Embedded& emb, const std::vector<char>& in_w,
                                  std::size_t host_edges) {
  std::vector<char> out(host_edges, 0);
  const Hypergraph& g = tilde.outer();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto ev = g.edge(e);
    if (std::all_of(ev.begin(), ev.end(), [&](int v) { return in_w[static_cast<std::size_t>(v)] != 0; }))
      out[static_cast<std::size_t>(emb.edge_in_host[e])] = 1;
  }
  return out;
}

}  // namespace

std::optional<MaximalityViolation> find_kt_violation(const RootedPair& tilde, const RootedPair& kt,
                                                     const Hypergraph& host, const Limits& limits) {
  const Hypergraph& g = tilde.outer();
  const int vt = static_cast<int>(kt.inner().vertex_count());
  if (vt > static_cast<int>(g.vertex_count())) return std::nullopt;
  if (kt.outer().arity() != host.arity()) throw DomainError("template and host have different arity");
  check_cap(g.vertex_count(), limits);
  const Embedded emb = locate(tilde, host);
  const auto& t_vertices = kt.inner_indices();
  std::optional<MaximalityViolation> found;
  std::vector<int> chosen;
  for_each_combination(static_cast<int>(g.vertex_count()), vt, chosen, 0, [&](const std::vector<int>& w) {
    if (inside_inner(tilde, w)) return true;
    std::vector<char> in_w(g.vertex_count(), 0);
    for (int v : w) in_w[static_cast<std::size_t>(v)] = 1;
    const auto prot = protected_edges(tilde, emb, in_w, host.edge_count());
    std::vector<char> block(host.vertex_count(), 0);
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (!in_w[v]) block[static_cast<std::size_t>(emb.host_of[v])] = 1;
    std::vector<int> perm = w;
    do {
      std::vector<int> base(kt.outer().vertex_count(), -1);
      for (std::size_t i = 0; i < t_vertices.size(); ++i)
        base[static_cast<std::size_t>(t_vertices[i])] = emb.host_of[static_cast<std::size_t>(perm[i])];
      StrictSearch search(host, kt, base, emb.in_outer, prot, block);
      search.run([&](const std::vector<int>& image) {
        MaximalityViolation v;
        for (int x : w) v.base.push_back(g.label(x));
        for (int x : kt.free_indices()) v.added.push_back(host.label(image[static_cast<std::size_t>(x)]));
        std::sort(v.added.begin(), v.added.end());
        found = std::move(v);
        return false;
      });
      if (found) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
  });
  return found;
}

namespace {

/// Connected growth of new-vertex sets around W, up to r vertices.
void grow(const Hypergraph& host, const std::vector<char>& forbidden, std::vector<int>& current,
          std::vector<char>& in_current, const std::vector<int>& frontier_seed, int r,
          std::set<std::vector<int>>& seen, const std::function<bool(const std::vector<int>&)>& visit, bool& stop) {
  if (stop || static_cast<int>(current.size()) >= r) return;
  std::set<int> candidates;
  for (int v : frontier_seed)
    for (int w : host.neighbors(v))
      if (!forbidden[static_cast<std::size_t>(w)] && !in_current[static_cast<std::size_t>(w)]) candidates.insert(w);
  for (int v : current)
    for (int w : host.neighbors(v))
      if (!forbidden[static_cast<std::size_t>(w)] && !in_current[static_cast<std::size_t>(w)]) candidates.insert(w);
  for (int c : candidates) {
    std::vector<int> next = current;
    next.insert(std::upper_bound(next.begin(), next.end(), c), c);
    if (!seen.insert(next).second) continue;
    in_current[static_cast<std::size_t>(c)] = 1;
    std::swap(current, next);
    if (!visit(current)) stop = true;
    grow(host, forbidden, current, in_current, frontier_seed, r, seen, visit, stop);
    std::swap(current, next);
    in_current[static_cast<std::size_t>(c)] = 0;
    if (stop) return;
  }
}

}  // namespace

std::optional<MaximalityViolation> find_r_violation(const RootedPair& tilde, const Hypergraph& host,
                                                    const Rational& alpha, int r, const Limits& limits) {
  if (r < 0) throw DomainError("r must be non-negative");
  const Hypergraph& g = tilde.outer();
  check_cap(g.vertex_count(), limits);
  if (g.vertex_count() > 62) throw CapacityError("maximality search supports at most 62 vertices");
  const Embedded emb = locate(tilde, host);
  const int n = static_cast<int>(g.vertex_count());
  std::optional<MaximalityViolation> found;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n) && !found; ++mask) {
    std::vector<int> w;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) w.push_back(i);
    if (inside_inner(tilde, w)) continue;
    std::vector<int> w_host;
    std::vector<Vertex> w_labels;
    std::vector<char> in_w_host(host.vertex_count(), 0);
    for (int v : w) {
      w_host.push_back(emb.host_of[static_cast<std::size_t>(v)]);
      w_labels.push_back(g.label(v));
      in_w_host[static_cast<std::size_t>(emb.host_of[static_cast<std::size_t>(v)])] = 1;
    }
    const Hypergraph t_tilde = g.induced(w);
    auto check = [&](const std::vector<int>& added) {
      std::vector<int> all = w_host;
      all.insert(all.end(), added.begin(), added.end());
      const Hypergraph k_tilde = host.induced(all);
      const RootedPair pair(k_tilde, t_tilde);
      const PairClass cls = classify_pair(pair, alpha, limits);
      if (cls != PairClass::Rigid && cls != PairClass::Neutral) return true;
      // No host edge may join the new vertices to V(G') \ W while avoiding W.
      std::vector<char> is_added(host.vertex_count(), 0);
      for (int a : added) is_added[static_cast<std::size_t>(a)] = 1;
      for (int a : added)
        for (int e : host.incident_edges(a)) {
          bool touches_w = false, touches_rest = false;
          for (int v : host.edge(static_cast<std::size_t>(e))) {
            if (in_w_host[static_cast<std::size_t>(v)]) touches_w = true;
            else if (emb.in_outer[static_cast<std::size_t>(v)]) touches_rest = true;
          }
          if (!touches_w && touches_rest) return true;
        }
      MaximalityViolation v;
      v.base = w_labels;
      for (int a : added) v.added.push_back(host.label(a));
      std::sort(v.added.begin(), v.added.end());
      found = std::move(v);
      return false;
    };
    if (!check({})) break;
    std::vector<int> current;
    std::vector<char> in_current(host.vertex_count(), 0);
    std::set<std::vector<int>> seen;
    bool stop = false;
    grow(host, emb.in_outer, current, in_current, w_host, r, seen, check, stop);
  }
  return found;
}

std::uint64_t count_maximal_extensions(const RootedPair& templ, const std::vector<Vertex>& tuple,
                                       const Hypergraph& host, const Rational& alpha, int r, const Limits& limits) {
  if (tuple.size() != templ.inner().vertex_count())
    throw DomainError("tuple length must equal the number of inner vertices");
  if (templ.outer().arity() != host.arity()) throw DomainError("template and host have different arity");
  std::vector<int> tuple_host;
  std::vector<char> forbidden(host.vertex_count(), 0);
  for (Vertex v : tuple) {
    const int idx = host.index_of(v);
    if (forbidden[static_cast<std::size_t>(idx)]) throw DomainError("tuple repeats a vertex");
    forbidden[static_cast<std::size_t>(idx)] = 1;
    tuple_host.push_back(idx);
  }
  std::vector<int> base(templ.outer().vertex_count(), -1);
  const auto& inner = templ.inner_indices();
  for (std::size_t i = 0; i < inner.size(); ++i) base[static_cast<std::size_t>(inner[i])] = tuple_host[i];
  // The base graph is induced on the tuple, so all its host edges are protected.
  std::vector<char> prot(host.edge_count(), 0);
  for (std::size_t e = 0; e < host.edge_count(); ++e) {
    auto ev = host.edge(e);
    if (std::all_of(ev.begin(), ev.end(), [&](int v) { return forbidden[static_cast<std::size_t>(v)] != 0; }))
      prot[e] = 1;
  }
  const std::vector<char> no_block;
  std::set<std::vector<int>> extensions;
  StrictSearch search(host, templ, base, forbidden, prot, no_block);
  search.run([&](const std::vector<int>& image) {
    std::vector<int> added;
    for (int v : templ.free_indices()) added.push_back(image[static_cast<std::size_t>(v)]);
    std::sort(added.begin(), added.end());
    extensions.insert(std::move(added));
    return true;
  });
  const Hypergraph h_tilde = host.induced(tuple_host);
  std::uint64_t count = 0;
  for (const auto& added : extensions) {
    std::vector<int> all = tuple_host;
    all.insert(all.end(), added.begin(), added.end());
    const RootedPair tilde(host.induced(all), h_tilde);
    if (!find_r_violation(tilde, host, alpha, r, limits)) ++count;
  }
  return count;
}

}  // namespace hyperlab::ext
