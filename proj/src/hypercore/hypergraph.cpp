#include "hyperlab/hypercore/hypergraph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "hyperlab/hypercore/errors.hpp"

namespace hyperlab {

namespace {

void check_arity(int arity) {
  if (arity < 3) throw DomainError("arity must be at least 3, got " + std::to_string(arity));
}

std::string describe(const std::vector<Vertex>& edge) {
  std::string out = "{";
  for (std::size_t i = 0; i < edge.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(edge[i]);
  }
  return out + "}";
}

}  // namespace

Hypergraph::Hypergraph() : Hypergraph(3) {}

Hypergraph::Hypergraph(int arity) : arity_(arity) { check_arity(arity); }

Hypergraph::Hypergraph(int arity, std::vector<Vertex> vertices,
                       const std::vector<std::vector<Vertex>>& edges)
    : arity_(arity) {
  check_arity(arity);
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  labels_ = std::move(vertices);
  edge_data_.reserve(edges.size() * static_cast<std::size_t>(arity));
  for (const auto& e : edges) {
    if (static_cast<int>(e.size()) != arity)
      throw DomainError("edge " + describe(e) + " does not have " + std::to_string(arity) + " vertices");
    for (Vertex v : e) {
      auto idx = find(v);
      if (!idx) throw DomainError("edge " + describe(e) + " uses unknown vertex " + std::to_string(v));
      edge_data_.push_back(*idx);
    }
  }
  edge_count_ = edges.size();
  build();
}

Hypergraph Hypergraph::from_edges(int arity, const std::vector<std::vector<Vertex>>& edges) {
  std::vector<Vertex> vertices;
  for (const auto& e : edges) vertices.insert(vertices.end(), e.begin(), e.end());
  return Hypergraph(arity, std::move(vertices), edges);
}

Hypergraph Hypergraph::from_indices(int arity, std::vector<Vertex> labels,
                                    std::vector<std::vector<int>> edges) {
  Hypergraph g(arity);
  for (std::size_t i = 1; i < labels.size(); ++i)
    if (labels[i - 1] >= labels[i]) throw DomainError("labels must be strictly increasing");
  g.labels_ = std::move(labels);
  const int n = static_cast<int>(g.labels_.size());
  for (const auto& e : edges) {
    if (static_cast<int>(e.size()) != arity) throw DomainError("edge of wrong size");
    for (int v : e) {
      if (v < 0 || v >= n) throw DomainError("edge index out of range");
      g.edge_data_.push_back(v);
    }
  }
  g.edge_count_ = edges.size();
  g.build();
  return g;
}

std::optional<std::uint64_t> Hypergraph::encode(std::span<const int> sorted) const {
  if (!encodable_) return std::nullopt;
  std::uint64_t key = 0;
  const std::uint64_t base = labels_.size();
  for (int v : sorted) key = key * base + static_cast<std::uint64_t>(v);
  return key;
}

void Hypergraph::build() {
  const auto s = static_cast<std::size_t>(arity_);
  const std::size_t n = labels_.size();
  // Sort vertices inside each edge, then edges lexicographically.
  std::vector<std::vector<int>> edges(edge_count_);
  for (std::size_t e = 0; e < edge_count_; ++e) {
    edges[e].assign(edge_data_.begin() + static_cast<std::ptrdiff_t>(e * s),
                    edge_data_.begin() + static_cast<std::ptrdiff_t>((e + 1) * s));
    std::sort(edges[e].begin(), edges[e].end());
    if (std::adjacent_find(edges[e].begin(), edges[e].end()) != edges[e].end()) {
      std::vector<Vertex> lab;
      for (int v : edges[e]) lab.push_back(labels_[static_cast<std::size_t>(v)]);
      throw DomainError("edge " + describe(lab) + " repeats a vertex");
    }
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t e = 1; e < edges.size(); ++e) {
    if (edges[e] == edges[e - 1]) {
      std::vector<Vertex> lab;
      for (int v : edges[e]) lab.push_back(labels_[static_cast<std::size_t>(v)]);
      throw DomainError("edge " + describe(lab) + " appears twice");
    }
  }
  edge_data_.clear();
  for (const auto& e : edges) edge_data_.insert(edge_data_.end(), e.begin(), e.end());

  // Keys are base-n numbers; fall back to binary search when n^s overflows.
  long double capacity = 1;
  for (std::size_t i = 0; i < s; ++i) capacity *= static_cast<long double>(std::max<std::size_t>(n, 1));
  encodable_ = capacity < static_cast<long double>(std::numeric_limits<std::uint64_t>::max());
  edge_keys_.clear();
  if (encodable_) {
    edge_keys_.reserve(edge_count_ * 2);
    for (std::size_t e = 0; e < edge_count_; ++e) edge_keys_.insert(*encode(edge(e)));
  }

  incidence_.assign(n, {});
  neighbors_.assign(n, {});
  for (std::size_t e = 0; e < edge_count_; ++e) {
    for (int v : edge(e)) {
      incidence_[static_cast<std::size_t>(v)].push_back(static_cast<int>(e));
      for (int w : edge(e))
        if (w != v) neighbors_[static_cast<std::size_t>(v)].push_back(w);
    }
  }
  for (auto& list : neighbors_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

std::optional<int> Hypergraph::find(Vertex v) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
  if (it == labels_.end() || *it != v) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

int Hypergraph::index_of(Vertex v) const {
  auto idx = find(v);
  if (!idx) throw DomainError("unknown vertex " + std::to_string(v));
  return *idx;
}

std::vector<Vertex> Hypergraph::edge_labels(std::size_t e) const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(arity_));
  for (int v : edge(e)) out.push_back(labels_[static_cast<std::size_t>(v)]);
  return out;
}

std::vector<std::vector<Vertex>> Hypergraph::edge_list() const {
  std::vector<std::vector<Vertex>> out;
  out.reserve(edge_count_);
  for (std::size_t e = 0; e < edge_count_; ++e) out.push_back(edge_labels(e));
  return out;
}

std::optional<std::size_t> Hypergraph::edge_id(std::span<const int> indices) const {
  if (static_cast<int>(indices.size()) != arity_) return std::nullopt;
  int buf[64];
  std::vector<int> heap;
  int* sorted = buf;
  if (indices.size() > 64) {
    heap.resize(indices.size());
    sorted = heap.data();
  }
  std::copy(indices.begin(), indices.end(), sorted);
  std::sort(sorted, sorted + indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (sorted[i] < 0 || static_cast<std::size_t>(sorted[i]) >= labels_.size()) return std::nullopt;
    if (i && sorted[i] == sorted[i - 1]) return std::nullopt;
  }
  std::span<const int> key(sorted, indices.size());
  if (encodable_ && !edge_keys_.count(*encode(key))) return std::nullopt;
  // Binary search over the lexicographically sorted edge table.
  std::size_t lo = 0, hi = edge_count_;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto e = edge(mid);
    if (std::lexicographical_compare(e.begin(), e.end(), key.begin(), key.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < edge_count_ && std::equal(key.begin(), key.end(), edge(lo).begin())) return lo;
  return std::nullopt;
}

bool Hypergraph::has_edge(std::span<const int> indices) const {
  if (static_cast<int>(indices.size()) != arity_) return false;
  if (encodable_ && indices.size() <= 16) {
    int sorted[16];
    std::copy(indices.begin(), indices.end(), sorted);
    std::sort(sorted, sorted + indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (sorted[i] < 0 || static_cast<std::size_t>(sorted[i]) >= labels_.size()) return false;
      if (i && sorted[i] == sorted[i - 1]) return false;
    }
    return edge_keys_.count(*encode({sorted, indices.size()})) > 0;
  }
  return edge_id(indices).has_value();
}

bool Hypergraph::has_edge_labels(std::span<const Vertex> labels) const {
  std::vector<int> idx;
  idx.reserve(labels.size());
  for (Vertex v : labels) {
    auto i = find(v);
    if (!i) return false;
    idx.push_back(*i);
  }
  return has_edge(idx);
}

Hypergraph Hypergraph::induced(std::span<const int> indices) const {
  std::vector<int> keep(indices.begin(), indices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<int> position(labels_.size(), -1);
  std::vector<Vertex> labels;
  for (int v : keep) {
    position[static_cast<std::size_t>(v)] = static_cast<int>(labels.size());
    labels.push_back(labels_[static_cast<std::size_t>(v)]);
  }
  std::vector<std::vector<int>> edges;
  for (std::size_t e = 0; e < edge_count_; ++e) {
    auto ev = edge(e);
    if (std::all_of(ev.begin(), ev.end(), [&](int v) { return position[static_cast<std::size_t>(v)] >= 0; })) {
      std::vector<int> mapped;
      for (int v : ev) mapped.push_back(position[static_cast<std::size_t>(v)]);
      edges.push_back(std::move(mapped));
    }
  }
  return from_indices(arity_, std::move(labels), std::move(edges));
}

Hypergraph Hypergraph::induced_labels(std::span<const Vertex> labels) const {
  std::vector<int> idx;
  for (Vertex v : labels) idx.push_back(index_of(v));
  return induced(idx);
}

Hypergraph Hypergraph::subgraph(std::span<const int> indices, std::span<const std::size_t> edges) const {
  std::vector<int> keep(indices.begin(), indices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<int> position(labels_.size(), -1);
  std::vector<Vertex> labels;
  for (int v : keep) {
    position[static_cast<std::size_t>(v)] = static_cast<int>(labels.size());
    labels.push_back(labels_[static_cast<std::size_t>(v)]);
  }
  std::vector<std::vector<int>> out;
  for (std::size_t e : edges) {
    std::vector<int> mapped;
    for (int v : edge(e)) {
      if (position[static_cast<std::size_t>(v)] < 0) throw DomainError("edge leaves the vertex subset");
      mapped.push_back(position[static_cast<std::size_t>(v)]);
    }
    out.push_back(std::move(mapped));
  }
  return from_indices(arity_, std::move(labels), std::move(out));
}

bool Hypergraph::operator==(const Hypergraph& other) const {
  return arity_ == other.arity_ && labels_ == other.labels_ && edge_data_ == other.edge_data_;
}

}  // namespace hyperlab
