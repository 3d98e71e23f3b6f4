#include "hyperlab/hypercore/distance.hpp"

#include <deque>

namespace hyperlab {

std::vector<int> distances_from(const Hypergraph& g, int source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<int> distance(const Hypergraph& g, Vertex x, Vertex y) {
  const int from = g.index_of(x);
  const int to = g.index_of(y);
  const int d = distances_from(g, from)[static_cast<std::size_t>(to)];
  if (d < 0) return std::nullopt;
  return d;
}

}  // namespace hyperlab
