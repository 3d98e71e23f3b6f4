#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "hyperlab/hypercore/hypergraph.hpp"

namespace hyperlab {

/// Gray-code walk over the non-empty subsets of `pool` (at most 62 vertex
/// indices). `cnt` holds, per edge, how many of its vertices are already
/// inside before the walk; `inside` counts edges with all vertices inside.
/// The visitor gets (mask over pool, subset size, inside) and returns false to
/// stop.
template <class Visitor>
void subset_walk(const Hypergraph& g, const std::vector<int>& pool, std::vector<int> cnt, long inside,
                 Visitor&& visit) {
  const int s = g.arity();
  std::uint64_t mask = 0;
  long size = 0;
  const std::uint64_t total = std::uint64_t{1} << pool.size();
  for (std::uint64_t i = 1; i < total; ++i) {
    const int bit = std::countr_zero(i);
    const std::uint64_t flag = std::uint64_t{1} << bit;
    const int v = pool[static_cast<std::size_t>(bit)];
    if (mask & flag) {
      mask &= ~flag;
      --size;
      for (int e : g.incident_edges(v))
        if (cnt[static_cast<std::size_t>(e)]-- == s) --inside;
    } else {
      mask |= flag;
      ++size;
      for (int e : g.incident_edges(v))
        if (++cnt[static_cast<std::size_t>(e)] == s) ++inside;
    }
    if (!visit(mask, size, inside)) return;
  }
}

}  // namespace hyperlab
