#pragma once

#include <cstddef>

namespace hyperlab {

/// Size caps for exhaustive routines. Exceeding a cap raises CapacityError.
struct Limits {
  /// Subset enumeration (maximum density, balance, pair classification).
  std::size_t enumeration_vertices = 24;
  /// Automorphism and isomorphism search.
  std::size_t search_vertices = 16;
};

}  // namespace hyperlab
