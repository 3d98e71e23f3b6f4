#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperlab/hypercore/limits.hpp"
#include "hyperlab/hypercore/rational.hpp"
#include "hyperlab/hypercore/rooted_pair.hpp"

namespace hyperlab::ext {

/// v(G, H) - alpha * e(G, H).
Rational f_alpha(const RootedPair& pair, const Rational& alpha);

enum class PairClass { Safe, Rigid, Neutral, Other };
std::string to_string(PairClass c);

/// Safe: f(K, H) > 0 for every K with H strictly inside K, K inside G.
/// Rigid: f(G, K) < 0 for every K with H inside K strictly inside G.
/// Neutral: f(K, H) > 0 for every K strictly between H and G, and f(G, H) = 0.
/// The pair (H, H) is Other. Throws CapacityError when v(G, H) exceeds
/// limits.enumeration_vertices.
PairClass classify_pair(const RootedPair& pair, const Rational& alpha, const Limits& limits = {});

/// Template vertex -> candidate vertex.
using Correspondence = std::map<Vertex, Vertex>;

/// Every template edge outside the inner graph maps to a candidate edge
/// outside the inner graph and, when `strict`, conversely. The
/// correspondence must be a bijection mapping inner vertices onto inner
/// vertices (DomainError otherwise).
bool is_extension(const RootedPair& candidate, const RootedPair& templ, const Correspondence& map,
                  bool strict = true);
inline bool is_strict_extension(const RootedPair& candidate, const RootedPair& templ,
                                const Correspondence& map) {
  return is_extension(candidate, templ, map, true);
}

}  // namespace hyperlab::ext
