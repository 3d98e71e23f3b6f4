#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperlab/hypercore/hypergraph.hpp"
#include "hyperlab/hypercore/limits.hpp"
#include "hyperlab/hypercore/rational.hpp"
#include "hyperlab/hypercore/rooted_pair.hpp"

namespace hyperlab::ext {

enum class PatternKind { FirstType, SecondTypePath, SecondTypeEdge };
std::string to_string(PatternKind k);

/// Witness for a cyclic extension. For the path patterns `path` lists the
/// path edges from `start` and `closing` the final edge; `junctions` holds the
/// vertex shared with the next edge (the last one lies in the closing edge).
struct CyclicPattern {
  PatternKind kind;
  int k = 0;  // path length (0 for the single-edge pattern)
  int l = 0;  // new vertices of the closing edge, or old vertices of the single edge
  Vertex start = 0;
  std::optional<Vertex> target;  // second old vertex of a second-type path
  std::vector<Vertex> junctions;
  std::vector<Vertex> reused;    // u-vertices of the closing edge
  std::vector<Vertex> added;     // all new vertices
  std::vector<std::vector<Vertex>> path;
  std::vector<Vertex> closing;
};

/// m / (m(s-1) - 1).
Rational cyclic_density_bound(int s, int m);

/// First matching pattern in the order FirstType, SecondTypePath,
/// SecondTypeEdge, subject to max_density(G) < m / (m(s-1) - 1).
std::optional<CyclicPattern> match_cyclic_extension(const RootedPair& pair, int m, const Limits& limits = {});

/// Chain ({root}, {}) = G_0 < G_1 < ... < G_t of sub-hypergraphs of G, each a
/// cyclic m-extension of the previous one, with V(G_t) = V(G). The result
/// includes G_0. None if no such chain exists or root is not a vertex of G.
std::optional<std::vector<Hypergraph>> find_m_decomposition(const Hypergraph& g, int m, Vertex root,
                                                            const Limits& limits = {});

/// Membership in the class generated from one vertex by cyclic m-extensions
/// and by adding edges that keep the maximum density below the bound.
bool in_cyclic_class(const Hypergraph& g, int m, const Limits& limits = {});

/// No cyclic m-extension of G inside the host fails to be a cyclic
/// m-extension of H. G must be a sub-hypergraph of the host.
bool is_cyclically_maximal(const RootedPair& pair, const Hypergraph& host, int m, const Limits& limits = {});

}  // namespace hyperlab::ext
