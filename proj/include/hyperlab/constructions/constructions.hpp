#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hyperlab/hypercore/hypergraph.hpp"
#include "hyperlab/hypercore/limits.hpp"
#include "hyperlab/hypercore/rational.hpp"
#include "hyperlab/hypercore/rooted_pair.hpp"

namespace hyperlab {

/// One verified property of a built object. `passed` is empty when the check
/// was skipped because it exceeds the search caps.
struct Check {
  std::string name;
  std::optional<bool> passed;
  std::string note;
};

/// Loose path with t edges on the labels first, first+1, ...; consecutive
/// edges share exactly one vertex.
Hypergraph loose_path(int s, int t, Vertex first = 1);

/// H: 2m internally disjoint loose paths of length 2^l between a = 1 and b = 2.
/// G: H plus a vertex z and m loose paths of length 2^l from z to the middle
/// vertices of the first m paths.
struct LimitPointPair {
  int s = 0, l = 0, m = 0;
  RootedPair pair{Hypergraph(3), Hypergraph(3)};
  Rational alpha;  // s - 1 - 1/2^l + 1/(2^l m)
  Vertex a = 1, b = 2, z = 0;
  std::vector<Vertex> middles;  // one per a-b path
  std::vector<Check> checks;
};

/// Throws VerificationError if a computed check fails.
LimitPointPair limit_point_pair(int s, int l, int m, const Limits& limits = {});

/// For k >= s+2: disjoint loose cycles H1 (2 edges) and H2 (3 edges) joined to
/// a new vertex x by loose paths of lengths a1 + 2^(k-s) - 4 and
/// a2 + 2^(k-s) - 4. For k = s+1: H1 and H2 share the vertex x.
struct SpectrumWitness {
  int s = 0, k = 0, a = 0, a1 = 0, a2 = 0;
  Hypergraph h, h1, h2;
  Rational alpha;  // s - 1 - 1/(2^(k-s+1) + a)
  Vertex x = 1;
  std::vector<Check> checks;
};

/// a1 and a2 are ignored when k = s+1.
SpectrumWitness spectrum_witnesses(int s, int k, int a1, int a2, const Limits& limits = {});

/// No sub-hypergraph on at most size_cap vertices has density above 1/alpha.
bool omega_tilde_check(const Hypergraph& g, const Rational& alpha, std::size_t size_cap, const Limits& limits = {});

}  // namespace hyperlab
