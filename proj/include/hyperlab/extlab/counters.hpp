#pragma once

#include "hyperlab/hypercore/hypergraph.hpp"
#include "hyperlab/hypercore/limits.hpp"
#include "hyperlab/hypercore/rational.hpp"
#include "hyperlab/hypercore/rooted_pair.hpp"

namespace hyperlab::ext {

/// Copies of `inner` in `host` not contained in any copy of `outer`.
BigInt count_uncovered_copies(const Hypergraph& inner, const Hypergraph& outer, const Hypergraph& host,
                              const Limits& limits = {});

/// Limit law parameter of the uncovered-copy count for a balanced pair (G, H):
/// lambda = exp(-a / (a1 * a2)) / a.
struct PoissonParameter {
  BigInt a;    // |Aut(H)|
  BigInt a1;   // automorphisms of H that extend to G
  BigInt a2;   // automorphisms of G fixing V(H) pointwise
  Rational scale() const;     // 1 / a
  Rational exponent() const;  // a / (a1 * a2)
  double lambda() const;
};

PoissonParameter poisson_parameter(const RootedPair& pair, const Limits& limits = {});

}  // namespace hyperlab::ext
