#pragma once

#include "hyperlab/folang/formula.hpp"

namespace hyperlab::fo {

/// Sentence of depth k separating the pair built by the limit-point
/// construction (k >= s + 5, l = k - s - 4).
struct LimitPointSentence {
  int l;
  Formula sentence;
  /// Subformulas with free variables (a, u1, u2) and (b, u1, u2).
  Formula r1_a, r2_a, r1_b, r2_b;
  /// Q1 with free (a, b, c); Q2 with free (c, z1, z2).
  Formula q1, q2;
};
LimitPointSentence build_limit_point_sentence(int s, int k);

/// Sentence of depth at most k true on the witness family with parameters
/// (a1, a2). For k = s + 1 the short-path variant is used and (a1, a2) are
/// ignored. Requires k >= s + 1 and 1 <= a1, a2 <= 2^(k-s).
struct WitnessSentence {
  Formula sentence;
  Formula q1, q2;
};
WitnessSentence build_witness_sentence(int s, int k, int a1, int a2);

}  // namespace hyperlab::fo
