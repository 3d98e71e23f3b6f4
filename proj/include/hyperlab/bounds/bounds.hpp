#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperlab/hypercore/rational.hpp"

namespace hyperlab {

/// What a bound row says about the spectrum S_k or its limit points (S_k)'.
enum class BoundKind {
  MinLowerRegion,    // 1/alpha above the value obeys the k-law
  MinWitnessRegion,  // some alpha with 1/alpha above the value violates it
  MaxObeys,          // max S_k is at most the value
  MaxViolates,       // max S_k is at least the value
  MinLimitPoints,    // min (S_k)' is at most the value
  MaxLimitPoints,    // lower or upper bound on max (S_k)'
  MaxCandidates,     // max S_k is one of the two candidate values
};
std::string to_string(BoundKind k);

struct SpectrumBound {
  int s = 0;
  int k = 0;
  BoundKind kind = BoundKind::MaxObeys;
  std::string relation;  // "lower", "upper", "threshold" or "candidate"
  std::string quantity;  // "alpha" or "inverse_alpha"
  Rational value;
  bool needs_large_k = false;  // holds only for k >= s + C with an unknown constant C
};

/// C(k-1, s-1) - 1 - (s-1)/(k-1) + 2(1 + (s-1)/(k-1)) / (C(k-1, s-1) + 2).
/// G^s(n, n^-alpha) obeys the k-law when 1/alpha exceeds it. Needs k >= s+1.
Rational min_obeying_threshold(int s, int k);

/// C(k-1, s-1) - 1 - (s-1)/(k-1) - 2 / C(k-1, s-1). Needs k >= s+2.
Rational min_violating_threshold(int s, int k);

/// s - 1 - 1/(2^(k-s+1) + t).
Rational near_top_alpha(int s, int k, const Rational& t);

/// Whether alpha = s - 1 - 1/(2^(k-s+1) + a/b) for naturals a, b with a <= 2^(k-s+1).
bool in_exceptional_set(int s, int k, const Rational& alpha);

/// Fractional points near s - 1 known to obey the k-law: a/b irreducible,
/// b <= b_max, max(1, 2^(k-s+1) - b) <= a <= 2^(k-s+1). Sorted, unique.
std::vector<Rational> fractional_obeying_set(int s, int k, int b_max);

/// Integer points known to violate the k-law: 1 <= a <= 2^(k-s+1) - 3.
std::vector<Rational> integer_violating_set(int s, int k);

/// The older violating range a <= 2^(k-s-2) + 2^(k-s-3) + 1. Needs k >= s+4.
std::vector<Rational> earlier_violating_set(int s, int k);

/// (s - 1 - 1/(2^(k-s+2) - 3), s - 1 - 1/(2^(k-s+2) - 2)).
std::pair<Rational, Rational> max_spectrum_candidates(int s, int k);

/// s - 1 - 1/2^(k-s-4). Needs k >= s+4.
Rational limit_point_lower_bound(int s, int k);

/// s - 1 - 1/2^(k-s+1).
Rational limit_point_upper_bound(int s, int k);

/// 1 / C(k-11, s-1). Needs k >= s+10.
Rational min_limit_point_bound(int s, int k);

/// Every row whose parameter constraints hold for (s, k).
std::vector<SpectrumBound> bound_table(int s, int k);

struct ConsistencyReport {
  bool sets_disjoint = false;
  bool violating_max_is_first_candidate = false;
  bool obeying_min_above_second_candidate = false;
  bool earlier_inside_integer_set = false;  // vacuous below k = s+4
  bool limit_bounds_ordered = false;        // vacuous below k = s+4
  /// Obeying points strictly between the two candidates.
  std::vector<Rational> between_candidates;
  bool ok() const;
};

ConsistencyReport check_consistency(int s, int k, int b_max);

}  // namespace hyperlab
