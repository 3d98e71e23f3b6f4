#include "hyperlab/bounds/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hyperlab/hypercore/errors.hpp"

namespace hyperlab {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

void require_base(int s, int k) {
  require(s >= 3, "s must be at least 3");
  require(k >= s + 1, "k must be at least s + 1");
}

BigInt top(int s, int k) { return pow2(static_cast<unsigned>(k - s + 1)); }

Rational minus_inverse(int s, const Rational& t) { return Rational(s - 1) - Rational(1) / t; }

std::vector<Rational> sorted_unique(std::set<Rational> values) { return {values.begin(), values.end()}; }

}  // namespace

std::string to_string(BoundKind k) {
  switch (k) {
    case BoundKind::MinLowerRegion: return "min_Sk_lower_region";
    case BoundKind::MinWitnessRegion: return "min_Sk_witness_region";
    case BoundKind::MaxObeys: return "max_Sk_obeys";
    case BoundKind::MaxViolates: return "max_Sk_violates";
    case BoundKind::MinLimitPoints: return "min_limit_points";
    case BoundKind::MaxLimitPoints: return "max_limit_points";
    case BoundKind::MaxCandidates: return "max_Sk_candidates";
  }
  return "unknown";
}

Rational min_obeying_threshold(int s, int k) {
  require_base(s, k);
  const Rational c(binomial(k - 1, s - 1));
  const Rational q = make_rational(s - 1, k - 1);
  return c - 1 - q + 2 * (1 + q) / (c + 2);
}

Rational min_violating_threshold(int s, int k) {
  require(s >= 3, "s must be at least 3");
  require(k >= s + 2, "k must be at least s + 2");
  const Rational c(binomial(k - 1, s - 1));
  return c - 1 - make_rational(s - 1, k - 1) - 2 / c;
}

Rational near_top_alpha(int s, int k, const Rational& t) {
  require_base(s, k);
  return minus_inverse(s, Rational(top(s, k)) + t);
}

bool in_exceptional_set(int s, int k, const Rational& alpha) {
  require_base(s, k);
  if (alpha >= Rational(s - 1)) return false;
  const BigInt m = top(s, k);
  const Rational t = Rational(1) / (Rational(s - 1) - alpha) - Rational(m);
  // t = a/b in lowest terms; any other representation scales a up.
  return t > 0 && numerator_of(t) <= m;
}

std::vector<Rational> fractional_obeying_set(int s, int k, int b_max) {
  require_base(s, k);
  require(b_max >= 1, "b_max must be at least 1");
  const BigInt m = top(s, k);
  std::set<Rational> out;
  for (int b = 1; b <= b_max; ++b) {
    BigInt nu = m - b;
    if (nu < 1) nu = 1;
    for (BigInt a = nu; a <= m; ++a) {
      if (boost::multiprecision::gcd(a, BigInt(b)) != 1) continue;
      out.insert(near_top_alpha(s, k, make_rational(a, b)));
    }
  }
  return sorted_unique(std::move(out));
}

std::vector<Rational> integer_violating_set(int s, int k) {
  require_base(s, k);
  const BigInt m = top(s, k);
  std::set<Rational> out;
  for (BigInt a = 1; a <= m - 3; ++a) out.insert(near_top_alpha(s, k, Rational(a)));
  return sorted_unique(std::move(out));
}

std::vector<Rational> earlier_violating_set(int s, int k) {
  require(s >= 3, "s must be at least 3");
  require(k >= s + 4, "k must be at least s + 4");
  const BigInt limit = pow2(static_cast<unsigned>(k - s - 2)) + pow2(static_cast<unsigned>(k - s - 3)) + 1;
  std::set<Rational> out;
  for (BigInt a = 1; a <= limit; ++a) out.insert(near_top_alpha(s, k, Rational(a)));
  return sorted_unique(std::move(out));
}

std::pair<Rational, Rational> max_spectrum_candidates(int s, int k) {
  require_base(s, k);
  const Rational m2(pow2(static_cast<unsigned>(k - s + 2)));
  return {minus_inverse(s, m2 - 3), minus_inverse(s, m2 - 2)};
}

Rational limit_point_lower_bound(int s, int k) {
  require(s >= 3, "s must be at least 3");
  require(k >= s + 4, "k must be at least s + 4");
  return minus_inverse(s, Rational(pow2(static_cast<unsigned>(k - s - 4))));
}

Rational limit_point_upper_bound(int s, int k) {
  require_base(s, k);
  return minus_inverse(s, Rational(top(s, k)));
}

Rational min_limit_point_bound(int s, int k) {
  require(s >= 3, "s must be at least 3");
  require(k >= s + 10, "k must be at least s + 10");
  return Rational(1) / Rational(binomial(k - 11, s - 1));
}

std::vector<SpectrumBound> bound_table(int s, int k) {
  require_base(s, k);
  std::vector<SpectrumBound> rows;
  auto add = [&](BoundKind kind, std::string relation, std::string quantity, Rational value, bool large = false) {
    rows.push_back({s, k, kind, std::move(relation), std::move(quantity), std::move(value), large});
  };
  add(BoundKind::MinLowerRegion, "threshold", "inverse_alpha", min_obeying_threshold(s, k));
  if (k >= s + 2) add(BoundKind::MinWitnessRegion, "threshold", "inverse_alpha", min_violating_threshold(s, k));
  const Rational m2(pow2(static_cast<unsigned>(k - s + 2)));
  add(BoundKind::MaxObeys, "upper", "alpha", minus_inverse(s, m2));
  add(BoundKind::MaxObeys, "upper", "alpha", minus_inverse(s, m2 - 2));
  if (k >= s + 4) {
    const Rational a(pow2(static_cast<unsigned>(k - s - 2)) + pow2(static_cast<unsigned>(k - s - 3)) + 1);
    add(BoundKind::MaxViolates, "lower", "alpha", near_top_alpha(s, k, a));
  }
  add(BoundKind::MaxViolates, "lower", "alpha", minus_inverse(s, m2 - 3));
  if (k >= s + 10) add(BoundKind::MinLimitPoints, "upper", "alpha", min_limit_point_bound(s, k), true);
  if (k >= s + 4) add(BoundKind::MaxLimitPoints, "lower", "alpha", limit_point_lower_bound(s, k), true);
  add(BoundKind::MaxLimitPoints, "upper", "alpha", limit_point_upper_bound(s, k));
  const auto [c1, c2] = max_spectrum_candidates(s, k);
  add(BoundKind::MaxCandidates, "candidate", "alpha", c1);
  add(BoundKind::MaxCandidates, "candidate", "alpha", c2);
  return rows;
}

bool ConsistencyReport::ok() const {
  return sets_disjoint && violating_max_is_first_candidate && obeying_min_above_second_candidate &&
         earlier_inside_integer_set && limit_bounds_ordered;
}

ConsistencyReport check_consistency(int s, int k, int b_max) {
  require_base(s, k);
  ConsistencyReport r;
  const auto obeying = fractional_obeying_set(s, k, b_max);
  const auto violating = integer_violating_set(s, k);
  std::vector<Rational> common;
  std::set_intersection(obeying.begin(), obeying.end(), violating.begin(), violating.end(),
                        std::back_inserter(common));
  r.sets_disjoint = common.empty();
  const auto [c1, c2] = max_spectrum_candidates(s, k);
  r.violating_max_is_first_candidate = !violating.empty() && violating.back() == c1;
  // Integer obeying points (b = 1) bound max S_k from above.
  const auto integer_obeying = fractional_obeying_set(s, k, 1);
  r.obeying_min_above_second_candidate = !integer_obeying.empty() && integer_obeying.front() > c2;
  for (const auto& q : obeying)
    if (q > c1 && q < c2) r.between_candidates.push_back(q);
  if (k >= s + 4) {
    const auto earlier = earlier_violating_set(s, k);
    r.earlier_inside_integer_set = std::includes(violating.begin(), violating.end(), earlier.begin(), earlier.end());
    r.limit_bounds_ordered = limit_point_lower_bound(s, k) < limit_point_upper_bound(s, k);
  } else {
    r.earlier_inside_integer_set = true;
    r.limit_bounds_ordered = true;
  }
  return r;
}

}  // namespace hyperlab
