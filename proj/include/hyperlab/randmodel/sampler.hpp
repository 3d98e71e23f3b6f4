#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperlab/hypercore/hypergraph.hpp"
#include "hyperlab/hypercore/rational.hpp"

namespace hyperlab {

/// Parameters of G^s(n, p). Exactly one of alpha (p = n^-alpha) and p is set.
struct ExperimentConfig {
  int s = 3;
  std::int64_t n = 0;
  std::optional<Rational> alpha;
  std::optional<double> p;
  std::int64_t trials = 1;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: one per hardware thread

  /// Throws DomainError on inconsistent settings.
  void validate() const;
  double probability() const;
};

/// n^-alpha, computed in long double and rounded once.
double edge_probability(std::int64_t n, const Rational& alpha);

/// Seed of one trial: splitmix64 applied to seed + (trial + 1) * 0x9E3779B97F4A7C15.
std::uint64_t trial_seed(std::uint64_t seed, std::int64_t trial);

/// Colexicographic rank <-> s-subset of {0, ..., n-1}. Ranks stay below
/// C(n, s), which must fit in 62 bits.
class SubsetRanking {
 public:
  SubsetRanking(std::int64_t n, int s);
  std::uint64_t size() const noexcept { return total_; }
  /// Indices in increasing order.
  void unrank(std::uint64_t rank, std::vector<int>& out) const;
  std::uint64_t rank(const std::vector<int>& sorted) const;

 private:
  std::int64_t n_;
  int s_;
  std::uint64_t total_;
  std::vector<std::vector<std::uint64_t>> table_;  // table_[i][c] = C(c, i)
};

/// Labels 1..n. Geometric skipping over the colex ranks, one mt19937_64 per
/// trial seeded by trial_seed.
Hypergraph sample(const ExperimentConfig& cfg, std::int64_t trial);

/// One uniform per s-subset, derived from (trial seed, rank) alone; the edge
/// is present iff its uniform is at most p. Samples at p <= q are nested.
class CoupledSampler {
 public:
  CoupledSampler(int s, std::int64_t n, std::uint64_t seed, std::int64_t trial);
  Hypergraph at(double p) const;
  double uniform(std::uint64_t rank) const;

 private:
  int s_;
  std::int64_t n_;
  std::uint64_t key_;
  SubsetRanking ranking_;
};

}  // namespace hyperlab
