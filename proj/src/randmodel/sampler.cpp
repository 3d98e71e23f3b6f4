#include "hyperlab/randmodel/sampler.hpp"

#include <cmath>
#include <random>
#include <string>

#include "hyperlab/hypercore/errors.hpp"

namespace hyperlab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Uniform in (0, 1] from the top 53 bits.
double to_unit(std::uint64_t bits) { return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53; }

std::vector<Vertex> all_labels(std::int64_t n) {
  std::vector<Vertex> labels(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
  return labels;
}

Hypergraph assemble(int s, std::int64_t n, const SubsetRanking& ranking, const std::vector<std::uint64_t>& ranks) {
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(ranks.size());
  std::vector<int> idx;
  for (std::uint64_t r : ranks) {
    ranking.unrank(r, idx);
    std::vector<Vertex> e(idx.begin(), idx.end());
    for (auto& v : e) ++v;
    edges.push_back(std::move(e));
  }
  return Hypergraph(s, all_labels(n), std::move(edges));
}

}  // namespace

void ExperimentConfig::validate() const {
  if (s < 3) throw DomainError("arity must be at least 3");
  if (n < s) throw DomainError("n must be at least s");
  if (trials < 1) throw DomainError("trials must be at least 1");
  if (alpha.has_value() == p.has_value()) throw DomainError("exactly one of alpha and p must be given");
  if (p && !(*p >= 0.0 && *p <= 1.0)) throw DomainError("p must lie in [0, 1]");
  if (alpha && *alpha < 0) throw DomainError("alpha must be non-negative");
}

double ExperimentConfig::probability() const {
  validate();
  return p ? *p : edge_probability(n, *alpha);
}

double edge_probability(std::int64_t n, const Rational& alpha) {
  if (n < 1) throw DomainError("n must be positive");
  const long double a = static_cast<long double>(to_double(alpha));
  return static_cast<double>(std::exp(-a * std::log(static_cast<long double>(n))));
}

std::uint64_t trial_seed(std::uint64_t seed, std::int64_t trial) {
  return splitmix64(seed + static_cast<std::uint64_t>(trial + 1) * 0x9E3779B97F4A7C15ULL);
}

SubsetRanking::SubsetRanking(std::int64_t n, int s) : n_(n), s_(s) {
  if (s < 1) throw DomainError("subset size must be positive");
  if (n < s) throw DomainError("n must be at least s");
  const BigInt total = binomial(n, s);
  if (total >= (BigInt(1) << 62)) throw CapacityError("C(n, s) does not fit in 62 bits");
  total_ = static_cast<std::uint64_t>(total);
  table_.assign(static_cast<std::size_t>(s) + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
  for (int i = 0; i <= s; ++i)
    for (std::int64_t c = 0; c <= n; ++c) {
      // C(c, i) <= C(n, s) for the entries actually used; larger ones saturate.
      const BigInt v = binomial(c, i);
      table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] =
          v > BigInt(total_) ? total_ + 1 : static_cast<std::uint64_t>(v);
    }
}

void SubsetRanking::unrank(std::uint64_t rank, std::vector<int>& out) const {
  if (rank >= total_) throw DomainError("rank out of range");
  out.assign(static_cast<std::size_t>(s_), 0);
  std::int64_t hi = n_;
  for (int i = s_; i >= 1; --i) {
    const auto& row = table_[static_cast<std::size_t>(i)];
    // Largest c < hi with C(c, i) <= rank.
    std::int64_t lo = i - 1, top = hi - 1;
    while (lo < top) {
      const std::int64_t mid = (lo + top + 1) / 2;
      if (row[static_cast<std::size_t>(mid)] <= rank) lo = mid;
      else top = mid - 1;
    }
    out[static_cast<std::size_t>(i - 1)] = static_cast<int>(lo);
    rank -= row[static_cast<std::size_t>(lo)];
    hi = lo;
  }
}

std::uint64_t SubsetRanking::rank(const std::vector<int>& sorted) const {
  if (sorted.size() != static_cast<std::size_t>(s_)) throw DomainError("subset has the wrong size");
  std::uint64_t r = 0;
  for (int i = 0; i < s_; ++i) {
    const int c = sorted[static_cast<std::size_t>(i)];
    if (c < 0 || c >= n_ || (i > 0 && c <= sorted[static_cast<std::size_t>(i - 1)]))
      throw DomainError("subset is not sorted within range");
    r += table_[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(c)];
  }
  return r;
}

Hypergraph sample(const ExperimentConfig& cfg, std::int64_t trial) {
  const double p = cfg.probability();
  const SubsetRanking ranking(cfg.n, cfg.s);
  const std::uint64_t total = ranking.size();
  std::vector<std::uint64_t> ranks;
  if (p >= 1.0) {
    ranks.resize(total);
    for (std::uint64_t r = 0; r < total; ++r) ranks[r] = r;
  } else if (p > 0.0) {
    std::mt19937_64 gen(trial_seed(cfg.seed, trial));
    const double log_q = std::log1p(-p);
    std::uint64_t next = 0;
    while (true) {
      // Gap before the next edge is geometric with success probability p.
      const double gap = std::floor(std::log(to_unit(gen())) / log_q);
      if (gap >= static_cast<double>(total - next)) break;
      next += static_cast<std::uint64_t>(gap);
      ranks.push_back(next);
      if (++next >= total) break;
    }
  }
  return assemble(cfg.s, cfg.n, ranking, ranks);
}

CoupledSampler::CoupledSampler(int s, std::int64_t n, std::uint64_t seed, std::int64_t trial)
    : s_(s), n_(n), key_(trial_seed(seed, trial)), ranking_(n, s) {}

double CoupledSampler::uniform(std::uint64_t rank) const {
  return to_unit(splitmix64(key_ ^ splitmix64(rank)));
}

Hypergraph CoupledSampler::at(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p must lie in [0, 1]");
  std::vector<std::uint64_t> ranks;
  for (std::uint64_t r = 0; r < ranking_.size(); ++r)
    if (uniform(r) <= p) ranks.push_back(r);
  return assemble(s_, n_, ranking_, ranks);
}

}  // namespace hyperlab
