#include <gtest/gtest.h>

#include <cmath>

#include "hyperlab/hypercore.hpp"
#include "hyperlab/randmodel/experiments.hpp"
#include "hyperlab/randmodel/sampler.hpp"
#include "hyperlab/randmodel/statistics.hpp"
#include "oracles.hpp"

using namespace hyperlab;
namespace ht = hyperlab::testing;

namespace {

ExperimentConfig config(std::int64_t n, double p, std::int64_t trials, std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.n = n;
  cfg.p = p;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.threads = 1;
  return cfg;
}

}  // namespace

TEST(Sampler, ConfigValidation) {
  ExperimentConfig cfg;
  cfg.n = 10;
  EXPECT_THROW(cfg.validate(), DomainError);
  cfg.p = 0.5;
  cfg.alpha = Rational(1);
  EXPECT_THROW(cfg.validate(), DomainError);
  cfg.alpha.reset();
  EXPECT_NO_THROW(cfg.validate());
  cfg.p = 1.5;
  EXPECT_THROW(cfg.validate(), DomainError);
}

TEST(Sampler, EdgeProbability) {
  EXPECT_DOUBLE_EQ(edge_probability(100, Rational(2)), 1e-4);
  EXPECT_NEAR(edge_probability(60, make_rational(5, 2)), std::pow(60.0, -2.5), 1e-15);
}

TEST(Sampler, RankingRoundTrip) {
  const SubsetRanking r(9, 3);
  EXPECT_EQ(r.size(), 84u);
  std::vector<int> subset;
  std::vector<int> prev;
  for (std::uint64_t i = 0; i < r.size(); ++i) {
    r.unrank(i, subset);
    ASSERT_EQ(subset.size(), 3u);
    EXPECT_TRUE(std::is_sorted(subset.begin(), subset.end()));
    EXPECT_EQ(r.rank(subset), i);
    if (i > 0) {
      EXPECT_NE(subset, prev);
    }
    prev = subset;
  }
}

TEST(Sampler, Deterministic) {
  const auto cfg = config(30, 0.05, 1, 123);
  EXPECT_EQ(to_shg(sample(cfg, 0)), to_shg(sample(cfg, 0)));
  EXPECT_NE(to_shg(sample(cfg, 0)), to_shg(sample(cfg, 1)));
  EXPECT_NE(trial_seed(1, 0), trial_seed(2, 0));
  EXPECT_EQ(sample(cfg, 0).vertex_count(), 30u);
}

TEST(Sampler, ExtremeProbabilities) {
  EXPECT_EQ(sample(config(8, 0.0, 1, 1), 0).edge_count(), 0u);
  EXPECT_EQ(sample(config(8, 1.0, 1, 1), 0).edge_count(), 56u);
}

TEST(Sampler, EdgeCountsFollowBinomial) {
  const auto cfg = config(12, 0.2, 1, 77);
  std::vector<std::int64_t> counts;
  for (int t = 0; t < 1500; ++t) counts.push_back(static_cast<std::int64_t>(sample(cfg, t).edge_count()));
  const auto chi = chi_square_binomial(counts, 220, 0.2);
  EXPECT_GT(chi.p_value, 1e-4);
}

TEST(CoupledSampler, NestedInP) {
  const CoupledSampler c(3, 15, 9, 0);
  const auto lo = c.at(0.05);
  const auto hi = c.at(0.2);
  for (const auto& e : lo.edge_list()) EXPECT_TRUE(hi.has_edge_labels(e));
  EXPECT_EQ(to_shg(c.at(0.1)), to_shg(CoupledSampler(3, 15, 9, 0).at(0.1)));
}

TEST(Statistics, WilsonInterval) {
  const auto i = wilson_interval(50, 100);
  EXPECT_NEAR(i.low, 0.4038, 1e-4);
  EXPECT_NEAR(i.high, 0.5962, 1e-4);
  EXPECT_NEAR(wilson_interval(0, 10).low, 0.0, 1e-12);
}

TEST(Statistics, PoissonPmfSumsToOne) {
  double total = 0;
  for (int k = 0; k < 60; ++k) total += poisson_pmf(3.5, k);
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_NEAR(poisson_pmf(2.0, 0), std::exp(-2.0), 1e-15);
}

TEST(Statistics, TvDistance) {
  // Histogram proportional to the pooled law: distance only from rounding.
  const double lambda = 1.0;
  std::vector<std::int64_t> hist;
  double tail = 1.0;
  for (int k = 0; k < 5; ++k) {
    hist.push_back(std::llround(1e6 * poisson_pmf(lambda, k)));
    tail -= poisson_pmf(lambda, k);
  }
  hist.push_back(std::llround(1e6 * tail));
  EXPECT_LT(tv_distance_poisson(hist, lambda), 1e-5);
  EXPECT_NEAR(tv_distance_poisson({0, 100}, lambda), 1 - poisson_pmf(lambda, 1), 1e-12);
  std::map<std::vector<std::int64_t>, std::int64_t> joint{{{0, 0}, 100}};
  EXPECT_NEAR(tv_distance_product(joint, {1.0, 1.0}), 1 - std::exp(-2.0), 1e-12);
}

TEST(Statistics, Correlation) {
  EXPECT_NEAR(pearson_correlation({1, 2, 3}, {2, 4, 6}), 1.0, 1e-12);
  EXPECT_NEAR(pearson_correlation({1, 2, 3}, {3, 2, 1}), -1.0, 1e-12);
  EXPECT_EQ(pearson_correlation({1, 1, 1}, {1, 2, 3}), 0.0);
}

TEST(Experiments, ContainsCopy) {
  EXPECT_TRUE(contains_copy(ht::single_edge(), ht::loose_two_cycle()));
  EXPECT_FALSE(contains_copy(ht::loose_two_cycle(), ht::loose_triangle()));
}

TEST(Experiments, ThreadCountDoesNotChangeResults) {
  auto cfg = config(20, 0.02, 40, 5);
  const std::function<std::int64_t(std::int64_t)> body = [&](std::int64_t t) {
    return static_cast<std::int64_t>(sample(cfg, t).edge_count());
  };
  const auto one = run_trials<std::int64_t>(cfg, body);
  cfg.threads = 3;
  EXPECT_EQ(run_trials<std::int64_t>(cfg, body), one);
}

TEST(Experiments, TrialErrorsNameTheTrial) {
  const auto cfg = config(5, 0.1, 10, 0);
  const std::function<char(std::int64_t)> body = [](std::int64_t t) -> char {
    if (t == 7) throw DomainError("boom");
    return 1;
  };
  try {
    run_trials<char>(cfg, body);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("trial 7"), std::string::npos);
  }
}

TEST(Experiments, EstimateProbabilityOfCertainEvent) {
  const auto cfg = config(6, 1.0, 20, 0);
  const auto r = estimate_probability(cfg, [](const Hypergraph& g) { return g.edge_count() == 20; });
  EXPECT_EQ(r.successes, 20);
  EXPECT_EQ(r.estimate, 1.0);
}

TEST(Experiments, PoissonFitRejectsUnbalancedMotifs) {
  ExperimentConfig cfg;
  cfg.n = 20;
  cfg.trials = 5;
  const auto two = Hypergraph::from_edges(3, {{1, 2, 3}, {4, 5, 6}});
  EXPECT_THROW(poisson_fit(cfg, {two}), DomainError);
  EXPECT_THROW(poisson_fit(cfg, {ht::single_edge(), ht::loose_two_cycle()}), DomainError);
}

TEST(Experiments, ProbeShape) {
  const auto r = spectrum_probe(3, [](const Hypergraph& g) { return g.edge_count() > 0; },
                                {Rational(1), Rational(2)}, {10, 12}, 30, 4, 1);
  ASSERT_EQ(r.estimates.size(), 2u);
  ASSERT_EQ(r.estimates[0].size(), 2u);
  EXPECT_EQ(r.flagged.size(), 2u);
}
