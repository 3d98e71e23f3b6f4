#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hyperlab/extlab/counters.hpp"
#include "hyperlab/hypercore/hypergraph.hpp"
#include "hyperlab/hypercore/limits.hpp"
#include "hyperlab/hypercore/rooted_pair.hpp"
#include "hyperlab/randmodel/sampler.hpp"
#include "hyperlab/randmodel/statistics.hpp"

namespace hyperlab {

using Predicate = std::function<bool(const Hypergraph&)>;

/// True iff host has a (not necessarily induced) copy of motif.
bool contains_copy(const Hypergraph& motif, const Hypergraph& host);

/// Runs body(trial) for every trial on cfg.threads workers. Results are
/// stored by trial index, so the outcome does not depend on scheduling.
/// An exception in a trial is rethrown as Error naming the trial.
/// Instantiated for char, std::int64_t and std::vector<std::int64_t>.
template <class T>
std::vector<T> run_trials(const ExperimentConfig& cfg, const std::function<T(std::int64_t)>& body);

struct ProbabilityReport {
  ExperimentConfig config;
  double p = 0.0;
  std::int64_t successes = 0;
  double estimate = 0.0;
  Interval interval;
  double seconds = 0.0;
};

ProbabilityReport estimate_probability(const ExperimentConfig& cfg, const Predicate& predicate);

struct PoissonReport {
  ExperimentConfig config;
  double p = 0.0;
  std::vector<BigInt> automorphisms;
  std::vector<double> lambdas;  // 1 / |Aut|
  std::map<std::vector<std::int64_t>, std::int64_t> joint;
  std::vector<std::vector<std::int64_t>> marginals;  // histogram per motif
  double tv_distance = 0.0;
  std::vector<std::vector<double>> correlation;
  double seconds = 0.0;
};

/// Copy counts of strictly balanced motifs of one common density rho. When
/// cfg has neither alpha nor p, alpha is set to 1/rho.
PoissonReport poisson_fit(ExperimentConfig cfg, const std::vector<Hypergraph>& motifs, const Limits& limits = {});

struct UncoveredReport {
  ExperimentConfig config;
  double p = 0.0;
  ext::PoissonParameter parameter;
  double lambda = 0.0;
  std::vector<std::int64_t> histogram;
  double tv_distance = 0.0;
  double seconds = 0.0;
};

/// Counts copies of H not covered by a copy of G. Requires H and (G, H)
/// strictly balanced with rho(H) = rho(G, H); alpha defaults to 1/rho(H).
UncoveredReport uncovered_copies_experiment(const RootedPair& pair, ExperimentConfig cfg, const Limits& limits = {});

struct ProbeReport {
  std::vector<Rational> alphas;
  std::vector<std::int64_t> ns;
  std::vector<std::vector<double>> estimates;  // [alpha][n]
  std::vector<bool> flagged;                   // every estimate of the row in [0.2, 0.8]
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  double seconds = 0.0;
};

ProbeReport spectrum_probe(int s, const Predicate& predicate, const std::vector<Rational>& alphas,
                           const std::vector<std::int64_t>& ns, std::int64_t trials, std::uint64_t seed,
                           unsigned threads = 0);

}  // namespace hyperlab
