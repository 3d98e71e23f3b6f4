#include "hyperlab/randmodel/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "hyperlab/hypercore/density.hpp"
#include "hyperlab/hypercore/errors.hpp"
#include "hyperlab/hypercore/isomorphism.hpp"

namespace hyperlab {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::int64_t to_count(const BigInt& v) {
  if (v > BigInt(INT64_MAX)) throw CapacityError("count does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

}  // namespace

bool contains_copy(const Hypergraph& motif, const Hypergraph& host) {
  if (motif.vertex_count() > host.vertex_count()) return false;
  bool found = false;
  for_each_embedding(motif, host, [&](std::span<const int>) {
    found = true;
    return false;
  });
  return found;
}

template <class T>
std::vector<T> run_trials(const ExperimentConfig& cfg, const std::function<T(std::int64_t)>& body) {
  cfg.validate();
  std::vector<T> results(static_cast<std::size_t>(cfg.trials));
  unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::int64_t>(workers, cfg.trials));
  std::mutex error_mutex;
  std::exception_ptr error;
  std::int64_t error_trial = -1;
  auto work = [&](unsigned w) {
    for (std::int64_t t = w; t < cfg.trials; t += workers) {
      try {
        results[static_cast<std::size_t>(t)] = body(t);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error || t < error_trial) {
          error = std::current_exception();
          error_trial = t;
        }
        return;
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  if (error) {
    try {
      std::rethrow_exception(error);
    } catch (const std::exception& e) {
      throw Error("trial " + std::to_string(error_trial) + ": " + e.what());
    }
  }
  return results;
}

template std::vector<char> run_trials(const ExperimentConfig&, const std::function<char(std::int64_t)>&);
template std::vector<std::int64_t> run_trials(const ExperimentConfig&,
                                              const std::function<std::int64_t(std::int64_t)>&);
template std::vector<std::vector<std::int64_t>> run_trials(
    const ExperimentConfig&, const std::function<std::vector<std::int64_t>(std::int64_t)>&);

ProbabilityReport estimate_probability(const ExperimentConfig& cfg, const Predicate& predicate) {
  const auto start = Clock::now();
  ProbabilityReport r;
  r.config = cfg;
  r.p = cfg.probability();
  const auto hits = run_trials<char>(cfg, [&](std::int64_t t) -> char { return predicate(sample(cfg, t)) ? 1 : 0; });
  r.successes = std::count(hits.begin(), hits.end(), 1);
  r.estimate = static_cast<double>(r.successes) / static_cast<double>(cfg.trials);
  r.interval = wilson_interval(r.successes, cfg.trials);
  r.seconds = since(start);
  return r;
}

PoissonReport poisson_fit(ExperimentConfig cfg, const std::vector<Hypergraph>& motifs, const Limits& limits) {
  const auto start = Clock::now();
  if (motifs.empty()) throw DomainError("no motifs given");
  const Rational rho = density(motifs.front());
  for (const auto& m : motifs) {
    if (m.arity() != cfg.s) throw DomainError("motif arity differs from s");
    if (m.edge_count() == 0) throw DomainError("motifs need at least one edge");
    if (!is_strictly_balanced(m, limits)) throw DomainError("motif is not strictly balanced");
    if (density(m) != rho) throw DomainError("motifs have different densities");
  }
  if (!cfg.alpha && !cfg.p) cfg.alpha = Rational(1) / rho;
  PoissonReport r;
  r.config = cfg;
  r.p = cfg.probability();
  for (const auto& m : motifs) {
    r.automorphisms.push_back(automorphism_count(m, limits));
    r.lambdas.push_back(1.0 / to_double(Rational(r.automorphisms.back())));
  }
  const auto counts = run_trials<std::vector<std::int64_t>>(cfg, [&](std::int64_t t) {
    const Hypergraph g = sample(cfg, t);
    std::vector<std::int64_t> c;
    for (const auto& m : motifs) c.push_back(to_count(count_copies(m, g, limits)));
    return c;
  });
  const std::size_t d = motifs.size();
  r.marginals.assign(d, {});
  std::vector<std::vector<double>> series(d);
  for (const auto& c : counts) {
    ++r.joint[c];
    for (std::size_t i = 0; i < d; ++i) {
      auto& h = r.marginals[i];
      if (h.size() <= static_cast<std::size_t>(c[i])) h.resize(static_cast<std::size_t>(c[i]) + 1, 0);
      ++h[static_cast<std::size_t>(c[i])];
      series[i].push_back(static_cast<double>(c[i]));
    }
  }
  r.tv_distance = tv_distance_product(r.joint, r.lambdas);
  r.correlation.assign(d, std::vector<double>(d, 1.0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      r.correlation[i][j] = r.correlation[j][i] = pearson_correlation(series[i], series[j]);
  r.seconds = since(start);
  return r;
}

UncoveredReport uncovered_copies_experiment(const RootedPair& pair, ExperimentConfig cfg, const Limits& limits) {
  const auto start = Clock::now();
  const Hypergraph& h = pair.inner();
  const Hypergraph& g = pair.outer();
  if (g.arity() != cfg.s) throw DomainError("pair arity differs from s");
  if (h.vertex_count() == 0 || h.edge_count() == 0) throw DomainError("H needs at least one edge");
  if (!is_strictly_balanced(h, limits)) throw DomainError("H is not strictly balanced");
  const Rational rho = density(h);
  if (pair.extra_vertices() > 0) {
    if (!is_strictly_balanced(pair, limits)) throw DomainError("(G, H) is not strictly balanced");
    if (pair.density() != rho)
      throw DomainError("rho(H) = " + to_string(rho) + " differs from rho(G, H) = " + to_string(pair.density()));
  }
  if (!cfg.alpha && !cfg.p) cfg.alpha = Rational(1) / rho;
  UncoveredReport r;
  r.config = cfg;
  r.p = cfg.probability();
  r.parameter = ext::poisson_parameter(pair, limits);
  r.lambda = r.parameter.lambda();
  const auto counts = run_trials<std::int64_t>(cfg, [&](std::int64_t t) {
    return to_count(ext::count_uncovered_copies(h, g, sample(cfg, t), limits));
  });
  for (std::int64_t c : counts) {
    if (r.histogram.size() <= static_cast<std::size_t>(c)) r.histogram.resize(static_cast<std::size_t>(c) + 1, 0);
    ++r.histogram[static_cast<std::size_t>(c)];
  }
  r.tv_distance = tv_distance_poisson(r.histogram, r.lambda);
  r.seconds = since(start);
  return r;
}

ProbeReport spectrum_probe(int s, const Predicate& predicate, const std::vector<Rational>& alphas,
                           const std::vector<std::int64_t>& ns, std::int64_t trials, std::uint64_t seed,
                           unsigned threads) {
  const auto start = Clock::now();
  if (alphas.empty() || ns.empty()) throw DomainError("empty probe grid");
  ProbeReport r;
  r.alphas = alphas;
  r.ns = ns;
  r.trials = trials;
  r.seed = seed;
  for (const auto& a : alphas) {
    std::vector<double> row;
    bool flag = true;
    for (std::int64_t n : ns) {
      ExperimentConfig cfg;
      cfg.s = s;
      cfg.n = n;
      cfg.alpha = a;
      cfg.trials = trials;
      cfg.seed = seed;
      cfg.threads = threads;
      const double est = estimate_probability(cfg, predicate).estimate;
      row.push_back(est);
      flag = flag && est >= 0.2 && est <= 0.8;
    }
    r.estimates.push_back(std::move(row));
    r.flagged.push_back(flag);
  }
  r.seconds = since(start);
  return r;
}

}  // namespace hyperlab
