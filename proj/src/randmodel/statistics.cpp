#include "hyperlab/randmodel/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/poisson.hpp>

#include "hyperlab/hypercore/errors.hpp"

namespace hyperlab {

Interval wilson_interval(std::int64_t successes, std::int64_t trials, double z) {
  if (trials <= 0 || successes < 0 || successes > trials) throw DomainError("invalid binomial counts");
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double centre = (phat + z2 / (2 * n)) / (1 + z2 / n);
  const double half = z * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / (1 + z2 / n);
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

double poisson_pmf(double lambda, std::int64_t k) {
  if (lambda < 0 || k < 0) throw DomainError("invalid Poisson arguments");
  if (lambda == 0) return k == 0 ? 1.0 : 0.0;
  return boost::math::pdf(boost::math::poisson_distribution<double>(lambda), static_cast<double>(k));
}

namespace {

// Pooled model probabilities for values 0..tail-1 and the tail bin.
std::vector<double> pooled_poisson(double lambda, std::int64_t tail) {
  std::vector<double> out(static_cast<std::size_t>(tail) + 1, 0.0);
  double head = 0.0;
  for (std::int64_t k = 0; k < tail; ++k) {
    out[static_cast<std::size_t>(k)] = poisson_pmf(lambda, k);
    head += out[static_cast<std::size_t>(k)];
  }
  out[static_cast<std::size_t>(tail)] = std::max(0.0, 1.0 - head);
  return out;
}

}  // namespace

double tv_distance_poisson(const std::vector<std::int64_t>& histogram, double lambda, std::int64_t tail) {
  if (tail < 1) throw DomainError("tail must be at least 1");
  const std::int64_t total = std::accumulate(histogram.begin(), histogram.end(), std::int64_t{0});
  if (total <= 0) throw DomainError("empty histogram");
  std::vector<double> emp(static_cast<std::size_t>(tail) + 1, 0.0);
  for (std::size_t k = 0; k < histogram.size(); ++k)
    emp[std::min<std::size_t>(k, static_cast<std::size_t>(tail))] +=
        static_cast<double>(histogram[k]) / static_cast<double>(total);
  const auto model = pooled_poisson(lambda, tail);
  double tv = 0.0;
  for (std::size_t i = 0; i < emp.size(); ++i) tv += std::fabs(emp[i] - model[i]);
  return tv / 2;
}

double tv_distance_product(const std::map<std::vector<std::int64_t>, std::int64_t>& joint,
                           const std::vector<double>& lambdas, std::int64_t tail) {
  if (tail < 1) throw DomainError("tail must be at least 1");
  const std::size_t d = lambdas.size();
  if (d == 0) throw DomainError("no coordinates");
  std::int64_t total = 0;
  std::map<std::vector<std::int64_t>, double> emp;
  for (const auto& [key, count] : joint) {
    if (key.size() != d) throw DomainError("joint histogram key has the wrong length");
    std::vector<std::int64_t> cell(d);
    for (std::size_t i = 0; i < d; ++i) cell[i] = std::min(key[i], tail);
    emp[cell] += static_cast<double>(count);
    total += count;
  }
  if (total <= 0) throw DomainError("empty histogram");
  std::vector<std::vector<double>> marg;
  for (double l : lambdas) marg.push_back(pooled_poisson(l, tail));
  // Walk every cell of the pooled grid.
  std::vector<std::int64_t> cell(d, 0);
  double tv = 0.0;
  while (true) {
    double model = 1.0;
    for (std::size_t i = 0; i < d; ++i) model *= marg[i][static_cast<std::size_t>(cell[i])];
    auto it = emp.find(cell);
    const double e = it == emp.end() ? 0.0 : it->second / static_cast<double>(total);
    tv += std::fabs(e - model);
    std::size_t i = 0;
    while (i < d && cell[i] == tail) cell[i++] = 0;
    if (i == d) break;
    ++cell[i];
  }
  return tv / 2;
}

double pearson_correlation(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.empty()) throw DomainError("samples must have equal, positive length");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0 || syy == 0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

ChiSquare chi_square_binomial(const std::vector<std::int64_t>& values, std::int64_t trials, double p) {
  if (values.empty()) throw DomainError("no observations");
  if (trials < 1 || !(p > 0.0 && p < 1.0)) throw DomainError("invalid binomial parameters");
  const boost::math::binomial_distribution<double> law(static_cast<double>(trials), p);
  const double n = static_cast<double>(values.size());
  std::vector<double> expected(static_cast<std::size_t>(trials) + 1);
  for (std::int64_t k = 0; k <= trials; ++k)
    expected[static_cast<std::size_t>(k)] = n * boost::math::pdf(law, static_cast<double>(k));
  std::vector<double> observed(expected.size(), 0.0);
  for (std::int64_t v : values) {
    if (v < 0 || v > trials) throw DomainError("observation outside the binomial support");
    observed[static_cast<std::size_t>(v)] += 1;
  }
  // Merge tails inward until both end bins expect at least 5.
  std::size_t lo = 0, hi = expected.size() - 1;
  double e_lo = expected[lo], o_lo = observed[lo], e_hi = expected[hi], o_hi = observed[hi];
  while (lo + 1 < hi && e_lo < 5) {
    ++lo;
    e_lo += expected[lo];
    o_lo += observed[lo];
  }
  while (hi > lo + 1 && e_hi < 5) {
    --hi;
    e_hi += expected[hi];
    o_hi += observed[hi];
  }
  std::vector<double> e_bins{e_lo}, o_bins{o_lo};
  for (std::size_t k = lo + 1; k < hi; ++k) {
    e_bins.push_back(expected[k]);
    o_bins.push_back(observed[k]);
  }
  if (hi > lo) {
    e_bins.push_back(e_hi);
    o_bins.push_back(o_hi);
  }
  ChiSquare out;
  for (std::size_t i = 0; i < e_bins.size(); ++i)
    if (e_bins[i] > 0) out.statistic += (o_bins[i] - e_bins[i]) * (o_bins[i] - e_bins[i]) / e_bins[i];
  out.degrees_of_freedom = static_cast<int>(e_bins.size()) - 1;
  if (out.degrees_of_freedom < 1) return out;
  const boost::math::chi_squared_distribution<double> chi(out.degrees_of_freedom);
  out.p_value = boost::math::cdf(boost::math::complement(chi, out.statistic));
  return out;
}

}  // namespace hyperlab
