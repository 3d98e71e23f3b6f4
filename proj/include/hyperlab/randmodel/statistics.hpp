#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace hyperlab {

struct Interval {
  double low = 0.0;
  double high = 1.0;
};

/// Wilson score interval; z = 1.96 gives 95%.
Interval wilson_interval(std::int64_t successes, std::int64_t trials, double z = 1.959963984540054);

double poisson_pmf(double lambda, std::int64_t k);

/// Total variation between the empirical law of `counts` (histogram by value)
/// and Pois(lambda), with every value >= tail pooled into one bin.
double tv_distance_poisson(const std::vector<std::int64_t>& histogram, double lambda, std::int64_t tail = 5);

/// Same for a joint histogram of count vectors against the product of
/// Pois(lambda_i); each coordinate is pooled at `tail`.
double tv_distance_product(const std::map<std::vector<std::int64_t>, std::int64_t>& joint,
                           const std::vector<double>& lambdas, std::int64_t tail = 5);

/// Pearson correlation; 0 when either sample is constant.
double pearson_correlation(const std::vector<double>& x, const std::vector<double>& y);

/// Chi-square goodness of fit of observed values against Binomial(trials, p).
/// Bins are merged from the tails until each expects at least 5.
struct ChiSquare {
  double statistic = 0.0;
  int degrees_of_freedom = 0;
  double p_value = 1.0;
};
ChiSquare chi_square_binomial(const std::vector<std::int64_t>& values, std::int64_t trials, double p);

}  // namespace hyperlab
