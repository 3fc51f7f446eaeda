// Copyright 2026 The prnglab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Upper-tail probabilities used by the battery.

#ifndef PRNGLAB_PVALUES_HPP_
#define PRNGLAB_PVALUES_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace prnglab {

// P(X >= stat) for X ~ chi-square(df). Regularized upper incomplete gamma.
double chisq_pvalue(double stat, double df);

// P(X >= c) for X ~ Poisson(lambda), by direct summation of the shorter side.
double poisson_tail(double lambda, std::int64_t c);

// P(D_n >= d) for the two-sided Kolmogorov-Smirnov statistic. Exact for
// n < 10, Stephens-corrected Kolmogorov series otherwise.
double ks_pvalue(std::int64_t n, double d);

// Two-sided KS distance between the sample and Uniform(0,1). Sorts a copy.
double ks_uniform_statistic(std::span<const double> sample);

struct ChiSquareResult {
  double statistic = 0.0;
  int df = 0;
  double p = 1.0;
  int classes = 0;  // after merging
};

// Goodness of fit of `observed` counts against `probabilities` (which should
// sum to 1). Adjacent classes are merged left to right until every merged
// class has an expected count of at least `min_expected`; a short tail is
// folded into the last class. Throws ConfigError when fewer than two classes
// survive.
ChiSquareResult chi_square_gof(std::span<const double> observed, std::span<const double> probabilities,
                               double min_expected = 5.0);

// log(n choose k) via lgamma.
double log_binomial(std::int64_t n, std::int64_t k);

}  // namespace prnglab

#endif  // PRNGLAB_PVALUES_HPP_
