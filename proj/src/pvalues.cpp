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

#include "prnglab/pvalues.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>

#include "prnglab/errors.hpp"

namespace prnglab {

double chisq_pvalue(double stat, double df) {
  if (!(df >= 1.0) || !(stat >= 0.0) || std::isnan(stat)) {
    throw ArgumentError("chisq_pvalue: need stat >= 0 and df >= 1");
  }
  if (stat == 0.0) return 1.0;
  if (std::isinf(stat)) return 0.0;
  return boost::math::gamma_q(df / 2.0, stat / 2.0);
}

double poisson_tail(double lambda, std::int64_t c) {
  if (!(lambda >= 0.0) || c < 0) throw ArgumentError("poisson_tail: need lambda >= 0 and c >= 0");
  if (c == 0) return 1.0;
  if (lambda == 0.0) return 0.0;

  auto log_term = [lambda](std::int64_t i) {
    return -lambda + static_cast<double>(i) * std::log(lambda) - std::lgamma(static_cast<double>(i) + 1.0);
  };
  if (static_cast<double>(c) > lambda) {
    // Sum the upper tail directly; terms decrease geometrically past the mode.
    double sum = 0.0;
    double term = std::exp(log_term(c));
    for (std::int64_t i = c; term > 0.0; ++i) {
      sum += term;
      if (term < sum * 1e-17) break;
      term *= lambda / static_cast<double>(i + 1);
    }
    return std::min(1.0, sum);
  }
  // Lower side P(X < c), then complement.
  double sum = 0.0;
  double term = std::exp(log_term(c - 1));
  for (std::int64_t i = c - 1; i >= 0; --i) {
    sum += term;
    if (term < sum * 1e-17) break;
    term *= static_cast<double>(i) / lambda;
  }
  return std::clamp(1.0 - sum, 0.0, 1.0);
}

namespace {

// Marsaglia, Tsang & Wang exact P(D_n < d).
double ks_cdf_exact(std::int64_t n, double d) {
  const int k = static_cast<int>(static_cast<double>(n) * d) + 1;
  const int m = 2 * k - 1;
  const double h = k - static_cast<double>(n) * d;
  using Matrix = std::vector<double>;
  Matrix H(static_cast<std::size_t>(m) * m, 0.0);
  auto at = [m](Matrix& a, int i, int j) -> double& { return a[static_cast<std::size_t>(i) * m + j]; };

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) at(H, i, j) = (i - j + 1 < 0) ? 0.0 : 1.0;
  }
  for (int i = 0; i < m; ++i) {
    at(H, i, 0) -= std::pow(h, i + 1);
    at(H, m - 1, i) -= std::pow(h, m - i);
  }
  at(H, m - 1, 0) += (2 * h - 1 > 0 ? std::pow(2 * h - 1, m) : 0.0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i - j + 1 > 0) {
        for (int g = 1; g <= i - j + 1; ++g) at(H, i, j) /= g;
      }
    }
  }

  auto multiply = [&](Matrix& a, Matrix& b) {
    Matrix c(a.size(), 0.0);
    for (int i = 0; i < m; ++i) {
      for (int l = 0; l < m; ++l) {
        const double ail = at(a, i, l);
        if (ail == 0.0) continue;
        for (int j = 0; j < m; ++j) c[static_cast<std::size_t>(i) * m + j] += ail * at(b, l, j);
      }
    }
    return c;
  };

  // Q = H^n with a running power-of-ten exponent to avoid overflow.
  Matrix Q(H.size(), 0.0);
  for (int i = 0; i < m; ++i) at(Q, i, i) = 1.0;
  int q_exp = 0;
  Matrix base = H;
  int base_exp = 0;
  for (std::int64_t e = n; e > 0; e >>= 1) {
    if (e & 1) {
      Q = multiply(Q, base);
      q_exp += base_exp;
      if (at(Q, k - 1, k - 1) > 1e140) {
        for (auto& v : Q) v *= 1e-140;
        q_exp += 140;
      }
    }
    if (e > 1) {
      base = multiply(base, base);
      base_exp *= 2;
      if (at(base, k - 1, k - 1) > 1e140) {
        for (auto& v : base) v *= 1e-140;
        base_exp += 140;
      }
    }
  }
  double s = at(Q, k - 1, k - 1);
  for (std::int64_t i = 1; i <= n; ++i) {
    s = s * static_cast<double>(i) / static_cast<double>(n);
    if (s < 1e-140) {
      s *= 1e140;
      q_exp -= 140;
    }
  }
  return s * std::pow(10.0, q_exp);
}

// Kolmogorov limiting survival function Q(lambda) = P(K > lambda).
double kolmogorov_survival(double lambda) {
  if (lambda <= 0.0) return 1.0;
  if (lambda < 1.0) {
    // Small-lambda form: P(K <= lambda) = sqrt(2 pi)/lambda * sum exp(-(2k-1)^2 pi^2 / (8 lambda^2)).
    const double c = std::numbers::pi * std::numbers::pi / (8.0 * lambda * lambda);
    double sum = 0.0;
    for (int k = 1; k < 20; ++k) {
      const double t = std::exp(-static_cast<double>((2 * k - 1) * (2 * k - 1)) * c);
      sum += t;
      if (t < 1e-18) break;
    }
    return std::clamp(1.0 - std::sqrt(2.0 * std::numbers::pi) / lambda * sum, 0.0, 1.0);
  }
  double sum = 0.0;
  for (int k = 1; k < 100; ++k) {
    const double t = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1) ? t : -t;
    if (t < 1e-300) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

}  // namespace

double ks_pvalue(std::int64_t n, double d) {
  if (n < 1 || !(d >= 0.0 && d <= 1.0)) throw ArgumentError("ks_pvalue: need n >= 1 and 0 <= D <= 1");
  if (d == 0.0) return 1.0;
  if (n < 10) {
    if (d >= 1.0) return 0.0;
    return std::clamp(1.0 - ks_cdf_exact(n, d), 0.0, 1.0);
  }
  const double sn = std::sqrt(static_cast<double>(n));
  return kolmogorov_survival((sn + 0.12 + 0.11 / sn) * d);
}

double ks_uniform_statistic(std::span<const double> sample) {
  if (sample.empty()) throw ArgumentError("ks_uniform_statistic: empty sample");
  std::vector<double> v(sample.begin(), sample.end());
  std::sort(v.begin(), v.end());
  const double n = static_cast<double>(v.size());
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double x = std::clamp(v[i], 0.0, 1.0);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - x, x - static_cast<double>(i) / n});
  }
  return d;
}

ChiSquareResult chi_square_gof(std::span<const double> observed, std::span<const double> probabilities,
                               double min_expected) {
  if (observed.size() != probabilities.size() || observed.empty()) {
    throw ConfigError("chi_square_gof: observed and probability vectors differ in size");
  }
  const double total = std::accumulate(observed.begin(), observed.end(), 0.0);
  std::vector<double> obs_groups;
  std::vector<double> exp_groups;
  double o = 0.0;
  double e = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    o += observed[i];
    e += probabilities[i] * total;
    if (e >= min_expected) {
      obs_groups.push_back(o);
      exp_groups.push_back(e);
      o = 0.0;
      e = 0.0;
    }
  }
  if (e > 0.0 || o > 0.0) {
    if (exp_groups.empty()) {
      obs_groups.push_back(o);
      exp_groups.push_back(e);
    } else {
      obs_groups.back() += o;
      exp_groups.back() += e;
    }
  }
  if (exp_groups.size() < 2) throw ConfigError("chi_square_gof: fewer than two classes after merging");

  ChiSquareResult r;
  r.classes = static_cast<int>(exp_groups.size());
  r.df = r.classes - 1;
  for (std::size_t i = 0; i < exp_groups.size(); ++i) {
    if (exp_groups[i] <= 0.0) {
      r.statistic = obs_groups[i] > 0.0 ? INFINITY : r.statistic;
      continue;
    }
    const double diff = obs_groups[i] - exp_groups[i];
    r.statistic += diff * diff / exp_groups[i];
  }
  r.p = chisq_pvalue(r.statistic, r.df);
  return r;
}

double log_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return -INFINITY;
  return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

}  // namespace prnglab
