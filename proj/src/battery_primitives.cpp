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

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>

#include "prnglab/battery.hpp"
#include "prnglab/errors.hpp"
#include "prnglab/pvalues.hpp"

namespace prnglab {

// ---------------------------------------------------------------------------
// BitReader

BitReader::BitReader(WordStream& src, int drop, int take) : src_(src), drop_(drop), take_(take) {
  if (drop < 0 || take < 1 || drop + take > 32) throw ConfigError("bit slice must satisfy 0 <= drop, 1 <= take, drop + take <= 32");
}

int BitReader::next_bit() { return static_cast<int>(next_bits(1)); }

std::uint64_t BitReader::next_bits(int count) {
  std::uint64_t out = 0;
  while (count > 0) {
    if (left_ == 0) {
      current_ = static_cast<std::uint64_t>(src_.next_word32()) << (32 + drop_);
      left_ = take_;
    }
    const int g = std::min(left_, count);
    out = (out << g) | (current_ >> (64 - g));
    current_ <<= g;
    left_ -= g;
    count -= g;
  }
  return out;
}

// ---------------------------------------------------------------------------
// GF(2) matrices

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
      bits_(static_cast<std::size_t>(rows) * static_cast<std::size_t>((cols + 63) / 64), 0) {
  if (rows < 0 || cols < 0) throw ArgumentError("BitMatrix: negative dimension");
}

bool BitMatrix::get(int r, int c) const { return (row(r)[c / 64] >> (c % 64)) & 1; }

void BitMatrix::set(int r, int c, bool v) {
  auto w = row(r);
  const std::uint64_t mask = std::uint64_t{1} << (c % 64);
  if (v) {
    w[c / 64] |= mask;
  } else {
    w[c / 64] &= ~mask;
  }
}

std::span<std::uint64_t> BitMatrix::row(int r) {
  return {bits_.data() + static_cast<std::size_t>(r) * words_per_row_, static_cast<std::size_t>(words_per_row_)};
}

std::span<const std::uint64_t> BitMatrix::row(int r) const {
  return {bits_.data() + static_cast<std::size_t>(r) * words_per_row_, static_cast<std::size_t>(words_per_row_)};
}

int gf2_rank(BitMatrix m) {
  int rank = 0;
  for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
    const int word = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    int pivot = -1;
    for (int r = rank; r < m.rows(); ++r) {
      if (m.row(r)[word] & mask) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    auto prow = m.row(pivot);
    if (pivot != rank) std::swap_ranges(prow.begin(), prow.end(), m.row(rank).begin());
    auto top = m.row(rank);
    for (int r = rank + 1; r < m.rows(); ++r) {
      auto cur = m.row(r);
      if (cur[word] & mask) {
        for (std::size_t w = static_cast<std::size_t>(word); w < cur.size(); ++w) cur[w] ^= top[w];
      }
    }
    ++rank;
  }
  return rank;
}

double gf2_rank_probability(int rows, int cols, int r) {
  if (r < 0 || r > std::min(rows, cols)) return 0.0;
  // 2^{r(m+n-r) - mn} prod_{i<r} (1-2^{i-m})(1-2^{i-n}) / (1-2^{i-r})
  long double log2p = static_cast<long double>(r) * (rows + cols - r) - static_cast<long double>(rows) * cols;
  long double prod = 1.0L;
  for (int i = 0; i < r; ++i) {
    prod *= (1.0L - std::ldexp(1.0L, i - rows)) * (1.0L - std::ldexp(1.0L, i - cols)) /
            (1.0L - std::ldexp(1.0L, i - r));
  }
  return static_cast<double>(prod * std::exp2(log2p));
}

// ---------------------------------------------------------------------------
// Linear complexity

int berlekamp_massey(std::span<const std::uint8_t> bits) {
  const std::size_t n = bits.size();
  const std::size_t words = n / 64 + 2;
  std::vector<std::uint64_t> c(words, 0), b(words, 0), t(words, 0), window(words, 0);
  c[0] = b[0] = 1;
  std::size_t len = 0;
  std::ptrdiff_t last = -1;

  for (std::size_t i = 0; i < n; ++i) {
    // window bit j holds bits[i - j]
    for (std::size_t w = words - 1; w > 0; --w) window[w] = (window[w] << 1) | (window[w - 1] >> 63);
    window[0] = (window[0] << 1) | (bits[i] & 1u);

    const std::size_t used = len / 64 + 1;
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < used; ++w) acc ^= c[w] & window[w];
    if (std::popcount(acc) & 1) {
      t = c;
      // c ^= b << shift
      const std::size_t shift = i - static_cast<std::size_t>(last);
      const std::size_t ws = shift / 64;
      const unsigned bs = shift % 64;
      for (std::size_t w = words; w-- > ws;) {
        std::uint64_t v = b[w - ws] << bs;
        if (bs != 0 && w - ws > 0) v |= b[w - ws - 1] >> (64 - bs);
        c[w] ^= v;
      }
      if (2 * len <= i) {
        len = i + 1 - len;
        last = static_cast<std::ptrdiff_t>(i);
        b = t;
      }
    }
  }
  return static_cast<int>(len);
}

std::vector<double> linear_complexity_distribution(int length) {
  if (length < 1) throw ArgumentError("linear_complexity_distribution: length must be positive");
  std::vector<double> p(static_cast<std::size_t>(length) + 1);
  p[0] = std::ldexp(1.0, -length);
  for (int l = 1; l <= length; ++l) {
    const int e = (l <= length / 2) ? 2 * l - 1 : 2 * (length - l);
    p[static_cast<std::size_t>(l)] = std::ldexp(1.0, e - length);
  }
  return p;
}

double linear_complexity_mean(int length) {
  const double m = length;
  const double sign = (length % 2 == 0) ? -1.0 : 1.0;  // (-1)^{M+1}
  return m / 2.0 + (9.0 + sign) / 36.0 - (m / 3.0 + 2.0 / 9.0) * std::ldexp(1.0, -length);
}

int linear_complexity_category(int length, int complexity) {
  const double sign = (length % 2 == 0) ? 1.0 : -1.0;
  const double t = sign * (complexity - linear_complexity_mean(length)) + 2.0 / 9.0;
  if (t <= -2.5) return 0;
  if (t <= -1.5) return 1;
  if (t <= -0.5) return 2;
  if (t <= 0.5) return 3;
  if (t <= 1.5) return 4;
  if (t <= 2.5) return 5;
  return 6;
}

// ---------------------------------------------------------------------------
// Birthday spacings

std::int64_t count_duplicate_spacings(std::span<const std::uint64_t> points) {
  if (points.size() < 2) return 0;
  std::vector<std::uint64_t> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::uint64_t> spacings(sorted.size() - 1);
  for (std::size_t i = 1; i < sorted.size(); ++i) spacings[i - 1] = sorted[i] - sorted[i - 1];
  std::sort(spacings.begin(), spacings.end());
  std::int64_t dup = 0;
  for (std::size_t i = 1; i < spacings.size(); ++i) {
    if (spacings[i] == spacings[i - 1]) ++dup;
  }
  return dup;
}

std::vector<double> birthday_spacings_exact_distribution(int n, int k) {
  if (n < 2 || k < 1) throw ArgumentError("birthday_spacings_exact_distribution: need n >= 2, k >= 1");
  if (log_binomial(k + n - 1, n) > std::log(2e7)) {
    throw ArgumentError("birthday_spacings_exact_distribution: instance too large to sum exactly");
  }
  std::vector<double> dist(static_cast<std::size_t>(n), 0.0);
  std::vector<std::uint64_t> pts(static_cast<std::size_t>(n));
  const double log_total = n * std::log(static_cast<double>(k));
  const double log_nfact = std::lgamma(n + 1.0);

  // Nondecreasing point sequences, each weighted by its number of orderings.
  auto recurse = [&](auto&& self, int pos, std::uint64_t from) -> void {
    if (pos == n) {
      double log_w = log_nfact;
      int run = 1;
      for (int i = 1; i <= n; ++i) {
        if (i < n && pts[static_cast<std::size_t>(i)] == pts[static_cast<std::size_t>(i - 1)]) {
          ++run;
        } else {
          log_w -= std::lgamma(run + 1.0);
          run = 1;
        }
      }
      dist[static_cast<std::size_t>(count_duplicate_spacings(pts))] += std::exp(log_w - log_total);
      return;
    }
    for (std::uint64_t v = from; v < static_cast<std::uint64_t>(k); ++v) {
      pts[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, v);
    }
  };
  recurse(recurse, 0, 0);
  return dist;
}

// ---------------------------------------------------------------------------
// Collisions

std::int64_t count_collisions(std::span<const std::uint64_t> urns) {
  std::vector<std::uint64_t> sorted(urns.begin(), urns.end());
  std::sort(sorted.begin(), sorted.end());
  const auto occupied = std::unique(sorted.begin(), sorted.end()) - sorted.begin();
  return static_cast<std::int64_t>(urns.size()) - occupied;
}

std::vector<double> collision_distribution(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1) throw ArgumentError("collision_distribution: need n >= 1, k >= 1");
  // Track C directly and drop mass far beyond the mean n^2/(2k).
  const double mean = static_cast<double>(n) * static_cast<double>(n) / (2.0 * static_cast<double>(k));
  const auto cap = std::min<std::int64_t>(n - 1, static_cast<std::int64_t>(std::ceil(mean + 30.0 * std::sqrt(mean) + 60.0)));
  std::vector<double> p(static_cast<std::size_t>(cap) + 1, 0.0);
  p[0] = 1.0;
  const double kd = static_cast<double>(k);
  for (std::int64_t i = 0; i < n; ++i) {
    // Before ball i+1: i balls thrown, C = c, occupied = i - c.
    const auto top = std::min<std::int64_t>(cap, i);
    for (std::int64_t c = top; c >= 0; --c) {
      const double hit = static_cast<double>(i - c) / kd;
      const double stay = p[static_cast<std::size_t>(c)] * (1.0 - hit);
      if (c + 1 <= cap) {
        p[static_cast<std::size_t>(c + 1)] += p[static_cast<std::size_t>(c)] * hit;
      }
      p[static_cast<std::size_t>(c)] = stay;
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Random walks

WalkSummary summarize_walk(std::span<const std::uint8_t> steps) {
  WalkSummary s;
  int pos = 0;
  for (auto b : steps) {
    pos += b ? 1 : -1;
    if (pos == 0) ++s.returns;
    s.max_position = std::max(s.max_position, pos);
  }
  return s;
}

std::vector<double> random_walk_return_distribution(int length) {
  if (length < 2 || length % 2 != 0) throw ArgumentError("random walk length must be even and >= 2");
  const int half = length / 2;
  std::vector<double> p(static_cast<std::size_t>(half) + 1);
  // P(R = r) = C(L - r, L/2) / 2^{L - r}
  for (int r = 0; r <= half; ++r) {
    p[static_cast<std::size_t>(r)] =
        std::exp(log_binomial(length - r, half) - static_cast<double>(length - r) * std::numbers::ln2);
  }
  return p;
}

std::vector<double> random_walk_max_distribution(int length) {
  if (length < 2 || length % 2 != 0) throw ArgumentError("random walk length must be even and >= 2");
  // P(S_L = 2j - L) = C(L, j) / 2^L
  std::vector<double> tail_ge(static_cast<std::size_t>(2 * length + 3), 0.0);  // index s + L
  std::vector<double> pmf(static_cast<std::size_t>(2 * length + 1), 0.0);
  for (int j = 0; j <= length; ++j) {
    pmf[static_cast<std::size_t>(2 * j)] = std::exp(log_binomial(length, j) - length * std::numbers::ln2);
  }
  for (int s = length; s >= -length; --s) {
    tail_ge[static_cast<std::size_t>(s + length)] =
        tail_ge[static_cast<std::size_t>(s + length + 1)] + pmf[static_cast<std::size_t>(s + length)];
  }
  auto s_ge = [&](int s) { return s > length ? 0.0 : tail_ge[static_cast<std::size_t>(s + length)]; };
  // P(M >= m) = P(S >= m) + P(S >= m + 1) for m >= 1 (reflection).
  auto m_ge = [&](int m) { return m <= 0 ? 1.0 : s_ge(m) + s_ge(m + 1); };
  std::vector<double> p(static_cast<std::size_t>(length) + 1);
  for (int m = 0; m <= length; ++m) p[static_cast<std::size_t>(m)] = m_ge(m) - m_ge(m + 1);
  return p;
}

// ---------------------------------------------------------------------------
// Close pairs

double torus_distance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = std::abs(a[i] - b[i]);
    d = std::min(d, 1.0 - d);
    sum += d * d;
  }
  return std::sqrt(sum);
}

double ball_volume(int t, double r) {
  switch (t) {
    case 2:
      return std::numbers::pi * r * r;
    case 3:
      return 4.0 / 3.0 * std::numbers::pi * r * r * r;
    case 4:
      return std::numbers::pi * std::numbers::pi / 2.0 * r * r * r * r;
    default:
      throw ArgumentError("ball_volume: dimension must be 2, 3 or 4");
  }
}

double close_pairs_uniform(std::span<const double> points, int t) {
  const std::size_t n = points.size() / static_cast<std::size_t>(t);
  if (n < 2) throw ArgumentError("close_pairs_uniform: need at least two points");
  double best = INFINITY;
  for (std::size_t i = 0; i < n; ++i) {
    const double* a = points.data() + i * static_cast<std::size_t>(t);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double* b = points.data() + j * static_cast<std::size_t>(t);
      double sum = 0.0;
      for (int c = 0; c < t; ++c) {
        double d = std::abs(a[c] - b[c]);
        d = std::min(d, 1.0 - d);
        sum += d * d;
      }
      best = std::min(best, sum);
    }
  }
  const double d = std::sqrt(best);
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  return -std::expm1(-pairs * ball_volume(t, d));
}

// ---------------------------------------------------------------------------
// Gaps

std::vector<std::int64_t> gap_lengths(std::span<const double> values, double lo, double hi) {
  std::vector<std::int64_t> gaps;
  std::int64_t run = 0;
  for (double u : values) {
    if (u >= lo && u < hi) {
      gaps.push_back(run);
      run = 0;
    } else {
      ++run;
    }
  }
  return gaps;
}

std::vector<double> gap_expected_counts(int n, double p) {
  std::vector<double> e(static_cast<std::size_t>(std::max(n, 0)), 0.0);
  const double q = 1.0 - p;
  for (int j = 0; j < n; ++j) e[static_cast<std::size_t>(j)] = p * std::pow(q, j) * (1.0 + (n - 1 - j) * p);
  return e;
}

}  // namespace prnglab
