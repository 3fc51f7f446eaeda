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

// Desk-scale statistical battery. Each test targets one of the failure
// families seen on BigCrush-scale campaigns (collisions, close pairs, random
// walks, matrix rank, linear complexity) or is a classical sanity test.

#ifndef PRNGLAB_BATTERY_HPP_
#define PRNGLAB_BATTERY_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prnglab/bitstream.hpp"

namespace prnglab {

// ---------------------------------------------------------------------------
// Verdicts

enum class Verdict { pass, suspicious, decisive };

std::string_view to_string(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view s);

struct Thresholds {
  double suspicious = 1e-3;
  double decisive = 1e-15;
  // Throws ConfigError unless 0 < decisive < suspicious < 0.5.
  void validate() const;
};

// pf = min(p, 1-p); decisive below `decisive`, suspicious below `suspicious`.
Verdict classify(double p, const Thresholds& thresholds = {});
Verdict classify(double p, double suspicious_alpha, double decisive_eps);
inline double two_sided(double p) { return p < 1.0 - p ? p : 1.0 - p; }

// ---------------------------------------------------------------------------
// Results

enum class Cluster { collision, close_pairs, random_walk, matrix_rank, linear_complexity, classical };

std::string_view to_string(Cluster c);
std::optional<Cluster> parse_cluster(std::string_view s);

struct Statistic {
  std::string name;  // "" for single-statistic tests
  double p = 1.0;
  Verdict verdict = Verdict::pass;
};

struct TestResult {
  int test_id = 0;
  std::string name;
  Cluster cluster = Cluster::classical;
  std::string params;
  std::vector<Statistic> stats;
  Verdict verdict = Verdict::pass;  // worst over stats

  // Applies `thresholds` to every statistic and recomputes the overall verdict.
  void reclassify(const Thresholds& thresholds);
};

// ---------------------------------------------------------------------------
// Bit extraction: from every word drop `drop` most significant bits and keep
// the next `take` bits, most significant first.

class BitReader {
 public:
  BitReader(WordStream& src, int drop = 0, int take = 32);

  int next_bit();
  // Up to 64 bits, first bit read ends up most significant.
  std::uint64_t next_bits(int count);

 private:
  WordStream& src_;
  int drop_;
  int take_;
  std::uint64_t current_ = 0;  // unread bits, left-aligned
  int left_ = 0;
};

// ---------------------------------------------------------------------------
// Support primitives

// Dense row-major bit matrix.
class BitMatrix {
 public:
  BitMatrix(int rows, int cols);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool get(int r, int c) const;
  void set(int r, int c, bool v);
  std::span<std::uint64_t> row(int r);
  std::span<const std::uint64_t> row(int r) const;

 private:
  int rows_;
  int cols_;
  int words_per_row_;
  std::vector<std::uint64_t> bits_;
};

// Rank over GF(2) by row elimination on packed words.
int gf2_rank(BitMatrix m);
// P(rank = r) for a uniformly random rows x cols matrix over GF(2).
double gf2_rank_probability(int rows, int cols, int r);

// Length of the shortest LFSR that generates `bits` (each element 0 or 1).
int berlekamp_massey(std::span<const std::uint8_t> bits);
// P(linear complexity = l), l = 0..length, for a uniformly random sequence.
std::vector<double> linear_complexity_distribution(int length);
// Mean complexity of a random sequence of `length` bits.
double linear_complexity_mean(int length);
// Category 0..6 of T = (-1)^M (L - mean) + 2/9 on the standard cut points
// -2.5, -1.5, ..., 2.5.
int linear_complexity_category(int length, int complexity);

// Duplicated spacings among sorted points: (#spacings) - (#distinct spacings),
// with the n-1 spacings between consecutive sorted points.
std::int64_t count_duplicate_spacings(std::span<const std::uint64_t> points);
// Exact law of the duplicate-spacing count for n points uniform on [0,k),
// obtained by summing over sorted point multisets. Small instances only.
std::vector<double> birthday_spacings_exact_distribution(int n, int k);

// C = n - (number of occupied urns).
std::int64_t count_collisions(std::span<const std::uint64_t> urns);
// Exact law of C for n balls in k urns, via the occupancy recurrence.
std::vector<double> collision_distribution(std::int64_t n, std::int64_t k);

// Steps are +1 for a 1 bit, -1 for a 0 bit.
struct WalkSummary {
  int returns = 0;        // visits to 0 at steps 1..L
  int max_position = 0;   // max over S_0..S_L, so >= 0
};
WalkSummary summarize_walk(std::span<const std::uint8_t> steps);
std::vector<double> random_walk_return_distribution(int length);
std::vector<double> random_walk_max_distribution(int length);

// Minimum wrap-around distance on the unit torus.
double torus_distance(std::span<const double> a, std::span<const double> b);
// Volume of the t-ball of radius r, t in {2,3,4}.
double ball_volume(int t, double r);
// 1 - exp(-(n(n-1)/2) V_t(D)) for the minimum pairwise torus distance D of
// `points` (n points of dimension t, stored point after point).
double close_pairs_uniform(std::span<const double> points, int t);

// Gap lengths: number of misses before each hit, measured from the start of
// the sequence; trailing misses are dropped.
std::vector<std::int64_t> gap_lengths(std::span<const double> values, double lo, double hi);
// Exact expected number of gaps of each length 0..n-1 in n scanned values
// with hit probability p.
std::vector<double> gap_expected_counts(int n, double p);

// ---------------------------------------------------------------------------
// Tests. Each validates its parameters (ConfigError) before consuming words.

struct SerialFrequencyParams {
  int t = 1;           // bits per block, <= 16
  std::int64_t n = 0;  // blocks, >= 5 * 2^t
};
struct BirthdaySpacingsParams {
  std::int64_t n = 0;     // points per replication
  std::int64_t k = 0;     // cells, power of two
  std::int64_t reps = 1;
  int drop = 0;           // most significant bits skipped in each word
};
struct CollisionParams {
  std::int64_t n = 0;     // balls
  std::int64_t k = 0;     // urns, power of two
  std::int64_t reps = 1;
  int drop = 0;
};
struct ClosePairsParams {
  std::int64_t n = 0;
  int t = 2;
  std::int64_t reps = 1;
};
struct RandomWalkParams {
  int length = 0;  // even
  std::int64_t reps = 1;
  int drop = 0;
  int take = 32;
};
struct MatrixRankParams {
  int size = 32;
  std::int64_t reps = 1;
  int drop = 0;
  int take = 32;
};
struct LinearComplexityParams {
  int block_bits = 500;        // M
  std::int64_t blocks = 200;   // N
  int drop = 0;
  int take = 1;
};
struct GapParams {
  double lo = 0.0;
  double hi = 0.5;
  std::int64_t n = 0;  // unit values scanned
};

TestResult test_serial_frequency(WordStream& src, const SerialFrequencyParams& p);
TestResult test_birthday_spacings(WordStream& src, const BirthdaySpacingsParams& p);
TestResult test_collision(WordStream& src, const CollisionParams& p);
TestResult test_close_pairs(WordStream& src, const ClosePairsParams& p);
TestResult test_random_walk(WordStream& src, const RandomWalkParams& p);
TestResult test_matrix_rank(WordStream& src, const MatrixRankParams& p);
TestResult test_linear_complexity(WordStream& src, const LinearComplexityParams& p);
TestResult test_gap(WordStream& src, const GapParams& p);

// ---------------------------------------------------------------------------
// Profiles

// One configured test. `params` keeps the file order for rendering.
struct TestSpec {
  int id = 0;
  std::string kind;
  Cluster cluster = Cluster::classical;
  std::vector<std::pair<std::string, std::string>> params;

  std::string render_params() const;
};

struct BatteryProfile {
  std::string name;
  int version = 1;
  std::vector<TestSpec> tests;
};

// Plain-text key=value format:
//   profile = desk
//   version = 1
//   test.<id> = <kind> <cluster> key=value ...
BatteryProfile parse_profile(std::string_view text);
BatteryProfile load_profile_file(const std::string& path);
std::string render_profile(const BatteryProfile& profile);
// "smoke", "desk" or "deep"; throws ConfigError otherwise.
const BatteryProfile& builtin_profile(std::string_view name);
std::vector<std::string> builtin_profile_names();

// Throws ConfigError describing the first invalid test.
void validate_profile(const BatteryProfile& profile);
// Words a test consumes; run_battery consumes exactly the sum.
std::int64_t words_consumed(const TestSpec& spec);
std::int64_t words_consumed(const BatteryProfile& profile);

TestResult run_test(WordStream& src, const TestSpec& spec, const Thresholds& thresholds = {});
// Runs every test in declared order, each on fresh words from `src`.
std::vector<TestResult> run_battery(WordStream& src, const BatteryProfile& profile,
                                    const Thresholds& thresholds = {});

}  // namespace prnglab

#endif  // PRNGLAB_BATTERY_HPP_
