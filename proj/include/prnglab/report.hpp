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

// Aggregation of report-file sets into failure histograms, success tables and
// the related arithmetic.

#ifndef PRNGLAB_REPORT_HPP_
#define PRNGLAB_REPORT_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prnglab/battery.hpp"
#include "prnglab/bitstream.hpp"
#include "prnglab/campaign.hpp"
#include "prnglab/generators.hpp"

namespace prnglab {

struct StatRecord {
  int test_id = 0;
  std::string test_name;  // base name, without "/stat"
  std::string stat;
  Cluster cluster = Cluster::classical;
  double p = 1.0;
  Verdict verdict = Verdict::pass;  // under the aggregation thresholds
};

// One parsed battery run.
struct RunRecord {
  std::string file;
  GeneratorId generator = GeneratorId::xoshiro256pp;
  std::uint64_t seed_index = 0;
  HalfPolicy half = HalfPolicy::native32;
  std::string profile;
  std::string version;
  std::vector<StatRecord> stats;

  Verdict worst() const;
};

struct FileError {
  std::string file;
  std::string message;
};

struct AggregateSummary {
  Thresholds thresholds;
  std::vector<RunRecord> runs;  // sorted by (generator, seed, half)
  std::vector<FileError> errors;
  std::vector<std::string> profiles;  // distinct profile names seen
};

// Parses every "*.txt" file directly in `dir` (dot-files are temporaries and
// are ignored), reclassifying stored p-values under `thresholds`. Unparseable
// files go to `errors`. Several profiles in one set throw ConfigError unless
// `allow_mixed`.
AggregateSummary aggregate(const std::filesystem::path& dir, const Thresholds& thresholds = {},
                           bool allow_mixed = false);
// Same over already-parsed reports.
AggregateSummary aggregate_reports(const std::vector<StreamReport>& reports, const Thresholds& thresholds = {},
                                   bool allow_mixed = false);

struct HistogramRow {
  GeneratorId generator = GeneratorId::xoshiro256pp;
  int test_id = 0;
  std::string test_name;
  Cluster cluster = Cluster::classical;
  std::int64_t suspicious_count = 0;  // runs with a statistic outside [alpha, 1-alpha]
  std::int64_t decisive_count = 0;    // runs with a decisive statistic
  std::int64_t streams = 0;           // battery runs of this generator
  double suspicious_rate() const;
  double decisive_rate() const;
};

// Dense per-(generator, test_id) counts, ordered by generator then test_id.
std::vector<HistogramRow> failure_histogram(const AggregateSummary& summary);

// Which runs count as failed batteries.
struct FailureRule {
  enum class Kind { any_suspicious, decisive_below } kind = Kind::any_suspicious;
  double eps = 1e-15;  // for decisive_below: fail iff some min(p,1-p) < eps
  bool failed(const RunRecord& run, const Thresholds& thresholds) const;
};

struct SuccessRow {
  GeneratorId generator = GeneratorId::xoshiro256pp;
  std::int64_t batteries = 0;
  std::int64_t failed_batteries = 0;
  std::int64_t streams = 0;
  double overall = 0.0;            // streams passing every half / streams
  std::optional<double> msb;       // high-half pass fraction (64-bit only)
  std::optional<double> lsb;       // low-half pass fraction (64-bit only)
  std::int64_t resistant = 0;      // streams passing every half
  std::int64_t partially_failing = 0;
  std::int64_t unusable = 0;       // streams failing every half
};

using SuccessTable = std::vector<SuccessRow>;

// Raw view: a battery fails when any statistic is suspicious or decisive.
SuccessTable success_table(const AggregateSummary& summary, const FailureRule& rule = {});

struct FilteredReport {
  double eps = 1e-15;
  SuccessTable raw;
  SuccessTable filtered;
};

// Only decisive failures at `eps` count. Requires eps < suspicious threshold
// (ArgumentError otherwise); eps = 0 makes every run pass.
FilteredReport extreme_filter_report(const AggregateSummary& summary, double eps = 1e-15);

// 1 - (1 - tail)^n.
double multiple_testing_probability(std::int64_t num_statistics, double per_test_tail);

// State bits minus the bits the named battery needs (smallcrush 32, crush 35,
// bigcrush 36). ArgumentError for other names.
int headroom(int state_bits, std::string_view battery);
int required_state_bits(std::string_view battery);

// rate in [0,1] -> "69.78%" with `decimals` decimals.
std::string format_percent(double rate, int decimals);
inline std::string table_percent(double rate) { return format_percent(rate, 2); }
inline std::string histogram_percent(double rate) { return format_percent(rate, 1); }
std::string format_count_rate(std::int64_t count, std::int64_t total, int decimals);

// BigCrush family names a cluster tag is read against in histograms.
std::string_view cluster_family(Cluster c);

std::string render_text(const AggregateSummary& summary);
std::string render_csv(const AggregateSummary& summary);
std::string render_json(const AggregateSummary& summary);

}  // namespace prnglab

#endif  // PRNGLAB_REPORT_HPP_
