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

// Multi-stream campaigns: planning, per-job report files, resumable parallel
// execution and the raw word pipe.

#ifndef PRNGLAB_CAMPAIGN_HPP_
#define PRNGLAB_CAMPAIGN_HPP_

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prnglab/battery.hpp"
#include "prnglab/bitstream.hpp"
#include "prnglab/generators.hpp"
#include "prnglab/seeding.hpp"

namespace prnglab {

inline constexpr std::string_view kArtifactVersion = "0.1.0";

// Half-open seed range [begin, end).
struct SeedRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
  std::uint64_t size() const noexcept { return end > begin ? end - begin : 0; }
};
// "A..B" means [A, B).
SeedRange parse_seed_range(std::string_view text);
// Comma-separated half policies, e.g. "low,high".
std::vector<HalfPolicy> parse_halves(std::string_view text);
// {low, high} for 64-bit generators, {native32} otherwise.
std::vector<HalfPolicy> default_halves(GeneratorId id);

struct CampaignConfig {
  GeneratorId generator = GeneratorId::xoshiro256pp;
  SeedRange seeds;
  std::vector<HalfPolicy> halves;  // empty: default_halves(generator)
  std::string profile = "desk";    // built-in name
  std::optional<std::string> profile_file;
  std::filesystem::path out_dir;
  unsigned workers = 0;  // 0: available parallelism
  Thresholds thresholds;

  // Throws ConfigError naming the offending field.
  void validate() const;
  std::vector<HalfPolicy> effective_halves() const;
  unsigned effective_workers() const;
  BatteryProfile resolve_profile() const;
};

struct StreamJob {
  GeneratorId generator = GeneratorId::xoshiro256pp;
  SeedIndex seed;
  HalfPolicy half = HalfPolicy::native32;
  std::string profile;
};

// Seed-major cross product of the seed range and the half policies.
std::vector<StreamJob> plan(const CampaignConfig& config);

// "<profile>_<generator>_<seed %05d>[_<low|high|alternating>].txt"; the half
// suffix only for 64-bit generators.
std::string report_filename(const StreamJob& job);

struct ReportSummary {
  std::int64_t total = 0;
  std::int64_t suspicious = 0;
  std::int64_t decisive = 0;
  bool pass = true;  // no decisive statistic
};

struct StreamReport {
  GeneratorId generator = GeneratorId::xoshiro256pp;
  std::uint64_t seed_index = 0;
  std::string initial_state;
  HalfPolicy half = HalfPolicy::native32;
  std::string profile;
  std::string version;
  Thresholds thresholds;
  std::vector<TestResult> results;

  ReportSummary summary() const;
};

std::string render_report(const StreamReport& report);
// Throws ParseError on malformed input, including a missing or inconsistent
// summary line.
StreamReport parse_report(std::string_view text);
// The summary line alone; nullopt when absent or malformed.
std::optional<ReportSummary> parse_summary_line(std::string_view line);

StreamReport run_job(const StreamJob& job, const BatteryProfile& profile, const Thresholds& thresholds);

struct CampaignOutcome {
  std::size_t planned = 0;
  std::size_t written = 0;
  std::size_t skipped = 0;  // complete file already present
  std::vector<std::string> errors;  // one line per failed job, job order
  std::optional<std::filesystem::path> log_file;
};

// A report file is complete when it parses, summary line included.
bool is_complete_report(const std::filesystem::path& path);

// Runs every planned job without a complete file. Configuration problems
// throw before any file is written; per-job I/O failures are collected and
// logged to "<profile>_<generator>_campaign.log" in the output directory.
CampaignOutcome execute(const CampaignConfig& config);

// Writes `count` words (unbounded when nullopt) as little-endian 4-byte
// values. Returns false when the sink stops accepting data (e.g. a closed
// pipe), true after writing everything requested.
bool emit_raw_stream(GeneratorId id, SeedIndex seed, HalfPolicy half, std::optional<std::uint64_t> count,
                     std::FILE* out);

}  // namespace prnglab

#endif  // PRNGLAB_CAMPAIGN_HPP_
