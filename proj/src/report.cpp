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

#include "prnglab/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "prnglab/errors.hpp"

namespace prnglab {

namespace fs = std::filesystem;

Verdict RunRecord::worst() const {
  Verdict v = Verdict::pass;
  for (const auto& s : stats) v = std::max(v, s.verdict);
  return v;
}

namespace {

RunRecord to_record(const StreamReport& rep, const Thresholds& thresholds, std::string file) {
  RunRecord run;
  run.file = std::move(file);
  run.generator = rep.generator;
  run.seed_index = rep.seed_index;
  run.half = rep.half;
  run.profile = rep.profile;
  run.version = rep.version;
  for (const auto& r : rep.results) {
    for (const auto& st : r.stats) {
      run.stats.push_back(StatRecord{r.test_id, r.name, st.name, r.cluster, st.p, classify(st.p, thresholds)});
    }
  }
  return run;
}

auto run_key(const RunRecord& r) { return std::make_tuple(r.generator, r.seed_index, r.half); }

AggregateSummary finish(std::vector<RunRecord> runs, std::vector<FileError> errors, const Thresholds& thresholds,
                        bool allow_mixed) {
  AggregateSummary s;
  s.thresholds = thresholds;
  std::stable_sort(runs.begin(), runs.end(), [](const RunRecord& a, const RunRecord& b) {
    return std::make_tuple(run_key(a), a.profile) < std::make_tuple(run_key(b), b.profile);
  });
  std::set<std::string> profiles;
  for (const auto& r : runs) profiles.insert(r.profile);
  s.profiles.assign(profiles.begin(), profiles.end());
  if (s.profiles.size() > 1 && !allow_mixed) {
    throw ConfigError(fmt::format("report set mixes profiles ({}); pass --allow-mixed to aggregate anyway",
                                  fmt::join(s.profiles, ", ")));
  }
  for (auto& r : runs) {
    if (!s.runs.empty() && run_key(s.runs.back()) == run_key(r) && s.runs.back().profile == r.profile) {
      errors.push_back(FileError{r.file, fmt::format("duplicates the run in '{}'", s.runs.back().file)});
      continue;
    }
    s.runs.push_back(std::move(r));
  }
  std::sort(errors.begin(), errors.end(), [](const FileError& a, const FileError& b) { return a.file < b.file; });
  s.errors = std::move(errors);
  return s;
}

}  // namespace

AggregateSummary aggregate(const fs::path& dir, const Thresholds& thresholds, bool allow_mixed) {
  thresholds.validate();
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw ConfigError(fmt::format("in: '{}' is not a directory", dir.string()));
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (!entry.is_regular_file() || name.empty() || name.front() == '.') continue;
    if (entry.path().extension() != ".txt") continue;
    files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<RunRecord> runs;
  std::vector<FileError> errors;
  for (const auto& path : files) {
    const std::string name = path.filename().string();
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (!in) {
      errors.push_back(FileError{name, "cannot read file"});
      continue;
    }
    try {
      runs.push_back(to_record(parse_report(ss.str()), thresholds, name));
    } catch (const ParseError& e) {
      errors.push_back(FileError{name, e.what()});
    }
  }
  return finish(std::move(runs), std::move(errors), thresholds, allow_mixed);
}

AggregateSummary aggregate_reports(const std::vector<StreamReport>& reports, const Thresholds& thresholds,
                                   bool allow_mixed) {
  thresholds.validate();
  std::vector<RunRecord> runs;
  for (std::size_t i = 0; i < reports.size(); ++i) runs.push_back(to_record(reports[i], thresholds, fmt::format("#{}", i)));
  return finish(std::move(runs), {}, thresholds, allow_mixed);
}

// ---------------------------------------------------------------------------
// Histogram

double HistogramRow::suspicious_rate() const {
  return streams > 0 ? static_cast<double>(suspicious_count) / static_cast<double>(streams) : 0.0;
}
double HistogramRow::decisive_rate() const {
  return streams > 0 ? static_cast<double>(decisive_count) / static_cast<double>(streams) : 0.0;
}

std::vector<HistogramRow> failure_histogram(const AggregateSummary& summary) {
  std::map<std::pair<GeneratorId, int>, HistogramRow> rows;
  std::map<GeneratorId, std::int64_t> streams;
  for (const auto& run : summary.runs) {
    ++streams[run.generator];
    std::map<int, std::pair<bool, bool>> flags;
    for (const auto& st : run.stats) {
      auto [it, fresh] = rows.try_emplace({run.generator, st.test_id});
      if (fresh) {
        it->second.generator = run.generator;
        it->second.test_id = st.test_id;
        it->second.test_name = st.test_name;
        it->second.cluster = st.cluster;
      }
      auto& f = flags[st.test_id];
      f.first = f.first || st.verdict != Verdict::pass;
      f.second = f.second || st.verdict == Verdict::decisive;
    }
    for (const auto& [id, f] : flags) {
      auto& row = rows[{run.generator, id}];
      row.suspicious_count += f.first;
      row.decisive_count += f.second;
    }
  }
  std::vector<HistogramRow> out;
  for (auto& [key, row] : rows) {
    row.streams = streams[key.first];
    out.push_back(row);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Success tables

bool FailureRule::failed(const RunRecord& run, const Thresholds& thresholds) const {
  for (const auto& st : run.stats) {
    if (kind == Kind::any_suspicious) {
      if (classify(st.p, thresholds) != Verdict::pass) return true;
    } else if (two_sided(st.p) < eps) {
      return true;
    }
  }
  return false;
}

SuccessTable success_table(const AggregateSummary& summary, const FailureRule& rule) {
  struct Stream {
    int halves = 0;
    int passed = 0;
  };
  struct Acc {
    std::int64_t batteries = 0, failed = 0;
    std::int64_t high = 0, high_pass = 0, low = 0, low_pass = 0;
    std::map<std::uint64_t, Stream> streams;
  };
  std::map<GeneratorId, Acc> acc;
  for (const auto& run : summary.runs) {
    auto& a = acc[run.generator];
    const bool failed = rule.failed(run, summary.thresholds);
    ++a.batteries;
    a.failed += failed;
    if (run.half == HalfPolicy::high) {
      ++a.high;
      a.high_pass += !failed;
    } else if (run.half == HalfPolicy::low) {
      ++a.low;
      a.low_pass += !failed;
    }
    auto& s = a.streams[run.seed_index];
    ++s.halves;
    s.passed += !failed;
  }
  SuccessTable table;
  for (const auto& [gen, a] : acc) {
    SuccessRow row;
    row.generator = gen;
    row.batteries = a.batteries;
    row.failed_batteries = a.failed;
    row.streams = static_cast<std::int64_t>(a.streams.size());
    for (const auto& [seed, s] : a.streams) {
      if (s.passed == s.halves) {
        ++row.resistant;
      } else if (s.passed == 0) {
        ++row.unusable;
      } else {
        ++row.partially_failing;
      }
    }
    row.overall = row.streams > 0 ? static_cast<double>(row.resistant) / static_cast<double>(row.streams) : 0.0;
    if (is_64bit(gen)) {
      if (a.high > 0) row.msb = static_cast<double>(a.high_pass) / static_cast<double>(a.high);
      if (a.low > 0) row.lsb = static_cast<double>(a.low_pass) / static_cast<double>(a.low);
    }
    table.push_back(row);
  }
  return table;
}

FilteredReport extreme_filter_report(const AggregateSummary& summary, double eps) {
  if (!(eps >= 0.0 && eps < summary.thresholds.suspicious)) {
    throw ArgumentError(fmt::format("eps {:g} must be in [0, suspicious threshold {:g})", eps, summary.thresholds.suspicious));
  }
  FilteredReport r;
  r.eps = eps;
  r.raw = success_table(summary);
  r.filtered = success_table(summary, FailureRule{FailureRule::Kind::decisive_below, eps});
  return r;
}

// ---------------------------------------------------------------------------
// Arithmetic

double multiple_testing_probability(std::int64_t num_statistics, double per_test_tail) {
  if (num_statistics < 0) throw ArgumentError("number of statistics must be non-negative");
  if (!(per_test_tail >= 0.0 && per_test_tail <= 1.0)) throw ArgumentError("per-test tail must be in [0,1]");
  return -std::expm1(static_cast<double>(num_statistics) * std::log1p(-per_test_tail));
}

int required_state_bits(std::string_view battery) {
  if (battery == "smallcrush") return 32;
  if (battery == "crush") return 35;
  if (battery == "bigcrush") return 36;
  throw ArgumentError(fmt::format("unknown battery '{}' (expected smallcrush, crush or bigcrush)", battery));
}

int headroom(int state_bits, std::string_view battery) { return state_bits - required_state_bits(battery); }

std::string format_percent(double rate, int decimals) { return fmt::format("{:.{}f}%", rate * 100.0, decimals); }

std::string format_count_rate(std::int64_t count, std::int64_t total, int decimals) {
  const double rate = total > 0 ? static_cast<double>(count) / static_cast<double>(total) : 0.0;
  return fmt::format("{} ({})", count, format_percent(rate, decimals));
}

std::string_view cluster_family(Cluster c) {
  switch (c) {
    case Cluster::collision:
      return "CollisionOver, BirthdaySpacings";
    case Cluster::close_pairs:
      return "ClosePairs";
    case Cluster::random_walk:
      return "RandomWalk1";
    case Cluster::matrix_rank:
      return "MatrixRank";
    case Cluster::linear_complexity:
      return "LinearComp";
    case Cluster::classical:
      return "SerialOver, Gap";
  }
  return "";
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string opt_percent(const std::optional<double>& v) { return v ? table_percent(*v) : "-"; }

void render_table(std::string& out, const SuccessTable& table) {
  out += fmt::format("{:<14} {:>16} {:>9} {:>9} {:>9} {:>10} {:>9}\n", "generator", "failed batteries", "overall",
                     "MSB", "LSB", "resistant", "unusable");
  for (const auto& r : table) {
    out += fmt::format("{:<14} {:>16} {:>9} {:>9} {:>9} {:>10} {:>9}\n", to_string(r.generator),
                       fmt::format("{}/{}", r.failed_batteries, r.batteries), table_percent(r.overall),
                       opt_percent(r.msb), opt_percent(r.lsb), r.resistant, r.unusable);
  }
}

}  // namespace

std::string render_text(const AggregateSummary& summary) {
  std::string out;
  out += fmt::format("thresholds: suspicious={} decisive={}\n", summary.thresholds.suspicious,
                     summary.thresholds.decisive);
  out += fmt::format("profiles: {}\n", summary.profiles.empty() ? "-" : fmt::format("{}", fmt::join(summary.profiles, ", ")));
  out += fmt::format("battery runs: {}\n", summary.runs.size());
  if (summary.runs.empty() && summary.errors.empty()) return out;

  out += "\nsuccess (a battery fails on any statistic outside [alpha, 1-alpha])\n";
  render_table(out, success_table(summary));
  const auto filtered = extreme_filter_report(summary, summary.thresholds.decisive);
  out += fmt::format("\nsuccess, extreme p-values only (fail iff min(p,1-p) < {})\n", filtered.eps);
  render_table(out, filtered.filtered);

  out += "\nfailures per test (collision tests are dense counts, not overlapping tuples)\n";
  out += fmt::format("{:<14} {:>4} {:<22} {:<18} {:>14} {:>14}  {}\n", "generator", "id", "test", "cluster", "suspicious",
                     "decisive", "families");
  for (const auto& h : failure_histogram(summary)) {
    out += fmt::format("{:<14} {:>4} {:<22} {:<18} {:>14} {:>14}  {}\n", to_string(h.generator), h.test_id, h.test_name,
                       to_string(h.cluster), format_count_rate(h.suspicious_count, h.streams, 1),
                       format_count_rate(h.decisive_count, h.streams, 1), cluster_family(h.cluster));
  }
  if (!summary.errors.empty()) {
    out += "\nerrors\n";
    for (const auto& e : summary.errors) out += fmt::format("{}: {}\n", e.file, e.message);
  }
  return out;
}

std::string render_csv(const AggregateSummary& summary) {
  std::string out =
      "generator,test_id,test_name,cluster,suspicious_count,decisive_count,streams,suspicious_rate,decisive_rate\n";
  for (const auto& h : failure_histogram(summary)) {
    out += fmt::format("{},{},{},{},{},{},{},{:.6f},{:.6f}\n", to_string(h.generator), h.test_id, h.test_name,
                       to_string(h.cluster), h.suspicious_count, h.decisive_count, h.streams, h.suspicious_rate(),
                       h.decisive_rate());
  }
  return out;
}

std::string render_json(const AggregateSummary& summary) {
  using json = nlohmann::ordered_json;
  json j;
  j["thresholds"] = {{"suspicious", summary.thresholds.suspicious}, {"decisive", summary.thresholds.decisive}};
  j["profiles"] = summary.profiles;

  json tests = json::array();
  for (const auto& h : failure_histogram(summary)) {
    tests.push_back({{"generator", to_string(h.generator)},
                     {"test_id", h.test_id},
                     {"test_name", h.test_name},
                     {"cluster", to_string(h.cluster)},
                     {"suspicious_count", h.suspicious_count},
                     {"decisive_count", h.decisive_count},
                     {"streams", h.streams}});
  }
  j["tests"] = tests;

  json runs = json::array();
  for (const auto& r : summary.runs) {
    runs.push_back({{"generator", to_string(r.generator)},
                    {"seed_index", r.seed_index},
                    {"half", to_string(r.half)},
                    {"profile", r.profile},
                    {"verdict", to_string(r.worst())},
                    {"file", r.file}});
  }
  j["runs"] = runs;

  auto table_json = [](const SuccessTable& t) {
    json a = json::array();
    for (const auto& r : t) {
      json row = {{"generator", to_string(r.generator)},
                  {"batteries", r.batteries},
                  {"failed_batteries", r.failed_batteries},
                  {"streams", r.streams},
                  {"overall", r.overall},
                  {"resistant", r.resistant},
                  {"partially_failing", r.partially_failing},
                  {"unusable", r.unusable}};
      row["msb"] = r.msb ? json(*r.msb) : json(nullptr);
      row["lsb"] = r.lsb ? json(*r.lsb) : json(nullptr);
      a.push_back(row);
    }
    return a;
  };
  j["success"] = table_json(success_table(summary));
  j["success_extreme_only"] = table_json(extreme_filter_report(summary, summary.thresholds.decisive).filtered);

  json errors = json::array();
  for (const auto& e : summary.errors) errors.push_back({{"file", e.file}, {"message", e.message}});
  j["errors"] = errors;
  return j.dump(2) + "\n";
}

}  // namespace prnglab
