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

#include "prnglab/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "prnglab/errors.hpp"

namespace prnglab {

namespace fs = std::filesystem;

namespace {

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ConfigError(fmt::format("{}: not an unsigned integer: '{}'", what, s));
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

SeedRange parse_seed_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const auto one = parse_u64(text, "seeds");
    if (one == UINT64_MAX) throw ConfigError("seeds: value too large");
    return {one, one + 1};
  }
  SeedRange r{parse_u64(text.substr(0, dots), "seeds"), parse_u64(text.substr(dots + 2), "seeds")};
  if (r.size() == 0) throw ConfigError(fmt::format("seeds: empty range '{}' (A..B means [A,B))", text));
  return r;
}

std::vector<HalfPolicy> parse_halves(std::string_view text) {
  std::vector<HalfPolicy> out;
  for (auto part : split(text, ',')) {
    const auto h = parse_half_policy(part);
    if (!h) throw ConfigError(fmt::format("halves: unknown policy '{}'", part));
    if (std::find(out.begin(), out.end(), *h) != out.end()) {
      throw ConfigError(fmt::format("halves: '{}' listed twice", part));
    }
    out.push_back(*h);
  }
  return out;
}

std::vector<HalfPolicy> default_halves(GeneratorId id) {
  if (is_64bit(id)) return {HalfPolicy::low, HalfPolicy::high};
  return {HalfPolicy::native32};
}

void CampaignConfig::validate() const {
  if (seeds.size() == 0) throw ConfigError("seeds: range is empty");
  for (auto h : effective_halves()) {
    if (!compatible(generator, h)) {
      throw ConfigError(fmt::format("halves: policy '{}' does not fit generator '{}'", to_string(h), to_string(generator)));
    }
  }
  if (out_dir.empty()) throw ConfigError("out: output directory not set");
  thresholds.validate();
  if (!profile_file) builtin_profile(profile);
}

std::vector<HalfPolicy> CampaignConfig::effective_halves() const {
  return halves.empty() ? default_halves(generator) : halves;
}

unsigned CampaignConfig::effective_workers() const {
  if (workers > 0) return workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

BatteryProfile CampaignConfig::resolve_profile() const {
  if (profile_file) return load_profile_file(*profile_file);
  return builtin_profile(profile);
}

std::vector<StreamJob> plan(const CampaignConfig& config) {
  config.validate();
  const std::string profile_name = config.profile_file ? config.resolve_profile().name : config.profile;
  std::vector<StreamJob> jobs;
  const auto halves = config.effective_halves();
  jobs.reserve(config.seeds.size() * halves.size());
  for (std::uint64_t s = config.seeds.begin; s < config.seeds.end; ++s) {
    for (auto h : halves) jobs.push_back(StreamJob{config.generator, SeedIndex{s}, h, profile_name});
  }
  return jobs;
}

std::string report_filename(const StreamJob& job) {
  std::string name = fmt::format("{}_{}_{:05d}", job.profile, to_string(job.generator), job.seed.value);
  if (is_64bit(job.generator)) name += fmt::format("_{}", to_string(job.half));
  return name + ".txt";
}

// ---------------------------------------------------------------------------
// Report files

ReportSummary StreamReport::summary() const {
  ReportSummary s;
  for (const auto& r : results) {
    for (const auto& st : r.stats) {
      ++s.total;
      if (st.verdict == Verdict::suspicious) ++s.suspicious;
      if (st.verdict == Verdict::decisive) ++s.decisive;
    }
  }
  s.pass = s.decisive == 0;
  return s;
}

std::string render_report(const StreamReport& report) {
  std::string out;
  out += fmt::format("# generator: {}\n", to_string(report.generator));
  out += fmt::format("# seed_index: {}\n", report.seed_index);
  out += fmt::format("# initial_state: {}\n", report.initial_state);
  out += fmt::format("# half: {}\n", to_string(report.half));
  out += fmt::format("# profile: {}\n", report.profile);
  out += fmt::format("# version: {}\n", report.version);
  out += fmt::format("# suspicious: {}\n", report.thresholds.suspicious);
  out += fmt::format("# decisive: {}\n", report.thresholds.decisive);
  for (const auto& r : report.results) {
    for (const auto& st : r.stats) {
      const std::string name = st.name.empty() ? r.name : r.name + "/" + st.name;
      out += fmt::format("{}\t{}\t{}\t{:.17e}\t{}\n", r.test_id, name, r.params, st.p, to_string(st.verdict));
    }
  }
  const auto s = report.summary();
  out += fmt::format("# summary: total={} suspicious={} decisive={} verdict={}\n", s.total, s.suspicious, s.decisive,
                     s.pass ? "PASS" : "FAIL");
  return out;
}

std::optional<ReportSummary> parse_summary_line(std::string_view line) {
  static const std::regex re(R"(# summary: total=(\d+) suspicious=(\d+) decisive=(\d+) verdict=(PASS|FAIL))");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(line.begin(), line.end(), m, re)) return std::nullopt;
  ReportSummary s;
  s.total = std::stoll(m[1].str());
  s.suspicious = std::stoll(m[2].str());
  s.decisive = std::stoll(m[3].str());
  s.pass = m[4].str() == "PASS";
  if (s.pass != (s.decisive == 0) || s.suspicious + s.decisive > s.total) return std::nullopt;
  return s;
}

namespace {

double parse_double_field(std::string_view s, std::string_view what) {
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(fmt::format("{}: not a number: '{}'", what, s));
  }
  return v;
}

}  // namespace

StreamReport parse_report(std::string_view text) {
  StreamReport rep;
  std::vector<std::string_view> lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("empty report");

  const auto summary = parse_summary_line(lines.back());
  if (!summary) throw ParseError("missing or malformed summary line");
  lines.pop_back();

  static constexpr std::string_view kKeys[] = {"generator", "profile", "version", "seed_index", "initial_state",
                                               "half",      "suspicious", "decisive"};
  std::map<std::string, std::string, std::less<>> header;
  std::size_t i = 0;
  for (; i < lines.size() && lines[i].substr(0, 2) == "# "; ++i) {
    const auto line = lines[i].substr(2);
    const auto colon = line.find(": ");
    if (colon == std::string_view::npos) throw ParseError(fmt::format("bad header line '{}'", lines[i]));
    header.emplace(std::string(line.substr(0, colon)), std::string(line.substr(colon + 2)));
  }
  for (auto k : kKeys) {
    if (header.find(k) == header.end()) throw ParseError(fmt::format("missing header '{}'", k));
  }
  const auto gen = parse_generator_id(header.find("generator")->second);
  if (!gen) throw ParseError("unknown generator in header");
  rep.generator = *gen;
  try {
    rep.seed_index = parse_u64(header.find("seed_index")->second, "seed_index");
  } catch (const ConfigError& e) {
    throw ParseError(e.what());
  }
  rep.initial_state = header.find("initial_state")->second;
  const auto half = parse_half_policy(header.find("half")->second);
  if (!half) throw ParseError("unknown half policy in header");
  rep.half = *half;
  rep.profile = header.find("profile")->second;
  rep.version = header.find("version")->second;
  rep.thresholds.suspicious = parse_double_field(header.find("suspicious")->second, "suspicious");
  rep.thresholds.decisive = parse_double_field(header.find("decisive")->second, "decisive");

  for (; i < lines.size(); ++i) {
    const auto f = split(lines[i], '\t');
    if (f.size() != 5) throw ParseError(fmt::format("result line {} does not have 5 fields", i + 1));
    int id = 0;
    {
      const auto [ptr, ec] = std::from_chars(f[0].data(), f[0].data() + f[0].size(), id);
      if (ec != std::errc{} || ptr != f[0].data() + f[0].size()) throw ParseError("bad test id");
    }
    const auto slash = f[1].find('/');
    const std::string base(f[1].substr(0, slash));
    const std::string stat = slash == std::string_view::npos ? "" : std::string(f[1].substr(slash + 1));
    const double p = parse_double_field(f[3], "p-value");
    if (!(p >= 0.0 && p <= 1.0)) throw ParseError("p-value outside [0,1]");
    const auto verdict = parse_verdict(f[4]);
    if (!verdict) throw ParseError(fmt::format("unknown verdict '{}'", f[4]));

    if (rep.results.empty() || rep.results.back().test_id != id) {
      TestResult r;
      r.test_id = id;
      r.name = base;
      r.params = std::string(f[2]);
      const std::string_view params = f[2];
      if (params.substr(0, 8) == "cluster=") {
        const auto end = params.find(' ');
        const auto c = parse_cluster(params.substr(8, end == std::string_view::npos ? end : end - 8));
        if (c) r.cluster = *c;
      }
      rep.results.push_back(std::move(r));
    }
    auto& r = rep.results.back();
    r.stats.push_back(Statistic{stat, p, *verdict});
    r.verdict = std::max(r.verdict, *verdict);
  }

  const auto actual = rep.summary();
  if (actual.total != summary->total || actual.suspicious != summary->suspicious ||
      actual.decisive != summary->decisive) {
    throw ParseError("summary line does not match the listed results");
  }
  return rep;
}

StreamReport run_job(const StreamJob& job, const BatteryProfile& profile, const Thresholds& thresholds) {
  AnyGenerator gen = derive(job.generator, job.seed);
  StreamReport rep;
  rep.generator = job.generator;
  rep.seed_index = job.seed.value;
  rep.initial_state = render_state(gen);
  rep.half = job.half;
  rep.profile = profile.name;
  rep.version = fmt::format("{} profile-v{}", kArtifactVersion, profile.version);
  rep.thresholds = thresholds;
  Word32Source src(std::move(gen), job.half);
  rep.results = run_battery(src, profile, thresholds);
  return rep;
}

// ---------------------------------------------------------------------------
// Execution

bool is_complete_report(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    parse_report(ss.str());
    return true;
  } catch (const ParseError&) {
    return false;
  }
}

namespace {

void write_atomically(const fs::path& target, const std::string& content) {
  const fs::path tmp = target.parent_path() / ("." + target.filename().string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(fmt::format("cannot open '{}' for writing", tmp.string()));
    out << content;
    out.flush();
    if (!out) throw std::runtime_error(fmt::format("write to '{}' failed", tmp.string()));
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error(fmt::format("cannot rename into '{}'", target.string()));
  }
}

}  // namespace

CampaignOutcome execute(const CampaignConfig& config) {
  config.validate();
  const BatteryProfile profile = config.resolve_profile();
  validate_profile(profile);
  const auto jobs = plan(config);

  std::error_code ec;
  fs::create_directories(config.out_dir, ec);
  if (ec || !fs::is_directory(config.out_dir)) {
    throw ConfigError(fmt::format("out: cannot create directory '{}'", config.out_dir.string()));
  }

  CampaignOutcome outcome;
  outcome.planned = jobs.size();
  std::vector<std::string> job_errors(jobs.size());
  std::vector<char> skipped(jobs.size(), 0);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const fs::path target = config.out_dir / report_filename(jobs[i]);
      if (is_complete_report(target)) {
        skipped[i] = 1;
        continue;
      }
      try {
        write_atomically(target, render_report(run_job(jobs[i], profile, config.thresholds)));
      } catch (const std::exception& e) {
        job_errors[i] = fmt::format("{}: {}", report_filename(jobs[i]), e.what());
      }
    }
  };

  const unsigned n = std::min<std::size_t>(config.effective_workers(), std::max<std::size_t>(jobs.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < n; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (skipped[i]) {
      ++outcome.skipped;
    } else if (job_errors[i].empty()) {
      ++outcome.written;
    } else {
      outcome.errors.push_back(job_errors[i]);
    }
  }
  if (!outcome.errors.empty()) {
    const fs::path log = config.out_dir / fmt::format("{}_{}_campaign.log", profile.name, to_string(config.generator));
    std::ofstream out(log, std::ios::app);
    for (const auto& e : outcome.errors) out << e << '\n';
    if (out) outcome.log_file = log;
  }
  return outcome;
}

bool emit_raw_stream(GeneratorId id, SeedIndex seed, HalfPolicy half, std::optional<std::uint64_t> count,
                     std::FILE* out) {
  Word32Source src(derive(id, seed), half);
  constexpr std::size_t kChunkWords = 16384;
  std::vector<unsigned char> buf(kChunkWords * 4);
  std::uint64_t left = count.value_or(UINT64_MAX);
  const bool bounded = count.has_value();
  while (!bounded || left > 0) {
    const std::size_t n = bounded ? static_cast<std::size_t>(std::min<std::uint64_t>(left, kChunkWords)) : kChunkWords;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t w = src.next_word32();
      buf[4 * i] = static_cast<unsigned char>(w);
      buf[4 * i + 1] = static_cast<unsigned char>(w >> 8);
      buf[4 * i + 2] = static_cast<unsigned char>(w >> 16);
      buf[4 * i + 3] = static_cast<unsigned char>(w >> 24);
    }
    if (std::fwrite(buf.data(), 4, n, out) != n) return false;
    if (bounded) left -= n;
  }
  return std::fflush(out) == 0;
}

}  // namespace prnglab
