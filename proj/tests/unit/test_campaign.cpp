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
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <gtest/gtest.h>

#include "prnglab/campaign.hpp"
#include "prnglab/errors.hpp"
#include "prnglab/generators.hpp"
#include "prnglab/seeding.hpp"

namespace prnglab {
namespace {

namespace fs = std::filesystem;

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    path_ = fs::temp_directory_path() / ("prnglab_test_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::directory_iterator(dir)) files[e.path().filename().string()] = slurp(e.path());
  return files;
}

CampaignConfig smoke_config(GeneratorId id, std::uint64_t begin, std::uint64_t end, const fs::path& out) {
  CampaignConfig c;
  c.generator = id;
  c.seeds = {begin, end};
  c.profile = "smoke";
  c.out_dir = out;
  c.workers = 1;
  return c;
}

TEST(SeedRanges, Parsing) {
  const auto r = parse_seed_range("0..1001");
  EXPECT_EQ(r.begin, 0u);
  EXPECT_EQ(r.end, 1001u);
  EXPECT_EQ(r.size(), 1001u);
  EXPECT_EQ(parse_seed_range("7").size(), 1u);
  EXPECT_EQ(parse_seed_range("7").begin, 7u);
  EXPECT_THROW(parse_seed_range("5..5"), ConfigError);
  EXPECT_THROW(parse_seed_range("9..2"), ConfigError);
  EXPECT_THROW(parse_seed_range("a..b"), ConfigError);
  EXPECT_THROW(parse_seed_range("-1..4"), ConfigError);
}

TEST(SeedRanges, Halves) {
  EXPECT_EQ(parse_halves("low,high"), (std::vector<HalfPolicy>{HalfPolicy::low, HalfPolicy::high}));
  EXPECT_THROW(parse_halves("low,low"), ConfigError);
  EXPECT_THROW(parse_halves("middle"), ConfigError);
  EXPECT_EQ(default_halves(GeneratorId::xoshiro256ss), (std::vector<HalfPolicy>{HalfPolicy::low, HalfPolicy::high}));
  EXPECT_EQ(default_halves(GeneratorId::mrg32k3a), std::vector<HalfPolicy>{HalfPolicy::native32});
}

TEST(Plan, DefaultStreamCounts) {
  CampaignConfig c64;
  c64.generator = GeneratorId::xoshiro256pp;
  c64.seeds = {0, 1001};
  c64.out_dir = "unused";
  EXPECT_EQ(plan(c64).size(), 2002u);

  CampaignConfig c32 = c64;
  c32.generator = GeneratorId::pcg32;
  c32.seeds = {0, 2002};
  EXPECT_EQ(plan(c32).size(), 2002u);

  EXPECT_EQ(default_seed_count(GeneratorId::xoshiro256pp) * default_halves(GeneratorId::xoshiro256pp).size(),
            default_seed_count(GeneratorId::pcg32) * default_halves(GeneratorId::pcg32).size());
}

TEST(Plan, SeedMajorOrder) {
  CampaignConfig c;
  c.generator = GeneratorId::xoshiro1024ss;
  c.seeds = {3, 6};
  c.out_dir = "unused";
  const auto jobs = plan(c);
  ASSERT_EQ(jobs.size(), 6u);
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    EXPECT_EQ(jobs[i].seed.value, 3 + i / 2);
    EXPECT_EQ(jobs[i].half, i % 2 ? HalfPolicy::high : HalfPolicy::low);
    EXPECT_EQ(jobs[i].profile, "desk");
  }
}

TEST(Plan, InvalidConfigs) {
  CampaignConfig c;
  c.generator = GeneratorId::pcg32;
  c.out_dir = "unused";
  EXPECT_THROW(plan(c), ConfigError);  // empty range
  c.seeds = {0, 10};
  c.halves = {HalfPolicy::low};
  EXPECT_THROW(plan(c), ConfigError);  // 64-bit half on a 32-bit generator
  c.halves = {};
  c.out_dir.clear();
  EXPECT_THROW(plan(c), ConfigError);
  c.out_dir = "unused";
  c.profile = "enormous";
  EXPECT_THROW(c.resolve_profile(), ConfigError);
  c.profile = "desk";
  c.thresholds = {1e-15, 1e-3};
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(Filenames, Examples) {
  EXPECT_EQ(report_filename({GeneratorId::xoshiro256pp, SeedIndex{17}, HalfPolicy::high, "desk"}),
            "desk_xoshiro256pp_00017_high.txt");
  EXPECT_EQ(report_filename({GeneratorId::pcg32, SeedIndex{3}, HalfPolicy::native32, "desk"}), "desk_pcg32_00003.txt");
}

TEST(Filenames, SortInJobOrder) {
  for (auto id : {GeneratorId::xoshiro256pp, GeneratorId::philox4x32}) {
    CampaignConfig c;
    c.generator = id;
    c.seeds = {0, 1001};
    c.out_dir = "unused";
    std::vector<std::string> names;
    for (const auto& j : plan(c)) names.push_back(report_filename(j));
    // "high" < "low", so compare within each seed by the seed prefix only.
    std::vector<std::string> prefixes;
    for (const auto& n : names) prefixes.push_back(n.substr(0, n.find('_', n.find('_') + 1) + 6));
    EXPECT_TRUE(std::is_sorted(prefixes.begin(), prefixes.end()));
  }
}

TEST(Reports, RenderParseRoundTrip) {
  const StreamJob job{GeneratorId::xoshiro256pp, SeedIndex{4}, HalfPolicy::low, "smoke"};
  const auto rep = run_job(job, builtin_profile("smoke"), Thresholds{});
  const auto text = render_report(rep);
  const auto back = parse_report(text);
  EXPECT_EQ(render_report(back), text);
  EXPECT_EQ(back.seed_index, 4u);
  EXPECT_EQ(back.initial_state, render_state(derive(GeneratorId::xoshiro256pp, SeedIndex{4})));
  EXPECT_EQ(same_state(parse_state(back.initial_state), derive(GeneratorId::xoshiro256pp, SeedIndex{4})), true);
  EXPECT_EQ(back.half, HalfPolicy::low);
  EXPECT_EQ(back.results.size(), rep.results.size());
  for (std::size_t i = 0; i < rep.results.size(); ++i) {
    for (std::size_t s = 0; s < rep.results[i].stats.size(); ++s) {
      EXPECT_EQ(back.results[i].stats[s].p, rep.results[i].stats[s].p);  // full precision
    }
  }
  EXPECT_EQ(text.rfind("# generator: xoshiro256pp\n", 0), 0u);
  EXPECT_NE(text.find("# summary: total="), std::string::npos);
}

TEST(Reports, SummaryTalliesResults) {
  StreamReport r;
  r.generator = GeneratorId::pcg32;
  r.initial_state = render_state(derive(GeneratorId::pcg32, SeedIndex{0}));
  r.profile = "synthetic";
  r.version = "0.1.0 profile-v1";
  auto add = [&](int id, std::vector<double> ps) {
    TestResult t;
    t.test_id = id;
    t.name = "gap";
    t.params = "cluster=classical";
    for (std::size_t i = 0; i < ps.size(); ++i) t.stats.push_back({ps.size() > 1 ? std::string(1, 'A' + i) : "", ps[i]});
    t.reclassify(r.thresholds);
    r.results.push_back(t);
  };
  add(1, {0.5});
  add(2, {0.0005, 0.3});
  add(3, {1e-20});
  const auto s = r.summary();
  EXPECT_EQ(s.total, 4);
  EXPECT_EQ(s.suspicious, 1);
  EXPECT_EQ(s.decisive, 1);
  EXPECT_FALSE(s.pass);
  const auto text = render_report(r);
  EXPECT_NE(text.find("# summary: total=4 suspicious=1 decisive=1 verdict=FAIL"), std::string::npos);
  const auto line = text.substr(text.rfind("# summary"));
  const auto parsed = parse_summary_line(line.substr(0, line.size() - 1));
  ASSERT_TRUE(parsed);
  EXPECT_EQ(parsed->total, 4);
}

TEST(Reports, RejectsMalformedFiles) {
  const StreamJob job{GeneratorId::pcg32, SeedIndex{1}, HalfPolicy::native32, "smoke"};
  const auto text = render_report(run_job(job, builtin_profile("smoke"), Thresholds{}));
  const auto cut = text.rfind("# summary");
  EXPECT_THROW(parse_report(text.substr(0, cut)), ParseError);
  std::string wrong = text;
  wrong.replace(wrong.find("total=") + 6, 2, "99");
  EXPECT_THROW(parse_report(wrong), ParseError);
  EXPECT_THROW(parse_report(""), ParseError);
  std::string no_header = text.substr(text.find('\n') + 1);
  EXPECT_THROW(parse_report(no_header), ParseError);
  EXPECT_FALSE(parse_summary_line("# summary: total=3 suspicious=1 decisive=0 verdict=FAIL"));
  EXPECT_FALSE(parse_summary_line("# summary: total=x"));
}

TEST(Execute, WorkerCountDoesNotChangeFiles) {
  TempDir one("w1"), many("w3");
  auto c1 = smoke_config(GeneratorId::xoshiro256pp, 0, 3, one.path());
  auto c3 = smoke_config(GeneratorId::xoshiro256pp, 0, 3, many.path());
  c3.workers = 3;
  const auto o1 = execute(c1);
  const auto o3 = execute(c3);
  EXPECT_EQ(o1.written, 6u);
  EXPECT_EQ(o3.written, 6u);
  EXPECT_TRUE(o1.errors.empty());
  EXPECT_FALSE(o1.log_file);
  const auto s1 = snapshot(one.path()), s3 = snapshot(many.path());
  EXPECT_EQ(s1, s3);
  // Completeness: the file set equals the plan.
  std::vector<std::string> expected;
  for (const auto& j : plan(c1)) expected.push_back(report_filename(j));
  std::sort(expected.begin(), expected.end());
  std::vector<std::string> got;
  for (const auto& [name, body] : s1) got.push_back(name);
  EXPECT_EQ(got, expected);
}

TEST(Execute, ResumeRegeneratesOnlyMissingOrIncompleteFiles) {
  TempDir dir("resume");
  const auto cfg = smoke_config(GeneratorId::pcg32, 10, 14, dir.path());
  execute(cfg);
  const auto before = snapshot(dir.path());
  ASSERT_EQ(before.size(), 4u);

  fs::remove(dir.path() / "smoke_pcg32_00011.txt");
  {
    const auto path = dir.path() / "smoke_pcg32_00012.txt";
    const auto body = before.at("smoke_pcg32_00012.txt");
    std::ofstream(path, std::ios::binary | std::ios::trunc) << body.substr(0, body.rfind("# summary"));
  }
  EXPECT_FALSE(is_complete_report(dir.path() / "smoke_pcg32_00012.txt"));
  const auto out = execute(cfg);
  EXPECT_EQ(out.written, 2u);
  EXPECT_EQ(out.skipped, 2u);
  EXPECT_EQ(snapshot(dir.path()), before);
}

TEST(Execute, JobFailuresAreLoggedAndIsolated) {
  TempDir dir("errors");
  const auto cfg = smoke_config(GeneratorId::philox4x32, 0, 3, dir.path());
  // A directory squatting on one report name makes that job's rename fail.
  fs::create_directories(dir.path() / "smoke_philox4x32_00001.txt" / "blocker");
  const auto out = execute(cfg);
  EXPECT_EQ(out.written, 2u);
  ASSERT_EQ(out.errors.size(), 1u);
  ASSERT_TRUE(out.log_file);
  EXPECT_EQ(out.log_file->filename(), "smoke_philox4x32_campaign.log");
  EXPECT_NE(slurp(*out.log_file).find("00001"), std::string::npos);
  EXPECT_TRUE(is_complete_report(dir.path() / "smoke_philox4x32_00000.txt"));
  EXPECT_TRUE(is_complete_report(dir.path() / "smoke_philox4x32_00002.txt"));
  for (const auto& e : fs::directory_iterator(dir.path())) {
    EXPECT_NE(e.path().filename().string().front(), '.') << "temporary left behind";
  }
}

TEST(Execute, ConfigErrorsWriteNothing) {
  TempDir dir("config");
  auto cfg = smoke_config(GeneratorId::pcg32, 0, 2, dir.path() / "out");
  cfg.profile_file = (dir.path() / "missing.profile").string();
  EXPECT_THROW(execute(cfg), ConfigError);
  EXPECT_FALSE(fs::exists(dir.path() / "out"));
}

std::string emitted(GeneratorId id, std::uint64_t seed, HalfPolicy half, std::optional<std::uint64_t> count) {
  std::FILE* f = std::tmpfile();
  EXPECT_TRUE(emit_raw_stream(id, SeedIndex{seed}, half, count, f));
  std::fflush(f);
  std::rewind(f);
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, f)) > 0;) out.append(buf, n);
  std::fclose(f);
  return out;
}

TEST(RawStream, CountsAndBytes) {
  EXPECT_EQ(emitted(GeneratorId::pcg32, 0, HalfPolicy::native32, 0), "");
  // Warm-up leaves state = 1; the next output is rotr(((1 >> 18) ^ 1) >> 27, 0) = 0.
  EXPECT_EQ(emitted(GeneratorId::pcg32, 0, HalfPolicy::native32, 1), std::string(4, '\0'));

  const auto bytes = emitted(GeneratorId::xoshiro256pp, 5, HalfPolicy::high, 1000);
  ASSERT_EQ(bytes.size(), 4000u);
  Word32Source src(derive(GeneratorId::xoshiro256pp, SeedIndex{5}), HalfPolicy::high);
  for (std::size_t i = 0; i < 1000; ++i) {
    const std::uint32_t w = src.next_word32();
    for (int b = 0; b < 4; ++b) {
      ASSERT_EQ(static_cast<unsigned char>(bytes[4 * i + static_cast<std::size_t>(b)]), (w >> (8 * b)) & 0xFF);
    }
  }
  EXPECT_EQ(emitted(GeneratorId::xoshiro256pp, 5, HalfPolicy::high, 1000), bytes);
  EXPECT_EQ(emitted(GeneratorId::mt19937, 2, HalfPolicy::native32, 100000).size(), 400000u);
}

TEST(RawStream, RejectsIncompatibleHalf) {
  std::FILE* f = std::tmpfile();
  EXPECT_THROW(emit_raw_stream(GeneratorId::pcg32, SeedIndex{0}, HalfPolicy::low, 1, f), ConfigError);
  std::fclose(f);
}

}  // namespace
}  // namespace prnglab
