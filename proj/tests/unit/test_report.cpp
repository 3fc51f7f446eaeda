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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <unistd.h>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "prnglab/campaign.hpp"
#include "prnglab/errors.hpp"
#include "prnglab/report.hpp"
#include "prnglab/seeding.hpp"

namespace prnglab {
namespace {

namespace fs = std::filesystem;

// A report with tests 1..num_tests, every p-value 0.5 except `overrides`.
StreamReport synthetic(GeneratorId gen, std::uint64_t seed, HalfPolicy half, const std::map<int, double>& overrides = {},
                       int num_tests = 17, const std::string& profile = "desk") {
  StreamReport r;
  r.generator = gen;
  r.seed_index = seed;
  r.initial_state = render_state(derive(gen, SeedIndex{seed}));
  r.half = half;
  r.profile = profile;
  r.version = "0.1.0 profile-v1";
  for (int id = 1; id <= num_tests; ++id) {
    TestResult t;
    t.test_id = id;
    t.name = id == 10 ? "random_walk" : "gap";
    t.cluster = id == 10 ? Cluster::random_walk : Cluster::classical;
    t.params = "cluster=" + std::string(to_string(t.cluster));
    const auto it = overrides.find(id);
    const double p = it == overrides.end() ? 0.5 : it->second;
    if (id == 10) {
      t.stats = {{"R", p}, {"M", 0.5}};
    } else {
      t.stats = {{"", p}};
    }
    t.reclassify(r.thresholds);
    r.results.push_back(t);
  }
  return r;
}

const HistogramRow& row_for(const std::vector<HistogramRow>& rows, GeneratorId g, int id) {
  for (const auto& r : rows)
    if (r.generator == g && r.test_id == id) return r;
  throw std::runtime_error("row not found");
}

TEST(Histogram, PhiloxTestElevenExample) {
  std::vector<StreamReport> reps;
  for (std::uint64_t s = 0; s < 2002; ++s) {
    std::map<int, double> o;
    if (s % 46 == 0 && s / 46 < 43) o[11] = 1e-20;
    reps.push_back(synthetic(GeneratorId::philox4x32, s, HalfPolicy::native32, o));
  }
  const auto hist = failure_histogram(aggregate_reports(reps));
  ASSERT_EQ(hist.size(), 17u);
  const auto& r11 = row_for(hist, GeneratorId::philox4x32, 11);
  EXPECT_EQ(r11.decisive_count, 43);
  EXPECT_EQ(r11.suspicious_count, 43);
  EXPECT_EQ(r11.streams, 2002);
  EXPECT_EQ(histogram_percent(r11.decisive_rate()), "2.1%");
  EXPECT_EQ(format_count_rate(43, 2002, 1), "43 (2.1%)");
  // Dense: tests nobody failed are still listed.
  EXPECT_EQ(row_for(hist, GeneratorId::philox4x32, 3).decisive_count, 0);
  EXPECT_EQ(row_for(hist, GeneratorId::philox4x32, 3).streams, 2002);
}

TEST(Histogram, CountsEachRunOncePerTest) {
  // Both statistics of test 10 suspicious: one run, one count.
  auto r = synthetic(GeneratorId::pcg32, 0, HalfPolicy::native32, {{10, 0.0002}});
  r.results[9].stats[1].p = 0.9999;
  r.results[9].reclassify(r.thresholds);
  const auto hist = failure_histogram(aggregate_reports({r}));
  EXPECT_EQ(row_for(hist, GeneratorId::pcg32, 10).suspicious_count, 1);
  EXPECT_EQ(row_for(hist, GeneratorId::pcg32, 10).decisive_count, 0);
}

TEST(SuccessTable, PhiloxOverallExample) {
  std::vector<StreamReport> reps;
  for (std::uint64_t s = 0; s < 2002; ++s) {
    std::map<int, double> o;
    if (s >= 1397) o[static_cast<int>(1 + s % 17)] = 1e-4;
    reps.push_back(synthetic(GeneratorId::philox4x32, s, HalfPolicy::native32, o));
  }
  const auto table = success_table(aggregate_reports(reps));
  ASSERT_EQ(table.size(), 1u);
  const auto& row = table[0];
  EXPECT_EQ(row.failed_batteries, 605);
  EXPECT_EQ(table_percent(row.overall), "69.78%");
  // Single-half identity for 32-bit generators.
  EXPECT_DOUBLE_EQ(row.overall, 1.0 - static_cast<double>(row.failed_batteries) / row.batteries);
  EXPECT_FALSE(row.msb);
  EXPECT_FALSE(row.lsb);
  EXPECT_EQ(row.resistant + row.partially_failing + row.unusable, row.streams);
}

TEST(SuccessTable, ThreeStreamHalfExample) {
  // High passes on streams 1 and 2, low passes on streams 2 and 3.
  std::vector<StreamReport> reps;
  const std::map<int, double> fail = {{4, 1e-5}};
  reps.push_back(synthetic(GeneratorId::xoshiro256pp, 1, HalfPolicy::high));
  reps.push_back(synthetic(GeneratorId::xoshiro256pp, 1, HalfPolicy::low, fail));
  reps.push_back(synthetic(GeneratorId::xoshiro256pp, 2, HalfPolicy::high));
  reps.push_back(synthetic(GeneratorId::xoshiro256pp, 2, HalfPolicy::low));
  reps.push_back(synthetic(GeneratorId::xoshiro256pp, 3, HalfPolicy::high, fail));
  reps.push_back(synthetic(GeneratorId::xoshiro256pp, 3, HalfPolicy::low));
  const auto row = success_table(aggregate_reports(reps)).at(0);
  EXPECT_EQ(histogram_percent(*row.msb), "66.7%");
  EXPECT_EQ(histogram_percent(*row.lsb), "66.7%");
  EXPECT_EQ(histogram_percent(row.overall), "33.3%");
  EXPECT_EQ(row.unusable, 0);
  EXPECT_EQ(row.resistant, 1);
  EXPECT_EQ(row.partially_failing, 2);
  EXPECT_EQ(row.failed_batteries, 2);
  EXPECT_EQ(row.streams, 3);
  EXPECT_LE(row.resistant, 2);  // <= min(MSB passes, LSB passes)
}

TEST(SuccessTable, AllPassing) {
  std::vector<StreamReport> reps;
  for (std::uint64_t s = 0; s < 5; ++s) {
    reps.push_back(synthetic(GeneratorId::xoshiro256ss, s, HalfPolicy::low));
    reps.push_back(synthetic(GeneratorId::xoshiro256ss, s, HalfPolicy::high));
  }
  const auto row = success_table(aggregate_reports(reps)).at(0);
  EXPECT_EQ(row.overall, 1.0);
  EXPECT_EQ(*row.msb, 1.0);
  EXPECT_EQ(*row.lsb, 1.0);
  EXPECT_EQ(row.unusable, 0);
  EXPECT_EQ(row.resistant, 5);
  EXPECT_EQ(table_percent(row.overall), "100.00%");
}

TEST(Aggregate, ThresholdMonotonicity) {
  std::vector<StreamReport> reps;
  const double ps[] = {1e-2, 5e-3, 1e-3, 4e-4, 1e-6, 1e-10, 1e-16, 1e-30, 0.9999, 1.0};
  for (std::uint64_t s = 0; s < 10; ++s) {
    reps.push_back(synthetic(GeneratorId::pcg32, s, HalfPolicy::native32, {{static_cast<int>(s + 1), ps[s]}}));
  }
  auto decisive_total = [&](const Thresholds& t) {
    std::int64_t sum = 0;
    for (const auto& r : failure_histogram(aggregate_reports(reps, t))) sum += r.decisive_count;
    return sum;
  };
  const std::int64_t loose = decisive_total({0.05, 1e-3});
  const std::int64_t mid = decisive_total({1e-3, 1e-10});
  const std::int64_t strict = decisive_total({1e-3, 1e-15});
  EXPECT_GE(loose, mid);
  EXPECT_GE(mid, strict);
  EXPECT_EQ(strict, 3);  // 1e-16, 1e-30 and p = 1
  EXPECT_EQ(loose, 7);   // every pf below 1e-3, 0.9999 included
  EXPECT_THROW(aggregate_reports(reps, {1e-15, 1e-3}), ConfigError);
}

TEST(ExtremeFilter, Examples) {
  std::vector<StreamReport> reps;
  reps.push_back(synthetic(GeneratorId::pcg32, 0, HalfPolicy::native32, {{5, 3e-16}}));
  reps.push_back(synthetic(GeneratorId::pcg32, 1, HalfPolicy::native32, {{5, 0.0005}}));
  reps.push_back(synthetic(GeneratorId::pcg32, 2, HalfPolicy::native32));
  const auto summary = aggregate_reports(reps);
  const auto f = extreme_filter_report(summary);
  EXPECT_EQ(f.raw.at(0).failed_batteries, 2);
  EXPECT_EQ(f.filtered.at(0).failed_batteries, 1);
  const FailureRule rule{FailureRule::Kind::decisive_below, 1e-15};
  EXPECT_TRUE(rule.failed(summary.runs[0], summary.thresholds));
  EXPECT_FALSE(rule.failed(summary.runs[1], summary.thresholds));
  const auto none = extreme_filter_report(summary, 0.0);
  EXPECT_EQ(none.filtered.at(0).failed_batteries, 0);
  EXPECT_EQ(none.filtered.at(0).overall, 1.0);
  EXPECT_THROW(extreme_filter_report(summary, 1e-3), ArgumentError);
  EXPECT_THROW(extreme_filter_report(summary, -1.0), ArgumentError);
}

TEST(Arithmetic, MultipleTesting) {
  EXPECT_NEAR(multiple_testing_probability(1, 0.002), 0.002, 1e-15);
  EXPECT_NEAR(multiple_testing_probability(2, 0.5), 0.75, 1e-15);
  EXPECT_EQ(multiple_testing_probability(0, 0.3), 0.0);
  double survive = 1.0;
  for (int i = 0; i < 160; ++i) survive *= 0.998;
  EXPECT_NEAR(multiple_testing_probability(160, 0.002), 1.0 - survive, 1e-14);
  EXPECT_EQ(histogram_percent(multiple_testing_probability(160, 0.002)), "27.4%");
  EXPECT_THROW(multiple_testing_probability(-1, 0.1), ArgumentError);
  EXPECT_THROW(multiple_testing_probability(3, 1.5), ArgumentError);
}

TEST(Arithmetic, Headroom) {
  EXPECT_EQ(headroom(128, "bigcrush"), 92);
  EXPECT_EQ(headroom(36, "bigcrush"), 0);
  EXPECT_EQ(headroom(40, "bigcrush"), 4);
  EXPECT_EQ(required_state_bits("smallcrush"), 32);
  EXPECT_EQ(required_state_bits("crush"), 35);
  EXPECT_THROW(headroom(64, "megacrush"), ArgumentError);
}

TEST(Arithmetic, Percentages) {
  EXPECT_EQ(table_percent(1397.0 / 2002.0), "69.78%");
  EXPECT_EQ(histogram_percent(43.0 / 2002.0), "2.1%");
  EXPECT_EQ(format_percent(0.0, 2), "0.00%");
}

class ReportDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("prnglab_report_" + std::to_string(::getpid()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  void write(const std::string& name, const std::string& body) {
    std::ofstream(dir_ / name, std::ios::binary) << body;
  }
  void write(const StreamReport& r) {
    write(report_filename({r.generator, SeedIndex{r.seed_index}, r.half, r.profile}), render_report(r));
  }
  fs::path dir_;
};

TEST_F(ReportDir, EmptyDirectory) {
  const auto s = aggregate(dir_);
  EXPECT_TRUE(s.runs.empty());
  EXPECT_TRUE(s.errors.empty());
  EXPECT_TRUE(success_table(s).empty());
  EXPECT_FALSE(render_text(s).empty());
  EXPECT_EQ(render_csv(s),
            "generator,test_id,test_name,cluster,suspicious_count,decisive_count,streams,suspicious_rate,"
            "decisive_rate\n");
}

TEST_F(ReportDir, ParsesFilesAndReportsBadOnes) {
  write(synthetic(GeneratorId::xoshiro256pp, 0, HalfPolicy::low, {{2, 1e-18}}));
  write(synthetic(GeneratorId::xoshiro256pp, 0, HalfPolicy::high));
  write(synthetic(GeneratorId::pcg32, 7, HalfPolicy::native32, {{10, 0.9995}}));
  write("desk_garbage.txt", "not a report\n");
  write(".desk_pcg32_00008.txt.tmp", "partial");
  write(".hidden.txt", "partial");
  write("notes.md", "ignored");
  const auto s = aggregate(dir_);
  ASSERT_EQ(s.runs.size(), 3u);
  ASSERT_EQ(s.errors.size(), 1u);
  EXPECT_EQ(s.errors[0].file, "desk_garbage.txt");
  EXPECT_EQ(s.profiles, std::vector<std::string>{"desk"});
  // Sorted by generator, then seed, then half.
  EXPECT_EQ(s.runs[0].generator, GeneratorId::xoshiro256pp);
  EXPECT_EQ(s.runs[2].generator, GeneratorId::pcg32);
  EXPECT_EQ(s.runs[2].worst(), Verdict::suspicious);

  const auto csv = render_csv(s);
  EXPECT_NE(csv.find("xoshiro256pp,2,gap,classical,1,1,2,0.500000,0.500000\n"), std::string::npos);
  EXPECT_NE(csv.find("pcg32,10,random_walk,random-walk,1,0,1,1.000000,0.000000\n"), std::string::npos);
  const auto text = render_text(s);
  EXPECT_NE(text.find("desk_garbage.txt"), std::string::npos);

  const auto j = nlohmann::json::parse(render_json(s));
  EXPECT_EQ(j.at("thresholds").at("decisive").get<double>(), 1e-15);
  EXPECT_EQ(j.at("errors").size(), 1u);
  EXPECT_EQ(render_json(aggregate(dir_)), render_json(s));
}

TEST_F(ReportDir, MixedProfilesNeedOptIn) {
  write(synthetic(GeneratorId::pcg32, 0, HalfPolicy::native32));
  write(synthetic(GeneratorId::pcg32, 1, HalfPolicy::native32, {}, 17, "smoke"));
  EXPECT_THROW(aggregate(dir_), ConfigError);
  const auto s = aggregate(dir_, {}, true);
  EXPECT_EQ(s.runs.size(), 2u);
  EXPECT_EQ(s.profiles.size(), 2u);
}

TEST_F(ReportDir, DuplicateRunsAreErrors) {
  const auto r = synthetic(GeneratorId::pcg32, 0, HalfPolicy::native32);
  write(r);
  write("copy_of_run.txt", render_report(r));
  const auto s = aggregate(dir_);
  EXPECT_EQ(s.runs.size(), 1u);
  EXPECT_EQ(s.errors.size(), 1u);
}

TEST_F(ReportDir, ReclassifiesStoredPValues) {
  write(synthetic(GeneratorId::pcg32, 0, HalfPolicy::native32, {{3, 1e-8}}));
  EXPECT_EQ(aggregate(dir_).runs[0].worst(), Verdict::suspicious);
  EXPECT_EQ(aggregate(dir_, {1e-3, 1e-6}).runs[0].worst(), Verdict::decisive);
}

TEST(ClusterFamilies, EveryClusterHasAName) {
  for (auto c : {Cluster::collision, Cluster::close_pairs, Cluster::random_walk, Cluster::matrix_rank,
                 Cluster::linear_complexity, Cluster::classical}) {
    EXPECT_FALSE(cluster_family(c).empty());
  }
  EXPECT_EQ(cluster_family(Cluster::close_pairs), "ClosePairs");
}

}  // namespace
}  // namespace prnglab
