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

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "battery_internal.hpp"
#include "prnglab/battery.hpp"
#include "prnglab/errors.hpp"

namespace prnglab {

namespace {

// Shipped parameter tables. Changing any value requires a version bump.
constexpr std::string_view kSmokeProfile = R"(profile = smoke
version = 1
test.1 = serial_frequency classical t=1 n=16384
test.2 = serial_frequency classical t=8 n=16384
test.3 = serial_frequency classical t=16 n=524288
test.4 = birthday_spacings collision n=1024 k=67108864 reps=50 drop=0
test.5 = birthday_spacings collision n=1024 k=67108864 reps=50 drop=6
test.6 = collision collision n=4096 k=1048576 reps=50 drop=0
test.7 = collision collision n=4096 k=1048576 reps=50 drop=12
test.8 = close_pairs close-pairs n=200 t=2 reps=20
test.9 = close_pairs close-pairs n=200 t=3 reps=20
test.10 = random_walk random-walk L=128 reps=2000 drop=0 take=32
test.11 = random_walk random-walk L=1024 reps=200 drop=0 take=32
test.12 = matrix_rank matrix-rank L=32 reps=200 drop=0 take=32
test.13 = matrix_rank matrix-rank L=64 reps=100 drop=0 take=32
test.14 = linear_complexity linear-complexity M=500 N=200 drop=0 take=1
test.15 = linear_complexity linear-complexity M=500 N=200 drop=31 take=1
test.16 = gap classical lo=0 hi=0.125 n=65536
test.17 = gap classical lo=0.5 hi=0.5625 n=65536
)";

constexpr std::string_view kDeskProfile = R"(profile = desk
version = 1
test.1 = serial_frequency classical t=1 n=1048576
test.2 = serial_frequency classical t=8 n=1048576
test.3 = serial_frequency classical t=16 n=4194304
test.4 = birthday_spacings collision n=1024 k=67108864 reps=500 drop=0
test.5 = birthday_spacings collision n=1024 k=67108864 reps=500 drop=6
test.6 = collision collision n=4096 k=1048576 reps=300 drop=0
test.7 = collision collision n=4096 k=1048576 reps=300 drop=12
test.8 = close_pairs close-pairs n=1000 t=2 reps=100
test.9 = close_pairs close-pairs n=1000 t=3 reps=100
test.10 = random_walk random-walk L=128 reps=20000 drop=0 take=32
test.11 = random_walk random-walk L=1024 reps=2000 drop=0 take=32
test.12 = matrix_rank matrix-rank L=32 reps=1000 drop=0 take=32
test.13 = matrix_rank matrix-rank L=64 reps=500 drop=0 take=32
test.14 = linear_complexity linear-complexity M=1000 N=500 drop=0 take=1
test.15 = linear_complexity linear-complexity M=1000 N=500 drop=31 take=1
test.16 = gap classical lo=0 hi=0.125 n=1048576
test.17 = gap classical lo=0.5 hi=0.5625 n=1048576
)";

constexpr std::string_view kDeepProfile = R"(profile = deep
version = 1
test.1 = serial_frequency classical t=1 n=8388608
test.2 = serial_frequency classical t=8 n=8388608
test.3 = serial_frequency classical t=16 n=33554432
test.4 = birthday_spacings collision n=1024 k=67108864 reps=4000 drop=0
test.5 = birthday_spacings collision n=1024 k=67108864 reps=4000 drop=6
test.6 = collision collision n=4096 k=1048576 reps=2400 drop=0
test.7 = collision collision n=4096 k=1048576 reps=2400 drop=12
test.8 = close_pairs close-pairs n=2000 t=2 reps=400
test.9 = close_pairs close-pairs n=2000 t=3 reps=400
test.10 = random_walk random-walk L=128 reps=160000 drop=0 take=32
test.11 = random_walk random-walk L=1024 reps=16000 drop=0 take=32
test.12 = matrix_rank matrix-rank L=32 reps=8000 drop=0 take=32
test.13 = matrix_rank matrix-rank L=64 reps=4000 drop=0 take=32
test.14 = linear_complexity linear-complexity M=2000 N=2000 drop=0 take=1
test.15 = linear_complexity linear-complexity M=2000 N=2000 drop=31 take=1
test.16 = gap classical lo=0 hi=0.125 n=8388608
test.17 = gap classical lo=0.5 hi=0.5625 n=8388608
)";

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t j = s.find_first_of(" \t", i);
    const std::size_t end = j == std::string_view::npos ? s.size() : j;
    if (end > i) out.push_back(s.substr(i, end - i));
    i = end;
  }
  return out;
}

std::int64_t to_int(std::string_view s, std::string_view what) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw ConfigError(fmt::format("{}: not an integer: '{}'", what, s));
  return v;
}

double to_double(std::string_view s, std::string_view what) {
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw ConfigError(fmt::format("{}: not a number: '{}'", what, s));
  return v;
}

// Typed access to a spec's parameters; every key must be consumed.
class ParamReader {
 public:
  explicit ParamReader(const TestSpec& spec) : spec_(spec) {
    for (const auto& [k, v] : spec.params) values_.emplace(k, v);
  }

  std::int64_t integer(const std::string& key) { return to_int(required(key), context(key)); }
  std::int64_t integer(const std::string& key, std::int64_t fallback) {
    return values_.count(key) ? integer(key) : fallback;
  }
  double real(const std::string& key) { return to_double(required(key), context(key)); }

  void finish() const {
    for (const auto& [k, v] : values_) {
      if (!used_.count(k)) throw ConfigError(fmt::format("test {} ({}): unknown parameter '{}'", spec_.id, spec_.kind, k));
    }
  }

 private:
  const std::string& required(const std::string& key) {
    auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError(fmt::format("test {} ({}): missing parameter '{}'", spec_.id, spec_.kind, key));
    used_.insert(key);
    return it->second;
  }
  std::string context(const std::string& key) const { return fmt::format("test {} parameter {}", spec_.id, key); }

  const TestSpec& spec_;
  std::map<std::string, std::string> values_;
  std::set<std::string> used_;
};

int narrow(std::int64_t v, std::string_view what) {
  if (v < INT32_MIN || v > INT32_MAX) throw ConfigError(fmt::format("{} out of range", what));
  return static_cast<int>(v);
}

// Parses the typed parameters for `spec` and calls `fn(params)`.
template <typename Fn>
decltype(auto) with_params(const TestSpec& spec, Fn&& fn) {
  ParamReader r(spec);
  const std::string& kind = spec.kind;
  if (kind == "serial_frequency") {
    SerialFrequencyParams p{narrow(r.integer("t"), "t"), r.integer("n")};
    r.finish();
    return fn(p);
  }
  if (kind == "birthday_spacings") {
    BirthdaySpacingsParams p{r.integer("n"), r.integer("k"), r.integer("reps", 1), narrow(r.integer("drop", 0), "drop")};
    r.finish();
    return fn(p);
  }
  if (kind == "collision") {
    CollisionParams p{r.integer("n"), r.integer("k"), r.integer("reps", 1), narrow(r.integer("drop", 0), "drop")};
    r.finish();
    return fn(p);
  }
  if (kind == "close_pairs") {
    ClosePairsParams p{r.integer("n"), narrow(r.integer("t"), "t"), r.integer("reps", 1)};
    r.finish();
    return fn(p);
  }
  if (kind == "random_walk") {
    RandomWalkParams p{narrow(r.integer("L"), "L"), r.integer("reps", 1), narrow(r.integer("drop", 0), "drop"),
                       narrow(r.integer("take", 32), "take")};
    r.finish();
    return fn(p);
  }
  if (kind == "matrix_rank") {
    MatrixRankParams p{narrow(r.integer("L"), "L"), r.integer("reps", 1), narrow(r.integer("drop", 0), "drop"),
                       narrow(r.integer("take", 32), "take")};
    r.finish();
    return fn(p);
  }
  if (kind == "linear_complexity") {
    LinearComplexityParams p{narrow(r.integer("M"), "M"), r.integer("N"), narrow(r.integer("drop", 0), "drop"),
                             narrow(r.integer("take", 1), "take")};
    r.finish();
    return fn(p);
  }
  if (kind == "gap") {
    GapParams p{r.real("lo"), r.real("hi"), r.integer("n")};
    r.finish();
    return fn(p);
  }
  throw ConfigError(fmt::format("test {}: unknown test kind '{}'", spec.id, kind));
}

}  // namespace

std::string TestSpec::render_params() const {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ' ';
    out += k;
    out += '=';
    out += v;
  }
  return out;
}

BatteryProfile parse_profile(std::string_view text) {
  BatteryProfile profile;
  bool have_name = false;
  std::set<int> ids;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(fmt::format("profile line {}: expected key = value", line_no));
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key == "profile") {
      if (value.empty()) throw ConfigError(fmt::format("profile line {}: empty profile name", line_no));
      profile.name = std::string(value);
      have_name = true;
    } else if (key == "version") {
      profile.version = narrow(to_int(value, "version"), "version");
    } else if (key.substr(0, 5) == "test.") {
      TestSpec spec;
      spec.id = narrow(to_int(key.substr(5), "test id"), "test id");
      if (!ids.insert(spec.id).second) throw ConfigError(fmt::format("profile line {}: duplicate test id {}", line_no, spec.id));
      const auto words = split_ws(value);
      if (words.size() < 2) throw ConfigError(fmt::format("profile line {}: expected <kind> <cluster> key=value...", line_no));
      spec.kind = std::string(words[0]);
      const auto cluster = parse_cluster(words[1]);
      if (!cluster) throw ConfigError(fmt::format("profile line {}: unknown cluster '{}'", line_no, words[1]));
      spec.cluster = *cluster;
      for (std::size_t i = 2; i < words.size(); ++i) {
        const auto e = words[i].find('=');
        if (e == std::string_view::npos || e == 0 || e + 1 == words[i].size()) {
          throw ConfigError(fmt::format("profile line {}: bad parameter '{}'", line_no, words[i]));
        }
        std::string k(words[i].substr(0, e));
        for (const auto& [pk, pv] : spec.params) {
          if (pk == k) throw ConfigError(fmt::format("profile line {}: repeated parameter '{}'", line_no, k));
        }
        spec.params.emplace_back(std::move(k), std::string(words[i].substr(e + 1)));
      }
      profile.tests.push_back(std::move(spec));
    } else {
      throw ConfigError(fmt::format("profile line {}: unknown key '{}'", line_no, key));
    }
  }
  if (!have_name) throw ConfigError("profile: missing 'profile = <name>' line");
  if (profile.tests.empty()) throw ConfigError("profile: no tests");
  return profile;
}

BatteryProfile load_profile_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot read profile file '{}'", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  auto profile = parse_profile(ss.str());
  validate_profile(profile);
  return profile;
}

std::string render_profile(const BatteryProfile& profile) {
  std::string out = fmt::format("profile = {}\nversion = {}\n", profile.name, profile.version);
  for (const auto& t : profile.tests) {
    out += fmt::format("test.{} = {} {}", t.id, t.kind, to_string(t.cluster));
    if (!t.params.empty()) out += ' ' + t.render_params();
    out += '\n';
  }
  return out;
}

const BatteryProfile& builtin_profile(std::string_view name) {
  static const BatteryProfile smoke = parse_profile(kSmokeProfile);
  static const BatteryProfile desk = parse_profile(kDeskProfile);
  static const BatteryProfile deep = parse_profile(kDeepProfile);
  if (name == "smoke") return smoke;
  if (name == "desk") return desk;
  if (name == "deep") return deep;
  throw ConfigError(fmt::format("unknown battery profile '{}' (expected smoke, desk or deep)", name));
}

std::vector<std::string> builtin_profile_names() { return {"smoke", "desk", "deep"}; }

void validate_profile(const BatteryProfile& profile) {
  std::set<int> ids;
  for (const auto& spec : profile.tests) {
    if (!ids.insert(spec.id).second) throw ConfigError(fmt::format("duplicate test id {}", spec.id));
    with_params(spec, [](const auto& p) { detail::validate(p); });
  }
}

std::int64_t words_consumed(const TestSpec& spec) {
  return with_params(spec, [](const auto& p) {
    detail::validate(p);
    return detail::words(p);
  });
}

std::int64_t words_consumed(const BatteryProfile& profile) {
  std::int64_t total = 0;
  for (const auto& spec : profile.tests) total += words_consumed(spec);
  return total;
}

namespace {

TestResult dispatch(WordStream& src, const SerialFrequencyParams& p) { return test_serial_frequency(src, p); }
TestResult dispatch(WordStream& src, const BirthdaySpacingsParams& p) { return test_birthday_spacings(src, p); }
TestResult dispatch(WordStream& src, const CollisionParams& p) { return test_collision(src, p); }
TestResult dispatch(WordStream& src, const ClosePairsParams& p) { return test_close_pairs(src, p); }
TestResult dispatch(WordStream& src, const RandomWalkParams& p) { return test_random_walk(src, p); }
TestResult dispatch(WordStream& src, const MatrixRankParams& p) { return test_matrix_rank(src, p); }
TestResult dispatch(WordStream& src, const LinearComplexityParams& p) { return test_linear_complexity(src, p); }
TestResult dispatch(WordStream& src, const GapParams& p) { return test_gap(src, p); }

}  // namespace

TestResult run_test(WordStream& src, const TestSpec& spec, const Thresholds& thresholds) {
  thresholds.validate();
  TestResult r = with_params(spec, [&](const auto& p) { return dispatch(src, p); });
  r.test_id = spec.id;
  r.cluster = spec.cluster;
  r.params = fmt::format("cluster={} {}", to_string(spec.cluster), spec.render_params());
  r.reclassify(thresholds);
  return r;
}

std::vector<TestResult> run_battery(WordStream& src, const BatteryProfile& profile, const Thresholds& thresholds) {
  thresholds.validate();
  validate_profile(profile);
  std::vector<TestResult> out;
  out.reserve(profile.tests.size());
  for (const auto& spec : profile.tests) out.push_back(run_test(src, spec, thresholds));
  return out;
}

}  // namespace prnglab
