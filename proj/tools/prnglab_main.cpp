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

// prnglab command-line interface: run, gen, kat, battery, report.

#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "prnglab/battery.hpp"
#include "prnglab/campaign.hpp"
#include "prnglab/errors.hpp"
#include "prnglab/kat.hpp"
#include "prnglab/report.hpp"
#include "prnglab/seeding.hpp"

namespace {

using namespace prnglab;

GeneratorId generator_arg(const std::string& s) {
  const auto id = parse_generator_id(s);
  if (!id) throw ConfigError(fmt::format("unknown generator '{}'", s));
  return *id;
}

HalfPolicy half_arg(const std::string& s, GeneratorId id) {
  if (s.empty()) return default_halves(id).front();
  const auto h = parse_half_policy(s);
  if (!h) throw ConfigError(fmt::format("unknown half policy '{}'", s));
  return *h;
}

std::uint64_t u64_arg(const std::string& s, std::string_view what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || s.front() == '-') throw ConfigError(fmt::format("{}: bad value '{}'", what, s));
  return v;
}

double double_arg(const std::string& s, std::string_view what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw ConfigError(fmt::format("{}: bad number '{}'", what, s));
  return v;
}

// key=value lines; '#' starts a comment.
std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot read config file '{}'", path));
  std::map<std::string, std::string> out;
  std::string line;
  int n = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++n;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(fmt::format("{}:{}: expected key=value", path, n));
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

struct RunArgs {
  std::string config;
  std::map<std::string, std::string> values;  // flag name -> value
};

int cmd_run(CLI::App& sub, RunArgs& args) {
  static const char* kKeys[] = {"generator", "seeds", "halves", "profile", "profile-file",
                                "out",       "workers", "suspicious", "decisive"};
  std::map<std::string, std::string> file;
  if (!args.config.empty()) file = read_config_file(args.config);
  for (const auto& [k, v] : file) {
    if (std::find(std::begin(kKeys), std::end(kKeys), k) == std::end(kKeys)) {
      throw ConfigError(fmt::format("config file: unknown key '{}'", k));
    }
  }
  auto get = [&](const std::string& key) -> std::optional<std::string> {
    if (sub.get_option("--" + key)->count() > 0) return args.values[key];
    if (auto it = file.find(key); it != file.end()) return it->second;
    return std::nullopt;
  };
  auto need = [&](const std::string& key) {
    auto v = get(key);
    if (!v) throw ConfigError(fmt::format("--{} is required", key));
    return *v;
  };

  CampaignConfig cfg;
  cfg.generator = generator_arg(need("generator"));
  if (auto s = get("seeds")) {
    cfg.seeds = parse_seed_range(*s);
  } else {
    cfg.seeds = SeedRange{0, default_seed_count(cfg.generator)};
  }
  if (auto h = get("halves")) cfg.halves = parse_halves(*h);
  if (auto p = get("profile")) cfg.profile = *p;
  if (auto p = get("profile-file")) cfg.profile_file = *p;
  cfg.out_dir = need("out");
  if (auto w = get("workers")) cfg.workers = static_cast<unsigned>(u64_arg(*w, "workers"));
  if (auto a = get("suspicious")) cfg.thresholds.suspicious = double_arg(*a, "suspicious");
  if (auto e = get("decisive")) cfg.thresholds.decisive = double_arg(*e, "decisive");

  const auto outcome = execute(cfg);
  std::cerr << fmt::format("planned {} jobs: {} written, {} already complete, {} failed\n", outcome.planned,
                           outcome.written, outcome.skipped, outcome.errors.size());
  for (const auto& e : outcome.errors) std::cerr << "error: " << e << '\n';
  if (outcome.log_file) std::cerr << "campaign log: " << outcome.log_file->string() << '\n';
  return outcome.errors.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prnglab: stream-quality laboratory for pseudo-random generators"};
  app.require_subcommand(1);

  // run
  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Run a multi-stream campaign, one report file per battery run");
  run->add_option("--config", run_args.config, "key=value file with the same keys as the flags (flags win)");
  run->add_option("--generator", run_args.values["generator"], "Generator id");
  run->add_option("--seeds", run_args.values["seeds"], "Seed range A..B, meaning [A,B)");
  run->add_option("--halves", run_args.values["halves"], "Comma-separated half policies (default low,high or native32)");
  run->add_option("--profile", run_args.values["profile"], "Built-in profile: smoke, desk or deep");
  run->add_option("--profile-file", run_args.values["profile-file"], "Profile parameter file");
  run->add_option("--out", run_args.values["out"], "Output directory");
  run->add_option("--workers", run_args.values["workers"], "Worker threads (default: available parallelism)");
  run->add_option("--suspicious", run_args.values["suspicious"], "Suspicious threshold (default 1e-3)");
  run->add_option("--decisive", run_args.values["decisive"], "Decisive threshold (default 1e-15)");

  // gen
  std::string gen_generator, gen_half;
  std::uint64_t gen_seed = 0;
  std::optional<std::uint64_t> gen_count;
  auto* gen = app.add_subcommand("gen", "Write 32-bit words as little-endian bytes to standard output");
  gen->add_option("--generator", gen_generator, "Generator id")->required();
  gen->add_option("--seed", gen_seed, "Seed index");
  gen->add_option("--half", gen_half, "Half policy (default low or native32)");
  gen->add_option("--count", gen_count, "Number of words (default: unbounded)");

  // kat
  std::string kat_generator;
  auto* kat = app.add_subcommand("kat", "Check the embedded known-answer vectors");
  kat->add_option("--generator", kat_generator, "Only this generator");

  // battery
  std::string bat_generator, bat_half, bat_profile = "desk", bat_profile_file;
  std::uint64_t bat_seed = 0;
  double bat_suspicious = 1e-3, bat_decisive = 1e-15;
  auto* battery = app.add_subcommand("battery", "Run one battery job and print its report");
  battery->add_option("--generator", bat_generator, "Generator id")->required();
  battery->add_option("--seed", bat_seed, "Seed index");
  battery->add_option("--half", bat_half, "Half policy (default low or native32)");
  battery->add_option("--profile", bat_profile, "Built-in profile: smoke, desk or deep");
  battery->add_option("--profile-file", bat_profile_file, "Profile parameter file");
  battery->add_option("--suspicious", bat_suspicious, "Suspicious threshold");
  battery->add_option("--decisive", bat_decisive, "Decisive threshold");

  // report
  std::string rep_in, rep_format = "text";
  double rep_suspicious = 1e-3, rep_decisive = 1e-15;
  bool rep_allow_mixed = false;
  auto* report = app.add_subcommand("report", "Aggregate a directory of report files");
  report->add_option("--in", rep_in, "Directory of report files")->required();
  report->add_option("--suspicious", rep_suspicious, "Suspicious threshold");
  report->add_option("--decisive", rep_decisive, "Decisive threshold");
  report->add_option("--format", rep_format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  report->add_flag("--allow-mixed", rep_allow_mixed, "Aggregate files from several profiles");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(*run, run_args);

    if (*gen) {
      std::signal(SIGPIPE, SIG_IGN);
      const auto id = generator_arg(gen_generator);
      emit_raw_stream(id, SeedIndex{gen_seed}, half_arg(gen_half, id), gen_count, stdout);
      return 0;  // a closed pipe is a normal end
    }

    if (*kat) {
      std::optional<GeneratorId> only;
      if (!kat_generator.empty()) only = generator_arg(kat_generator);
      const auto checks = run_builtin_kats(only);
      int failed = 0;
      for (const auto& c : checks) {
        std::cout << fmt::format("{:<6} {:<14} {}{}\n", c.ok ? "ok" : "FAIL", c.stream, c.seeding,
                                 c.detail.empty() ? "" : "  " + c.detail);
        failed += !c.ok;
      }
      if (checks.empty()) std::cout << "no vectors for this generator\n";
      return failed == 0 ? 0 : 1;
    }

    if (*battery) {
      const auto id = generator_arg(bat_generator);
      const Thresholds th{bat_suspicious, bat_decisive};
      th.validate();
      const BatteryProfile profile =
          bat_profile_file.empty() ? builtin_profile(bat_profile) : load_profile_file(bat_profile_file);
      const StreamJob job{id, SeedIndex{bat_seed}, half_arg(bat_half, id), profile.name};
      std::cout << render_report(run_job(job, profile, th));
      return 0;
    }

    if (*report) {
      const auto summary = aggregate(rep_in, Thresholds{rep_suspicious, rep_decisive}, rep_allow_mixed);
      if (rep_format == "csv") {
        std::cout << render_csv(summary);
      } else if (rep_format == "json") {
        std::cout << render_json(summary);
      } else {
        std::cout << render_text(summary);
      }
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const StateError& e) {
    std::cerr << "state error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
