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

// Python bindings for the main operations.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "prnglab/battery.hpp"
#include "prnglab/bitstream.hpp"
#include "prnglab/campaign.hpp"
#include "prnglab/errors.hpp"
#include "prnglab/generators.hpp"
#include "prnglab/kat.hpp"
#include "prnglab/report.hpp"
#include "prnglab/seeding.hpp"

namespace py = pybind11;
using namespace prnglab;

namespace {

GeneratorId generator_arg(const std::string& name) {
  const auto id = parse_generator_id(name);
  if (!id) throw ConfigError("unknown generator '" + name + "'");
  return *id;
}

HalfPolicy half_arg(GeneratorId id, const std::optional<std::string>& half) {
  if (!half) return default_halves(id).front();
  const auto h = parse_half_policy(*half);
  if (!h) throw ConfigError("unknown half policy '" + *half + "'");
  return *h;
}

Thresholds thresholds_arg(double suspicious, double decisive) {
  Thresholds t{suspicious, decisive};
  t.validate();
  return t;
}

py::dict result_dict(const TestResult& r) {
  py::list stats;
  for (const auto& s : r.stats) {
    py::dict d;
    d["name"] = s.name;
    d["p"] = s.p;
    d["verdict"] = std::string(to_string(s.verdict));
    stats.append(d);
  }
  py::dict d;
  d["test_id"] = r.test_id;
  d["name"] = r.name;
  d["cluster"] = std::string(to_string(r.cluster));
  d["params"] = r.params;
  d["verdict"] = std::string(to_string(r.verdict));
  d["stats"] = stats;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bindings to the prnglab C++ library";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<StateError>(m, "StateError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.attr("__version__") = std::string(kArtifactVersion);

  m.def("generator_names", [] {
    std::vector<std::string> names;
    for (int i = 0; i <= static_cast<int>(GeneratorId::xorshift64); ++i) {
      names.emplace_back(to_string(static_cast<GeneratorId>(i)));
    }
    return names;
  });

  m.def(
      "initial_state", [](const std::string& generator, std::uint64_t seed) {
        return render_state(derive(generator_arg(generator), SeedIndex{seed}));
      },
      py::arg("generator"), py::arg("seed"), "Rendered initial state for a seed index");

  m.def(
      "words",
      [](const std::string& generator, std::uint64_t seed, std::optional<std::string> half, std::size_t count) {
        const auto id = generator_arg(generator);
        Word32Source src(derive(id, SeedIndex{seed}), half_arg(id, half));
        std::vector<std::uint32_t> buf(count);
        {
          py::gil_scoped_release release;
          for (auto& w : buf) w = src.next_word32();
        }
        return py::array_t<std::uint32_t>(static_cast<py::ssize_t>(count), buf.data());
      },
      py::arg("generator"), py::arg("seed") = 0, py::arg("half") = std::nullopt, py::arg("count") = 1024,
      "32-bit words the battery would consume");

  m.def(
      "kat_check",
      [](std::optional<std::string> generator) {
        std::optional<GeneratorId> only;
        if (generator) only = generator_arg(*generator);
        py::list out;
        for (const auto& k : run_builtin_kats(only)) {
          py::dict d;
          d["stream"] = k.stream;
          d["seeding"] = k.seeding;
          d["ok"] = k.ok;
          d["detail"] = k.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("generator") = std::nullopt);

  m.def("profile_names", &builtin_profile_names);
  m.def(
      "profile_text", [](const std::string& name) { return render_profile(builtin_profile(name)); }, py::arg("name"));
  m.def(
      "profile_words", [](const std::string& name) { return words_consumed(builtin_profile(name)); },
      py::arg("name"), "32-bit words one battery run consumes");

  m.def(
      "classify",
      [](double p, double suspicious, double decisive) { return std::string(to_string(classify(p, suspicious, decisive))); },
      py::arg("p"), py::arg("suspicious") = 1e-3, py::arg("decisive") = 1e-15);

  m.def(
      "run_battery",
      [](const std::string& generator, std::uint64_t seed, std::optional<std::string> half, const std::string& profile,
         double suspicious, double decisive) {
        const auto id = generator_arg(generator);
        const StreamJob job{id, SeedIndex{seed}, half_arg(id, half), profile};
        StreamReport rep;
        {
          py::gil_scoped_release release;
          rep = run_job(job, builtin_profile(profile), thresholds_arg(suspicious, decisive));
        }
        py::list results;
        for (const auto& r : rep.results) results.append(result_dict(r));
        const auto s = rep.summary();
        py::dict d;
        d["generator"] = generator;
        d["seed_index"] = seed;
        d["initial_state"] = rep.initial_state;
        d["half"] = std::string(to_string(rep.half));
        d["profile"] = rep.profile;
        d["results"] = results;
        d["verdict"] = s.pass ? "PASS" : "FAIL";
        d["report"] = render_report(rep);
        return d;
      },
      py::arg("generator"), py::arg("seed") = 0, py::arg("half") = std::nullopt, py::arg("profile") = "smoke",
      py::arg("suspicious") = 1e-3, py::arg("decisive") = 1e-15, "One battery run; the report text is under 'report'");

  m.def(
      "run_campaign",
      [](const std::string& generator, const std::string& seeds, std::optional<std::string> halves,
         const std::string& profile, const std::filesystem::path& out, unsigned workers, double suspicious,
         double decisive) {
        CampaignConfig cfg;
        cfg.generator = generator_arg(generator);
        cfg.seeds = parse_seed_range(seeds);
        if (halves) cfg.halves = parse_halves(*halves);
        cfg.profile = profile;
        cfg.out_dir = out;
        cfg.workers = workers;
        cfg.thresholds = thresholds_arg(suspicious, decisive);
        CampaignOutcome o;
        {
          py::gil_scoped_release release;
          o = execute(cfg);
        }
        py::dict d;
        d["planned"] = o.planned;
        d["written"] = o.written;
        d["skipped"] = o.skipped;
        d["errors"] = o.errors;
        d["log_file"] = o.log_file ? py::cast(o.log_file->string()) : py::none();
        return d;
      },
      py::arg("generator"), py::arg("seeds"), py::arg("halves") = std::nullopt, py::arg("profile") = "desk",
      py::arg("out"), py::arg("workers") = 0, py::arg("suspicious") = 1e-3, py::arg("decisive") = 1e-15,
      "Resumable campaign; seeds is 'A..B' meaning [A, B)");

  m.def(
      "report",
      [](const std::filesystem::path& in, const std::string& format, double suspicious, double decisive,
         bool allow_mixed) {
        const auto s = aggregate(in, thresholds_arg(suspicious, decisive), allow_mixed);
        if (format == "text") return render_text(s);
        if (format == "csv") return render_csv(s);
        if (format == "json") return render_json(s);
        throw ConfigError("format must be text, csv or json");
      },
      py::arg("directory"), py::arg("format") = "text", py::arg("suspicious") = 1e-3, py::arg("decisive") = 1e-15,
      py::arg("allow_mixed") = false, "Aggregate a directory of report files");

  m.def("multiple_testing_probability", &multiple_testing_probability, py::arg("num_statistics"),
        py::arg("per_test_tail"));
  m.def("headroom", [](int bits, const std::string& battery) { return headroom(bits, battery); }, py::arg("state_bits"),
        py::arg("battery"));
  m.def("format_percent", &format_percent, py::arg("rate"), py::arg("decimals"));
}
