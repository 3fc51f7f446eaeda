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

#include "prnglab/kat.hpp"

#include <bit>
#include <charconv>

#include <fmt/format.h>

#include "prnglab/errors.hpp"

namespace prnglab {

namespace {

std::vector<std::string_view> fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    const auto j = std::min(s.find(' ', i), s.size());
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T number(std::string_view s, int base) {
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(fmt::format("bad KAT field '{}'", s));
  }
  return v;
}

void expect_fields(const std::vector<std::string_view>& f, std::size_t n, std::string_view stream) {
  if (f.size() != n) throw ParseError(fmt::format("{}: expected {} init fields, got {}", stream, n, f.size()));
}

template <typename Gen, typename Fn>
std::vector<std::uint64_t> collect(Gen g, std::size_t count, Fn&& next) {
  std::vector<std::uint64_t> out(count);
  for (auto& v : out) v = next(g);
  return out;
}

}  // namespace

std::vector<std::string> kat_stream_names() {
  return {"splitmix64", "xoshiro256pp", "xoshiro256ss", "xoshiro1024ss", "mrg32k3a",
          "philox4x32", "pcg32",        "mt19937",      "mt19937_res53"};
}

GeneratorId kat_generator(std::string_view stream) {
  if (stream == "mt19937_res53") return GeneratorId::mt19937;
  const auto id = parse_generator_id(stream);
  if (!id) throw ArgumentError(fmt::format("unknown KAT stream '{}'", stream));
  return *id;
}

std::vector<std::uint64_t> kat_outputs(std::string_view stream, std::string_view init, std::size_t count) {
  const auto f = fields(init);
  if (stream == "splitmix64") {
    expect_fields(f, 1, stream);
    return collect(SplitMix64(SplitMix64State{number<std::uint64_t>(f[0], 16)}), count,
                   [](auto& g) { return g.next(); });
  }
  if (stream == "xoshiro256pp" || stream == "xoshiro256ss") {
    expect_fields(f, 4, stream);
    Xoshiro256State st;
    for (int i = 0; i < 4; ++i) st.s[static_cast<std::size_t>(i)] = number<std::uint64_t>(f[static_cast<std::size_t>(i)], 16);
    if (stream == "xoshiro256pp") return collect(Xoshiro256pp(st), count, [](auto& g) { return g.next(); });
    return collect(Xoshiro256ss(st), count, [](auto& g) { return g.next(); });
  }
  if (stream == "xoshiro1024ss") {
    expect_fields(f, 17, stream);
    Xoshiro1024State st;
    for (std::size_t i = 0; i < 16; ++i) st.s[i] = number<std::uint64_t>(f[i], 16);
    st.p = number<int>(f[16], 10);
    return collect(Xoshiro1024ss(st), count, [](auto& g) { return g.next(); });
  }
  if (stream == "mrg32k3a") {
    expect_fields(f, 6, stream);
    Mrg32k3aState st;
    for (std::size_t i = 0; i < 3; ++i) {
      st.x1[i] = number<std::int64_t>(f[i], 10);
      st.x2[i] = number<std::int64_t>(f[i + 3], 10);
    }
    return collect(Mrg32k3a(st), count, [](auto& g) { return std::bit_cast<std::uint64_t>(g.next_u01()); });
  }
  if (stream == "philox4x32") {
    expect_fields(f, 6, stream);
    PhiloxState st;
    st.key = {number<std::uint32_t>(f[0], 16), number<std::uint32_t>(f[1], 16)};
    for (std::size_t i = 0; i < 4; ++i) st.counter[i] = number<std::uint32_t>(f[i + 2], 16);
    return collect(Philox4x32(st), count, [](auto& g) { return std::uint64_t{g.next()}; });
  }
  if (stream == "pcg32") {
    expect_fields(f, 2, stream);
    return collect(Pcg32(Pcg32State{number<std::uint64_t>(f[0], 16), number<std::uint64_t>(f[1], 16)}), count,
                   [](auto& g) { return std::uint64_t{g.next()}; });
  }
  if (stream == "mt19937" || stream == "mt19937_res53") {
    expect_fields(f, 1, stream);
    Mt19937 g(number<std::uint32_t>(f[0], 10));
    if (stream == "mt19937") return collect(g, count, [](auto& m) { return std::uint64_t{m.next()}; });
    return collect(g, count, [](auto& m) { return std::bit_cast<std::uint64_t>(m.next_res53()); });
  }
  throw ArgumentError(fmt::format("unknown KAT stream '{}'", stream));
}

std::vector<KatCheck> run_builtin_kats(std::optional<GeneratorId> only) {
  std::vector<KatCheck> out;
  for (const auto& v : builtin_kat_vectors()) {
    if (only && kat_generator(v.stream) != *only) continue;
    KatCheck c{std::string(v.stream), std::string(v.seeding), true, ""};
    const auto got = kat_outputs(v.stream, v.init, 1000);
    for (std::size_t i = 0; i < 4 && c.ok; ++i) {
      if (got[i] != v.first[i]) {
        c.ok = false;
        c.detail = fmt::format("output {}: got {:016x}, expected {:016x}", i, got[i], v.first[i]);
      }
    }
    if (c.ok && got[999] != v.at_999) {
      c.ok = false;
      c.detail = fmt::format("output 999: got {:016x}, expected {:016x}", got[999], v.at_999);
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace prnglab
