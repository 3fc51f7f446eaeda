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

#include "prnglab/seeding.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <vector>

#include <fmt/format.h>

#include "prnglab/errors.hpp"

namespace prnglab {

namespace {

std::uint32_t mt_seed(SeedIndex seed, std::string_view who) {
  if (seed.value > std::numeric_limits<std::uint32_t>::max()) {
    throw ConfigError(fmt::format("{}: seed index {} does not fit the 32-bit MT19937 seed", who, seed.value));
  }
  return static_cast<std::uint32_t>(seed.value);
}

template <typename Range>
void append_words(std::string& out, const Range& words, int width) {
  for (auto w : words) out += fmt::format(" {:0{}x}", static_cast<std::uint64_t>(w), width);
}

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < text.size() && !(text[j] == ' ' || text[j] == '\t' || text[j] == '\n' || text[j] == '\r')) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

class FieldReader {
 public:
  FieldReader(std::vector<std::string_view> tokens, std::string_view name) : tokens_(std::move(tokens)), name_(name) {}

  std::uint64_t hex(int width) {
    if (pos_ >= tokens_.size()) throw ParseError(fmt::format("{}: rendered state too short", name_));
    auto tok = tokens_[pos_++];
    if (static_cast<int>(tok.size()) != width) {
      throw ParseError(fmt::format("{}: field '{}' is not {} hex digits", name_, tok, width));
    }
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v, 16);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw ParseError(fmt::format("{}: field '{}' is not hexadecimal", name_, tok));
    }
    for (char c : tok) {
      if (c >= 'A' && c <= 'F') throw ParseError(fmt::format("{}: field '{}' is not lowercase", name_, tok));
    }
    return v;
  }

  void finish() const {
    if (pos_ != tokens_.size()) throw ParseError(fmt::format("{}: trailing fields in rendered state", name_));
  }

 private:
  std::vector<std::string_view> tokens_;
  std::string_view name_;
  std::size_t pos_ = 1;
};

}  // namespace

std::uint64_t default_seed_count(GeneratorId id) {
  return is_64bit(id) ? kDefaultSeedCount64 : kDefaultSeedCount32;
}

Xoshiro256State fill_xoshiro256(const WordDraw& draw) {
  Xoshiro256State st;
  for (auto& w : st.s) w = draw();
  detail::require_nonzero(st.s.data(), st.s.size(), "xoshiro256 seeding");
  return st;
}

Xoshiro1024State fill_xoshiro1024(const WordDraw& draw) {
  Xoshiro1024State st;
  for (auto& w : st.s) w = draw();
  st.p = 0;
  detail::require_nonzero(st.s.data(), st.s.size(), "xoshiro1024 seeding");
  return st;
}

std::int64_t scale_unit(double u, std::int64_t m) {
  if (!(u >= 0.0 && u < 1.0)) throw ArgumentError("scale_unit: u outside [0,1)");
  const double scaled = std::ldexp(u, 53);
  const auto n = static_cast<unsigned __int128>(scaled);
  if (static_cast<double>(n) != scaled) throw ArgumentError("scale_unit: u is not a multiple of 2^-53");
  return static_cast<std::int64_t>((n * static_cast<unsigned __int128>(m)) >> 53);
}

Mrg32k3aState fill_mrg32k3a(const UnitDraw& draw) {
  Mrg32k3aState st;
  auto draw_triple = [&](std::array<std::int64_t, 3>& x, std::int64_t m) {
    for (auto& v : x) v = scale_unit(draw(), m);
  };
  auto all_zero = [](const std::array<std::int64_t, 3>& x) { return x[0] == 0 && x[1] == 0 && x[2] == 0; };
  draw_triple(st.x1, Mrg32k3aState::kM1);
  draw_triple(st.x2, Mrg32k3aState::kM2);
  while (all_zero(st.x1)) draw_triple(st.x1, Mrg32k3aState::kM1);
  while (all_zero(st.x2)) draw_triple(st.x2, Mrg32k3aState::kM2);
  return st;
}

Xoshiro256State derive_xoshiro256(SeedIndex seed) {
  SplitMix64 sm(SplitMix64State{seed.value});
  return fill_xoshiro256([&] { return sm.next(); });
}

Xoshiro1024State derive_xoshiro1024(SeedIndex seed) {
  SplitMix64 sm(SplitMix64State{seed.value});
  return fill_xoshiro1024([&] { return sm.next(); });
}

Mrg32k3aState derive_mrg32k3a(SeedIndex seed) {
  Mt19937 mt(mt_seed(seed, "mrg32k3a"));
  return fill_mrg32k3a([&] { return mt.next_res53(); });
}

PhiloxState derive_philox(SeedIndex seed) {
  Mt19937 mt(mt_seed(seed, "philox4x32"));
  PhiloxState st;
  st.key[0] = mt.next();
  st.key[1] = mt.next();
  st.counter = {0, 0, 0, 0};
  st.buffer = {0, 0, 0, 0};
  st.buffer_index = 4;
  return st;
}

Pcg32 derive_pcg32(SeedIndex seed) {
  Pcg32 g(Pcg32State{seed.value, 1});
  (void)g.next();
  return g;
}

Pcg32 pcg32_reference_seeding(std::uint64_t initstate, std::uint64_t initseq) {
  Pcg32 g(Pcg32State{0, (initseq << 1) | 1});
  (void)g.next();
  Pcg32State st = g.state();
  st.state += initstate;
  Pcg32 out(st);
  (void)out.next();
  return out;
}

ControlGeneratorState derive_control(ControlKind kind, SeedIndex seed) {
  if (kind == ControlKind::randu) {
    // Odd state below 2^31 from a 30-bit bijective mix, so seed indices below
    // 2^30 never share a state.
    constexpr std::uint64_t mask = (1ULL << 30) - 1;
    std::uint64_t v = seed.value & mask;
    v = (v * 0x2545F491ULL) & mask;
    v ^= v >> 15;
    v = (v * 0x1B873593ULL) & mask;
    v ^= v >> 13;
    return {kind, 2 * v + 1};
  }
  SplitMix64 sm(SplitMix64State{seed.value});
  std::uint64_t x = sm.next();
  while (x == 0) x = sm.next();
  return {kind, x};
}

AnyGenerator derive(GeneratorId id, SeedIndex seed) {
  switch (id) {
    case GeneratorId::splitmix64:
      return SplitMix64(SplitMix64State{seed.value});
    case GeneratorId::xoshiro256pp:
      return Xoshiro256pp(derive_xoshiro256(seed));
    case GeneratorId::xoshiro256ss:
      return Xoshiro256ss(derive_xoshiro256(seed));
    case GeneratorId::xoshiro1024ss:
      return Xoshiro1024ss(derive_xoshiro1024(seed));
    case GeneratorId::mrg32k3a:
      return Mrg32k3a(derive_mrg32k3a(seed));
    case GeneratorId::philox4x32:
      return Philox4x32(derive_philox(seed));
    case GeneratorId::pcg32:
      return derive_pcg32(seed);
    case GeneratorId::mt19937:
      return Mt19937(mt_seed(seed, "mt19937"));
    case GeneratorId::randu:
      return ControlGenerator(derive_control(ControlKind::randu, seed));
    case GeneratorId::xorshift64:
      return ControlGenerator(derive_control(ControlKind::xorshift64, seed));
  }
  throw ConfigError("derive: unknown generator");
}

std::string render_state(const AnyGenerator& g) {
  std::string out(to_string(generator_id(g)));
  std::visit(
      [&](const auto& engine) {
        using T = std::decay_t<decltype(engine)>;
        const auto& st = engine.state();
        if constexpr (std::is_same_v<T, SplitMix64>) {
          append_words(out, std::array{st.x}, 16);
        } else if constexpr (std::is_same_v<T, Xoshiro256pp> || std::is_same_v<T, Xoshiro256ss>) {
          append_words(out, st.s, 16);
        } else if constexpr (std::is_same_v<T, Xoshiro1024ss>) {
          append_words(out, st.s, 16);
          append_words(out, std::array{st.p}, 2);
        } else if constexpr (std::is_same_v<T, Mrg32k3a>) {
          append_words(out, st.x1, 8);
          append_words(out, st.x2, 8);
        } else if constexpr (std::is_same_v<T, Philox4x32>) {
          append_words(out, st.key, 8);
          append_words(out, st.counter, 8);
          append_words(out, st.buffer, 8);
          append_words(out, std::array{st.buffer_index}, 1);
        } else if constexpr (std::is_same_v<T, Pcg32>) {
          append_words(out, std::array{st.state, st.inc}, 16);
        } else if constexpr (std::is_same_v<T, Mt19937>) {
          append_words(out, st.mt, 8);
          append_words(out, std::array{st.index}, 3);
        } else {
          static_assert(std::is_same_v<T, ControlGenerator>);
          append_words(out, std::array{st.x}, 16);
        }
      },
      g);
  return out;
}

AnyGenerator parse_state(std::string_view text) {
  auto tokens = split_ws(text);
  if (tokens.empty()) throw ParseError("rendered state is empty");
  const auto id = parse_generator_id(tokens[0]);
  if (!id) throw ParseError(fmt::format("unknown generator '{}' in rendered state", tokens[0]));
  FieldReader rd(std::move(tokens), to_string(*id));

  auto finish = [&](auto engine) -> AnyGenerator {
    rd.finish();
    return engine;
  };
  switch (*id) {
    case GeneratorId::splitmix64:
      return finish(SplitMix64(SplitMix64State{rd.hex(16)}));
    case GeneratorId::xoshiro256pp:
    case GeneratorId::xoshiro256ss: {
      Xoshiro256State st;
      for (auto& w : st.s) w = rd.hex(16);
      if (*id == GeneratorId::xoshiro256pp) return finish(Xoshiro256pp(st));
      return finish(Xoshiro256ss(st));
    }
    case GeneratorId::xoshiro1024ss: {
      Xoshiro1024State st;
      for (auto& w : st.s) w = rd.hex(16);
      st.p = static_cast<int>(rd.hex(2));
      return finish(Xoshiro1024ss(st));
    }
    case GeneratorId::mrg32k3a: {
      Mrg32k3aState st;
      for (auto& v : st.x1) v = static_cast<std::int64_t>(rd.hex(8));
      for (auto& v : st.x2) v = static_cast<std::int64_t>(rd.hex(8));
      return finish(Mrg32k3a(st));
    }
    case GeneratorId::philox4x32: {
      PhiloxState st;
      for (auto& w : st.key) w = static_cast<std::uint32_t>(rd.hex(8));
      for (auto& w : st.counter) w = static_cast<std::uint32_t>(rd.hex(8));
      for (auto& w : st.buffer) w = static_cast<std::uint32_t>(rd.hex(8));
      st.buffer_index = static_cast<int>(rd.hex(1));
      return finish(Philox4x32(st));
    }
    case GeneratorId::pcg32: {
      Pcg32State st;
      st.state = rd.hex(16);
      st.inc = rd.hex(16);
      return finish(Pcg32(st));
    }
    case GeneratorId::mt19937: {
      Mt19937State st;
      for (auto& w : st.mt) w = static_cast<std::uint32_t>(rd.hex(8));
      st.index = static_cast<int>(rd.hex(3));
      return finish(Mt19937(st));
    }
    case GeneratorId::randu:
      return finish(ControlGenerator({ControlKind::randu, rd.hex(16)}));
    case GeneratorId::xorshift64:
      return finish(ControlGenerator({ControlKind::xorshift64, rd.hex(16)}));
  }
  throw ParseError("unreachable generator id");
}

bool same_state(const AnyGenerator& a, const AnyGenerator& b) {
  if (a.index() != b.index() || generator_id(a) != generator_id(b)) return false;
  return std::visit(
      [&](const auto& ea) {
        using T = std::decay_t<decltype(ea)>;
        return ea.state() == std::get<T>(b).state();
      },
      a);
}

}  // namespace prnglab
