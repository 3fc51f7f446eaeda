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

#include "prnglab/generators.hpp"

#include <algorithm>
#include <string>

#include "prnglab/errors.hpp"

namespace prnglab {

namespace {

struct NameEntry {
  GeneratorId id;
  std::string_view name;
  NativeOutput output;
};

constexpr std::array<NameEntry, 10> kNames{{
    {GeneratorId::splitmix64, "splitmix64", NativeOutput::u64},
    {GeneratorId::xoshiro256pp, "xoshiro256pp", NativeOutput::u64},
    {GeneratorId::xoshiro256ss, "xoshiro256ss", NativeOutput::u64},
    {GeneratorId::xoshiro1024ss, "xoshiro1024ss", NativeOutput::u64},
    {GeneratorId::mrg32k3a, "mrg32k3a", NativeOutput::unit},
    {GeneratorId::philox4x32, "philox4x32", NativeOutput::u32},
    {GeneratorId::pcg32, "pcg32", NativeOutput::u32},
    {GeneratorId::mt19937, "mt19937", NativeOutput::u32},
    {GeneratorId::randu, "randu", NativeOutput::u32},
    {GeneratorId::xorshift64, "xorshift64", NativeOutput::u32},
}};

const NameEntry& entry(GeneratorId id) {
  return *std::find_if(kNames.begin(), kNames.end(), [id](const NameEntry& e) { return e.id == id; });
}

}  // namespace

std::string_view to_string(GeneratorId id) { return entry(id).name; }

std::optional<GeneratorId> parse_generator_id(std::string_view name) {
  for (const auto& e : kNames) {
    if (e.name == name) return e.id;
  }
  return std::nullopt;
}

NativeOutput native_output(GeneratorId id) { return entry(id).output; }

namespace detail {

void require_nonzero(const std::uint64_t* words, std::size_t n, std::string_view what) {
  if (std::all_of(words, words + n, [](std::uint64_t w) { return w == 0; })) {
    throw StateError(std::string(what) + ": all-zero state");
  }
}

}  // namespace detail

Xoshiro256pp::Xoshiro256pp(const Xoshiro256State& state) : state_(state) {
  detail::require_nonzero(state_.s.data(), state_.s.size(), "xoshiro256pp");
}

Xoshiro256ss::Xoshiro256ss(const Xoshiro256State& state) : state_(state) {
  detail::require_nonzero(state_.s.data(), state_.s.size(), "xoshiro256ss");
}

Xoshiro1024ss::Xoshiro1024ss(const Xoshiro1024State& state) : state_(state) {
  detail::require_nonzero(state_.s.data(), state_.s.size(), "xoshiro1024ss");
  if (state_.p < 0 || state_.p > 15) throw StateError("xoshiro1024ss: index p outside [0,16)");
}

Mrg32k3a::Mrg32k3a(const Mrg32k3aState& state) : state_(state) {
  auto check = [](const std::array<std::int64_t, 3>& x, std::int64_t m, const char* name) {
    for (auto v : x) {
      if (v < 0 || v >= m) throw StateError(std::string("mrg32k3a: ") + name + " component out of range");
    }
    if (x[0] == 0 && x[1] == 0 && x[2] == 0) throw StateError(std::string("mrg32k3a: ") + name + " all zero");
  };
  check(state_.x1, Mrg32k3aState::kM1, "x1");
  check(state_.x2, Mrg32k3aState::kM2, "x2");
}

namespace philox {

Block narrow_round(const Block& ctr, const Key& key, unsigned lane_bits, std::uint32_t mul0,
                   std::uint32_t mul1) noexcept {
  const std::uint64_t mask = lane_bits >= 32 ? 0xFFFFFFFFULL : ((1ULL << lane_bits) - 1);
  const std::uint64_t prod0 = (mul0 & mask) * (ctr[0] & mask);
  const std::uint64_t prod1 = (mul1 & mask) * (ctr[2] & mask);
  const auto hi0 = static_cast<std::uint32_t>((prod0 >> lane_bits) & mask);
  const auto lo0 = static_cast<std::uint32_t>(prod0 & mask);
  const auto hi1 = static_cast<std::uint32_t>((prod1 >> lane_bits) & mask);
  const auto lo1 = static_cast<std::uint32_t>(prod1 & mask);
  const auto m = static_cast<std::uint32_t>(mask);
  return {(hi1 ^ ctr[1] ^ key[0]) & m, lo1, (hi0 ^ ctr[3] ^ key[1]) & m, lo0};
}

}  // namespace philox

Philox4x32::Philox4x32(const PhiloxState& state) : state_(state) {
  if (state_.buffer_index < 0 || state_.buffer_index > 4) throw StateError("philox4x32: buffer index outside [0,4]");
}

Pcg32::Pcg32(const Pcg32State& state) : state_(state) {
  if ((state_.inc & 1) == 0) throw StateError("pcg32: increment must be odd");
}

Mt19937::Mt19937(const Mt19937State& state) : state_(state) {
  if (state_.index < 0 || state_.index > Mt19937State::kN) throw StateError("mt19937: index outside [0,624]");
}

Mt19937::Mt19937(std::uint32_t seed) noexcept {
  auto& mt = state_.mt;
  mt[0] = seed;
  for (int i = 1; i < Mt19937State::kN; ++i) {
    mt[i] = 1812433253u * (mt[i - 1] ^ (mt[i - 1] >> 30)) + static_cast<std::uint32_t>(i);
  }
  state_.index = Mt19937State::kN;
}

void Mt19937::twist() noexcept {
  constexpr int n = Mt19937State::kN;
  constexpr int m = 397;
  constexpr std::uint32_t upper = 0x80000000u;
  constexpr std::uint32_t lower = 0x7FFFFFFFu;
  constexpr std::uint32_t matrix_a = 0x9908B0DFu;
  auto& mt = state_.mt;
  for (int k = 0; k < n; ++k) {
    const std::uint32_t y = (mt[k] & upper) | (mt[(k + 1) % n] & lower);
    mt[k] = mt[(k + m) % n] ^ (y >> 1) ^ ((y & 1u) ? matrix_a : 0u);
  }
  state_.index = 0;
}

ControlGenerator::ControlGenerator(const ControlGeneratorState& state) : state_(state) {
  if (state_.kind == ControlKind::randu) {
    if (state_.x == 0 || state_.x >= (1ULL << 31)) throw StateError("randu: state must lie in (0, 2^31)");
  } else if (state_.x == 0) {
    throw StateError("xorshift64: state must be nonzero");
  }
}

GeneratorId generator_id(const AnyGenerator& g) {
  return std::visit(
      [](const auto& engine) -> GeneratorId {
        using T = std::decay_t<decltype(engine)>;
        if constexpr (std::is_same_v<T, ControlGenerator>) {
          return engine.id();
        } else {
          return T::kId;
        }
      },
      g);
}

}  // namespace prnglab
