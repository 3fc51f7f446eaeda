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

// Bit-exact engines for the generators under study, the seeding helpers
// (splitmix64, MT19937) and two deliberately weak control generators.
//
// Every engine is a small value type owning its state. Construction validates
// the state invariants; next() never fails.

#ifndef PRNGLAB_GENERATORS_HPP_
#define PRNGLAB_GENERATORS_HPP_

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>

namespace prnglab {

enum class GeneratorId {
  splitmix64,
  xoshiro256pp,
  xoshiro256ss,
  xoshiro1024ss,
  mrg32k3a,
  philox4x32,
  pcg32,
  mt19937,
  randu,
  xorshift64,
};

// Shape of one native draw.
enum class NativeOutput { u64, u32, unit };

std::string_view to_string(GeneratorId id);
std::optional<GeneratorId> parse_generator_id(std::string_view name);
NativeOutput native_output(GeneratorId id);
inline bool is_64bit(GeneratorId id) { return native_output(id) == NativeOutput::u64; }

// ---------------------------------------------------------------------------
// splitmix64

struct SplitMix64State {
  std::uint64_t x = 0;
  friend bool operator==(const SplitMix64State&, const SplitMix64State&) = default;
};

class SplitMix64 {
 public:
  static constexpr GeneratorId kId = GeneratorId::splitmix64;

  constexpr explicit SplitMix64(SplitMix64State state = {}) noexcept : state_(state) {}

  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state_.x += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  constexpr const SplitMix64State& state() const noexcept { return state_; }

 private:
  SplitMix64State state_;
};

// ---------------------------------------------------------------------------
// xoshiro256 family

struct Xoshiro256State {
  std::array<std::uint64_t, 4> s{};
  friend bool operator==(const Xoshiro256State&, const Xoshiro256State&) = default;
};

namespace detail {

constexpr void xoshiro256_advance(std::array<std::uint64_t, 4>& s) noexcept {
  const std::uint64_t t = s[1] << 17;
  s[2] ^= s[0];
  s[3] ^= s[1];
  s[1] ^= s[2];
  s[0] ^= s[3];
  s[2] ^= t;
  s[3] = std::rotl(s[3], 45);
}

void require_nonzero(const std::uint64_t* words, std::size_t n, std::string_view what);

}  // namespace detail

class Xoshiro256pp {
 public:
  static constexpr GeneratorId kId = GeneratorId::xoshiro256pp;

  explicit Xoshiro256pp(const Xoshiro256State& state);

  std::uint64_t next() noexcept {
    auto& s = state_.s;
    const std::uint64_t result = std::rotl(s[0] + s[3], 23) + s[0];
    detail::xoshiro256_advance(s);
    return result;
  }

  const Xoshiro256State& state() const noexcept { return state_; }

 private:
  Xoshiro256State state_;
};

class Xoshiro256ss {
 public:
  static constexpr GeneratorId kId = GeneratorId::xoshiro256ss;

  explicit Xoshiro256ss(const Xoshiro256State& state);

  std::uint64_t next() noexcept {
    auto& s = state_.s;
    const std::uint64_t result = std::rotl(s[1] * 5, 7) * 9;
    detail::xoshiro256_advance(s);
    return result;
  }

  const Xoshiro256State& state() const noexcept { return state_; }

 private:
  Xoshiro256State state_;
};

// The 1024-bit ** member. The designers publish it as xoroshiro1024**; it is
// the generator referred to as "Xoshiro1024**" in the campaign names.
struct Xoshiro1024State {
  std::array<std::uint64_t, 16> s{};
  int p = 0;
  friend bool operator==(const Xoshiro1024State&, const Xoshiro1024State&) = default;
};

class Xoshiro1024ss {
 public:
  static constexpr GeneratorId kId = GeneratorId::xoshiro1024ss;

  explicit Xoshiro1024ss(const Xoshiro1024State& state);

  std::uint64_t next() noexcept {
    auto& s = state_.s;
    const int q = state_.p;
    state_.p = (state_.p + 1) & 15;
    const std::uint64_t s0 = s[state_.p];
    std::uint64_t s15 = s[q];
    const std::uint64_t result = std::rotl(s0 * 5, 7) * 9;
    s15 ^= s0;
    s[q] = std::rotl(s0, 25) ^ s15 ^ (s15 << 27);
    s[state_.p] = std::rotl(s15, 36);
    return result;
  }

  const Xoshiro1024State& state() const noexcept { return state_; }

 private:
  Xoshiro1024State state_;
};

// ---------------------------------------------------------------------------
// MRG32k3a, integer arithmetic. Products stay below 2^63.

struct Mrg32k3aState {
  static constexpr std::int64_t kM1 = 4294967087;
  static constexpr std::int64_t kM2 = 4294944443;
  // Oldest first: x1[2] is the most recent value of component 1.
  std::array<std::int64_t, 3> x1{};
  std::array<std::int64_t, 3> x2{};
  friend bool operator==(const Mrg32k3aState&, const Mrg32k3aState&) = default;
};

class Mrg32k3a {
 public:
  static constexpr GeneratorId kId = GeneratorId::mrg32k3a;
  static constexpr double kNorm = 2.328306549295727688e-10;

  explicit Mrg32k3a(const Mrg32k3aState& state);

  double next_u01() noexcept {
    constexpr std::int64_t m1 = Mrg32k3aState::kM1;
    constexpr std::int64_t m2 = Mrg32k3aState::kM2;
    auto& x1 = state_.x1;
    auto& x2 = state_.x2;

    std::int64_t p1 = (1403580 * x1[1] - 810728 * x1[0]) % m1;
    if (p1 < 0) p1 += m1;
    x1[0] = x1[1];
    x1[1] = x1[2];
    x1[2] = p1;

    std::int64_t p2 = (527612 * x2[2] - 1370589 * x2[0]) % m2;
    if (p2 < 0) p2 += m2;
    x2[0] = x2[1];
    x2[1] = x2[2];
    x2[2] = p2;

    const std::int64_t z = p1 <= p2 ? p1 - p2 + m1 : p1 - p2;
    return static_cast<double>(z) * kNorm;
  }

  const Mrg32k3aState& state() const noexcept { return state_; }

 private:
  Mrg32k3aState state_;
};

// ---------------------------------------------------------------------------
// Philox4x32-10

struct PhiloxState {
  std::array<std::uint32_t, 2> key{};
  std::array<std::uint32_t, 4> counter{};
  std::array<std::uint32_t, 4> buffer{};
  int buffer_index = 4;  // 4 means empty
  friend bool operator==(const PhiloxState&, const PhiloxState&) = default;
};

namespace philox {

inline constexpr std::uint32_t kMul0 = 0xD2511F53u;
inline constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
inline constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
inline constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

using Block = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

constexpr Block round(const Block& ctr, const Key& key) noexcept {
  const std::uint64_t prod0 = std::uint64_t{kMul0} * ctr[0];
  const std::uint64_t prod1 = std::uint64_t{kMul1} * ctr[2];
  const auto hi0 = static_cast<std::uint32_t>(prod0 >> 32);
  const auto lo0 = static_cast<std::uint32_t>(prod0);
  const auto hi1 = static_cast<std::uint32_t>(prod1 >> 32);
  const auto lo1 = static_cast<std::uint32_t>(prod1);
  return {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

constexpr Block block(Block ctr, Key key, int rounds = 10) noexcept {
  for (int r = 0; r < rounds; ++r) {
    if (r > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    ctr = round(ctr, key);
  }
  return ctr;
}

// Same round on lanes of `lane_bits` bits with caller-chosen multipliers.
// Only used to check the bijection property on truncated lanes.
Block narrow_round(const Block& ctr, const Key& key, unsigned lane_bits, std::uint32_t mul0,
                   std::uint32_t mul1) noexcept;

// Word 0 is least significant.
constexpr void increment(Block& ctr) noexcept {
  for (auto& w : ctr) {
    if (++w != 0) break;
  }
}

}  // namespace philox

class Philox4x32 {
 public:
  static constexpr GeneratorId kId = GeneratorId::philox4x32;

  explicit Philox4x32(const PhiloxState& state);

  std::uint32_t next() noexcept {
    if (state_.buffer_index == 4) {
      state_.buffer = philox::block(state_.counter, state_.key);
      philox::increment(state_.counter);
      state_.buffer_index = 0;
    }
    return state_.buffer[state_.buffer_index++];
  }

  const PhiloxState& state() const noexcept { return state_; }

 private:
  PhiloxState state_;
};

// ---------------------------------------------------------------------------
// PCG32 (minimal XSH-RR 64/32)

struct Pcg32State {
  std::uint64_t state = 0;
  std::uint64_t inc = 1;
  friend bool operator==(const Pcg32State&, const Pcg32State&) = default;
};

class Pcg32 {
 public:
  static constexpr GeneratorId kId = GeneratorId::pcg32;
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;

  explicit Pcg32(const Pcg32State& state);

  std::uint32_t next() noexcept {
    const std::uint64_t old = state_.state;
    state_.state = old * kMultiplier + state_.inc;
    const auto xorshifted = static_cast<std::uint32_t>(((old >> 18) ^ old) >> 27);
    const auto rot = static_cast<int>(old >> 59);
    return std::rotr(xorshifted, rot);
  }

  const Pcg32State& state() const noexcept { return state_; }

 private:
  Pcg32State state_;
};

// ---------------------------------------------------------------------------
// MT19937, seeding utility only.

struct Mt19937State {
  static constexpr int kN = 624;
  std::array<std::uint32_t, kN> mt{};
  int index = kN;
  friend bool operator==(const Mt19937State&, const Mt19937State&) = default;
};

class Mt19937 {
 public:
  static constexpr GeneratorId kId = GeneratorId::mt19937;

  explicit Mt19937(const Mt19937State& state);
  // init_genrand of the reference code.
  explicit Mt19937(std::uint32_t seed) noexcept;

  std::uint32_t next() noexcept {
    if (state_.index >= Mt19937State::kN) twist();
    std::uint32_t y = state_.mt[state_.index++];
    y ^= y >> 11;
    y ^= (y << 7) & 0x9D2C5680u;
    y ^= (y << 15) & 0xEFC60000u;
    y ^= y >> 18;
    return y;
  }

  // 53-bit resolution double in [0,1); consumes two 32-bit draws.
  double next_res53() noexcept {
    const std::uint32_t a = next();
    const std::uint32_t b = next();
    return res53(a, b);
  }

  static constexpr double res53(std::uint32_t a, std::uint32_t b) noexcept {
    return (static_cast<double>(a >> 5) * 67108864.0 + static_cast<double>(b >> 6)) *
           (1.0 / 9007199254740992.0);
  }

  const Mt19937State& state() const noexcept { return state_; }

 private:
  void twist() noexcept;

  Mt19937State state_;
};

// ---------------------------------------------------------------------------
// Negative controls: known-bad generators the battery must flag.

enum class ControlKind { randu, xorshift64 };

struct ControlGeneratorState {
  ControlKind kind = ControlKind::randu;
  std::uint64_t x = 1;
  friend bool operator==(const ControlGeneratorState&, const ControlGeneratorState&) = default;
};

class ControlGenerator {
 public:
  explicit ControlGenerator(const ControlGeneratorState& state);

  std::uint32_t next() noexcept {
    auto& x = state_.x;
    if (state_.kind == ControlKind::randu) {
      x = (65539 * x) & 0x7FFFFFFFULL;
    } else {
      x ^= x << 13;
      x ^= x >> 7;
      x ^= x << 17;
    }
    return static_cast<std::uint32_t>(x);
  }

  GeneratorId id() const noexcept {
    return state_.kind == ControlKind::randu ? GeneratorId::randu : GeneratorId::xorshift64;
  }
  const ControlGeneratorState& state() const noexcept { return state_; }

 private:
  ControlGeneratorState state_;
};

// Any engine, tagged by type. Xoshiro256pp and Xoshiro256ss share a state
// layout and are told apart by the alternative.
using AnyGenerator = std::variant<SplitMix64, Xoshiro256pp, Xoshiro256ss, Xoshiro1024ss, Mrg32k3a,
                                  Philox4x32, Pcg32, Mt19937, ControlGenerator>;

GeneratorId generator_id(const AnyGenerator& g);

}  // namespace prnglab

#endif  // PRNGLAB_GENERATORS_HPP_
