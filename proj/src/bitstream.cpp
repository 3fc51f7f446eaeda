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

#include "prnglab/bitstream.hpp"

#include <array>
#include <cmath>
#include <string>

#include "prnglab/errors.hpp"

namespace prnglab {

namespace {

constexpr std::array<std::pair<HalfPolicy, std::string_view>, 4> kPolicyNames{{
    {HalfPolicy::native32, "native32"},
    {HalfPolicy::low, "low"},
    {HalfPolicy::high, "high"},
    {HalfPolicy::alternating, "alternating"},
}};

}  // namespace

std::string_view to_string(HalfPolicy policy) {
  for (const auto& [p, name] : kPolicyNames) {
    if (p == policy) return name;
  }
  return "unknown";
}

std::optional<HalfPolicy> parse_half_policy(std::string_view name) {
  for (const auto& [p, n] : kPolicyNames) {
    if (n == name) return p;
  }
  return std::nullopt;
}

bool compatible(GeneratorId id, HalfPolicy policy) {
  return is_64bit(id) ? policy != HalfPolicy::native32 : policy == HalfPolicy::native32;
}

Word32Source::Word32Source(AnyGenerator generator, HalfPolicy policy)
    : generator_(std::move(generator)), id_(generator_id(generator_)), policy_(policy) {
  if (!compatible(id_, policy_)) {
    throw ConfigError(std::string("half policy '") + std::string(to_string(policy_)) +
                      "' does not apply to generator '" + std::string(to_string(id_)) + "'");
  }
}

std::uint64_t Word32Source::draw64() {
  ++draws_;
  return std::visit(
      [](auto& g) -> std::uint64_t {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, SplitMix64> || std::is_same_v<T, Xoshiro256pp> ||
                      std::is_same_v<T, Xoshiro256ss> || std::is_same_v<T, Xoshiro1024ss>) {
          return g.next();
        } else {
          return 0;  // unreachable: guarded by compatible()
        }
      },
      generator_);
}

double Word32Source::draw_unit() {
  ++draws_;
  return std::get<Mrg32k3a>(generator_).next_u01();
}

std::uint32_t Word32Source::draw32() {
  if (id_ == GeneratorId::mrg32k3a) {
    // floor(u * 2^32); u < 1 so the result fits.
    return static_cast<std::uint32_t>(std::floor(draw_unit() * kTwoPow32));
  }
  ++draws_;
  return std::visit(
      [](auto& g) -> std::uint32_t {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Philox4x32> || std::is_same_v<T, Pcg32> || std::is_same_v<T, Mt19937> ||
                      std::is_same_v<T, ControlGenerator>) {
          return g.next();
        } else {
          return 0;  // unreachable: guarded by compatible()
        }
      },
      generator_);
}

std::uint32_t Word32Source::next_word32() {
  ++words_;
  switch (policy_) {
    case HalfPolicy::native32:
      return draw32();
    case HalfPolicy::low:
      return static_cast<std::uint32_t>(draw64());
    case HalfPolicy::high:
      return static_cast<std::uint32_t>(draw64() >> 32);
    case HalfPolicy::alternating:
      if (has_pending_) {
        has_pending_ = false;
        return pending_high_;
      } else {
        const std::uint64_t v = draw64();
        pending_high_ = static_cast<std::uint32_t>(v >> 32);
        has_pending_ = true;
        return static_cast<std::uint32_t>(v);
      }
  }
  return 0;
}

double Word32Source::next_unit() {
  if (id_ == GeneratorId::mrg32k3a) {
    ++words_;
    return draw_unit();
  }
  return static_cast<double>(next_word32()) / kTwoPow32;
}

}  // namespace prnglab
