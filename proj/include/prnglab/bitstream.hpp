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

// Adapts native generator output to the 32-bit words consumed by the battery.

#ifndef PRNGLAB_BITSTREAM_HPP_
#define PRNGLAB_BITSTREAM_HPP_

#include <cstdint>
#include <optional>
#include <string_view>

#include "prnglab/generators.hpp"

namespace prnglab {

enum class HalfPolicy {
  native32,     // 32-bit generators: each draw as-is
  low,          // bits 0-31 of a fresh 64-bit draw, the rest discarded
  high,         // bits 32-63 of a fresh 64-bit draw, the rest discarded
  alternating,  // low half of a fresh draw, then its stored high half
};

std::string_view to_string(HalfPolicy policy);
std::optional<HalfPolicy> parse_half_policy(std::string_view name);
bool compatible(GeneratorId id, HalfPolicy policy);

inline constexpr double kTwoPow32 = 4294967296.0;

// A sequential source of 32-bit words and unit-interval values. The battery
// only talks to this interface; tests feed it scripted sequences.
class WordStream {
 public:
  virtual ~WordStream() = default;
  virtual std::uint32_t next_word32() = 0;
  // Defaults to next_word32() / 2^32.
  virtual double next_unit() { return static_cast<double>(next_word32()) / kTwoPow32; }
};

class Word32Source final : public WordStream {
 public:
  // Throws ConfigError when the policy does not fit the generator width.
  Word32Source(AnyGenerator generator, HalfPolicy policy);

  std::uint32_t next_word32() override;
  // MRG32k3a: its native unit value (one draw). Others: next_word32() / 2^32.
  double next_unit() override;

  std::uint64_t draws_consumed() const noexcept { return draws_; }
  std::uint64_t words_emitted() const noexcept { return words_; }
  HalfPolicy policy() const noexcept { return policy_; }
  GeneratorId generator() const noexcept { return id_; }
  const AnyGenerator& engine() const noexcept { return generator_; }

 private:
  std::uint64_t draw64();
  std::uint32_t draw32();
  double draw_unit();

  AnyGenerator generator_;
  GeneratorId id_;
  HalfPolicy policy_;
  std::uint64_t draws_ = 0;
  std::uint64_t words_ = 0;
  std::uint32_t pending_high_ = 0;
  bool has_pending_ = false;
};

}  // namespace prnglab

#endif  // PRNGLAB_BITSTREAM_HPP_
