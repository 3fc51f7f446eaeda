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

// Known-answer vectors: construction of a generator from a textual initial
// state and a small embedded table checked by the `kat` command.

#ifndef PRNGLAB_KAT_HPP_
#define PRNGLAB_KAT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prnglab/generators.hpp"

namespace prnglab {

// KAT stream names: the generator names plus "mt19937_res53" (double output).
std::vector<std::string> kat_stream_names();
// GeneratorId the stream exercises.
GeneratorId kat_generator(std::string_view stream);

// First `count` outputs of `stream` started from `init`, the whitespace
// separated initial-state fields:
//   splitmix64         x
//   xoshiro256pp/ss    s0..s3
//   xoshiro1024ss      s0..s15 p
//   mrg32k3a           x1[0..2] x2[0..2] (decimal, oldest first)
//   philox4x32         key0 key1 ctr0..ctr3
//   pcg32              state inc
//   mt19937(_res53)    seed (decimal)
// Hex unless noted. 32-bit outputs are zero-extended; doubles are returned as
// their IEEE-754 bit patterns.
std::vector<std::uint64_t> kat_outputs(std::string_view stream, std::string_view init, std::size_t count);

struct KatVector {
  std::string_view stream;
  std::string_view seeding;
  std::string_view init;
  std::uint64_t first[4];
  std::uint64_t at_999;  // output index 999
};

const std::vector<KatVector>& builtin_kat_vectors();

struct KatCheck {
  std::string stream;
  std::string seeding;
  bool ok = false;
  std::string detail;
};

// Checks the embedded vectors, optionally for one generator only.
std::vector<KatCheck> run_builtin_kats(std::optional<GeneratorId> only = std::nullopt);

}  // namespace prnglab

#endif  // PRNGLAB_KAT_HPP_
