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

// Seed-index -> initial-state protocols, one per generator, and the canonical
// rendering of a full initial state for report headers.

#ifndef PRNGLAB_SEEDING_HPP_
#define PRNGLAB_SEEDING_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "prnglab/generators.hpp"

namespace prnglab {

// The small user-facing integer that indexes a stream. It is not the state.
struct SeedIndex {
  std::uint64_t value = 0;
};

// Default campaign seed counts: 64-bit generators are tested on both halves of
// 1001 streams, 32-bit generators on 2002 streams.
inline constexpr std::uint64_t kDefaultSeedCount64 = 1001;
inline constexpr std::uint64_t kDefaultSeedCount32 = 2002;
std::uint64_t default_seed_count(GeneratorId id);

using WordDraw = std::function<std::uint64_t()>;
using UnitDraw = std::function<double()>;

// Fills the state words from successive draws of `draw` (normally
// splitmix64). Throws StateError on an all-zero fill.
Xoshiro256State fill_xoshiro256(const WordDraw& draw);
Xoshiro1024State fill_xoshiro1024(const WordDraw& draw);

// x1 from the first three draws, x2 from the next three, then any all-zero
// triple is redrawn from further values until it is not.
Mrg32k3aState fill_mrg32k3a(const UnitDraw& draw);
// floor(u * m) for u a multiple of 2^-53 in [0,1), computed exactly.
std::int64_t scale_unit(double u, std::int64_t m);

Xoshiro256State derive_xoshiro256(SeedIndex seed);
Xoshiro1024State derive_xoshiro1024(SeedIndex seed);
Mrg32k3aState derive_mrg32k3a(SeedIndex seed);
PhiloxState derive_philox(SeedIndex seed);
// state = seed, inc = 1, then one draw is discarded.
Pcg32 derive_pcg32(SeedIndex seed);
// The designers' pcg32_srandom protocol, kept for comparison runs.
Pcg32 pcg32_reference_seeding(std::uint64_t initstate, std::uint64_t initseq);
ControlGeneratorState derive_control(ControlKind kind, SeedIndex seed);

// Full protocol dispatch used by campaigns.
AnyGenerator derive(GeneratorId id, SeedIndex seed);

// Canonical lowercase fixed-width hex rendering, generator name first, fields
// in declaration order, single spaces. parse_state(render_state(g)) == g.
std::string render_state(const AnyGenerator& g);
AnyGenerator parse_state(std::string_view text);

bool same_state(const AnyGenerator& a, const AnyGenerator& b);

}  // namespace prnglab

#endif  // PRNGLAB_SEEDING_HPP_
