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

// Parameter checks shared by the tests and the profile validator.

#ifndef PRNGLAB_SRC_BATTERY_INTERNAL_HPP_
#define PRNGLAB_SRC_BATTERY_INTERNAL_HPP_

#include "prnglab/battery.hpp"

namespace prnglab::detail {

void validate(const SerialFrequencyParams& p);
void validate(const BirthdaySpacingsParams& p);
void validate(const CollisionParams& p);
void validate(const ClosePairsParams& p);
void validate(const RandomWalkParams& p);
void validate(const MatrixRankParams& p);
void validate(const LinearComplexityParams& p);
void validate(const GapParams& p);

std::int64_t words(const SerialFrequencyParams& p);
std::int64_t words(const BirthdaySpacingsParams& p);
std::int64_t words(const CollisionParams& p);
std::int64_t words(const ClosePairsParams& p);
std::int64_t words(const RandomWalkParams& p);
std::int64_t words(const MatrixRankParams& p);
std::int64_t words(const LinearComplexityParams& p);
std::int64_t words(const GapParams& p);

}  // namespace prnglab::detail

#endif  // PRNGLAB_SRC_BATTERY_INTERNAL_HPP_
