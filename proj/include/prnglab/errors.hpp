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

#ifndef PRNGLAB_ERRORS_HPP_
#define PRNGLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace prnglab {

// Invalid battery, campaign or threshold configuration. Raised before any
// stream is consumed.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Domain violation on a numeric helper (p-values, report arithmetic).
class ArgumentError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A generator state that violates its invariants (all-zero xoshiro state,
// out-of-range MRG component, even PCG increment, ...).
class StateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed report file or rendered state.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace prnglab

#endif  // PRNGLAB_ERRORS_HPP_
