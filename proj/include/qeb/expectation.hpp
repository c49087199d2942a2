// Copyright 2026 The qeb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>

namespace qeb {

/// Largest number of erasable positions for which expectations are summed over
/// every mask.
inline constexpr std::size_t kDefaultEnumerationCap = 20;

struct ExactMode {
  std::size_t cap = kDefaultEnumerationCap;
};

struct MonteCarloMode {
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
};

using ExpectationMode = std::variant<ExactMode, MonteCarloMode>;

/// A value with its standard error (zero for exact computations).
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

}  // namespace qeb
