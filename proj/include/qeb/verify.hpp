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

// Self-check suites comparing the library against brute-force references.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace qeb::verify {

struct Check {
  std::string suite;
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  /// Observed value for informational rows; empty otherwise.
  std::string value;
  bool informational = false;

  bool ok() const { return informational || failures == 0; }
};

/// Covered-error enumeration against the rank formulas on random stabilizer
/// codes with every erasure mask, plus the CSS correctability test against
/// the stabilizer-form analysis.
std::vector<Check> lemmas(std::uint64_t seed, std::size_t codes = 200, std::size_t n_max = 6);

/// Submodularity, shape of the mean-rank profile, nonnegativity of the rank
/// difference and its lower bound.
std::vector<Check> appendix(std::uint64_t seed, std::uint64_t submodular_pairs = 10000,
                            std::size_t random_codes = 20);

/// Subtree counts against explicit tree enumeration and the functional
/// equation of the planted series.
std::vector<Check> series();

/// Parameters and graph structure of the built-in [[40,10,4]] code.
std::vector<Check> example();

bool all_ok(const std::vector<Check>& checks);

/// CSV with header `suite,check,checked,failures,value,status`.
void write_checks_csv(std::ostream& out, const std::vector<Check>& checks);

}  // namespace qeb::verify
