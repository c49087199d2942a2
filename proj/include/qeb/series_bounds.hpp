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

// Exact counting series for subtrees of the m-regular tree and the rate bounds
// built on them, plus the threshold solver that intersects a bound curve with
// a target rate.

#include <cstddef>
#include <iosfwd>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qeb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Truncated power series with exact rational coefficients, coefficient k of z^k.
class RationalSeries {
 public:
  RationalSeries() = default;
  explicit RationalSeries(std::vector<Rational> coefficients);

  std::size_t size() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  Rational& operator[](std::size_t k) { return coeffs_[k]; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Product truncated to the shorter of the two lengths.
  RationalSeries truncated_product(const RationalSeries& other) const;
  /// this^e truncated to size().
  RationalSeries truncated_power(unsigned e) const;
  /// Evaluates in double precision (coefficients converted one by one).
  double evaluate(double z) const;

  bool operator==(const RationalSeries& other) const = default;

 private:
  std::vector<Rational> coeffs_;
};

BigInt binomial(unsigned n, unsigned k);

/// b_k = (1/k) C(k(m-1), k-1): planted subtrees with k edges, b_0 = 0.
RationalSeries planted_coeffs(unsigned m, unsigned k_max);
/// a_k: subtrees with k edges containing the root, from (1 + T1)^m.
RationalSeries rooted_coeffs(unsigned m, unsigned k_max);
/// Checks T1 = z (1 + T1)^{m-1} coefficient-wise through z^{k_max} for the given series.
bool satisfies_functional_equation(const RationalSeries& planted, unsigned m, unsigned k_max);
bool verify_functional_equation(unsigned m, unsigned k_max);
/// S_delta(z) = sum_{k <= delta} a_k / (k + 1) z^k.
RationalSeries s_poly(unsigned m, unsigned delta);

/// Rate bound for stabilizer codes whose generators have weight <= m.
/// Requires 0 < p <= 1/2 and m >= 2.
double stab_bound(unsigned m, double p);
/// Limit of stab_bound as p -> 0+, which is (m - 1) / (m + 1).
double stab_bound_at_zero(unsigned m);
/// Upper bound on E[rank H_E]/n for a (2, m) matrix whose graph has girth >= delta + 2.
double mean_rank_upper(unsigned m, unsigned delta, double p);
/// Rate bound for proper (2, m) CSS codes; m >= 5, 0 <= p <= 1/2, value 1 at p = 0.
double css2m_bound(unsigned m, double p);

enum class BoundKind { kStabilizer, kCss2m };

struct BoundSpec {
  BoundKind kind = BoundKind::kCss2m;
  unsigned m = 5;
  double rate = 0.2;
};

double evaluate_bound(const BoundSpec& spec, double p);
const char* kind_name(BoundKind kind);

struct ThresholdOptions {
  std::size_t grid_points = 10000;
  double tolerance = 1e-9;
};

/// Smallest p in (0, 1/2] where the bound curve meets the rate: first sign
/// change on a uniform grid, refined by bisection. Throws std::domain_error
/// when the curve never crosses the rate.
double threshold_solve(const BoundSpec& spec, const ThresholdOptions& options = {});
/// Upper bound on the bond percolation threshold of the {m, m} tiling.
double percolation_upper(unsigned m);

struct EasyBounds {
  double lower;           // 1 / (m - 1)
  double upper_path;      // 1 - 1 / (m - 1)
  double upper_capacity;  // 2 / m
};
EasyBounds easy_bounds(unsigned m);

struct BoundCurveRow {
  double p;
  double capacity;
  double stab;
  double css2m;
  double rate;
};

/// Rows (p, 1 - 2p, stab_bound, css2m_bound, rate) over the grid. The stab and
/// css2m columns take their continuity limits at p = 0.
std::vector<BoundCurveRow> bound_curve(const BoundSpec& spec, const std::vector<double>& p_grid);
void write_bound_curve_csv(std::ostream& out, const std::vector<BoundCurveRow>& rows);

}  // namespace qeb
