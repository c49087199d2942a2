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

// Mean rank of a random column submatrix.
//
// phi(p) = E_p[rank H_E] / n where every erasable position is kept
// independently with probability p, and delta(p) = phi(1 - p) - phi(p).
// Exact mode sums over all 2^n masks; Monte Carlo mode samples masks from
// counter-based streams.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qeb/expectation.hpp"
#include "qeb/f2la.hpp"
#include "qeb/stabilizer.hpp"

namespace qeb {

using Rational = boost::multiprecision::cpp_rational;

/// A matrix plus the map from erasable positions to its columns. In the
/// binary view position i is column i; in the symplectic view of an n-qubit
/// stabilizer matrix position i owns columns i and n + i.
class ErasureMatrix {
 public:
  static ErasureMatrix binary(BitMatrix m);
  static ErasureMatrix symplectic(const StabilizerMatrix& h);

  const BitMatrix& matrix() const { return matrix_; }
  bool is_symplectic() const { return symplectic_; }
  std::size_t positions() const { return positions_; }
  std::size_t full_rank() const { return full_rank_; }

  BitVector column_mask(const ErasureMask& e) const;
  std::size_t rank_on(const ErasureMask& e) const;

 private:
  ErasureMatrix(BitMatrix m, bool symplectic, std::size_t positions);

  BitMatrix matrix_;
  bool symplectic_ = false;
  std::size_t positions_ = 0;
  std::size_t full_rank_ = 0;
};

/// Sums of rank(H_E) over all masks E, grouped by |E|. With these the exact
/// phi is a polynomial in p and can be evaluated anywhere, including in
/// exact rational arithmetic.
class RankEnumerator {
 public:
  explicit RankEnumerator(const ErasureMatrix& h, std::size_t cap = kDefaultEnumerationCap);

  std::size_t positions() const { return positions_; }
  /// rank_sums()[w] = sum of rank(H_E) over masks of weight w.
  const std::vector<std::uint64_t>& rank_sums() const { return rank_sums_; }

  double phi(double p) const;
  Rational phi(const Rational& p) const;
  double delta(double p) const { return phi(1.0 - p) - phi(p); }
  Rational delta(const Rational& p) const { return phi(Rational(1) - p) - phi(p); }

 private:
  std::size_t positions_;
  std::vector<std::uint64_t> rank_sums_;
};

Estimate phi(const ErasureMatrix& h, double p, const ExpectationMode& mode);
/// In Monte Carlo mode the two expectations use independent streams and their
/// standard errors add in quadrature.
Estimate delta(const ErasureMatrix& h, double p, const ExpectationMode& mode);
/// 1 - 2p - delta(p), an upper bound on the achievable rate of the code's family.
Estimate empirical_rate_bound(const ErasureMatrix& h, double p, const ExpectationMode& mode);

struct ShapeReport {
  std::size_t points = 0;
  std::size_t monotone_violations = 0;
  std::size_t concavity_violations = 0;
  double max_violation = 0.0;
  bool ok() const { return monotone_violations == 0 && concavity_violations == 0; }
};

/// Checks that the exact phi is nondecreasing and midpoint-concave on a
/// uniform grid. Values are compared in exact rational arithmetic (grid
/// points are taken at their exact binary value) before applying tol.
ShapeReport check_monotone_concave(const ErasureMatrix& h, std::span<const double> grid,
                                   double tol, std::size_t cap = kDefaultEnumerationCap);

/// ((1 - 2p) / (1 - p)) (rank_h / n - m): lower bound on delta(p) from any
/// upper bound m on phi(p); valid for p <= 1/2. Throws std::domain_error at p = 1.
double delta_lower_bound(std::size_t rank_h, std::size_t n, double p, double m);

struct SubmodularReport {
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  std::uint64_t equalities = 0;
};

/// Samples random column-set pairs (A, B) and tests
/// rank(A & B) + rank(A | B) <= rank(A) + rank(B).
SubmodularReport check_submodular(const BitMatrix& m, std::uint64_t trials, std::uint64_t seed);

struct RankProfile {
  std::vector<double> p_grid;
  std::vector<double> phi;
  std::vector<double> phi_stderr;
  std::vector<double> delta;
  std::vector<double> delta_stderr;
  std::vector<double> rate_bound;
};

RankProfile rank_profile(const ErasureMatrix& h, std::span<const double> grid,
                         const ExpectationMode& mode);
/// Header `p,phi,phi_stderr,delta,delta_stderr,rate_bound`, 12 significant digits.
void write_profile_csv(std::ostream& out, const RankProfile& profile);

}  // namespace qeb
