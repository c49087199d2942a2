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

// Pauli operators in symplectic form, stabilizer matrices and the erasure
// correctability test based on ranks of erased/unerased column blocks.
//
// Phases are not represented: every operator lives in the Pauli group modulo
// its center, so an n-qubit operator is a pair (x | z) of length-n bit vectors.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qeb/expectation.hpp"
#include "qeb/f2la.hpp"
#include "qeb/random.hpp"

namespace qeb {

/// Characteristic vector of the erased qubits.
using ErasureMask = BitVector;

struct PauliOperator {
  BitVector x;
  BitVector z;

  PauliOperator() = default;
  PauliOperator(BitVector x_mask, BitVector z_mask);

  static PauliOperator identity(std::size_t n);
  /// Parses a word over {I, X, Y, Z}, one letter per qubit.
  static PauliOperator from_string(const std::string& word);

  std::size_t size() const { return x.size(); }
  BitVector support() const { return x | z; }
  std::size_t weight() const { return support().weight(); }
  /// Letter at qubit i.
  char at(std::size_t i) const;
  std::string to_string() const;

  /// Product up to phase.
  PauliOperator& operator*=(const PauliOperator& other);
  friend PauliOperator operator*(PauliOperator a, const PauliOperator& b) { return a *= b; }
  bool operator==(const PauliOperator& other) const = default;
};

bool commutes(const PauliOperator& p, const PauliOperator& q);

class StabilizerMatrix {
 public:
  StabilizerMatrix() = default;
  StabilizerMatrix(std::size_t n, std::vector<PauliOperator> rows);

  static StabilizerMatrix from_strings(const std::vector<std::string>& words);

  std::size_t num_qubits() const { return n_; }
  std::size_t num_rows() const { return rows_.size(); }
  const PauliOperator& row(std::size_t i) const { return rows_[i]; }
  const std::vector<PauliOperator>& rows() const { return rows_; }

 private:
  std::size_t n_ = 0;
  std::vector<PauliOperator> rows_;
};

/// Text format: header `stab n r`, then r words of length n over {I,X,Y,Z}.
/// Lines starting with `#` are comments.
StabilizerMatrix parse_stabilizer(std::istream& in);
StabilizerMatrix parse_stabilizer(const std::string& text);
std::string format_stabilizer(const StabilizerMatrix& h);

/// Bit i is set iff e anti-commutes with row i.
BitVector syndrome(const StabilizerMatrix& h, const PauliOperator& e);
/// r x 2n matrix whose row i is (x_i | z_i).
BitMatrix to_symplectic(const StabilizerMatrix& h);
/// True iff the rows commute pairwise.
bool validate(const StabilizerMatrix& h);
/// n - rank H. Throws std::invalid_argument for non-commuting rows.
std::size_t num_logical(const StabilizerMatrix& h);

/// Symplectic column mask selecting both halves at the erased qubits.
BitVector symplectic_mask(const ErasureMask& e);

struct ErasureAnalysis {
  std::size_t rank_h = 0;
  std::size_t rank_erased = 0;    // rank of H restricted to the erased qubits
  std::size_t rank_unerased = 0;  // rank of H restricted to the complement
  std::size_t dim_nse = 0;        // zero-syndrome errors supported in the erasure
  std::size_t dim_se = 0;         // stabilizers supported in the erasure
  bool correctable = true;
  double cond_entropy_bits = 0.0;
};

ErasureAnalysis analyze_erasure(const StabilizerMatrix& h, const ErasureMask& e);

inline constexpr std::size_t kDefaultCoveredCap = 11;

/// Exhaustive census of the 4^|E| Pauli errors supported in an erasure.
struct CoveredEnumeration {
  std::uint64_t covered = 0;
  std::uint64_t zero_syndrome = 0;
  std::uint64_t stabilizers = 0;  // distinct stabilizer group elements inside E
  std::uint64_t problematic = 0;  // zero syndrome but not a stabilizer
  /// Syndrome (bit i = row i) -> number of covered errors producing it.
  std::map<std::uint64_t, std::uint64_t> histogram;
  /// Entropy of the degeneracy class of the error given the syndrome, over
  /// every attained syndrome. The two agree when the entropy is syndrome-independent.
  double min_coset_entropy_bits = 0.0;
  double max_coset_entropy_bits = 0.0;
};

/// Brute force over covered errors and over all 2^r products of rows.
/// Throws std::length_error when |E| exceeds cap, r > 20 or n > 64.
CoveredEnumeration enumerate_covered(const StabilizerMatrix& h, const ErasureMask& e,
                                     std::size_t cap = kDefaultCoveredCap);

/// Lower bound on the decoding error probability of any estimator of the
/// error class, from Fano's inequality. May be negative.
double fano_lower_bound(const StabilizerMatrix& h, double p, const ExpectationMode& mode);

/// Random stabilizer matrix with r rows (possibly dependent) on n qubits,
/// built by rejection: each new row commutes with all previous ones.
StabilizerMatrix random_stabilizer(std::size_t n, std::size_t r, Substream& rng);

}  // namespace qeb
