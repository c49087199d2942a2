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

// Bit-packed linear algebra over F2.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qeb {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length);

  static BitVector from_indices(std::size_t length, std::span<const std::size_t> indices);
  static BitVector from_indices(std::size_t length, std::initializer_list<std::size_t> indices);
  /// Parses a string of '0'/'1' characters.
  static BitVector from_string(const std::string& bits);

  std::size_t size() const { return length_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t weight() const;
  bool none() const;
  /// Index of the lowest set bit, or size() when the vector is zero.
  std::size_t first_set() const;
  std::vector<std::size_t> support() const;

  BitVector complement() const;
  bool is_subset_of(const BitVector& other) const;
  bool dot(const BitVector& other) const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
  bool operator==(const BitVector& other) const = default;

  /// Concatenation (this | other), used for symplectic masks.
  BitVector concat(const BitVector& other) const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }
  std::string to_string() const;

 private:
  void check_same_length(const BitVector& other) const;

  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  /// Zero matrix.
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix from_rows(std::size_t cols, std::vector<BitVector> rows);
  static BitMatrix from_supports(std::size_t cols,
                                 const std::vector<std::vector<std::size_t>>& supports);
  static BitMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const BitVector& row(std::size_t i) const { return data_[i]; }
  const std::vector<BitVector>& row_data() const { return data_; }
  bool get(std::size_t i, std::size_t j) const { return data_[i].get(j); }

  std::size_t column_weight(std::size_t j) const;
  BitMatrix transpose() const;
  /// M * v, one bit per row.
  BitVector apply(const BitVector& v) const;
  /// Rows of this stacked above rows of other.
  BitMatrix stacked(const BitMatrix& other) const;
  BitMatrix with_row(const BitVector& v) const;

  bool operator==(const BitMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BitVector> data_;
};

/// Incrementally built row-echelon basis. Each stored vector has a distinct
/// pivot (its lowest set bit) and is reduced against the earlier ones.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t length) : length_(length) {}

  /// Adds v; returns false when v was already in the span.
  bool insert(BitVector v);
  /// Reduces v against the basis; the result is zero iff v is in the span.
  BitVector reduce(BitVector v) const;
  bool contains(const BitVector& v) const { return reduce(v).none(); }
  std::size_t rank() const { return basis_.size(); }
  std::size_t length() const { return length_; }

 private:
  std::size_t length_;
  std::vector<BitVector> basis_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const BitMatrix& m);
/// Rank of the submatrix formed by the columns selected in mask. Same result as
/// rank(restrict_columns(m, mask)) without materializing the submatrix.
std::size_t masked_rank(const BitMatrix& m, const BitVector& mask);
std::vector<BitVector> kernel_basis(const BitMatrix& m);
bool row_space_contains(const BitMatrix& m, const BitVector& v);
BitMatrix restrict_columns(const BitMatrix& m, const BitVector& mask);
/// True iff every row of a is orthogonal to every row of b.
bool rows_orthogonal(const BitMatrix& a, const BitMatrix& b);

}  // namespace qeb
