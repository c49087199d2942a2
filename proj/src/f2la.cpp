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

#include "qeb/f2la.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qeb {
namespace {

constexpr std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

// Rank of nrows packed rows of nwords words each; destroys buf.
std::size_t eliminate(std::vector<std::uint64_t>& buf, std::size_t nrows, std::size_t nwords) {
  std::size_t rank = 0;
  for (std::size_t w = 0; w < nwords && rank < nrows; ++w) {
    for (int b = 0; b < 64 && rank < nrows; ++b) {
      const std::uint64_t bit = std::uint64_t{1} << b;
      std::size_t pivot = rank;
      while (pivot < nrows && !(buf[pivot * nwords + w] & bit)) ++pivot;
      if (pivot == nrows) continue;
      if (pivot != rank) {
        std::swap_ranges(buf.begin() + pivot * nwords + w, buf.begin() + (pivot + 1) * nwords,
                         buf.begin() + rank * nwords + w);
      }
      const std::uint64_t* src = &buf[rank * nwords];
      for (std::size_t i = rank + 1; i < nrows; ++i) {
        std::uint64_t* dst = &buf[i * nwords];
        if (dst[w] & bit) {
          for (std::size_t k = w; k < nwords; ++k) dst[k] ^= src[k];
        }
      }
      ++rank;
    }
  }
  return rank;
}

}  // namespace

// ---------------------------------------------------------------------------
// BitVector

BitVector::BitVector(std::size_t length) : length_(length), words_(word_count(length), 0) {}

BitVector BitVector::from_indices(std::size_t length, std::span<const std::size_t> indices) {
  BitVector v(length);
  for (std::size_t i : indices) {
    if (i >= length) throw std::out_of_range("bit index out of range");
    v.set(i);
  }
  return v;
}

BitVector BitVector::from_indices(std::size_t length, std::initializer_list<std::size_t> indices) {
  return from_indices(length, std::span<const std::size_t>(indices.begin(), indices.size()));
}

BitVector BitVector::from_string(const std::string& bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
  }
  return v;
}

void BitVector::set(std::size_t i, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (i & 63);
  if (value) {
    words_[i >> 6] |= bit;
  } else {
    words_[i >> 6] &= ~bit;
  }
}

std::size_t BitVector::weight() const {
  std::size_t w = 0;
  for (std::uint64_t word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool BitVector::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVector::first_set() const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
  }
  return length_;
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    std::uint64_t word = words_[k];
    while (word) {
      out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

BitVector BitVector::complement() const {
  BitVector out(length_);
  for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] = ~words_[k];
  if (length_ % 64 && !out.words_.empty()) {
    out.words_.back() &= (std::uint64_t{1} << (length_ % 64)) - 1;
  }
  return out;
}

bool BitVector::is_subset_of(const BitVector& other) const {
  check_same_length(other);
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] & ~other.words_[k]) return false;
  }
  return true;
}

bool BitVector::dot(const BitVector& other) const {
  check_same_length(other);
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & other.words_[k];
  return std::popcount(acc) & 1;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  check_same_length(other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  check_same_length(other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  check_same_length(other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
  return *this;
}

BitVector BitVector::concat(const BitVector& other) const {
  BitVector out(length_ + other.length_);
  for (std::size_t i : support()) out.set(i);
  for (std::size_t i : other.support()) out.set(length_ + i);
  return out;
}

std::string BitVector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

void BitVector::check_same_length(const BitVector& other) const {
  if (length_ != other.length_) throw std::invalid_argument("bit vector length mismatch");
}

// ---------------------------------------------------------------------------
// BitMatrix

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::from_rows(std::size_t cols, std::vector<BitVector> rows) {
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("row length does not match column count");
  }
  BitMatrix m;
  m.rows_ = rows.size();
  m.cols_ = cols;
  m.data_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::from_supports(std::size_t cols,
                                   const std::vector<std::vector<std::size_t>>& supports) {
  std::vector<BitVector> rows;
  rows.reserve(supports.size());
  for (const auto& s : supports) rows.push_back(BitVector::from_indices(cols, s));
  return from_rows(cols, std::move(rows));
}

BitMatrix BitMatrix::identity(std::size_t n) {
  std::vector<BitVector> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(BitVector::from_indices(n, {i}));
  return from_rows(n, std::move(rows));
}

std::size_t BitMatrix::column_weight(std::size_t j) const {
  std::size_t w = 0;
  for (const auto& r : data_) w += r.get(j);
  return w;
}

BitMatrix BitMatrix::transpose() const {
  std::vector<BitVector> cols(cols_, BitVector(rows_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j : data_[i].support()) cols[j].set(i);
  }
  return from_rows(rows_, std::move(cols));
}

BitVector BitMatrix::apply(const BitVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length does not match column count");
  BitVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.set(i, data_[i].dot(v));
  return out;
}

BitMatrix BitMatrix::stacked(const BitMatrix& other) const {
  if (other.cols_ != cols_ && other.rows_ && rows_) {
    throw std::invalid_argument("cannot stack matrices with different column counts");
  }
  std::vector<BitVector> rows = data_;
  rows.insert(rows.end(), other.data_.begin(), other.data_.end());
  return from_rows(rows_ ? cols_ : other.cols_, std::move(rows));
}

BitMatrix BitMatrix::with_row(const BitVector& v) const {
  std::vector<BitVector> rows = data_;
  rows.push_back(v);
  return from_rows(cols_, std::move(rows));
}

// ---------------------------------------------------------------------------
// EchelonBasis

BitVector EchelonBasis::reduce(BitVector v) const {
  if (v.size() != length_) throw std::invalid_argument("vector length does not match basis");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (v.get(pivots_[k])) v ^= basis_[k];
  }
  return v;
}

bool EchelonBasis::insert(BitVector v) {
  v = reduce(std::move(v));
  const std::size_t pivot = v.first_set();
  if (pivot == length_) return false;
  // Keep earlier vectors free of the new pivot so reduce() stays a single pass.
  for (auto& b : basis_) {
    if (b.get(pivot)) b ^= v;
  }
  basis_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

// ---------------------------------------------------------------------------
// Free functions

std::size_t masked_rank(const BitMatrix& m, const BitVector& mask) {
  if (mask.size() != m.cols()) throw std::invalid_argument("mask length does not match columns");
  const std::size_t nwords = word_count(m.cols());
  std::vector<std::uint64_t> buf(m.rows() * nwords);
  const auto mw = mask.words();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto rw = m.row(i).words();
    for (std::size_t k = 0; k < nwords; ++k) buf[i * nwords + k] = rw[k] & mw[k];
  }
  return eliminate(buf, m.rows(), nwords);
}

std::size_t rank(const BitMatrix& m) {
  const std::size_t nwords = word_count(m.cols());
  std::vector<std::uint64_t> buf(m.rows() * nwords);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto rw = m.row(i).words();
    std::copy(rw.begin(), rw.end(), buf.begin() + i * nwords);
  }
  return eliminate(buf, m.rows(), nwords);
}

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
  // Reduced row echelon form, then one basis vector per free column.
  std::vector<BitVector> rows = m.row_data();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;

  std::vector<BitVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVector v(m.cols());
    v.set(f);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
      if (rows[k].get(f)) v.set(pivot_cols[k]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool row_space_contains(const BitMatrix& m, const BitVector& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("vector length does not match columns");
  EchelonBasis basis(m.cols());
  for (const auto& r : m.row_data()) basis.insert(r);
  return basis.contains(v);
}

BitMatrix restrict_columns(const BitMatrix& m, const BitVector& mask) {
  if (mask.size() != m.cols()) throw std::invalid_argument("mask length does not match columns");
  const std::vector<std::size_t> keep = mask.support();
  std::vector<BitVector> rows;
  rows.reserve(m.rows());
  for (const auto& r : m.row_data()) {
    BitVector out(keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) {
      if (r.get(keep[k])) out.set(k);
    }
    rows.push_back(std::move(out));
  }
  return BitMatrix::from_rows(keep.size(), std::move(rows));
}

bool rows_orthogonal(const BitMatrix& a, const BitMatrix& b) {
  for (const auto& ra : a.row_data()) {
    for (const auto& rb : b.row_data()) {
      if (ra.dot(rb)) return false;
    }
  }
  return true;
}

}  // namespace qeb
