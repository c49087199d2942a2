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

// Test-only helpers: slow dense references and fixtures.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qeb/f2la.hpp"
#include "qeb/random.hpp"
#include "qeb/stabilizer.hpp"

#ifndef QEB_DATA_DIR
#define QEB_DATA_DIR "data"
#endif

namespace qeb::test {

using Dense = std::vector<std::vector<int>>;

inline Dense to_dense(const BitMatrix& m) {
  Dense d(m.rows(), std::vector<int>(m.cols(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m.get(i, j) ? 1 : 0;
  }
  return d;
}

// Textbook elimination on an int matrix, one entry at a time.
inline std::size_t dense_rank(Dense d) {
  std::size_t r = 0;
  const std::size_t cols = d.empty() ? 0 : d[0].size();
  for (std::size_t c = 0; c < cols && r < d.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < d.size() && d[pivot][c] == 0) ++pivot;
    if (pivot == d.size()) continue;
    std::swap(d[r], d[pivot]);
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (i != r && d[i][c]) {
        for (std::size_t j = 0; j < cols; ++j) d[i][j] ^= d[r][j];
      }
    }
    ++r;
  }
  return r;
}

inline std::size_t dense_rank_on(const BitMatrix& m, const std::vector<std::size_t>& cols) {
  Dense d(m.rows(), std::vector<int>(cols.size(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) d[i][j] = m.get(i, cols[j]) ? 1 : 0;
  }
  return dense_rank(std::move(d));
}

inline BitMatrix random_matrix(std::size_t rows, std::size_t cols, Substream& rng) {
  std::vector<BitVector> out(rows, BitVector(cols));
  for (auto& row : out) {
    for (std::size_t j = 0; j < cols; ++j) row.set(j, rng() & 1);
  }
  return BitMatrix::from_rows(cols, std::move(out));
}

inline BitVector random_vector(std::size_t n, Substream& rng, double density = 0.5) {
  BitVector v(n);
  for (std::size_t j = 0; j < n; ++j) v.set(j, rng.bernoulli(density));
  return v;
}

inline ErasureMask mask_from_bits(std::size_t n, std::uint64_t bits) {
  ErasureMask e(n);
  for (std::size_t i = 0; i < n; ++i) e.set(i, (bits >> i) & 1);
  return e;
}

inline StabilizerMatrix worked_example() {
  return StabilizerMatrix::from_strings({"IXZYZ", "ZZXIZ", "IYYYZ"});
}

inline std::string data_path(const std::string& name) {
  return std::string(QEB_DATA_DIR) + "/" + name;
}

}  // namespace qeb::test
