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

#include "qeb/stabilizer.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "qeb/rank_profile.hpp"

namespace qeb {

// ---------------------------------------------------------------------------
// PauliOperator

PauliOperator::PauliOperator(BitVector x_mask, BitVector z_mask)
    : x(std::move(x_mask)), z(std::move(z_mask)) {
  if (x.size() != z.size()) throw std::invalid_argument("x and z masks differ in length");
}

PauliOperator PauliOperator::identity(std::size_t n) { return {BitVector(n), BitVector(n)}; }

PauliOperator PauliOperator::from_string(const std::string& word) {
  PauliOperator p = identity(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    switch (word[i]) {
      case 'I':
        break;
      case 'X':
        p.x.set(i);
        break;
      case 'Z':
        p.z.set(i);
        break;
      case 'Y':
        p.x.set(i);
        p.z.set(i);
        break;
      default:
        throw std::invalid_argument("Pauli word may only contain I, X, Y, Z: '" + word + "'");
    }
  }
  return p;
}

char PauliOperator::at(std::size_t i) const {
  static constexpr char kLetters[] = {'I', 'X', 'Z', 'Y'};
  return kLetters[x.get(i) | (z.get(i) << 1)];
}

std::string PauliOperator::to_string() const {
  std::string s(size(), 'I');
  for (std::size_t i = 0; i < size(); ++i) s[i] = at(i);
  return s;
}

PauliOperator& PauliOperator::operator*=(const PauliOperator& other) {
  x ^= other.x;
  z ^= other.z;
  return *this;
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
  if (p.size() != q.size()) throw std::invalid_argument("Pauli operators differ in length");
  return p.x.dot(q.z) == p.z.dot(q.x);
}

// ---------------------------------------------------------------------------
// StabilizerMatrix

StabilizerMatrix::StabilizerMatrix(std::size_t n, std::vector<PauliOperator> rows)
    : n_(n), rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != n_) throw std::invalid_argument("stabilizer row has wrong qubit count");
  }
}

StabilizerMatrix StabilizerMatrix::from_strings(const std::vector<std::string>& words) {
  if (words.empty()) throw std::invalid_argument("from_strings needs at least one row");
  std::vector<PauliOperator> rows;
  for (const auto& w : words) rows.push_back(PauliOperator::from_string(w));
  return {words.front().size(), std::move(rows)};
}

namespace {

// Skips whitespace and `#` comments running to the end of the line.
std::istream& skip_comments(std::istream& in) {
  while (in >> std::ws && in.peek() == '#') {
    in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
  }
  return in;
}

}  // namespace

StabilizerMatrix parse_stabilizer(std::istream& in) {
  skip_comments(in);
  std::string tag;
  long long n = -1, r = -1;
  if (!(in >> tag >> n >> r) || tag != "stab" || n < 0 || r < 0) {
    throw std::invalid_argument("expected header 'stab n r'");
  }
  std::vector<PauliOperator> rows;
  for (long long i = 0; i < r; ++i) {
    std::string word;
    if (!(skip_comments(in) >> word)) throw std::invalid_argument("stabilizer file ended before all rows were read");
    if (static_cast<long long>(word.size()) != n) {
      throw std::invalid_argument("stabilizer row " + std::to_string(i) + " has length " +
                                  std::to_string(word.size()) + ", expected " + std::to_string(n));
    }
    rows.push_back(PauliOperator::from_string(word));
  }
  return {static_cast<std::size_t>(n), std::move(rows)};
}

StabilizerMatrix parse_stabilizer(const std::string& text) {
  std::istringstream in(text);
  return parse_stabilizer(in);
}

std::string format_stabilizer(const StabilizerMatrix& h) {
  std::ostringstream out;
  out << "stab " << h.num_qubits() << ' ' << h.num_rows() << '\n';
  for (const auto& r : h.rows()) out << r.to_string() << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Linear-algebraic views

BitVector syndrome(const StabilizerMatrix& h, const PauliOperator& e) {
  if (e.size() != h.num_qubits()) throw std::invalid_argument("error has wrong qubit count");
  BitVector s(h.num_rows());
  for (std::size_t i = 0; i < h.num_rows(); ++i) s.set(i, !commutes(h.row(i), e));
  return s;
}

BitMatrix to_symplectic(const StabilizerMatrix& h) {
  std::vector<BitVector> rows;
  rows.reserve(h.num_rows());
  for (const auto& r : h.rows()) rows.push_back(r.x.concat(r.z));
  return BitMatrix::from_rows(2 * h.num_qubits(), std::move(rows));
}

bool validate(const StabilizerMatrix& h) {
  for (std::size_t i = 0; i < h.num_rows(); ++i) {
    for (std::size_t j = i + 1; j < h.num_rows(); ++j) {
      if (!commutes(h.row(i), h.row(j))) return false;
    }
  }
  return true;
}

namespace {

void require_valid(const StabilizerMatrix& h) {
  if (!validate(h)) throw std::invalid_argument("stabilizer rows do not commute");
}

}  // namespace

std::size_t num_logical(const StabilizerMatrix& h) {
  require_valid(h);
  return h.num_qubits() - rank(to_symplectic(h));
}

BitVector symplectic_mask(const ErasureMask& e) { return e.concat(e); }

ErasureAnalysis analyze_erasure(const StabilizerMatrix& h, const ErasureMask& e) {
  require_valid(h);
  if (e.size() != h.num_qubits()) throw std::invalid_argument("erasure mask has wrong length");
  const BitMatrix sym = to_symplectic(h);
  ErasureAnalysis a;
  a.rank_h = rank(sym);
  a.rank_erased = masked_rank(sym, symplectic_mask(e));
  a.rank_unerased = masked_rank(sym, symplectic_mask(e.complement()));
  a.dim_nse = 2 * e.weight() - a.rank_erased;
  a.dim_se = a.rank_h - a.rank_unerased;
  a.correctable = a.dim_nse == a.dim_se;
  a.cond_entropy_bits = static_cast<double>(a.dim_nse - a.dim_se);
  return a;
}

// ---------------------------------------------------------------------------
// Brute-force census

namespace {

// A Pauli operator restricted to the erased qubits, packed as
// (x bits | z bits << w) with bit k referring to the k-th erased qubit.
std::uint64_t pack_local(const PauliOperator& p, const std::vector<std::size_t>& pos) {
  std::uint64_t out = 0;
  const std::size_t w = pos.size();
  for (std::size_t k = 0; k < w; ++k) {
    out |= std::uint64_t{p.x.get(pos[k])} << k;
    out |= std::uint64_t{p.z.get(pos[k])} << (k + w);
  }
  return out;
}

double entropy_bits(const std::vector<std::uint64_t>& counts, std::uint64_t total) {
  double h = 0.0;
  for (std::uint64_t c : counts) {
    const double q = static_cast<double>(c) / static_cast<double>(total);
    h -= q * std::log2(q);
  }
  return h;
}

}  // namespace

CoveredEnumeration enumerate_covered(const StabilizerMatrix& h, const ErasureMask& e,
                                     std::size_t cap) {
  if (e.size() != h.num_qubits()) throw std::invalid_argument("erasure mask has wrong length");
  const std::vector<std::size_t> pos = e.support();
  const std::size_t w = pos.size();
  const std::size_t r = h.num_rows();
  if (w > cap) throw std::length_error("erasure weight exceeds the enumeration cap");
  if (r > 20) throw std::length_error("too many stabilizer rows for group enumeration");
  if (h.num_qubits() > 64) throw std::length_error("enumeration supports at most 64 qubits");

  // Row restrictions to the erased qubits, split in x and z parts.
  const std::uint64_t low = (std::uint64_t{1} << w) - 1;
  std::vector<std::uint64_t> row_x(r), row_z(r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::uint64_t packed = pack_local(h.row(i), pos);
    row_x[i] = packed & low;
    row_z[i] = packed >> w;
  }

  // Stabilizer group elements supported inside E: walk all 2^r products in
  // Gray-code order and keep those that act trivially outside E.
  const ErasureMask outside = e.complement();
  std::unordered_set<std::uint64_t> covered_stabilizers;
  PauliOperator g = PauliOperator::identity(h.num_qubits());
  for (std::uint64_t k = 0;; ++k) {
    if (((g.x | g.z) & outside).none()) covered_stabilizers.insert(pack_local(g, pos));
    if (k + 1 == (std::uint64_t{1} << r)) break;
    g *= h.row(static_cast<std::size_t>(std::countr_zero(k + 1)));
  }

  CoveredEnumeration out;
  out.covered = std::uint64_t{1} << (2 * w);
  out.stabilizers = covered_stabilizers.size();

  // (syndrome, canonical class representative) for every covered error.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> keyed(out.covered);
  for (std::uint64_t t = 0; t < out.covered; ++t) {
    const std::uint64_t tx = t & low;
    const std::uint64_t tz = t >> w;
    std::uint64_t syn = 0;
    for (std::size_t i = 0; i < r; ++i) {
      syn |= static_cast<std::uint64_t>(std::popcount((tx & row_z[i]) ^ (tz & row_x[i])) & 1) << i;
    }
    std::uint64_t canon = t;
    for (std::uint64_t s : covered_stabilizers) canon = std::min(canon, t ^ s);
    keyed[t] = {syn, canon};
    ++out.histogram[syn];
    if (syn == 0) {
      ++out.zero_syndrome;
      if (!covered_stabilizers.count(t)) ++out.problematic;
    }
  }

  std::sort(keyed.begin(), keyed.end());
  out.min_coset_entropy_bits = std::numeric_limits<double>::infinity();
  out.max_coset_entropy_bits = 0.0;
  for (std::size_t lo = 0; lo < keyed.size();) {
    std::size_t hi = lo;
    std::vector<std::uint64_t> class_sizes;
    while (hi < keyed.size() && keyed[hi].first == keyed[lo].first) {
      std::size_t run = hi;
      while (run < keyed.size() && keyed[run] == keyed[hi]) ++run;
      class_sizes.push_back(run - hi);
      hi = run;
    }
    const double hbits = entropy_bits(class_sizes, hi - lo);
    out.min_coset_entropy_bits = std::min(out.min_coset_entropy_bits, hbits);
    out.max_coset_entropy_bits = std::max(out.max_coset_entropy_bits, hbits);
    lo = hi;
  }
  return out;
}

double fano_lower_bound(const StabilizerMatrix& h, double p, const ExpectationMode& mode) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("erasure probability must lie in [0, 1]");
  require_valid(h);
  const ErasureMatrix view = ErasureMatrix::symplectic(h);
  const double n = static_cast<double>(h.num_qubits());
  // E[rank H_Ebar - rank H_E] = n * delta(p).
  const double gap = n * delta(view, p, mode).value;
  return (2.0 * n * p - static_cast<double>(view.full_rank()) + gap - 1.0) / (2.0 * n);
}

StabilizerMatrix random_stabilizer(std::size_t n, std::size_t r, Substream& rng) {
  std::vector<PauliOperator> rows;
  while (rows.size() < r) {
    PauliOperator p = PauliOperator::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
      p.x.set(i, rng() & 1);
      p.z.set(i, rng() & 1);
    }
    if (std::all_of(rows.begin(), rows.end(), [&](const auto& q) { return commutes(p, q); })) {
      rows.push_back(std::move(p));
    }
  }
  return {n, std::move(rows)};
}

}  // namespace qeb
