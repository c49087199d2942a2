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

#include "qeb/rank_profile.hpp"

#include <bit>
#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "qeb/random.hpp"

namespace qeb {

// ---------------------------------------------------------------------------
// ErasureMatrix

ErasureMatrix::ErasureMatrix(BitMatrix m, bool symplectic, std::size_t positions)
    : matrix_(std::move(m)), symplectic_(symplectic), positions_(positions) {
  full_rank_ = rank(matrix_);
}

ErasureMatrix ErasureMatrix::binary(BitMatrix m) {
  const std::size_t n = m.cols();
  return ErasureMatrix(std::move(m), false, n);
}

ErasureMatrix ErasureMatrix::symplectic(const StabilizerMatrix& h) {
  return ErasureMatrix(to_symplectic(h), true, h.num_qubits());
}

BitVector ErasureMatrix::column_mask(const ErasureMask& e) const {
  if (e.size() != positions_) throw std::invalid_argument("erasure mask has wrong length");
  return symplectic_ ? symplectic_mask(e) : e;
}

std::size_t ErasureMatrix::rank_on(const ErasureMask& e) const {
  return masked_rank(matrix_, column_mask(e));
}

// ---------------------------------------------------------------------------
// Exact enumeration

namespace {

void require_enumerable(std::size_t positions, std::size_t cap) {
  if (positions > cap) throw std::length_error("too many positions for exact enumeration");
}

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("probability must lie in [0, 1]");
}

}  // namespace

RankEnumerator::RankEnumerator(const ErasureMatrix& h, std::size_t cap)
    : positions_(h.positions()), rank_sums_(h.positions() + 1, 0) {
  require_enumerable(positions_, cap);
  ErasureMask mask(positions_);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << positions_); ++bits) {
    if (positions_) mask.words()[0] = bits;
    rank_sums_[static_cast<std::size_t>(std::popcount(bits))] += h.rank_on(mask);
  }
}

double RankEnumerator::phi(double p) const {
  if (positions_ == 0) return 0.0;
  double sum = 0.0;
  for (std::size_t w = 0; w <= positions_; ++w) {
    sum += static_cast<double>(rank_sums_[w]) * std::pow(p, static_cast<double>(w)) *
           std::pow(1.0 - p, static_cast<double>(positions_ - w));
  }
  return sum / static_cast<double>(positions_);
}

Rational RankEnumerator::phi(const Rational& p) const {
  if (positions_ == 0) return Rational(0);
  const Rational q = Rational(1) - p;
  std::vector<Rational> p_pow(positions_ + 1, Rational(1)), q_pow(positions_ + 1, Rational(1));
  for (std::size_t w = 1; w <= positions_; ++w) {
    p_pow[w] = p_pow[w - 1] * p;
    q_pow[w] = q_pow[w - 1] * q;
  }
  Rational sum = 0;
  for (std::size_t w = 0; w <= positions_; ++w) {
    if (!rank_sums_[w]) continue;
    sum += Rational(rank_sums_[w]) * p_pow[w] * q_pow[positions_ - w];
  }
  return sum / static_cast<long long>(positions_);
}

// ---------------------------------------------------------------------------
// Monte Carlo

namespace {

Estimate sample_phi(const ErasureMatrix& h, double p, const MonteCarloMode& mc,
                    std::uint64_t stream) {
  if (mc.trials == 0) throw std::invalid_argument("Monte Carlo needs at least one trial");
  const std::size_t n = h.positions();
  if (n == 0) return {};
  // Integer sums keep the result independent of trial order.
  std::uint64_t sum = 0, sum_sq = 0;
  ErasureMask mask(n);
  for (std::uint64_t t = 0; t < mc.trials; ++t) {
    Substream rng(mc.seed, stream, t);
    for (std::size_t i = 0; i < n; ++i) mask.set(i, rng.bernoulli(p));
    const std::uint64_t r = h.rank_on(mask);
    sum += r;
    sum_sq += r * r;
  }
  const double trials = static_cast<double>(mc.trials);
  const double mean = static_cast<double>(sum) / trials;
  double var = 0.0;
  if (mc.trials > 1) {
    var = (static_cast<double>(sum_sq) - trials * mean * mean) / (trials - 1.0);
    var = std::max(var, 0.0);
  }
  const double scale = static_cast<double>(n);
  return {mean / scale, std::sqrt(var / trials) / scale};
}

}  // namespace

Estimate phi(const ErasureMatrix& h, double p, const ExpectationMode& mode) {
  require_probability(p);
  if (const auto* exact = std::get_if<ExactMode>(&mode)) {
    return {RankEnumerator(h, exact->cap).phi(p), 0.0};
  }
  return sample_phi(h, p, std::get<MonteCarloMode>(mode), 0);
}

Estimate delta(const ErasureMatrix& h, double p, const ExpectationMode& mode) {
  require_probability(p);
  if (const auto* exact = std::get_if<ExactMode>(&mode)) {
    return {RankEnumerator(h, exact->cap).delta(p), 0.0};
  }
  const auto& mc = std::get<MonteCarloMode>(mode);
  const Estimate hi = sample_phi(h, 1.0 - p, mc, 1);
  const Estimate lo = sample_phi(h, p, mc, 0);
  return {hi.value - lo.value, std::hypot(hi.std_error, lo.std_error)};
}

Estimate empirical_rate_bound(const ErasureMatrix& h, double p, const ExpectationMode& mode) {
  const Estimate d = delta(h, p, mode);
  return {1.0 - 2.0 * p - d.value, d.std_error};
}

// ---------------------------------------------------------------------------
// Shape checks

ShapeReport check_monotone_concave(const ErasureMatrix& h, std::span<const double> grid,
                                   double tol, std::size_t cap) {
  const RankEnumerator en(h, cap);
  std::vector<Rational> values;
  values.reserve(grid.size());
  for (double p : grid) {
    require_probability(p);
    values.push_back(en.phi(Rational(p)));
  }
  ShapeReport report;
  report.points = grid.size();
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const double drop = static_cast<double>(values[i] - values[i + 1]);
    if (drop > tol) ++report.monotone_violations;
    report.max_violation = std::max(report.max_violation, drop);
  }
  for (std::size_t i = 0; i + 2 < values.size(); ++i) {
    const Rational mid = en.phi((Rational(grid[i]) + Rational(grid[i + 2])) / 2);
    const double gap = static_cast<double>((values[i] + values[i + 2]) / 2 - mid);
    if (gap > tol) ++report.concavity_violations;
    report.max_violation = std::max(report.max_violation, gap);
  }
  return report;
}

double delta_lower_bound(std::size_t rank_h, std::size_t n, double p, double m) {
  if (p >= 1.0) throw std::domain_error("delta_lower_bound requires p < 1");
  if (n == 0) throw std::invalid_argument("code length must be positive");
  return (1.0 - 2.0 * p) / (1.0 - p) *
         (static_cast<double>(rank_h) / static_cast<double>(n) - m);
}

SubmodularReport check_submodular(const BitMatrix& m, std::uint64_t trials, std::uint64_t seed) {
  SubmodularReport report;
  report.trials = trials;
  BitVector a(m.cols()), b(m.cols());
  for (std::uint64_t t = 0; t < trials; ++t) {
    Substream rng(seed, 0, t);
    // A varying inclusion rate exercises both sparse and dense subsets.
    const double pa = rng.uniform(), pb = rng.uniform();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      a.set(j, rng.bernoulli(pa));
      b.set(j, rng.bernoulli(pb));
    }
    const std::size_t lhs = masked_rank(m, a & b) + masked_rank(m, a | b);
    const std::size_t rhs = masked_rank(m, a) + masked_rank(m, b);
    if (lhs > rhs) ++report.violations;
    if (lhs == rhs) ++report.equalities;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Profiles

RankProfile rank_profile(const ErasureMatrix& h, std::span<const double> grid,
                         const ExpectationMode& mode) {
  RankProfile prof;
  std::optional<RankEnumerator> en;
  if (const auto* exact = std::get_if<ExactMode>(&mode)) en.emplace(h, exact->cap);
  for (double p : grid) {
    require_probability(p);
    Estimate f, d;
    if (en) {
      f = {en->phi(p), 0.0};
      d = {en->delta(p), 0.0};
    } else {
      f = phi(h, p, mode);
      d = delta(h, p, mode);
    }
    prof.p_grid.push_back(p);
    prof.phi.push_back(f.value);
    prof.phi_stderr.push_back(f.std_error);
    prof.delta.push_back(d.value);
    prof.delta_stderr.push_back(d.std_error);
    prof.rate_bound.push_back(1.0 - 2.0 * p - d.value);
  }
  return prof;
}

void write_profile_csv(std::ostream& out, const RankProfile& profile) {
  const auto old_flags = out.flags();
  const auto old_precision = out.precision(12);
  out.unsetf(std::ios::floatfield);
  out << "p,phi,phi_stderr,delta,delta_stderr,rate_bound\n";
  for (std::size_t i = 0; i < profile.p_grid.size(); ++i) {
    out << profile.p_grid[i] << ',' << profile.phi[i] << ',' << profile.phi_stderr[i] << ','
        << profile.delta[i] << ',' << profile.delta_stderr[i] << ',' << profile.rate_bound[i]
        << '\n';
  }
  out.precision(old_precision);
  out.flags(old_flags);
}

}  // namespace qeb
