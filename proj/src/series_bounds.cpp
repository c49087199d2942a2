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

#include "qeb/series_bounds.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace qeb {

// ---------------------------------------------------------------------------
// RationalSeries

RationalSeries::RationalSeries(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {}

RationalSeries RationalSeries::truncated_product(const RationalSeries& other) const {
  const std::size_t len = std::min(size(), other.size());
  std::vector<Rational> out(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < len; ++j) {
      if (other.coeffs_[j] != 0) out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return RationalSeries(std::move(out));
}

RationalSeries RationalSeries::truncated_power(unsigned e) const {
  std::vector<Rational> one(size());
  if (!one.empty()) one[0] = 1;
  RationalSeries result(std::move(one));
  RationalSeries base = *this;
  while (e) {
    if (e & 1u) result = result.truncated_product(base);
    e >>= 1;
    if (e) base = base.truncated_product(base);
  }
  return result;
}

double RationalSeries::evaluate(double z) const {
  double acc = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * z + static_cast<double>(coeffs_[k]);
  return acc;
}

// ---------------------------------------------------------------------------
// Subtree counts

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

namespace {

void require_degree(unsigned m) {
  if (m < 3) throw std::invalid_argument("tree degree m must be at least 3");
}

}  // namespace

RationalSeries planted_coeffs(unsigned m, unsigned k_max) {
  require_degree(m);
  std::vector<Rational> b(k_max + 1);
  for (unsigned k = 1; k <= k_max; ++k) {
    b[k] = Rational(binomial(k * (m - 1), k - 1), BigInt(k));
  }
  return RationalSeries(std::move(b));
}

RationalSeries rooted_coeffs(unsigned m, unsigned k_max) {
  RationalSeries shifted = planted_coeffs(m, k_max);
  shifted[0] += 1;
  return shifted.truncated_power(m);
}

bool satisfies_functional_equation(const RationalSeries& planted, unsigned m, unsigned k_max) {
  require_degree(m);
  if (planted.size() < k_max + 1) return false;
  std::vector<Rational> head(planted.coefficients().begin(),
                             planted.coefficients().begin() + k_max + 1);
  RationalSeries one_plus(head);
  one_plus[0] += 1;
  const RationalSeries power = one_plus.truncated_power(m - 1);
  // Coefficient k of z (1 + T1)^{m-1} is coefficient k - 1 of the power.
  if (planted[0] != 0) return false;
  for (unsigned k = 1; k <= k_max; ++k) {
    if (planted[k] != power[k - 1]) return false;
  }
  return true;
}

bool verify_functional_equation(unsigned m, unsigned k_max) {
  return satisfies_functional_equation(planted_coeffs(m, k_max), m, k_max);
}

RationalSeries s_poly(unsigned m, unsigned delta) {
  const RationalSeries a = rooted_coeffs(m, delta);
  std::vector<Rational> s(delta + 1);
  for (unsigned k = 0; k <= delta; ++k) s[k] = a[k] / (k + 1);
  return RationalSeries(std::move(s));
}

// ---------------------------------------------------------------------------
// Bounds

namespace {

// Double-precision coefficients of S_delta without the constant term,
// computed once per (m, delta).
const std::vector<double>& s_tail(unsigned m, unsigned delta) {
  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, std::vector<double>> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace({m, delta});
  if (inserted) {
    const RationalSeries s = s_poly(m, delta);
    it->second.assign(s.size(), 0.0);
    for (std::size_t k = 1; k < s.size(); ++k) it->second[k] = static_cast<double>(s[k]);
  }
  return it->second;
}

// 1 - (1-p)^m S_delta(p (1-p)^{m-2}), arranged to avoid cancellation at small p.
double uncovered_mass(unsigned m, unsigned delta, double p) {
  const std::vector<double>& tail = s_tail(m, delta);
  const double log_q = std::log1p(-p);
  const double q = std::exp(m * log_q);
  const double one_minus_q = -std::expm1(m * log_q);
  const double z = p * std::exp((m - 2.0) * log_q);
  double s_minus_one = 0.0;
  for (std::size_t k = tail.size(); k-- > 1;) s_minus_one = (s_minus_one + tail[k]) * z;
  return one_minus_q - q * s_minus_one;
}

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("probability must lie in [0, 1]");
}

}  // namespace

double stab_bound(unsigned m, double p) {
  if (m < 2) throw std::invalid_argument("stab_bound needs m >= 2");
  if (!(p > 0.0 && p <= 0.5)) throw std::domain_error("stab_bound needs 0 < p <= 1/2");
  const double log_t = (m - 1.0) * std::log1p(-p);
  const double t = std::exp(log_t);
  const double one_minus_t = -std::expm1(log_t);
  // + 0.0 turns a negative zero at p = 1/2 into +0.
  return (1.0 - 2.0 * p) * one_minus_t / (one_minus_t + 2.0 * p * t) + 0.0;
}

double stab_bound_at_zero(unsigned m) {
  if (m < 2) throw std::invalid_argument("stab_bound needs m >= 2");
  return (m - 1.0) / (m + 1.0);
}

double mean_rank_upper(unsigned m, unsigned delta, double p) {
  require_degree(m);
  require_probability(p);
  if (p == 1.0) return 2.0 / m;
  return 2.0 / m * uncovered_mass(m, delta, p);
}

double css2m_bound(unsigned m, double p) {
  if (m < 5) throw std::invalid_argument("css2m_bound needs m >= 5");
  if (!(p >= 0.0 && p <= 0.5)) throw std::domain_error("css2m_bound needs 0 <= p <= 1/2");
  if (p == 0.0) return 1.0;
  return (1.0 - 2.0 * p) * (4.0 / (m * p) * uncovered_mass(m, m - 2, p) - 1.0) + 0.0;
}

double evaluate_bound(const BoundSpec& spec, double p) {
  if (spec.kind == BoundKind::kStabilizer) {
    return p == 0.0 ? stab_bound_at_zero(spec.m) : stab_bound(spec.m, p);
  }
  return css2m_bound(spec.m, p);
}

const char* kind_name(BoundKind kind) { return kind == BoundKind::kStabilizer ? "stab" : "css2m"; }

double threshold_solve(const BoundSpec& spec, const ThresholdOptions& options) {
  if (spec.kind == BoundKind::kStabilizer ? spec.m < 2 : spec.m < 5) {
    throw std::invalid_argument("bound degree m out of range");
  }
  if (options.grid_points == 0) throw std::invalid_argument("grid needs at least one point");
  auto f = [&](double p) { return evaluate_bound(spec, p) - spec.rate; };
  const double step = 0.5 / static_cast<double>(options.grid_points);
  double prev_p = 0.0;
  double prev = f(0.0);
  for (std::size_t i = 1; i <= options.grid_points; ++i) {
    const double p = i == options.grid_points ? 0.5 : step * static_cast<double>(i);
    const double cur = f(p);
    if (cur == 0.0) return p;
    if ((prev < 0.0) != (cur < 0.0)) {
      double lo = prev_p, hi = p;
      double f_lo = prev;
      while (hi - lo > options.tolerance) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = f(mid);
        if (f_mid == 0.0) return mid;
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
          lo = mid;
          f_lo = f_mid;
        } else {
          hi = mid;
        }
      }
      return 0.5 * (lo + hi);
    }
    prev_p = p;
    prev = cur;
  }
  throw std::domain_error("bound curve does not cross the rate on (0, 1/2]");
}

double percolation_upper(unsigned m) {
  return threshold_solve({BoundKind::kCss2m, m, 1.0 - 4.0 / m});
}

EasyBounds easy_bounds(unsigned m) {
  require_degree(m);
  return {1.0 / (m - 1.0), 1.0 - 1.0 / (m - 1.0), 2.0 / m};
}

std::vector<BoundCurveRow> bound_curve(const BoundSpec& spec, const std::vector<double>& p_grid) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<BoundCurveRow> rows;
  rows.reserve(p_grid.size());
  for (double p : p_grid) {
    if (!(p >= 0.0 && p <= 0.5)) throw std::domain_error("curve grid must lie in [0, 1/2]");
    BoundCurveRow row{p, 1.0 - 2.0 * p, nan, nan, spec.rate};
    if (spec.m >= 2) row.stab = evaluate_bound({BoundKind::kStabilizer, spec.m, spec.rate}, p);
    if (spec.m >= 5) row.css2m = css2m_bound(spec.m, p);
    rows.push_back(row);
  }
  return rows;
}

void write_bound_curve_csv(std::ostream& out, const std::vector<BoundCurveRow>& rows) {
  const auto old_flags = out.flags();
  const auto old_precision = out.precision(12);
  out.unsetf(std::ios::floatfield);
  out << "p,capacity,stab_bound,css2m_bound,rate\n";
  for (const auto& r : rows) {
    out << r.p << ',' << r.capacity << ',' << r.stab << ',' << r.css2m << ',' << r.rate << '\n';
  }
  out.precision(old_precision);
  out.flags(old_flags);
}

}  // namespace qeb
