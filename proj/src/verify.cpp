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

#include "qeb/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qeb/css_graph.hpp"
#include "qeb/oracles.hpp"
#include "qeb/random.hpp"
#include "qeb/rank_profile.hpp"
#include "qeb/series_bounds.hpp"
#include "qeb/stabilizer.hpp"

namespace qeb::verify {
namespace {

ErasureMask mask_from_bits(std::size_t n, std::uint64_t bits) {
  ErasureMask e(n);
  for (std::size_t i = 0; i < n; ++i) e.set(i, (bits >> i) & 1);
  return e;
}

Check named(std::string suite, std::string name) {
  Check c;
  c.suite = std::move(suite);
  c.name = std::move(name);
  return c;
}

Check info(std::string suite, std::string name, std::string value) {
  Check c = named(std::move(suite), std::move(name));
  c.value = std::move(value);
  c.informational = true;
  return c;
}

std::string girth_text(std::size_t g) {
  return g == kInfiniteGirth ? std::string("inf") : std::to_string(g);
}

StabilizerMatrix worked_example() {
  return StabilizerMatrix::from_strings({"IXZYZ", "ZZXIZ", "IYYYZ"});
}

}  // namespace

std::vector<Check> lemmas(std::uint64_t seed, std::size_t codes, std::size_t n_max) {
  Check counts = named("lemmas", "covered_counts");
  Check entropy = named("lemmas", "coset_entropy");
  Check problematic = named("lemmas", "problematic_iff_uncorrectable");
  Check syndromes = named("lemmas", "syndrome_classes");
  for (std::size_t c = 0; c < codes; ++c) {
    Substream rng(seed, 10, c);
    const std::size_t n = 1 + rng.below(n_max);
    const std::size_t r = rng.below(n + 1);
    const StabilizerMatrix h = random_stabilizer(n, r, rng);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const ErasureMask e = mask_from_bits(n, bits);
      const ErasureAnalysis a = analyze_erasure(h, e);
      const CoveredEnumeration en = enumerate_covered(h, e);
      ++counts.checked;
      if (en.zero_syndrome != (std::uint64_t{1} << a.dim_nse) ||
          en.stabilizers != (std::uint64_t{1} << a.dim_se)) {
        ++counts.failures;
      }
      ++entropy.checked;
      if (en.min_coset_entropy_bits != a.cond_entropy_bits ||
          en.max_coset_entropy_bits != a.cond_entropy_bits) {
        ++entropy.failures;
      }
      ++problematic.checked;
      if ((en.problematic == 0) != a.correctable) ++problematic.failures;
      // Every attained syndrome is hit by one coset of the zero-syndrome group.
      ++syndromes.checked;
      const std::uint64_t per_class = std::uint64_t{1} << a.dim_nse;
      const bool uniform = std::all_of(en.histogram.begin(), en.histogram.end(),
                                       [&](const auto& kv) { return kv.second == per_class; });
      if (!uniform || en.histogram.size() * per_class != en.covered) ++syndromes.failures;
    }
  }

  Check css = named("lemmas", "css_vs_stabilizer_form");
  for (std::size_t c = 0; c < codes / 2; ++c) {
    Substream rng(seed, 11, c);
    const std::size_t n = 2 + rng.below(7);
    const CssCode code = oracle::random_css(n, rng.below(n), rng.below(n), rng());
    const StabilizerMatrix h = to_stabilizer(code);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const ErasureMask e = mask_from_bits(n, bits);
      ++css.checked;
      if (is_correctable_css(code, e) != analyze_erasure(h, e).correctable) ++css.failures;
    }
  }
  return {counts, entropy, problematic, syndromes, css};
}

std::vector<Check> appendix(std::uint64_t seed, std::uint64_t submodular_pairs,
                            std::size_t random_codes) {
  Check sub = named("appendix", "submodularity");
  constexpr std::uint64_t kMatrices = 10;
  for (std::uint64_t i = 0; i < kMatrices; ++i) {
    Substream rng(seed, 20, i);
    const std::size_t rows = 1 + rng.below(12);
    const std::size_t cols = 1 + rng.below(16);
    const BitMatrix m = oracle::random_matrix(rows, cols, rng());
    const std::uint64_t share = submodular_pairs / kMatrices + (i < submodular_pairs % kMatrices);
    const SubmodularReport report = check_submodular(m, share, rng());
    sub.checked += report.trials;
    sub.failures += report.violations;
  }

  std::vector<ErasureMatrix> views{ErasureMatrix::symplectic(worked_example())};
  for (std::size_t c = 0; c < random_codes; ++c) {
    Substream rng(seed, 21, c);
    const std::size_t n = 2 + rng.below(9);
    views.push_back(ErasureMatrix::symplectic(random_stabilizer(n, rng.below(n + 1), rng)));
  }

  Check shape = named("appendix", "phi_monotone_concave");
  Check nonneg = named("appendix", "delta_nonnegative");
  Check lower = named("appendix", "delta_lower_bound");
  std::vector<double> grid;
  for (int i = 0; i <= 40; ++i) grid.push_back(i / 40.0);
  for (const auto& view : views) {
    const ShapeReport report = check_monotone_concave(view, grid, 1e-9);
    shape.checked += report.points;
    shape.failures += report.monotone_violations + report.concavity_violations;
    const RankEnumerator en(view);
    for (int i = 0; i <= 20; ++i) {
      const Rational p(i, 40);
      ++nonneg.checked;
      if (en.delta(p) < 0) ++nonneg.failures;
    }
    // The chord argument needs 1 - p >= p.
    for (int i = 0; i <= 20; ++i) {
      const double p = i / 40.0;
      const double bound =
          delta_lower_bound(view.full_rank(), view.positions(), p, en.phi(p));
      ++lower.checked;
      if (en.delta(p) < bound - 1e-9) ++lower.failures;
    }
  }
  return {sub, shape, nonneg, lower};
}

std::vector<Check> series() {
  Check rooted = named("series", "rooted_counts_vs_tree");
  Check planted = named("series", "planted_counts_vs_tree");
  constexpr unsigned kMaxK = 5;
  for (unsigned m : {3u, 4u, 5u}) {
    const auto tree_rooted = oracle::tree_subtree_counts(m, kMaxK, false);
    const auto tree_planted = oracle::tree_subtree_counts(m, kMaxK, true);
    const RationalSeries a = rooted_coeffs(m, kMaxK + 1);
    const RationalSeries b = planted_coeffs(m, kMaxK + 1);
    for (unsigned k = 0; k <= kMaxK; ++k) {
      ++rooted.checked;
      if (a[k] != Rational(tree_rooted[k])) ++rooted.failures;
      ++planted.checked;
      if (b[k] != Rational(tree_planted[k])) ++planted.failures;
    }
  }
  Check functional = named("series", "functional_equation");
  for (unsigned m = 3; m <= 10; ++m) {
    ++functional.checked;
    if (!verify_functional_equation(m, 20)) ++functional.failures;
  }
  return {rooted, planted, functional};
}

std::vector<Check> example() {
  const CssCode code = example_code_2_5();
  std::vector<Check> out;
  auto expect = [&](std::string name, bool ok) {
    Check c = named("example", std::move(name));
    c.checked = 1;
    c.failures = ok ? 0 : 1;
    out.push_back(std::move(c));
  };
  expect("length_40", code.n == 40);
  expect("valid_css", validate_css(code));
  const std::size_t k = css_dimension(code);
  expect("dimension_10", k == 10);
  expect("dimension_matches_cycle_count", k == code.n - code.n * 4 / 5 + 2);
  const auto d = min_distance_bounded(code, 5);
  expect("distance_4", d.has_value() && *d == 4);
  expect("type_2_5_x", is_type_2m(code.hx, 5));
  expect("type_2_5_z", is_type_2m(code.hz, 5));
  const CssStructure s = describe_2m(code);
  expect("graphs_connected", s.connected);
  expect("graphs_simple", s.simple);
  out.push_back(info("example", "girth_x", girth_text(s.girth_x)));
  out.push_back(info("example", "girth_z", girth_text(s.girth_z)));
  out.push_back(info("example", "proper", s.proper ? "true" : "false"));
  return out;
}

bool all_ok(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok(); });
}

void write_checks_csv(std::ostream& out, const std::vector<Check>& checks) {
  out << "suite,check,checked,failures,value,status\n";
  for (const auto& c : checks) {
    out << c.suite << ',' << c.name << ',' << c.checked << ',' << c.failures << ',' << c.value
        << ',' << (c.informational ? "info" : c.ok() ? "pass" : "FAIL") << '\n';
  }
}

}  // namespace qeb::verify
