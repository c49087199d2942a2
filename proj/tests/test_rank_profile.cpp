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

#include <doctest.h>

#include <cmath>
#include <sstream>

#include "qeb/css_graph.hpp"
#include "qeb/oracles.hpp"
#include "qeb/rank_profile.hpp"
#include "qeb/stabilizer.hpp"
#include "support.hpp"

using namespace qeb;

namespace {

StabilizerMatrix random_paulis(std::size_t n, std::size_t r, Substream& rng) {
  std::vector<PauliOperator> rows;
  for (std::size_t i = 0; i < r; ++i) {
    rows.emplace_back(test::random_vector(n, rng), test::random_vector(n, rng));
  }
  return {n, std::move(rows)};
}

// Symplectic rows restricted to a subset of qubits.
StabilizerMatrix restrict_qubits(const StabilizerMatrix& h, const std::vector<std::size_t>& qubits) {
  std::vector<PauliOperator> rows;
  for (const auto& row : h.rows()) {
    PauliOperator p = PauliOperator::identity(qubits.size());
    for (std::size_t i = 0; i < qubits.size(); ++i) {
      p.x.set(i, row.x.get(qubits[i]));
      p.z.set(i, row.z.get(qubits[i]));
    }
    rows.push_back(std::move(p));
  }
  return {qubits.size(), std::move(rows)};
}

double exact_phi(const ErasureMatrix& h, double p) {
  return oracle::mean_rank_by_masks(h.matrix(), h.is_symplectic(), p);
}

}  // namespace

TEST_CASE("phi at the end points") {
  const auto h = ErasureMatrix::symplectic(test::worked_example());
  CHECK(phi(h, 0.0, ExactMode{}).value == 0.0);
  CHECK(phi(h, 1.0, ExactMode{}).value == doctest::Approx(3.0 / 5.0));
  CHECK(phi(h, 0.0, MonteCarloMode{100, 1}).value == 0.0);
  CHECK(phi(h, 1.0, MonteCarloMode{100, 1}).value == doctest::Approx(0.6));
}

TEST_CASE("exact phi matches the mask-by-mask oracle") {
  const auto h = ErasureMatrix::symplectic(test::worked_example());
  CHECK(phi(h, 0.5, ExactMode{}).value == doctest::Approx(exact_phi(h, 0.5)).epsilon(1e-13));
  for (std::uint64_t t = 0; t < 40; ++t) {
    Substream rng(17, 0, t);
    const std::size_t n = 1 + rng.below(9);
    const std::size_t r = rng.below(8);
    const ErasureMatrix view = (t % 2) ? ErasureMatrix::symplectic(random_paulis(n, r, rng))
                                       : ErasureMatrix::binary(test::random_matrix(r, n, rng));
    const RankEnumerator en(view);
    for (double p : {0.0, 0.13, 0.5, 0.77, 1.0}) {
      const double expected = exact_phi(view, p);
      CHECK(en.phi(p) == doctest::Approx(expected).epsilon(1e-12));
      CHECK(static_cast<double>(en.phi(Rational(p))) == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("rank sums per weight") {
  // A single nonzero column: rank 1 exactly when that column is selected.
  const auto h = ErasureMatrix::binary(BitMatrix::from_supports(3, {{1}}));
  const RankEnumerator en(h);
  CHECK(en.rank_sums() == std::vector<std::uint64_t>{0, 1, 2, 1});
  CHECK(en.phi(0.3) == doctest::Approx(0.1));
}

TEST_CASE("delta and the empirical rate bound") {
  const auto h = ErasureMatrix::symplectic(test::worked_example());
  CHECK(delta(h, 0.5, ExactMode{}).value == doctest::Approx(0.0));
  CHECK(delta(h, 0.0, ExactMode{}).value == doctest::Approx(0.6));
  CHECK(empirical_rate_bound(h, 0.0, ExactMode{}).value == doctest::Approx(0.4));
  CHECK(empirical_rate_bound(h, 0.5, ExactMode{}).value == doctest::Approx(0.0));
  const double d = exact_phi(h, 0.7) - exact_phi(h, 0.3);
  CHECK(empirical_rate_bound(h, 0.3, ExactMode{}).value == doctest::Approx(0.4 - d));

  const auto fig = ErasureMatrix::symplectic(to_stabilizer(example_code_2_5()));
  CHECK(fig.full_rank() == 30);
  CHECK_THROWS_AS(phi(fig, 0.3, ExactMode{}), std::length_error);
}

TEST_CASE("Monte Carlo delta on a 16-qubit restriction of the example code") {
  const StabilizerMatrix full = to_stabilizer(example_code_2_5());
  Substream rng(23, 0, 0);
  std::vector<std::size_t> qubits(40);
  for (std::size_t i = 0; i < 40; ++i) qubits[i] = i;
  for (std::size_t i = 40; i > 1; --i) std::swap(qubits[i - 1], qubits[rng.below(i)]);
  qubits.resize(16);
  const auto h = ErasureMatrix::symplectic(restrict_qubits(full, qubits));
  const double exact = exact_phi(h, 0.75) - exact_phi(h, 0.25);
  const Estimate mc = delta(h, 0.25, MonteCarloMode{100000, 5});
  CHECK(mc.std_error > 0.0);
  CHECK(std::abs(mc.value - exact) <= 3 * mc.std_error);
  CHECK(delta(h, 0.25, ExactMode{}).value == doctest::Approx(exact).epsilon(1e-12));
}

TEST_CASE("Monte Carlo is reproducible and seed dependent") {
  const auto h = ErasureMatrix::symplectic(to_stabilizer(example_code_2_5()));
  const Estimate a = phi(h, 0.2, MonteCarloMode{2000, 42});
  const Estimate b = phi(h, 0.2, MonteCarloMode{2000, 42});
  const Estimate c = phi(h, 0.2, MonteCarloMode{2000, 43});
  CHECK(a.value == b.value);
  CHECK(a.std_error == b.std_error);
  CHECK(a.value != c.value);
  CHECK_THROWS(phi(h, 0.2, MonteCarloMode{0, 1}));
  CHECK_THROWS(phi(h, 1.5, MonteCarloMode{10, 1}));
}

TEST_CASE("shape of phi") {
  std::vector<double> grid;
  for (int i = 0; i <= 20; ++i) grid.push_back(i * 0.05);
  const auto worked = ErasureMatrix::symplectic(test::worked_example());
  CHECK(check_monotone_concave(worked, grid, 1e-12).ok());

  const auto column = ErasureMatrix::binary(BitMatrix::from_supports(1, {{0}}));
  const ShapeReport linear = check_monotone_concave(column, grid, 1e-12);
  CHECK(linear.ok());
  CHECK(linear.max_violation <= 1e-15);

  Substream rng(29, 0, 0);
  const auto random = ErasureMatrix::symplectic(random_paulis(5, 6, rng));
  CHECK(check_monotone_concave(random, grid, 1e-12).ok());
}

TEST_CASE("rank-difference lower bound") {
  CHECK(delta_lower_bound(3, 5, 0.2, 0.6) == doctest::Approx(0.0));
  CHECK(delta_lower_bound(3, 5, 0.5, 0.1) == doctest::Approx(0.0));
  CHECK_THROWS_AS(delta_lower_bound(3, 5, 1.0, 0.1), std::domain_error);
  const auto h = ErasureMatrix::symplectic(test::worked_example());
  const double p = 0.3;
  const double bound = delta_lower_bound(3, 5, p, exact_phi(h, p));
  CHECK(bound <= exact_phi(h, 1 - p) - exact_phi(h, p) + 1e-12);
}

TEST_CASE("submodularity of the column rank") {
  Substream rng(31, 0, 0);
  const BitMatrix m = test::random_matrix(12, 20, rng);
  const SubmodularReport report = check_submodular(m, 10000, 3);
  CHECK(report.trials == 10000);
  CHECK(report.violations == 0);

  // Direct check with dense ranks on nested and equal sets.
  for (std::uint64_t t = 0; t < 200; ++t) {
    Substream r(37, 0, t);
    const BitVector a = test::random_vector(20, r);
    const BitVector b = a | test::random_vector(20, r);
    const auto rank_of = [&](const BitVector& s) { return test::dense_rank_on(m, s.support()); };
    CHECK(rank_of(a & b) + rank_of(a | b) == rank_of(a) + rank_of(b));
    CHECK(rank_of(a & a) + rank_of(a | a) == 2 * rank_of(a));
  }
}

TEST_CASE("profile table") {
  const auto h = ErasureMatrix::symplectic(test::worked_example());
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(i * 0.05);
  const RankProfile prof = rank_profile(h, grid, ExactMode{});
  REQUIRE(prof.phi.size() == 11);
  CHECK(prof.phi[0] == 0.0);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(prof.delta[i] >= -1e-15);
    CHECK(prof.rate_bound[i] == doctest::Approx(1 - 2 * grid[i] - prof.delta[i]));
  }
  std::ostringstream out;
  write_profile_csv(out, prof);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "p,phi,phi_stderr,delta,delta_stderr,rate_bound");
  std::size_t rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 11);
  CHECK(out.str().find("\n0.1,0.131658,0,0.464304,0,0.335696\n") != std::string::npos);
}
