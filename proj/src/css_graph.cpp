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

#include "qeb/css_graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qeb/random.hpp"

namespace qeb {

CssCode::CssCode(std::size_t length, BitMatrix x_checks, BitMatrix z_checks)
    : n(length), hx(std::move(x_checks)), hz(std::move(z_checks)) {
  if ((hx.rows() && hx.cols() != n) || (hz.rows() && hz.cols() != n)) {
    throw std::invalid_argument("check matrix column count differs from code length");
  }
  // Keep empty matrices shaped 0 x n so restrictions and stacking line up.
  if (!hx.rows()) hx = BitMatrix(0, n);
  if (!hz.rows()) hz = BitMatrix(0, n);
}

// ---------------------------------------------------------------------------
// Text format

namespace {

bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

std::vector<std::size_t> parse_support(const std::string& line, std::size_t n) {
  std::istringstream row(line);
  std::vector<std::size_t> support;
  std::string token;
  while (row >> token) {
    if (token == "-") continue;
    std::size_t used = 0;
    long long idx = -1;
    try {
      idx = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || idx < 0 || static_cast<std::size_t>(idx) >= n) {
      throw std::invalid_argument("bad column index '" + token + "'");
    }
    support.push_back(static_cast<std::size_t>(idx));
  }
  return support;
}

std::vector<std::vector<std::size_t>> supports_of(const BitMatrix& m) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& r : m.row_data()) out.push_back(r.support());
  return out;
}

}  // namespace

CssCode parse_css(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw std::invalid_argument("empty CSS file");
  std::istringstream header(line);
  std::string tag;
  long long n = -1, rx = -1, rz = -1;
  std::string extra;
  if (!(header >> tag >> n >> rx >> rz) || tag != "css" || n < 0 || rx < 0 || rz < 0 ||
      (header >> extra)) {
    throw std::invalid_argument("expected header 'css n rX rZ'");
  }
  std::vector<std::vector<std::size_t>> x_rows, z_rows;
  for (long long i = 0; i < rx + rz; ++i) {
    if (!next_content_line(in, line)) throw std::invalid_argument("CSS file ended early");
    auto support = parse_support(line, static_cast<std::size_t>(n));
    (i < rx ? x_rows : z_rows).push_back(std::move(support));
  }
  const auto len = static_cast<std::size_t>(n);
  return {len, BitMatrix::from_supports(len, x_rows), BitMatrix::from_supports(len, z_rows)};
}

CssCode parse_css(const std::string& text) {
  std::istringstream in(text);
  return parse_css(in);
}

std::string format_css(const CssCode& code) {
  std::ostringstream out;
  out << "css " << code.n << ' ' << code.hx.rows() << ' ' << code.hz.rows() << '\n';
  for (const BitMatrix* m : {&code.hx, &code.hz}) {
    for (const auto& support : supports_of(*m)) {
      if (support.empty()) {
        out << "-\n";
        continue;
      }
      for (std::size_t k = 0; k < support.size(); ++k) out << (k ? " " : "") << support[k];
      out << '\n';
    }
  }
  return out.str();
}

StabilizerMatrix to_stabilizer(const CssCode& code) {
  std::vector<PauliOperator> rows;
  for (const auto& r : code.hx.row_data()) rows.emplace_back(r, BitVector(code.n));
  for (const auto& r : code.hz.row_data()) rows.emplace_back(BitVector(code.n), r);
  return {code.n, std::move(rows)};
}

// ---------------------------------------------------------------------------
// Code parameters

bool validate_css(const CssCode& code) { return rows_orthogonal(code.hx, code.hz); }

namespace {

void require_css(const CssCode& code) {
  if (!validate_css(code)) throw std::invalid_argument("H_X and H_Z rows are not orthogonal");
}

}  // namespace

std::size_t css_dimension(const CssCode& code) {
  require_css(code);
  return code.n - rank(code.hx) - rank(code.hz);
}

CssCode dual_code(const CssCode& code) { return {code.n, code.hz, code.hx}; }

bool is_type_2m(const BitMatrix& m, std::size_t row_weight) {
  if (m.rows() == 0) return false;
  for (const auto& r : m.row_data()) {
    if (r.weight() != row_weight) return false;
  }
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m.column_weight(j) != 2) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Graphs

std::vector<std::vector<std::size_t>> IncidenceGraph::incidence() const {
  std::vector<std::vector<std::size_t>> inc(vertex_count);
  for (std::size_t j = 0; j < edges.size(); ++j) {
    inc[edges[j].first].push_back(j);
    inc[edges[j].second].push_back(j);
  }
  return inc;
}

bool IncidenceGraph::is_simple() const {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [u, v] : edges) {
    if (u == v) return false;
    if (!seen.insert(std::minmax(u, v)).second) return false;
  }
  return true;
}

IncidenceGraph graph_from_2m(const BitMatrix& m) {
  IncidenceGraph g;
  g.vertex_count = m.rows();
  const BitMatrix columns = m.transpose();
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const auto ends = columns.row(j).support();
    if (ends.size() != 2) {
      throw std::invalid_argument("column " + std::to_string(j) + " has weight " +
                                  std::to_string(ends.size()) + ", expected 2");
    }
    g.edges.emplace_back(ends[0], ends[1]);
  }
  return g;
}

std::size_t connected_components(const IncidenceGraph& g) {
  std::vector<std::size_t> parent(g.vertex_count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = g.vertex_count;
  for (auto [u, v] : g.edges) {
    const std::size_t a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

std::size_t girth(const IncidenceGraph& g) {
  const auto inc = g.incidence();
  std::size_t best = kInfiniteGirth;
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  for (auto [u, v] : g.edges) {
    if (u == v) return 1;
  }
  std::vector<std::size_t> dist(g.vertex_count), via(g.vertex_count);
  for (std::size_t s = 0; s < g.vertex_count; ++s) {
    std::fill(dist.begin(), dist.end(), kNone);
    dist[s] = 0;
    via[s] = kNone;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      if (best != kInfiniteGirth && 2 * dist[u] + 1 >= best) break;
      for (std::size_t e : inc[u]) {
        if (e == via[u]) continue;
        const std::size_t w = g.edges[e].first == u ? g.edges[e].second : g.edges[e].first;
        if (dist[w] == kNone) {
          dist[w] = dist[u] + 1;
          via[w] = e;
          queue.push_back(w);
        } else {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

FaceSet faces_from(const BitMatrix& face_matrix) { return {supports_of(face_matrix)}; }

bool faces_are_cycles(const IncidenceGraph& g, const FaceSet& faces) {
  for (const auto& face : faces.faces) {
    std::vector<unsigned> degree(g.vertex_count, 0);
    for (std::size_t e : face) {
      if (e >= g.edge_count()) return false;
      ++degree[g.edges[e].first];
      ++degree[g.edges[e].second];
    }
    if (std::any_of(degree.begin(), degree.end(), [](unsigned d) { return d % 2; })) return false;
  }
  return true;
}

CssStructure describe_2m(const CssCode& code) {
  CssStructure s;
  if (code.hx.rows() == 0) return s;
  s.m = code.hx.row(0).weight();
  s.type_2m = is_type_2m(code.hx, s.m) && is_type_2m(code.hz, s.m);
  if (!s.type_2m) return s;
  const IncidenceGraph gx = graph_from_2m(code.hx);
  const IncidenceGraph gz = graph_from_2m(code.hz);
  s.connected = connected_components(gx) == 1 && connected_components(gz) == 1;
  s.simple = gx.is_simple() && gz.is_simple();
  s.girth_x = girth(gx);
  s.girth_z = girth(gz);
  s.proper = s.connected && s.girth_x == s.m && s.girth_z == s.m;
  return s;
}

// ---------------------------------------------------------------------------
// Distance and correctability

std::optional<BitVector> min_weight_logical(const BitMatrix& checks, const BitMatrix& gauge,
                                            std::size_t w_max) {
  const std::size_t n = checks.cols();
  if (gauge.rows() && gauge.cols() != n) throw std::invalid_argument("matrix widths differ");
  const BitMatrix columns = checks.transpose();
  EchelonBasis gauge_span(n);
  for (const auto& r : gauge.row_data()) gauge_span.insert(r);

  std::vector<std::size_t> chosen;
  std::vector<BitVector> partial;  // partial[d] = syndrome of the first d chosen columns
  std::optional<BitVector> found;

  // Depth-first over increasing index tuples of a fixed size.
  auto search = [&](auto&& self, std::size_t start, std::size_t remaining) -> bool {
    if (remaining == 0) {
      if (!partial.back().none()) return false;
      BitVector v(n);
      for (std::size_t j : chosen) v.set(j);
      if (gauge_span.contains(v)) return false;
      found = std::move(v);
      return true;
    }
    for (std::size_t j = start; j + remaining <= n; ++j) {
      chosen.push_back(j);
      partial.push_back(partial.back() ^ columns.row(j));
      const bool hit = self(self, j + 1, remaining - 1);
      chosen.pop_back();
      partial.pop_back();
      if (hit) return true;
    }
    return false;
  };

  for (std::size_t w = 1; w <= std::min(w_max, n); ++w) {
    partial.assign(1, BitVector(checks.rows()));
    if (search(search, 0, w)) return found;
  }
  return std::nullopt;
}

std::optional<std::size_t> min_distance_bounded(const CssCode& code, std::size_t w_max) {
  require_css(code);
  const auto x_side = min_weight_logical(code.hx, code.hz, w_max);
  const std::size_t limit = x_side ? x_side->weight() - 1 : w_max;
  const auto z_side = min_weight_logical(code.hz, code.hx, limit);
  if (z_side) return z_side->weight();
  if (x_side) return x_side->weight();
  return std::nullopt;
}

namespace {

// dim{v in Ker checks, supp v in E} versus dim{v in rowspace(gauge), supp v in E}.
bool side_correctable(const BitMatrix& checks, const BitMatrix& gauge, const ErasureMask& e) {
  const std::size_t cycles = e.weight() - masked_rank(checks, e);
  const std::size_t boundaries = rank(gauge) - masked_rank(gauge, e.complement());
  return cycles == boundaries;
}

}  // namespace

bool is_correctable_css(const CssCode& code, const ErasureMask& e) {
  if (e.size() != code.n) throw std::invalid_argument("erasure mask has wrong length");
  require_css(code);
  return side_correctable(code.hx, code.hz, e) && side_correctable(code.hz, code.hx, e);
}

// ---------------------------------------------------------------------------
// Embedded example

CssCode example_code_2_5() {
  static const std::vector<std::vector<std::size_t>> kHx = {
      {0, 1, 2, 3, 8},       {1, 4, 5, 11, 20},     {2, 6, 7, 14, 25},     {0, 9, 10, 18, 28},
      {5, 12, 13, 22, 32},   {4, 7, 15, 21, 31},    {3, 16, 17, 27, 36},   {6, 10, 13, 19, 23},
      {8, 12, 24, 33, 38},   {9, 15, 17, 22, 26},   {16, 19, 21, 24, 29},  {11, 28, 29, 30, 35},
      {20, 23, 27, 34, 39},  {14, 32, 35, 36, 37},  {25, 26, 30, 33, 34},  {18, 31, 37, 38, 39},
  };
  static const std::vector<std::vector<std::size_t>> kHz = {
      {0, 2, 7, 9, 15},      {1, 2, 5, 6, 13},      {0, 3, 10, 16, 19},    {1, 4, 8, 21, 24},
      {3, 8, 12, 17, 22},    {4, 7, 11, 25, 30},    {5, 12, 20, 33, 34},   {6, 10, 14, 28, 35},
      {9, 17, 18, 36, 37},   {11, 19, 20, 23, 29},  {13, 23, 27, 32, 36},  {14, 22, 25, 26, 32},
      {15, 26, 31, 33, 38},  {16, 24, 27, 38, 39},  {18, 21, 28, 29, 31},  {30, 34, 35, 37, 39},
  };
  return {40, BitMatrix::from_supports(40, kHx), BitMatrix::from_supports(40, kHz)};
}

// ---------------------------------------------------------------------------
// Augmentation

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

namespace {

// Appends `count` random rows from span(pool) that are independent of `base`.
// pool spans a space containing rowspace(base).
BitMatrix add_random_rows(const BitMatrix& base, const std::vector<BitVector>& pool,
                          std::size_t count, Substream& rng) {
  EchelonBasis span(base.cols());
  for (const auto& r : base.row_data()) span.insert(r);
  std::vector<BitVector> rows = base.row_data();
  while (count > 0) {
    BitVector v(base.cols());
    for (const auto& b : pool) {
      if (rng() & 1) v ^= b;
    }
    if (!span.insert(v)) continue;
    rows.push_back(std::move(v));
    --count;
  }
  return BitMatrix::from_rows(base.cols(), std::move(rows));
}

}  // namespace

CssCode augment_css(const CssCode& code, double alpha, double rho, std::uint64_t seed,
                    std::size_t max_retries) {
  require_css(code);
  if (!(alpha >= 0.0) || !(rho >= 0.0 && rho < 0.5)) {
    throw std::invalid_argument("augment_css needs alpha >= 0 and 0 <= rho < 1/2");
  }
  const double n = static_cast<double>(code.n);
  const std::size_t k = css_dimension(code);
  const auto added = static_cast<std::size_t>(std::ceil(alpha * n - 1e-9));
  if (added == 0) return code;
  if (alpha >= static_cast<double>(k) / n / 2.0 || 2 * added > k) {
    throw std::invalid_argument("alpha is infeasible: need alpha < R/2 and 2*ceil(alpha n) <= k");
  }
  const auto target = static_cast<std::size_t>(std::ceil(rho * n - 1e-9));
  const std::size_t w_max = target > 0 ? target - 1 : 0;

  // X side: new rows of H_X come from Ker H_Z, redrawn until no X-side
  // logical is lighter than the target. Adding Z rows afterwards cannot undo
  // this. Some X choices leave no valid Z completion, so every accepted X
  // draw gets its own Z budget before the next X draw.
  const auto ker_hz = kernel_basis(code.hz);
  for (std::size_t x_attempt = 0; x_attempt < max_retries; ++x_attempt) {
    Substream x_rng(seed, 0, x_attempt);
    BitMatrix hx = add_random_rows(code.hx, ker_hz, added, x_rng);
    if (min_weight_logical(hx, code.hz, w_max)) continue;
    const auto ker_hx = kernel_basis(hx);
    for (std::size_t z_attempt = 0; z_attempt < max_retries; ++z_attempt) {
      Substream z_rng(seed, 1 + x_attempt, z_attempt);
      BitMatrix hz = add_random_rows(code.hz, ker_hx, added, z_rng);
      if (!min_weight_logical(hz, hx, w_max)) return {code.n, std::move(hx), std::move(hz)};
    }
  }
  throw std::runtime_error("augment_css: retry cap hit");
}

}  // namespace qeb
