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

// CSS codes and the graph picture of (2, m) parity-check matrices: rows are
// vertices, columns are edges, and the rows of the other matrix are faces.

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qeb/f2la.hpp"
#include "qeb/stabilizer.hpp"

namespace qeb {

struct CssCode {
  std::size_t n = 0;
  BitMatrix hx;  // r_X x n
  BitMatrix hz;  // r_Z x n

  CssCode() = default;
  CssCode(std::size_t length, BitMatrix x_checks, BitMatrix z_checks);

  bool operator==(const CssCode& other) const = default;
};

/// Text format: header `css n rX rZ`, then rX lines of column indices (rows of
/// H_X), then rZ lines (rows of H_Z). Indices are 0-based. Lines starting with
/// '#' are ignored; an empty row is written as '-'.
CssCode parse_css(std::istream& in);
CssCode parse_css(const std::string& text);
std::string format_css(const CssCode& code);

/// X-type rows from hx followed by Z-type rows from hz.
StabilizerMatrix to_stabilizer(const CssCode& code);

bool validate_css(const CssCode& code);
/// n - rank H_X - rank H_Z. Throws std::invalid_argument for non-orthogonal pairs.
std::size_t css_dimension(const CssCode& code);
CssCode dual_code(const CssCode& code);

/// Every row has weight m and every column weight 2.
bool is_type_2m(const BitMatrix& m, std::size_t row_weight);

struct IncidenceGraph {
  std::size_t vertex_count = 0;
  /// edges[j] joins the two rows with a 1 in column j.
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t edge_count() const { return edges.size(); }
  /// Incident edge indices per vertex. A self-loop appears twice.
  std::vector<std::vector<std::size_t>> incidence() const;
  /// No self-loops and no parallel edges.
  bool is_simple() const;
};

/// Throws std::invalid_argument if some column does not have weight 2.
IncidenceGraph graph_from_2m(const BitMatrix& m);
std::size_t connected_components(const IncidenceGraph& g);

inline constexpr std::size_t kInfiniteGirth = std::numeric_limits<std::size_t>::max();
/// Shortest cycle length; parallel edges form 2-cycles and self-loops 1-cycles.
/// kInfiniteGirth for forests.
std::size_t girth(const IncidenceGraph& g);

struct FaceSet {
  std::vector<std::vector<std::size_t>> faces;  // edge indices per face
};

FaceSet faces_from(const BitMatrix& face_matrix);
/// Every face has even degree at every vertex of g.
bool faces_are_cycles(const IncidenceGraph& g, const FaceSet& faces);

struct CssStructure {
  bool type_2m = false;
  std::size_t m = 0;
  bool connected = false;
  bool simple = false;
  std::size_t girth_x = kInfiniteGirth;
  std::size_t girth_z = kInfiniteGirth;
  /// Both graphs connected with girth exactly m.
  bool proper = false;
};

/// Structural summary of a code whose matrices are both of type (2, m).
CssStructure describe_2m(const CssCode& code);

/// Smallest weight <= w_max of a vector in Ker H_X outside the row space of
/// H_Z, or in Ker H_Z outside the row space of H_X; nullopt if none.
/// The search enumerates supports by increasing weight.
std::optional<std::size_t> min_distance_bounded(const CssCode& code, std::size_t w_max);

/// One-sided search: smallest weight <= w_max of v with checks * v = 0 and
/// v outside rowspace(gauge).
std::optional<BitVector> min_weight_logical(const BitMatrix& checks, const BitMatrix& gauge,
                                            std::size_t w_max);

bool is_correctable_css(const CssCode& code, const ErasureMask& e);

/// The [[40, 10, 4]] (2, 5) code built from a genus-4 self-dual pentagonal tiling.
CssCode example_code_2_5();

double binary_entropy(double x);

inline constexpr std::size_t kDefaultAugmentRetries = 100;

/// Adds ceil(alpha n) random independent rows to H_X (drawn from Ker H_Z),
/// then as many to H_Z (drawn from Ker of the new H_X), redrawing each side
/// until the code has no logical operator of weight below ceil(rho n).
/// Each accepted H_X draw gets up to max_retries H_Z draws; at most
/// max_retries H_X draws are made. Throws std::invalid_argument when alpha is
/// infeasible and std::runtime_error when the retries run out.
CssCode augment_css(const CssCode& code, double alpha, double rho, std::uint64_t seed,
                    std::size_t max_retries = kDefaultAugmentRetries);

}  // namespace qeb
