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

// Brute-force reference computations. These deliberately avoid the fast paths
// of the library (rank enumerators, generating functions, rank formulas) and
// are only meant for small instances in tests and `qeb verify`.

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "qeb/css_graph.hpp"
#include "qeb/f2la.hpp"

namespace qeb::oracle {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;
using EdgeSetVisitor = std::function<void(const std::vector<std::size_t>&)>;

/// Visits every connected edge set of size <= k_max that contains `edge`,
/// exactly once each.
void connected_sets_with_edge(std::size_t vertex_count, const EdgeList& edges, std::size_t edge,
                              std::size_t k_max, const EdgeSetVisitor& visit);

/// Visits every connected edge set of size <= k_max touching `vertex`
/// (including the empty set), exactly once each.
void connected_sets_at_vertex(std::size_t vertex_count, const EdgeList& edges, std::size_t vertex,
                              std::size_t k_max, const EdgeSetVisitor& visit);

/// Counts subtrees of the m-regular tree by edge count, by explicit
/// enumeration on a ball around the root. With planted = true only subtrees
/// that use one fixed root edge and no other root edge are counted.
std::vector<std::uint64_t> tree_subtree_counts(unsigned m, unsigned k_max, bool planted);

/// E_p[rank of the selected columns] / positions, summed mask by mask with an
/// explicitly materialized submatrix. `symplectic` selects columns i and
/// positions + i for position i.
double mean_rank_by_masks(const BitMatrix& m, bool symplectic, double p);

/// Random m-regular simple graph on `vertices` vertices with girth >= min_girth,
/// obtained from a random pairing followed by edge switches.
EdgeList random_regular_graph(std::size_t vertices, unsigned m, std::size_t min_girth,
                              std::uint64_t seed);

/// Vertex-by-edge incidence matrix of an edge list.
BitMatrix incidence_matrix(std::size_t vertex_count, const EdgeList& edges);

/// Uniformly random rows x cols matrix.
BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed);

/// Random CSS code: r_x uniform X rows, then r_z Z rows drawn as random
/// combinations of a kernel basis of the X rows.
CssCode random_css(std::size_t n, std::size_t r_x, std::size_t r_z, std::uint64_t seed);

}  // namespace qeb::oracle
