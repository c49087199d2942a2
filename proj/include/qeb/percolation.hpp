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

// Bond percolation on the finite graph of a (2, m) CSS code. Open edges are
// erased qubits; an open cluster is problematic when it contains a cycle
// that is not a sum of faces.

#include <cstdint>
#include <optional>
#include <vector>

#include "qeb/css_graph.hpp"
#include "qeb/expectation.hpp"
#include "qeb/f2la.hpp"

namespace qeb {

struct PercolationInstance {
  IncidenceGraph graph;
  FaceSet faces;
  BitMatrix incidence;    // H_X: vertices x edges
  BitMatrix face_matrix;  // H_Z: faces x edges
  std::size_t face_rank = 0;
  std::optional<CssCode> code;

  /// Primal instance: vertices from H_X, faces from H_Z.
  static PercolationInstance from_code(const CssCode& code);
  /// The same construction applied to dual_code(code).
  static PercolationInstance dual_of(const CssCode& code);

  std::size_t edge_count() const { return graph.edge_count(); }
};

struct ClusterReport {
  ErasureMask open_mask;
  /// Edge sets of the open clusters, ordered by smallest edge index.
  std::vector<std::vector<std::size_t>> clusters;
  /// Union of the clusters covering a non-face cycle (empty until
  /// problematic_part fills it).
  ErasureMask ep_mask;
  std::size_t max_cluster_size = 0;
};

/// Each edge open with probability p, from the substream (seed, 0, trial).
ErasureMask sample_open(const PercolationInstance& inst, double p, std::uint64_t seed,
                        std::uint64_t trial);
ClusterReport clusters(const PercolationInstance& inst, const ErasureMask& open);
/// The open cluster containing edge e (empty when e is closed).
std::vector<std::size_t> cluster_of(const PercolationInstance& inst, const ErasureMask& open,
                                    std::size_t edge);
/// The cycle space restricted to the cluster is larger than the face space
/// restricted to it.
bool covers_nonface_cycle(const PercolationInstance& inst, const std::vector<std::size_t>& cluster);
ClusterReport problematic_part(const PercolationInstance& inst, const ErasureMask& open);

/// Half the dual girth minus one: a radius below which balls are treated as
/// planar, so every small cluster only covers sums of faces.
std::size_t planarity_radius(const PercolationInstance& inst);

struct ClusterEstimates {
  Estimate f_r;          // P(|cluster(edge)| > r)
  Estimate g_r;          // P(cluster(edge) covers a non-face cycle)
  Estimate ep_fraction;  // E|E_P| / n
};

ClusterEstimates estimate_fr_gr(const PercolationInstance& inst, double p, std::size_t r,
                                std::uint64_t trials, std::uint64_t seed, std::size_t edge = 0);

/// Fraction of i.i.d. erasures that are not correctable for the CSS code.
/// Masks are drawn exactly as in sample_open.
Estimate erasure_failure_rate(const CssCode& code, double p, std::uint64_t trials,
                              std::uint64_t seed);

/// Mean and standard error of a 0/1 sample given the hit count.
Estimate bernoulli_estimate(std::uint64_t hits, std::uint64_t trials);

}  // namespace qeb
