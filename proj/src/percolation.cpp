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

#include "qeb/percolation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "qeb/random.hpp"

namespace qeb {

PercolationInstance PercolationInstance::from_code(const CssCode& code) {
  PercolationInstance inst;
  inst.graph = graph_from_2m(code.hx);
  inst.faces = faces_from(code.hz);
  if (!faces_are_cycles(inst.graph, inst.faces)) {
    throw std::invalid_argument("face rows are not cycles of the incidence graph");
  }
  inst.incidence = code.hx;
  inst.face_matrix = code.hz;
  inst.face_rank = rank(code.hz);
  inst.code = code;
  return inst;
}

PercolationInstance PercolationInstance::dual_of(const CssCode& code) {
  return from_code(dual_code(code));
}

ErasureMask sample_open(const PercolationInstance& inst, double p, std::uint64_t seed,
                        std::uint64_t trial) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("probability must lie in [0, 1]");
  Substream rng(seed, 0, trial);
  ErasureMask open(inst.edge_count());
  for (std::size_t j = 0; j < open.size(); ++j) open.set(j, rng.bernoulli(p));
  return open;
}

ClusterReport clusters(const PercolationInstance& inst, const ErasureMask& open) {
  if (open.size() != inst.edge_count()) throw std::invalid_argument("mask length != edge count");
  std::vector<std::size_t> parent(inst.graph.vertex_count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const std::vector<std::size_t> open_edges = open.support();
  for (std::size_t e : open_edges) {
    const auto [u, v] = inst.graph.edges[e];
    parent[find(u)] = find(v);
  }
  // Edges come in increasing order, so clusters are created in order of
  // their smallest edge.
  std::map<std::size_t, std::size_t> slot_of_root;
  ClusterReport report;
  report.open_mask = open;
  report.ep_mask = ErasureMask(open.size());
  for (std::size_t e : open_edges) {
    const std::size_t root = find(inst.graph.edges[e].first);
    auto [it, fresh] = slot_of_root.try_emplace(root, report.clusters.size());
    if (fresh) report.clusters.emplace_back();
    report.clusters[it->second].push_back(e);
  }
  for (const auto& c : report.clusters) {
    report.max_cluster_size = std::max(report.max_cluster_size, c.size());
  }
  return report;
}

std::vector<std::size_t> cluster_of(const PercolationInstance& inst, const ErasureMask& open,
                                    std::size_t edge) {
  if (edge >= inst.edge_count()) throw std::out_of_range("edge index out of range");
  if (!open.get(edge)) return {};
  const auto inc = inst.graph.incidence();
  std::vector<bool> seen(inst.edge_count(), false);
  std::vector<std::size_t> out{edge}, stack{edge};
  seen[edge] = true;
  while (!stack.empty()) {
    const std::size_t e = stack.back();
    stack.pop_back();
    for (std::size_t v : {inst.graph.edges[e].first, inst.graph.edges[e].second}) {
      for (std::size_t f : inc[v]) {
        if (open.get(f) && !seen[f]) {
          seen[f] = true;
          out.push_back(f);
          stack.push_back(f);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool covers_nonface_cycle(const PercolationInstance& inst,
                          const std::vector<std::size_t>& cluster) {
  const ErasureMask inside = BitVector::from_indices(inst.edge_count(), cluster);
  const std::size_t cycles = inside.weight() - masked_rank(inst.incidence, inside);
  const std::size_t face_sums = inst.face_rank - masked_rank(inst.face_matrix, inside.complement());
  return cycles > face_sums;
}

ClusterReport problematic_part(const PercolationInstance& inst, const ErasureMask& open) {
  ClusterReport report = clusters(inst, open);
  for (const auto& c : report.clusters) {
    if (!covers_nonface_cycle(inst, c)) continue;
    for (std::size_t e : c) report.ep_mask.set(e);
  }
  return report;
}

std::size_t planarity_radius(const PercolationInstance& inst) {
  const std::size_t g = girth(graph_from_2m(inst.face_matrix));
  if (g == kInfiniteGirth) return kInfiniteGirth;
  return g / 2 >= 1 ? g / 2 - 1 : 0;
}

Estimate bernoulli_estimate(std::uint64_t hits, std::uint64_t trials) {
  if (trials == 0) throw std::invalid_argument("need at least one trial");
  const double t = static_cast<double>(trials);
  const double mean = static_cast<double>(hits) / t;
  const double var = trials > 1 ? mean * (1.0 - mean) * t / (t - 1.0) : 0.0;
  return {mean, std::sqrt(var / t)};
}

ClusterEstimates estimate_fr_gr(const PercolationInstance& inst, double p, std::size_t r,
                                std::uint64_t trials, std::uint64_t seed, std::size_t edge) {
  if (trials == 0) throw std::invalid_argument("need at least one trial");
  std::uint64_t f_hits = 0, g_hits = 0;
  std::uint64_t ep_sum = 0, ep_sum_sq = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const ErasureMask open = sample_open(inst, p, seed, t);
    const ClusterReport report = problematic_part(inst, open);
    if (open.get(edge)) {
      const auto it = std::find_if(report.clusters.begin(), report.clusters.end(), [&](auto& c) {
        return std::binary_search(c.begin(), c.end(), edge);
      });
      if (it->size() > r) ++f_hits;
      if (report.ep_mask.get(edge)) ++g_hits;
    }
    const std::uint64_t ep = report.ep_mask.weight();
    ep_sum += ep;
    ep_sum_sq += ep * ep;
  }
  ClusterEstimates out;
  out.f_r = bernoulli_estimate(f_hits, trials);
  out.g_r = bernoulli_estimate(g_hits, trials);
  const double tr = static_cast<double>(trials);
  const double n = static_cast<double>(inst.edge_count());
  const double mean = static_cast<double>(ep_sum) / tr;
  double var = 0.0;
  if (trials > 1) {
    var = std::max(0.0, (static_cast<double>(ep_sum_sq) - tr * mean * mean) / (tr - 1.0));
  }
  out.ep_fraction = {mean / n, std::sqrt(var / tr) / n};
  return out;
}

Estimate erasure_failure_rate(const CssCode& code, double p, std::uint64_t trials,
                              std::uint64_t seed) {
  if (!validate_css(code)) throw std::invalid_argument("H_X and H_Z rows are not orthogonal");
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("probability must lie in [0, 1]");
  if (trials == 0) throw std::invalid_argument("need at least one trial");
  std::uint64_t failures = 0;
  ErasureMask mask(code.n);
  for (std::uint64_t t = 0; t < trials; ++t) {
    Substream rng(seed, 0, t);
    for (std::size_t j = 0; j < code.n; ++j) mask.set(j, rng.bernoulli(p));
    if (!is_correctable_css(code, mask)) ++failures;
  }
  return bernoulli_estimate(failures, trials);
}

}  // namespace qeb
