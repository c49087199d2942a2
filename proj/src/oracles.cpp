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

#include "qeb/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qeb/random.hpp"

namespace qeb::oracle {
namespace {

std::vector<std::vector<std::size_t>> incident_edges(std::size_t vertex_count,
                                                     const EdgeList& edges) {
  std::vector<std::vector<std::size_t>> inc(vertex_count);
  for (std::size_t j = 0; j < edges.size(); ++j) {
    inc[edges[j].first].push_back(j);
    if (edges[j].second != edges[j].first) inc[edges[j].second].push_back(j);
  }
  return inc;
}

// Include/exclude branching over a frontier of candidate edges: choosing
// frontier[i] excludes frontier[0..i) for the rest of the branch, which makes
// every connected set appear exactly once.
struct Extender {
  const EdgeList& edges;
  const std::vector<std::vector<std::size_t>>& inc;
  std::size_t k_max;
  const EdgeSetVisitor& visit;
  std::vector<char> state;  // 0 free, 1 in set, 2 excluded, 3 in frontier
  std::vector<std::size_t> chosen;

  void run(std::vector<std::size_t> frontier) {
    visit(chosen);
    if (chosen.size() == k_max) return;
    std::vector<std::size_t> excluded_here;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const std::size_t e = frontier[i];
      state[e] = 1;
      chosen.push_back(e);
      std::vector<std::size_t> next(frontier.begin() + static_cast<long>(i) + 1, frontier.end());
      std::vector<std::size_t> added;
      for (std::size_t v : {edges[e].first, edges[e].second}) {
        for (std::size_t f : inc[v]) {
          if (state[f] == 0) {
            state[f] = 3;
            next.push_back(f);
            added.push_back(f);
          }
        }
      }
      run(std::move(next));
      for (std::size_t f : added) state[f] = 0;
      chosen.pop_back();
      state[e] = 2;
      excluded_here.push_back(e);
    }
    for (std::size_t e : excluded_here) state[e] = 3;
  }
};

}  // namespace

void connected_sets_with_edge(std::size_t vertex_count, const EdgeList& edges, std::size_t edge,
                              std::size_t k_max, const EdgeSetVisitor& visit) {
  if (k_max == 0) return;
  const auto inc = incident_edges(vertex_count, edges);
  Extender ext{edges, inc, k_max, visit, std::vector<char>(edges.size(), 0), {edge}};
  ext.state[edge] = 1;
  std::vector<std::size_t> frontier;
  for (std::size_t v : {edges[edge].first, edges[edge].second}) {
    for (std::size_t f : inc[v]) {
      if (ext.state[f] == 0) {
        ext.state[f] = 3;
        frontier.push_back(f);
      }
    }
  }
  ext.run(std::move(frontier));
}

void connected_sets_at_vertex(std::size_t vertex_count, const EdgeList& edges, std::size_t vertex,
                              std::size_t k_max, const EdgeSetVisitor& visit) {
  const auto inc = incident_edges(vertex_count, edges);
  Extender ext{edges, inc, k_max, visit, std::vector<char>(edges.size(), 0), {}};
  std::vector<std::size_t> frontier;
  for (std::size_t f : inc[vertex]) {
    ext.state[f] = 3;
    frontier.push_back(f);
  }
  ext.run(std::move(frontier));
}

std::vector<std::uint64_t> tree_subtree_counts(unsigned m, unsigned k_max, bool planted) {
  // Ball of radius k_max around vertex 0 in the m-regular tree.
  EdgeList edges;
  std::vector<std::size_t> layer{0};
  std::size_t vertex_count = 1;
  for (unsigned depth = 0; depth < k_max; ++depth) {
    std::vector<std::size_t> next;
    for (std::size_t v : layer) {
      const unsigned children = depth == 0 ? m : m - 1;
      for (unsigned c = 0; c < children; ++c) {
        edges.emplace_back(v, vertex_count);
        next.push_back(vertex_count++);
      }
    }
    layer = std::move(next);
  }
  std::vector<std::uint64_t> counts(k_max + 1, 0);
  if (!planted) {
    connected_sets_at_vertex(vertex_count, edges, 0, k_max,
                             [&](const auto& set) { ++counts[set.size()]; });
    return counts;
  }
  if (k_max == 0) return counts;
  // Edges 0..m-1 are the root edges; keep edge 0 and drop the others.
  EdgeList pruned;
  std::vector<std::size_t> relabel(edges.size());
  for (std::size_t j = 0; j < edges.size(); ++j) {
    if (j >= 1 && j < m) continue;
    relabel[j] = pruned.size();
    pruned.push_back(edges[j]);
  }
  connected_sets_with_edge(vertex_count, pruned, relabel[0], k_max,
                           [&](const auto& set) { ++counts[set.size()]; });
  return counts;
}

double mean_rank_by_masks(const BitMatrix& m, bool symplectic, double p) {
  const std::size_t positions = symplectic ? m.cols() / 2 : m.cols();
  if (positions > 24) throw std::length_error("too many positions for mask enumeration");
  if (positions == 0) return 0.0;
  double total = 0.0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << positions); ++bits) {
    BitVector cols(m.cols());
    std::size_t weight = 0;
    for (std::size_t i = 0; i < positions; ++i) {
      if (!((bits >> i) & 1)) continue;
      ++weight;
      cols.set(i);
      if (symplectic) cols.set(positions + i);
    }
    const double prob = std::pow(p, static_cast<double>(weight)) *
                        std::pow(1.0 - p, static_cast<double>(positions - weight));
    total += prob * static_cast<double>(rank(restrict_columns(m, cols)));
  }
  return total / static_cast<double>(positions);
}

BitMatrix incidence_matrix(std::size_t vertex_count, const EdgeList& edges) {
  std::vector<BitVector> rows(vertex_count, BitVector(edges.size()));
  for (std::size_t j = 0; j < edges.size(); ++j) {
    rows[edges[j].first].set(j);
    rows[edges[j].second].set(j);
  }
  return BitMatrix::from_rows(edges.size(), std::move(rows));
}

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  Substream rng(seed, 0, 0);
  std::vector<BitVector> out(rows, BitVector(cols));
  for (auto& row : out) {
    for (std::size_t j = 0; j < cols; ++j) row.set(j, rng() & 1);
  }
  return BitMatrix::from_rows(cols, std::move(out));
}

CssCode random_css(std::size_t n, std::size_t r_x, std::size_t r_z, std::uint64_t seed) {
  BitMatrix hx = random_matrix(r_x, n, seed);
  const auto kernel = kernel_basis(hx);
  Substream rng(seed, 1, 0);
  std::vector<BitVector> z_rows;
  for (std::size_t i = 0; i < r_z; ++i) {
    BitVector row(n);
    for (const auto& v : kernel) {
      if (rng() & 1) row ^= v;
    }
    z_rows.push_back(std::move(row));
  }
  return {n, std::move(hx), BitMatrix::from_rows(n, std::move(z_rows))};
}

namespace {

// Multigraph adjacency lists kept in sync with the edge list.
struct Adjacency {
  std::vector<std::vector<std::size_t>> nbrs;

  void add(std::size_t u, std::size_t v) {
    nbrs[u].push_back(v);
    nbrs[v].push_back(u);
  }
  void remove(std::size_t u, std::size_t v) {
    nbrs[u].erase(std::find(nbrs[u].begin(), nbrs[u].end(), v));
    nbrs[v].erase(std::find(nbrs[v].begin(), nbrs[v].end(), u));
  }

  // True when edge (u, v) closes a cycle shorter than min_girth, counting
  // self-loops and parallel edges.
  bool on_short_cycle(std::size_t u, std::size_t v, std::size_t min_girth,
                      std::vector<std::size_t>& dist) const {
    if (u == v) return true;
    if (std::count(nbrs[u].begin(), nbrs[u].end(), v) > 1) return true;
    // BFS from u without the edge itself; a path of length <= min_girth - 2
    // to v gives a cycle of length < min_girth.
    const std::size_t limit = min_girth - 2;
    std::vector<std::size_t> seen{u};
    dist[u] = 0;
    bool found = false;
    for (std::size_t head = 0; head < seen.size() && !found; ++head) {
      const std::size_t x = seen[head];
      if (dist[x] == limit) continue;
      for (std::size_t w : nbrs[x]) {
        if (x == u && w == v) continue;
        if (w == v) {
          found = true;
          break;
        }
        if (dist[w] != kUnseen) continue;
        dist[w] = dist[x] + 1;
        seen.push_back(w);
      }
    }
    for (std::size_t x : seen) dist[x] = kUnseen;
    return found;
  }

  static constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
};

}  // namespace

EdgeList random_regular_graph(std::size_t vertices, unsigned m, std::size_t min_girth,
                              std::uint64_t seed) {
  if ((vertices * m) % 2) throw std::invalid_argument("vertices * m must be even");
  if (min_girth < 3) min_girth = 3;
  Substream rng(seed, 0, 0);
  std::vector<std::size_t> stubs;
  for (std::size_t v = 0; v < vertices; ++v) {
    for (unsigned k = 0; k < m; ++k) stubs.push_back(v);
  }
  for (std::size_t i = stubs.size(); i > 1; --i) std::swap(stubs[i - 1], stubs[rng.below(i)]);
  EdgeList edges;
  Adjacency adj{std::vector<std::vector<std::size_t>>(vertices)};
  for (std::size_t i = 0; i < stubs.size(); i += 2) {
    edges.emplace_back(stubs[i], stubs[i + 1]);
    adj.add(stubs[i], stubs[i + 1]);
  }
  std::vector<std::size_t> dist(vertices, Adjacency::kUnseen);
  auto bad = [&](std::size_t j) {
    return adj.on_short_cycle(edges[j].first, edges[j].second, min_girth, dist);
  };

  for (std::size_t sweep = 0; sweep < 100000; ++sweep) {
    bool clean = true;
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (!bad(j)) continue;
      clean = false;
      // Switch with a random partner edge; keep the switch if both new edges
      // avoid short cycles.
      const std::size_t k = rng.below(edges.size());
      if (k == j) continue;
      const auto old_j = edges[j], old_k = edges[k];
      adj.remove(old_j.first, old_j.second);
      adj.remove(old_k.first, old_k.second);
      if (rng() & 1) {
        edges[j] = {old_j.first, old_k.first};
        edges[k] = {old_j.second, old_k.second};
      } else {
        edges[j] = {old_j.first, old_k.second};
        edges[k] = {old_j.second, old_k.first};
      }
      adj.add(edges[j].first, edges[j].second);
      adj.add(edges[k].first, edges[k].second);
      if (bad(j) || bad(k)) {
        adj.remove(edges[j].first, edges[j].second);
        adj.remove(edges[k].first, edges[k].second);
        edges[j] = old_j;
        edges[k] = old_k;
        adj.add(old_j.first, old_j.second);
        adj.add(old_k.first, old_k.second);
      }
    }
    if (clean) return edges;
  }
  throw std::runtime_error("random_regular_graph: could not remove short cycles");
}

}  // namespace qeb::oracle
