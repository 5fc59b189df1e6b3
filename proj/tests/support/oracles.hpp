// Copyright 2026 The edgex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only brute-force oracles. Nothing here calls into the search or
// coloring engines under test; only Graph/EdgeId plumbing is shared.

#ifndef EDGEX_TESTS_ORACLES_HPP
#define EDGEX_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "edgex/graph.hpp"

namespace edgex::testing {

/// Length of the shortest simple path, found by enumerating every simple
/// path from u. std::nullopt when v is unreachable.
inline std::optional<std::size_t> shortest_by_all_paths(const Graph& g, Vertex u,
                                                        Vertex v) {
  std::optional<std::size_t> best;
  std::vector<bool> on_path(g.order(), false);
  std::function<void(Vertex, std::size_t)> walk = [&](Vertex x, std::size_t len) {
    if (x == v) {
      if (!best || len < *best) best = len;
      return;
    }
    on_path[x] = true;
    for (Vertex y : g.neighbors(x))
      if (!on_path[y]) walk(y, len + 1);
    on_path[x] = false;
  };
  walk(u, 0);
  return best;
}

/// Number of proper list colorings, by plain enumeration of every
/// assignment (no pruning).
inline std::uint64_t count_list_colorings_naive(
    const Graph& g, const std::vector<std::vector<int>>& lists) {
  const std::size_t m = g.size();
  std::vector<std::size_t> pick(m, 0);
  for (const auto& l : lists)
    if (l.empty()) return 0;
  std::uint64_t count = 0;
  while (true) {
    bool proper = true;
    for (std::size_t i = 0; i < m && proper; ++i)
      for (std::size_t j = i + 1; j < m && proper; ++j)
        if (g.edges()[i].shares_vertex(g.edges()[j]) &&
            lists[i][pick[i]] == lists[j][pick[j]])
          proper = false;
    if (proper) ++count;
    std::size_t k = 0;
    while (k < m && pick[k] + 1 == lists[k].size()) pick[k++] = 0;
    if (k == m) break;
    ++pick[k];
  }
  return count;
}

/// Some proper list coloring, by edge-order DFS that rejects a color as soon
/// as an earlier adjacent edge holds it. Exhaustive, so nullopt means none.
inline std::optional<std::vector<int>> find_list_coloring_dfs(
    const Graph& g, const std::vector<std::vector<int>>& lists) {
  std::vector<int> color(g.size(), 0);
  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == g.size()) return true;
    for (int c : lists[i]) {
      bool clash = false;
      for (std::size_t j = 0; j < i && !clash; ++j)
        clash = color[j] == c && g.edges()[i].shares_vertex(g.edges()[j]);
      if (clash) continue;
      color[i] = c;
      if (place(i + 1)) return true;
    }
    color[i] = 0;
    return false;
  };
  if (!place(0)) return std::nullopt;
  return color;
}

/// Decides extendability of a precoloring with the DFS above: precolored
/// edges get a one-color list, all others the whole palette.
inline bool extendable_by_dfs(const Graph& g, const std::map<EdgeId, int>& pre,
                              std::size_t palette) {
  std::vector<std::vector<int>> lists(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto it = pre.find(g.edges()[i]);
    if (it != pre.end()) {
      lists[i] = {it->second};
    } else {
      for (std::size_t c = 1; c <= palette; ++c) lists[i].push_back(static_cast<int>(c));
    }
  }
  return find_list_coloring_dfs(g, lists).has_value();
}

/// Canonical adjacency-bitstring form of a small graph: minimum over all
/// vertex orders that keep vertices sorted by (degree, sorted neighbor
/// degrees). Two graphs are isomorphic iff their forms are equal.
inline std::vector<bool> canonical_form(const Graph& g) {
  const std::size_t n = g.order();
  auto signature = [&](Vertex v) {
    std::vector<std::size_t> nd;
    for (Vertex w : g.neighbors(v)) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    return std::make_pair(g.degree(v), nd);
  };
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](Vertex a, Vertex b) { return signature(a) < signature(b); });
  // Blocks of equal signature may be permuted internally.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && signature(order[j]) == signature(order[i])) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::optional<std::vector<bool>> best;
  std::function<void(std::size_t)> permute = [&](std::size_t b) {
    if (b == blocks.size()) {
      std::vector<bool> bits;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          bits.push_back(g.has_edge(order[i], order[j]));
      if (!best || bits < *best) best = bits;
      return;
    }
    auto [lo, hi] = blocks[b];
    std::sort(order.begin() + static_cast<long>(lo), order.begin() + static_cast<long>(hi));
    do {
      permute(b + 1);
    } while (std::next_permutation(order.begin() + static_cast<long>(lo),
                                   order.begin() + static_cast<long>(hi)));
  };
  permute(0);
  std::vector<bool> out;
  for (std::size_t k = 0; k < 16; ++k) out.push_back((n >> k) & 1U);
  out.insert(out.end(), best->begin(), best->end());
  return out;
}

/// All connected bipartite graphs with 1..max_edges edges, one per
/// isomorphism class, grown edge by edge from K_2.
inline std::vector<Graph> connected_bipartite_graphs(std::size_t max_edges) {
  auto two_colorable = [](const Graph& g) {
    std::vector<int> side(g.order(), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
      if (side[s] != -1) continue;
      side[s] = 0;
      std::vector<Vertex> stack{s};
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x)) {
          if (side[y] == -1) {
            side[y] = 1 - side[x];
            stack.push_back(y);
          } else if (side[y] == side[x]) {
            return false;
          }
        }
      }
    }
    return true;
  };
  auto pairs_of = [](const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> p;
    for (const EdgeId& e : g.edges()) p.emplace_back(e.u, e.v);
    return p;
  };

  std::vector<Graph> all;
  std::vector<Graph> level{build_graph(2, {{0, 1}})};
  for (std::size_t size = 1; size <= max_edges; ++size) {
    all.insert(all.end(), level.begin(), level.end());
    if (size == max_edges) break;
    std::set<std::vector<bool>> seen;
    std::vector<Graph> next;
    auto consider = [&](Graph cand) {
      if (!two_colorable(cand)) return;
      if (seen.insert(canonical_form(cand)).second) next.push_back(std::move(cand));
    };
    for (const Graph& g : level) {
      const std::size_t n = g.order();
      for (Vertex v = 0; v < n; ++v) {
        auto p = pairs_of(g);
        p.emplace_back(v, n);
        consider(build_graph(n + 1, p));
      }
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
          if (!g.has_edge(a, b)) {
            auto p = pairs_of(g);
            p.emplace_back(a, b);
            consider(build_graph(n, p));
          }
    }
    level = std::move(next);
  }
  return all;
}

}  // namespace edgex::testing

#endif  // EDGEX_TESTS_ORACLES_HPP
