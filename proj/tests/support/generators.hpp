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

// Seeded random instance generators shared by the unit and acceptance suites.

#ifndef EDGEX_TESTS_GENERATORS_HPP
#define EDGEX_TESTS_GENERATORS_HPP

#include <algorithm>
#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "edgex/extension.hpp"
#include "edgex/graph.hpp"

namespace edgex::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Connected bipartite graph on 2..max_vertices vertices with maximum degree
/// at most max_degree (>= 2): a random tree plus random extra X-Y edges.
inline Graph random_connected_bipartite(Rng& rng, std::size_t max_vertices,
                                        std::size_t max_degree) {
  const std::size_t n = uniform(rng, 2, max_vertices);
  std::vector<int> side(n, 0);
  std::vector<std::size_t> deg(n, 0);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v = 1; v < n; ++v) {
    std::vector<Vertex> open;
    for (Vertex u = 0; u < v; ++u)
      if (deg[u] < max_degree) open.push_back(u);
    Vertex u = open[uniform(rng, 0, open.size() - 1)];
    side[v] = 1 - side[u];
    ++deg[u];
    ++deg[v];
    pairs.emplace_back(u, v);
  }
  const std::size_t extra = uniform(rng, 0, n);
  for (std::size_t t = 0; t < extra; ++t) {
    Vertex a = uniform(rng, 0, n - 1), b = uniform(rng, 0, n - 1);
    if (side[a] == side[b] || deg[a] >= max_degree || deg[b] >= max_degree) continue;
    auto e = std::make_pair(std::min(a, b), std::max(a, b));
    bool dup = std::any_of(pairs.begin(), pairs.end(), [&](const auto& p) {
      return std::min(p.first, p.second) == e.first &&
             std::max(p.first, p.second) == e.second;
    });
    if (dup) continue;
    ++deg[a];
    ++deg[b];
    pairs.push_back(e);
  }
  return build_graph(n, pairs);
}

/// Random tree on 2..max_vertices vertices (each vertex attaches to a
/// uniformly chosen earlier one).
inline Graph random_tree(Rng& rng, std::size_t max_vertices) {
  const std::size_t n = uniform(rng, 2, max_vertices);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v = 1; v < n; ++v) pairs.emplace_back(uniform(rng, 0, v - 1), v);
  return build_graph(n, pairs);
}

/// Distance-2 matching of size <= max_size, grown greedily over a random
/// edge order, with uniform colors from 1..palette.
inline Precoloring random_precoloring(Rng& rng, const Graph& host,
                                      std::size_t max_size, std::size_t palette) {
  std::vector<EdgeId> order = host.edges();
  std::shuffle(order.begin(), order.end(), rng);
  const std::size_t target = uniform(rng, 0, max_size);
  std::vector<EdgeId> chosen;
  for (const EdgeId& e : order) {
    if (chosen.size() >= target) break;
    if (std::none_of(chosen.begin(), chosen.end(), [&](const EdgeId& f) {
          return within_distance_one(host, e, f);
        }))
      chosen.push_back(e);
  }
  Precoloring pre;
  pre.palette_size = palette;
  for (const EdgeId& e : chosen)
    pre.entries[e] = static_cast<Color>(uniform(rng, 1, palette));
  return pre;
}

}  // namespace edgex::testing

#endif  // EDGEX_TESTS_GENERATORS_HPP
