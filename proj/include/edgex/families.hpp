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

// Standard graph families, the Cartesian product with layer/fiber edge
// metadata, and the embedding of the star K_{1,m} into the hypercube Q_m.

#ifndef EDGEX_FAMILIES_HPP
#define EDGEX_FAMILIES_HPP

#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "edgex/error.hpp"
#include "edgex/graph.hpp"

namespace edgex {

namespace family {
struct Complete { std::size_t n; };
struct CompleteBipartite { std::size_t n, m; };
struct Star { std::size_t m; };
struct Path { std::size_t n; };
struct Cycle { std::size_t n; };
struct Hypercube { std::size_t d; };
struct Spider { std::size_t legs, leg_length; };
}  // namespace family

using FamilySpec =
    std::variant<family::Complete, family::CompleteBipartite, family::Star,
                 family::Path, family::Cycle, family::Hypercube,
                 family::Spider>;

namespace detail {

inline void require_positive(std::size_t value, const char* what) {
  if (value < 1)
    throw Error(ErrorKind::BadParameter, std::string(what) + " must be >= 1");
}

inline std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

/// d-bit binary string of x, most significant bit first.
inline std::string bitstring(std::size_t x, std::size_t d) {
  std::string s(d, '0');
  for (std::size_t k = 0; k < d; ++k)
    if (x >> k & 1U) s[d - 1 - k] = '1';
  return s;
}

}  // namespace detail

/// Complete graph; vertices are labeled a1..an.
inline Graph complete_graph(std::size_t n) {
  detail::require_positive(n, "complete graph order");
  std::vector<std::string> labels(n);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = "a" + std::to_string(i + 1);
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return Graph(std::move(labels), pairs);
}

/// K_{n,m}: vertices 0..n-1 form one side, n..n+m-1 the other.
inline Graph complete_bipartite_graph(std::size_t n, std::size_t m) {
  detail::require_positive(n, "complete bipartite side");
  detail::require_positive(m, "complete bipartite side");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) pairs.emplace_back(i, n + j);
  return Graph(detail::numbered(n + m), pairs);
}

/// K_{1,m} with center 0 and leaves 1..m.
inline Graph star_graph(std::size_t m) {
  detail::require_positive(m, "star size");
  return complete_bipartite_graph(1, m);
}

/// Path on n vertices 0-1-...-(n-1).
inline Graph path_graph(std::size_t n) {
  detail::require_positive(n, "path order");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Graph(detail::numbered(n), pairs);
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::BadParameter, "cycle order must be >= 3");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  return Graph(detail::numbered(n), pairs);
}

/// Q_d. Vertex x is labeled by its d-bit binary expansion (most significant
/// bit first), so Q_d coincides index-for-index with Q_{d-1} x K_2.
inline Graph hypercube_graph(std::size_t d) {
  if (d > 24) throw Error(ErrorKind::BadParameter, "hypercube dimension too large");
  const std::size_t n = std::size_t{1} << d;
  std::vector<std::string> labels(n);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t x = 0; x < n; ++x) {
    labels[x] = detail::bitstring(x, d);
    for (std::size_t k = 0; k < d; ++k)
      if (!(x >> k & 1U)) pairs.emplace_back(x, x | std::size_t{1} << k);
  }
  return Graph(std::move(labels), pairs);
}

/// Subdivided star: center 0 and `legs` paths of `leg_length` vertices each.
/// Leg t (0-based) occupies 1 + t*leg_length .. (t+1)*leg_length, nearest the
/// center first. For leg_length >= 2 no leaf is adjacent to the center.
inline Graph spider_graph(std::size_t legs, std::size_t leg_length) {
  detail::require_positive(legs, "spider legs");
  detail::require_positive(leg_length, "spider leg length");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t t = 0; t < legs; ++t) {
    Vertex prev = 0;
    for (std::size_t k = 0; k < leg_length; ++k) {
      Vertex cur = 1 + t * leg_length + k;
      pairs.emplace_back(prev, cur);
      prev = cur;
    }
  }
  return Graph(detail::numbered(1 + legs * leg_length), pairs);
}

inline Graph standard_family(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> Graph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, family::Complete>)
          return complete_graph(s.n);
        else if constexpr (std::is_same_v<T, family::CompleteBipartite>)
          return complete_bipartite_graph(s.n, s.m);
        else if constexpr (std::is_same_v<T, family::Star>)
          return star_graph(s.m);
        else if constexpr (std::is_same_v<T, family::Path>)
          return path_graph(s.n);
        else if constexpr (std::is_same_v<T, family::Cycle>)
          return cycle_graph(s.n);
        else if constexpr (std::is_same_v<T, family::Hypercube>)
          return hypercube_graph(s.d);
        else
          return spider_graph(s.legs, s.leg_length);
      },
      spec);
}

/// Edge (u,w)-(v,w) of G x H: a copy of base edge uv inside layer w.
struct LayerEdge {
  EdgeId base_edge;
  Vertex right_vertex;
  friend bool operator==(const LayerEdge&, const LayerEdge&) = default;
};

/// Edge (u,w)-(u,z) of G x H: right-factor edge wz inside the fiber of u.
struct FiberEdge {
  Vertex base_vertex;
  EdgeId right_edge;
  friend bool operator==(const FiberEdge&, const FiberEdge&) = default;
};

using EdgeKind = std::variant<LayerEdge, FiberEdge>;

struct ProductGraph {
  Graph graph;
  std::size_t left_order = 0;
  std::size_t right_order = 0;
  /// Per product vertex, its (left, right) factor coordinates.
  std::vector<std::pair<Vertex, Vertex>> factors;
  /// Aligned with graph.edges().
  std::vector<EdgeKind> edge_kinds;

  Vertex vertex(Vertex u, Vertex w) const { return u * right_order + w; }
  const EdgeKind& kind_of(const EdgeId& e) const {
    return edge_kinds[graph.require_edge(e)];
  }
};

/// G x H with vertex (u,w) at index u*|V(H)|+w, labeled "label(u)|label(w)".
inline ProductGraph cartesian_product(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0)
    throw Error(ErrorKind::BadParameter, "product factors must be nonempty");
  ProductGraph p;
  p.left_order = g.order();
  p.right_order = h.order();
  std::vector<std::string> labels;
  labels.reserve(g.order() * h.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex w = 0; w < h.order(); ++w) {
      labels.push_back(g.label(u) + "|" + h.label(w));
      p.factors.emplace_back(u, w);
    }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(g.order() * h.size() + h.order() * g.size());
  for (const EdgeId& e : g.edges())
    for (Vertex w = 0; w < h.order(); ++w)
      pairs.emplace_back(p.vertex(e.u, w), p.vertex(e.v, w));
  for (Vertex u = 0; u < g.order(); ++u)
    for (const EdgeId& f : h.edges())
      pairs.emplace_back(p.vertex(u, f.u), p.vertex(u, f.v));
  p.graph = Graph(std::move(labels), pairs);

  p.edge_kinds.reserve(p.graph.size());
  for (const EdgeId& e : p.graph.edges()) {
    auto [u1, w1] = p.factors[e.u];
    auto [u2, w2] = p.factors[e.v];
    if (w1 == w2)
      p.edge_kinds.emplace_back(LayerEdge{EdgeId::of(u1, u2), w1});
    else
      p.edge_kinds.emplace_back(FiberEdge{u1, EdgeId::of(w1, w2)});
  }
  return p;
}

/// Canonical image of K_{1,m} in Q_m: the center goes to 0 and leaf t
/// (1-based, star vertex t) goes to the unit vector with bit t-1 set.
struct StarEmbedding {
  std::size_t m = 0;
  /// Indexed by star vertex (0 = center); values are Q_m vertex indices.
  std::vector<Vertex> vertex_map;

  Vertex operator()(Vertex star_vertex) const {
    return vertex_map.at(star_vertex);
  }
};

inline StarEmbedding embed_star_in_hypercube(std::size_t m) {
  detail::require_positive(m, "star size");
  if (m > 24) throw Error(ErrorKind::BadParameter, "star too large to embed");
  StarEmbedding emb{m, {0}};
  for (std::size_t t = 1; t <= m; ++t)
    emb.vertex_map.push_back(std::size_t{1} << (t - 1));
  return emb;
}

}  // namespace edgex

#endif  // EDGEX_FAMILIES_HPP
