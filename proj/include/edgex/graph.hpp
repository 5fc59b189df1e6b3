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

// Immutable simple undirected graphs, bipartition and vertex/edge distances.

#ifndef EDGEX_GRAPH_HPP
#define EDGEX_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "edgex/error.hpp"

namespace edgex {

using Vertex = std::size_t;

/// Canonical unordered vertex pair, always stored with u < v.
struct EdgeId {
  Vertex u = 0;
  Vertex v = 0;

  static EdgeId of(Vertex a, Vertex b) {
    return a < b ? EdgeId{a, b} : EdgeId{b, a};
  }

  bool touches(Vertex x) const { return u == x || v == x; }
  bool shares_vertex(const EdgeId& o) const {
    return touches(o.u) || touches(o.v);
  }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
  friend std::ostream& operator<<(std::ostream& os, const EdgeId& e) {
    return os << '(' << e.u << ',' << e.v << ')';
  }
};

/// Shortest-path length, or infinite across components. Infinite compares
/// greater than every finite value and deliberately has no arithmetic.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(std::size_t d) : value_(d) {}
  static constexpr Distance infinite() { return Distance(); }

  constexpr bool is_finite() const { return value_.has_value(); }
  constexpr bool is_infinite() const { return !value_.has_value(); }
  /// Precondition: is_finite().
  constexpr std::size_t value() const { return *value_; }

  friend constexpr bool operator==(const Distance&, const Distance&) = default;
  friend constexpr std::strong_ordering operator<=>(const Distance& a,
                                                    const Distance& b) {
    if (a.is_infinite() || b.is_infinite())
      return a.is_infinite() <=> b.is_infinite();
    return *a.value_ <=> *b.value_;
  }
  friend constexpr bool operator==(const Distance& a, std::size_t b) {
    return a.is_finite() && a.value() == b;
  }
  friend constexpr std::strong_ordering operator<=>(const Distance& a,
                                                    std::size_t b) {
    return a <=> Distance(b);
  }
  friend std::ostream& operator<<(std::ostream& os, const Distance& d) {
    if (d.is_infinite()) return os << "inf";
    return os << d.value();
  }

 private:
  std::optional<std::size_t> value_;
};

class Graph {
 public:
  Graph() = default;

  /// Builds a graph from labels and index pairs. Pairs are canonicalized and
  /// stored in lexicographic order; adjacency lists are sorted.
  Graph(std::vector<std::string> labels,
        const std::vector<std::pair<Vertex, Vertex>>& pairs)
      : labels_(std::move(labels)), adjacency_(labels_.size()) {
    edges_.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
      if (a >= labels_.size() || b >= labels_.size())
        throw Error(ErrorKind::IndexOutOfRange,
                    "edge (" + std::to_string(a) + "," + std::to_string(b) +
                        ") with only " + std::to_string(labels_.size()) +
                        " vertices");
      if (a == b)
        throw Error(ErrorKind::SelfLoop,
                    "self-loop at vertex " + std::to_string(a));
      edges_.push_back(EdgeId::of(a, b));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
      throw Error(ErrorKind::DuplicateEdge,
                  "edge (" + std::to_string(dup->u) + "," +
                      std::to_string(dup->v) + ") given twice");
    index_.reserve(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const EdgeId& e = edges_[i];
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
      index_.emplace(key(e), i);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  }

  std::size_t order() const { return labels_.size(); }
  std::size_t size() const { return edges_.size(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Vertex v) const { return labels_.at(v); }
  /// Edges in lexicographic order of their canonical pairs.
  const std::vector<EdgeId>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
  }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  bool has_edge(Vertex a, Vertex b) const {
    return a != b && index_.count(key(EdgeId::of(a, b))) > 0;
  }
  bool has_edge(const EdgeId& e) const { return has_edge(e.u, e.v); }

  /// Position of e in edges(); std::nullopt when absent.
  std::optional<std::size_t> edge_index(const EdgeId& e) const {
    auto it = index_.find(key(EdgeId::of(e.u, e.v)));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t require_edge(const EdgeId& e) const {
    auto idx = edge_index(e);
    if (!idx)
      throw Error(ErrorKind::UnknownEdge, "edge (" + std::to_string(e.u) +
                                              "," + std::to_string(e.v) +
                                              ") is not in the graph");
    return *idx;
  }

  void check_vertex(Vertex v) const {
    if (v >= labels_.size())
      throw Error(ErrorKind::IndexOutOfRange,
                  "vertex " + std::to_string(v) + " out of range");
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  static std::uint64_t key(const EdgeId& e) {
    return (static_cast<std::uint64_t>(e.u) << 32) ^
           static_cast<std::uint64_t>(e.v);
  }

  std::vector<std::string> labels_;
  std::vector<EdgeId> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

inline Graph build_graph(std::vector<std::string> labels,
                         const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  return Graph(std::move(labels), pairs);
}

/// Graph with labels "0".."n-1".
inline Graph build_graph(std::size_t n,
                         const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return Graph(std::move(labels), pairs);
}

inline std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

enum class Side : std::uint8_t { X, Y };

struct Bipartition {
  std::vector<Side> side;

  Side operator[](Vertex v) const { return side.at(v); }
  std::size_t count(Side s) const {
    return static_cast<std::size_t>(std::count(side.begin(), side.end(), s));
  }
};

/// Raised by bipartition() and everything that requires a bipartite input.
class NotBipartiteError : public Error {
 public:
  explicit NotBipartiteError(std::vector<Vertex> cycle)
      : Error(ErrorKind::NotBipartite, describe(cycle)),
        cycle_(std::move(cycle)) {}

  /// Vertices of an odd cycle, in cycle order.
  const std::vector<Vertex>& odd_cycle() const { return cycle_; }

 private:
  static std::string describe(const std::vector<Vertex>& cycle) {
    std::string s = "odd cycle of length " + std::to_string(cycle.size()) + ":";
    for (Vertex v : cycle) s += " " + std::to_string(v);
    return s;
  }
  std::vector<Vertex> cycle_;
};

/// Two-colors every component by BFS from its lowest-index vertex, which is
/// placed on side X.
inline Bipartition bipartition(const Graph& g) {
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> depth(g.order(), kUnseen);
  std::vector<Vertex> parent(g.order());
  Bipartition result{std::vector<Side>(g.order(), Side::X)};
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (depth[root] != kUnseen) continue;
    depth[root] = 0;
    parent[root] = root;
    queue.push_back(root);
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (depth[y] == kUnseen) {
          depth[y] = depth[x] + 1;
          parent[y] = x;
          result.side[y] = result.side[x] == Side::X ? Side::Y : Side::X;
          queue.push_back(y);
        } else if (result.side[y] == result.side[x]) {
          // Walk both tree paths up to the common ancestor.
          std::vector<Vertex> left{x}, right{y};
          Vertex a = x, b = y;
          while (a != b) {
            if (depth[a] >= depth[b]) {
              a = parent[a];
              left.push_back(a);
            } else {
              b = parent[b];
              right.push_back(b);
            }
          }
          right.pop_back();
          left.insert(left.end(), right.rbegin(), right.rend());
          throw NotBipartiteError(std::move(left));
        }
      }
    }
  }
  return result;
}

inline bool is_bipartite(const Graph& g) {
  try {
    bipartition(g);
    return true;
  } catch (const NotBipartiteError&) {
    return false;
  }
}

/// BFS distances from source to every vertex.
inline std::vector<Distance> distances_from(const Graph& g, Vertex source) {
  g.check_vertex(source);
  std::vector<Distance> dist(g.order(), Distance::infinite());
  dist[source] = Distance(0);
  std::deque<Vertex> queue{source};
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y].is_infinite()) {
        dist[y] = Distance(dist[x].value() + 1);
        queue.push_back(y);
      }
    }
  }
  return dist;
}

inline Distance vertex_distance(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(v);
  return distances_from(g, u)[v];
}

/// Minimum over the four endpoint-pair distances of e and f.
inline Distance edge_distance(const Graph& g, const EdgeId& e,
                              const EdgeId& f) {
  g.require_edge(e);
  g.require_edge(f);
  if (e.shares_vertex(f)) return Distance(0);
  auto du = distances_from(g, e.u);
  auto dv = distances_from(g, e.v);
  return std::min({du[f.u], du[f.v], dv[f.u], dv[f.v]});
}

/// True when e and f share a vertex or are joined by an edge, i.e. their
/// edge distance is at most one. Cheaper than edge_distance in inner loops.
inline bool within_distance_one(const Graph& g, const EdgeId& e,
                                const EdgeId& f) {
  if (e.shares_vertex(f)) return true;
  return g.has_edge(e.u, f.u) || g.has_edge(e.u, f.v) ||
         g.has_edge(e.v, f.u) || g.has_edge(e.v, f.v);
}

}  // namespace edgex

#endif  // EDGEX_GRAPH_HPP
