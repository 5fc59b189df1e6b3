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

// Extension of precolored distance-2 matchings to full proper edge colorings
// of G x K_2m, G x Q_m, G x K_1,m and Q_d, for bipartite G.
//
// The K_2m case is the core. Every base edge of G starts with the list
// {1..Delta(G)+2m-1}. A precolored layer edge (u,a_i)(v,a_i) removes uv from G
// and deletes its color from the lists of the base edges adjacent to uv; a
// precolored fiber edge (u,a_i)(u,a_j) deletes its color from the lists of the
// base edges at u. The residual graph is list colored, forced edges get their
// prescribed color, the result is replicated into every layer, and each fiber
// K_2m is 1-factorized over the 2m-1 colors left free at its base vertex.

#ifndef EDGEX_EXTENSION_HPP
#define EDGEX_EXTENSION_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "edgex/coloring.hpp"
#include "edgex/error.hpp"
#include "edgex/families.hpp"
#include "edgex/graph.hpp"

namespace edgex {

struct Precoloring {
  std::size_t palette_size = 0;
  std::map<EdgeId, Color> entries;

  void set(Vertex a, Vertex b, Color c) { entries[EdgeId::of(a, b)] = c; }

  friend bool operator==(const Precoloring&, const Precoloring&) = default;
};

struct PrecoloringReport {
  struct ClosePair {
    EdgeId first, second;
    Distance distance;  // 0 or 1
  };
  struct BadColor {
    EdgeId edge;
    Color color;
  };

  std::vector<ClosePair> close_pairs;
  std::vector<BadColor> bad_colors;

  bool ok() const { return close_pairs.empty() && bad_colors.empty(); }

  std::string describe() const {
    std::ostringstream os;
    for (const auto& p : close_pairs)
      os << "edges " << p.first << " and " << p.second << " at distance "
         << p.distance << "; ";
    for (const auto& b : bad_colors)
      os << "edge " << b.edge << " has color " << b.color
         << " outside the palette; ";
    std::string s = os.str();
    if (s.size() >= 2) s.resize(s.size() - 2);
    return s;
  }
};

/// Checks that the precolored edges form a distance-2 matching of g and that
/// their colors lie in 1..palette_size. Throws UnknownEdge for an edge not
/// in g.
inline PrecoloringReport validate_precoloring(const Graph& g,
                                              const Precoloring& pre) {
  PrecoloringReport report;
  std::vector<EdgeId> edges;
  for (const auto& [e, c] : pre.entries) {
    g.require_edge(e);
    if (c < 1 || static_cast<std::size_t>(c) > pre.palette_size)
      report.bad_colors.push_back({e, c});
    edges.push_back(e);
  }
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (within_distance_one(g, edges[i], edges[j]))
        report.close_pairs.push_back(
            {edges[i], edges[j],
             Distance(edges[i].shares_vertex(edges[j]) ? 0 : 1)});
  return report;
}

inline PrecoloringReport validate_precoloring(const ProductGraph& p,
                                              const Precoloring& pre) {
  return validate_precoloring(p.graph, pre);
}

struct LayerEntry {
  EdgeId base_edge;
  Vertex copy;  // right-factor vertex: a_{copy+1}
  Color color;
};

struct FiberEntry {
  Vertex base_vertex;
  EdgeId right_pair;
  Color color;
};

struct ClassifiedPrecoloring {
  std::vector<LayerEntry> layer;
  std::vector<FiberEntry> fiber;
};

inline ClassifiedPrecoloring classify_precolored(const ProductGraph& p,
                                                 const Precoloring& pre) {
  ClassifiedPrecoloring out;
  for (const auto& [e, c] : pre.entries) {
    const EdgeKind& kind = p.kind_of(e);
    if (const auto* l = std::get_if<LayerEdge>(&kind))
      out.layer.push_back({l->base_edge, l->right_vertex, c});
    else {
      const auto& f = std::get<FiberEdge>(kind);
      out.fiber.push_back({f.base_vertex, f.right_edge, c});
    }
  }
  return out;
}

struct FiberPrescription {
  EdgeId right_pair;
  Color color;
  friend bool operator==(const FiberPrescription&,
                         const FiberPrescription&) = default;
};

/// The list edge-coloring problem on the base graph.
struct ReducedInstance {
  std::size_t m = 0;
  std::size_t palette_size = 0;
  /// G' = G minus the base edges of precolored layer edges.
  Graph base_residual;
  /// Lists over E(G'), demand = max G'-degree of the endpoints.
  ListAssignment lists;
  /// Removed base edges and their prescribed colors.
  std::map<EdgeId, Color> forced_layer;
  std::map<Vertex, FiberPrescription> fiber_prescriptions;
  /// Colors deleted from each edge of G'.
  std::map<EdgeId, std::set<Color>> lost;
};

namespace detail {

[[noreturn]] inline void proof_violation(const std::string& what) {
  throw Error(ErrorKind::InternalProofInvariantViolated, what);
}

inline std::string edge_str(const EdgeId& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

inline void require_bipartite(const Graph& g) { bipartition(g); }

inline void require_m(std::size_t m) {
  if (m < 1) throw Error(ErrorKind::BadParameter, "m must be >= 1");
}

/// Rejects a precoloring that does not fit `host` with the given palette.
inline void require_valid(const Graph& host, const Precoloring& pre,
                          std::size_t palette) {
  if (pre.palette_size != palette)
    throw Error(ErrorKind::InvalidPrecoloring,
                "palette size " + std::to_string(pre.palette_size) +
                    " but this product needs exactly " +
                    std::to_string(palette));
  for (const auto& [e, c] : pre.entries)
    if (!host.has_edge(e))
      throw Error(ErrorKind::InvalidPrecoloring,
                  "edge " + edge_str(e) + " is not in the product");
  auto report = validate_precoloring(host, pre);
  if (!report.ok())
    throw Error(ErrorKind::InvalidPrecoloring, report.describe());
}

/// Internal postcondition of every extend_* entry point.
inline void require_extension(const Graph& host, const EdgeColoring& col,
                              const Precoloring& pre) {
  auto report = verify_proper(host, col);
  if (!report.ok())
    proof_violation("assembled coloring is not a proper palette coloring");
  for (const auto& [e, c] : pre.entries)
    if (col.at(e) != c)
      proof_violation("precolored edge " + edge_str(e) + " lost its color");
}

}  // namespace detail

inline ProductGraph complete_product(const Graph& g, std::size_t m) {
  detail::require_m(m);
  return cartesian_product(g, complete_graph(2 * m));
}

inline ProductGraph hypercube_product(const Graph& g, std::size_t m) {
  detail::require_m(m);
  return cartesian_product(g, hypercube_graph(m));
}

inline ProductGraph star_product(const Graph& g, std::size_t m) {
  detail::require_m(m);
  return cartesian_product(g, star_graph(m));
}

/// Builds the list coloring instance on G' from a valid precoloring of
/// g x K_2m with palette Delta(g)+2m-1, and asserts the list-size
/// guarantees that make it solvable.
inline ReducedInstance reduce(const Graph& g, std::size_t m,
                              const Precoloring& pre) {
  detail::require_bipartite(g);
  const ProductGraph p = complete_product(g, m);
  const std::size_t palette = max_degree(g) + 2 * m - 1;
  ClassifiedPrecoloring cls = classify_precolored(p, pre);

  ReducedInstance out;
  out.m = m;
  out.palette_size = palette;
  for (const auto& entry : cls.layer)
    if (!out.forced_layer.emplace(entry.base_edge, entry.color).second)
      detail::proof_violation("base edge " + detail::edge_str(entry.base_edge) +
                              " precolored in two layers");
  for (const auto& entry : cls.fiber)
    if (!out.fiber_prescriptions
             .emplace(entry.base_vertex,
                      FiberPrescription{entry.right_pair, entry.color})
             .second)
      detail::proof_violation("two precolored fiber edges at base vertex " +
                              std::to_string(entry.base_vertex));

  std::vector<std::pair<Vertex, Vertex>> kept;
  for (const EdgeId& e : g.edges())
    if (!out.forced_layer.count(e)) kept.emplace_back(e.u, e.v);
  out.base_residual = Graph(g.labels(), kept);
  const Graph& rest = out.base_residual;

  for (const EdgeId& e : rest.edges()) out.lost[e];
  for (const auto& [forced, c] : out.forced_layer)
    for (Vertex end : {forced.u, forced.v})
      for (Vertex w : g.neighbors(end)) {
        EdgeId adj = EdgeId::of(end, w);
        if (adj != forced && rest.has_edge(adj)) out.lost[adj].insert(c);
      }
  for (const auto& [u, fp] : out.fiber_prescriptions)
    for (Vertex w : rest.neighbors(u)) out.lost[EdgeId::of(u, w)].insert(fp.color);

  auto touches_forced = [&](Vertex x) {
    return rest.degree(x) < g.degree(x);
  };
  for (const EdgeId& e : rest.edges()) {
    const auto& gone = out.lost[e];
    if (gone.size() > 2)
      detail::proof_violation("edge " + detail::edge_str(e) + " lost " +
                              std::to_string(gone.size()) + " colors");
    if (m == 1 && gone.size() == 2 && !(touches_forced(e.u) && touches_forced(e.v)))
      detail::proof_violation("edge " + detail::edge_str(e) +
                              " lost two colors without both endpoints "
                              "meeting a removed edge");
    std::vector<Color> list;
    for (std::size_t c = 1; c <= palette; ++c)
      if (!gone.count(static_cast<Color>(c))) list.push_back(static_cast<Color>(c));
    const std::size_t need = std::max(rest.degree(e.u), rest.degree(e.v));
    if (list.size() < need)
      detail::proof_violation("edge " + detail::edge_str(e) + " has " +
                              std::to_string(list.size()) + " colors, demand " +
                              std::to_string(need));
    out.lists.lists.emplace(e, std::move(list));
  }
  out.lists.set_degree_demand(rest);
  return out;
}

/// Colors the fiber K_2m of every base vertex u with 2m-1 colors not used at
/// u by base_coloring. The 1-factorization class holding a prescribed pair
/// gets the prescribed color; the other classes get the smallest remaining
/// free colors in class order. Keys are product edges of g x K_2m.
inline EdgeColoring color_fibers(
    const Graph& g, std::size_t m, const EdgeColoring& base_coloring,
    const std::map<Vertex, FiberPrescription>& fiber_prescriptions) {
  detail::require_m(m);
  const std::size_t order = 2 * m;
  const std::size_t palette = max_degree(g) + order - 1;
  const auto classes = one_factorization(order);
  EdgeColoring out;
  out.palette_size = palette;

  for (Vertex u = 0; u < g.order(); ++u) {
    std::vector<bool> used(palette + 1, false);
    for (Vertex w : g.neighbors(u)) {
      Color c = base_coloring.at(EdgeId::of(u, w));
      if (c >= 1 && static_cast<std::size_t>(c) <= palette) used[c] = true;
    }
    std::vector<Color> avail;
    for (std::size_t c = 1; c <= palette; ++c)
      if (!used[c]) avail.push_back(static_cast<Color>(c));
    if (avail.size() < order - 1)
      detail::proof_violation("only " + std::to_string(avail.size()) +
                              " free colors at base vertex " +
                              std::to_string(u));

    std::vector<Color> class_color(classes.size(), 0);
    auto fp = fiber_prescriptions.find(u);
    if (fp != fiber_prescriptions.end()) {
      const Color c = fp->second.color;
      auto slot = std::find(avail.begin(), avail.end(), c);
      if (slot == avail.end())
        detail::proof_violation("prescribed fiber color " + std::to_string(c) +
                                " is used at base vertex " + std::to_string(u));
      avail.erase(slot);
      for (std::size_t k = 0; k < classes.size(); ++k)
        if (std::binary_search(classes[k].begin(), classes[k].end(),
                               fp->second.right_pair))
          class_color[k] = c;
    }
    auto next = avail.begin();
    for (auto& c : class_color)
      if (c == 0) c = *next++;

    for (std::size_t k = 0; k < classes.size(); ++k)
      for (const EdgeId& pair : classes[k])
        out.assignment.emplace(
            EdgeId::of(u * order + pair.u, u * order + pair.v), class_color[k]);
  }
  return out;
}

/// Extends a precolored distance-2 matching of g x K_2m (palette exactly
/// Delta(g)+2m-1) to a proper edge coloring with that palette.
inline EdgeColoring extend_over_complete(const Graph& g, std::size_t m,
                                         const Precoloring& pre) {
  detail::require_m(m);
  detail::require_bipartite(g);
  const ProductGraph p = complete_product(g, m);
  const std::size_t palette = max_degree(g) + 2 * m - 1;
  detail::require_valid(p.graph, pre, palette);

  const ReducedInstance reduced = reduce(g, m, pre);
  const EdgeColoring residual =
      bkw_list_color(reduced.base_residual, reduced.lists);

  EdgeColoring base;
  base.palette_size = palette;
  base.assignment = residual.assignment;
  for (const auto& [e, c] : reduced.forced_layer) base.assignment[e] = c;
  if (!verify_proper(g, base).ok())
    detail::proof_violation("base coloring with forced edges is not proper");

  EdgeColoring out = color_fibers(g, m, base, reduced.fiber_prescriptions);
  for (std::size_t i = 0; i < p.graph.size(); ++i)
    if (const auto* l = std::get_if<LayerEdge>(&p.edge_kinds[i]))
      out.assignment.emplace(p.graph.edges()[i], base.at(l->base_edge));
  detail::require_extension(p.graph, out, pre);
  return out;
}

/// Extends a precolored distance-2 matching of g x Q_m (palette exactly
/// Delta(g)+m). g x Q_m is (g x Q_{m-1}) x K_2 with identical vertex indices,
/// so this is a single K_2 extension over the base g x Q_{m-1}.
inline EdgeColoring extend_over_hypercube(const Graph& g, std::size_t m,
                                          const Precoloring& pre) {
  detail::require_m(m);
  detail::require_bipartite(g);
  const ProductGraph host = hypercube_product(g, m);
  detail::require_valid(host.graph, pre, max_degree(g) + m);
  const Graph base = cartesian_product(g, hypercube_graph(m - 1)).graph;
  if (complete_product(base, 1).graph.edges() != host.graph.edges())
    detail::proof_violation("g x Q_m does not split as (g x Q_{m-1}) x K_2");
  EdgeColoring out = extend_over_complete(base, 1, pre);
  detail::require_extension(host.graph, out, pre);
  return out;
}

/// Q_d with a precolored induced matching in colors 1..d.
inline EdgeColoring extend_hypercube(std::size_t d, const Precoloring& pre) {
  if (d < 1) throw Error(ErrorKind::BadParameter, "d must be >= 1");
  const Graph host = hypercube_graph(d);
  detail::require_valid(host, pre, d);
  EdgeColoring out = extend_over_complete(hypercube_graph(d - 1), 1, pre);
  detail::require_extension(host, out, pre);
  return out;
}

/// Extends a precolored distance-2 matching of g x K_1,m (palette exactly
/// Delta(g)+m) by embedding it into g x Q_m, which contains g x K_1,m as an
/// induced subgraph, and restricting the extension found there.
inline EdgeColoring extend_over_star(const Graph& g, std::size_t m,
                                     const Precoloring& pre) {
  detail::require_m(m);
  detail::require_bipartite(g);
  const ProductGraph host = star_product(g, m);
  const std::size_t palette = max_degree(g) + m;
  detail::require_valid(host.graph, pre, palette);

  const StarEmbedding emb = embed_star_in_hypercube(m);
  const std::size_t cube = std::size_t{1} << m;
  auto lift = [&](Vertex x) {
    auto [u, s] = host.factors[x];
    return u * cube + emb(s);
  };
  Precoloring lifted;
  lifted.palette_size = palette;
  for (const auto& [e, c] : pre.entries) lifted.set(lift(e.u), lift(e.v), c);
  const ProductGraph big = hypercube_product(g, m);
  if (!validate_precoloring(big.graph, lifted).ok())
    detail::proof_violation("embedded precoloring is not a distance-2 matching");

  const EdgeColoring full = extend_over_hypercube(g, m, lifted);
  EdgeColoring out;
  out.palette_size = palette;
  for (const EdgeId& e : host.graph.edges())
    out.assignment.emplace(e, full.at(EdgeId::of(lift(e.u), lift(e.v))));
  detail::require_extension(host.graph, out, pre);
  return out;
}

}  // namespace edgex

#endif  // EDGEX_EXTENSION_HPP
