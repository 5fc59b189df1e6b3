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

// Edge-coloring engines.
//
//  * konig_color: Delta-edge-coloring of a bipartite graph by alternating
//    path recoloring.
//  * galvin_list_color: list edge coloring when every list has at least
//    Delta colors. A base Delta-coloring orients the line graph so that every
//    edge has out-degree <= Delta-1; each palette color is then assigned to a
//    kernel of the eligible edges, computed as a stable matching.
//  * exact_list_color: complete backtracking search (MRV, forward checking,
//    per-vertex pigeonhole pruning).
//  * bkw_list_color: list edge coloring of a bipartite graph when every edge
//    e=uw has |L(e)| >= max(d(u), d(w)); dispatches to the two above.
//  * one_factorization: circle-method 1-factorization of K_{2m}.

#ifndef EDGEX_COLORING_HPP
#define EDGEX_COLORING_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "edgex/error.hpp"
#include "edgex/graph.hpp"

namespace edgex {

using Color = int;

struct EdgeColoring {
  std::map<EdgeId, Color> assignment;
  std::size_t palette_size = 0;

  Color at(const EdgeId& e) const {
    auto it = assignment.find(EdgeId::of(e.u, e.v));
    if (it == assignment.end())
      throw Error(ErrorKind::MissingEdgeAssignment,
                  "no color for edge (" + std::to_string(e.u) + "," +
                      std::to_string(e.v) + ")");
    return it->second;
  }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

struct ListAssignment {
  /// Ascending, duplicate-free color lists.
  std::map<EdgeId, std::vector<Color>> lists;
  /// Required list size f(e) per edge.
  std::map<EdgeId, std::size_t> demand;

  /// Every edge of g gets {1..palette}; demand is max endpoint degree.
  static ListAssignment uniform(const Graph& g, std::size_t palette) {
    ListAssignment la;
    std::vector<Color> full(palette);
    for (std::size_t c = 0; c < palette; ++c) full[c] = static_cast<Color>(c + 1);
    for (const EdgeId& e : g.edges()) la.lists.emplace(e, full);
    la.set_degree_demand(g);
    return la;
  }

  void set_degree_demand(const Graph& g) {
    demand.clear();
    for (const EdgeId& e : g.edges())
      demand[e] = std::max(g.degree(e.u), g.degree(e.v));
  }

  const std::vector<Color>& list(const EdgeId& e) const {
    auto it = lists.find(e);
    if (it == lists.end())
      throw Error(ErrorKind::UnknownEdge,
                  "no list for edge (" + std::to_string(e.u) + "," +
                      std::to_string(e.v) + ")");
    return it->second;
  }

  bool contains(const EdgeId& e, Color c) const {
    const auto& l = list(e);
    return std::binary_search(l.begin(), l.end(), c);
  }
};

// ---------------------------------------------------------------------------
// Verification

struct ColoringReport {
  struct Conflict {
    Vertex vertex;
    EdgeId first, second;
    Color color;
  };
  struct Violation {
    EdgeId edge;
    Color color;
  };

  std::vector<Conflict> conflicts;
  std::vector<Violation> list_violations;
  std::vector<Violation> palette_violations;

  bool ok() const {
    return conflicts.empty() && list_violations.empty() &&
           palette_violations.empty();
  }
};

inline ColoringReport verify_proper(const Graph& g, const EdgeColoring& col,
                                    const ListAssignment* lists = nullptr) {
  for (const auto& [e, c] : col.assignment) g.require_edge(e);
  ColoringReport report;
  for (const EdgeId& e : g.edges()) {
    Color c = col.at(e);
    if (c < 1 || static_cast<std::size_t>(c) > col.palette_size)
      report.palette_violations.push_back({e, c});
    if (lists && !lists->contains(e, c)) report.list_violations.push_back({e, c});
  }
  for (Vertex x = 0; x < g.order(); ++x) {
    const auto& nbrs = g.neighbors(x);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        EdgeId e = EdgeId::of(x, nbrs[i]);
        EdgeId f = EdgeId::of(x, nbrs[j]);
        if (col.at(e) == col.at(f))
          report.conflicts.push_back({x, e, f, col.at(e)});
      }
  }
  return report;
}

inline ColoringReport verify_proper(const Graph& g, const EdgeColoring& col,
                                    const ListAssignment& lists) {
  return verify_proper(g, col, &lists);
}

// ---------------------------------------------------------------------------
// Konig

namespace detail {

inline EdgeColoring to_coloring(const Graph& g, const std::vector<Color>& colors,
                                std::size_t palette) {
  EdgeColoring out;
  out.palette_size = palette;
  for (std::size_t i = 0; i < g.size(); ++i)
    out.assignment.emplace_hint(out.assignment.end(), g.edges()[i], colors[i]);
  return out;
}

/// Edge colors indexed like g.edges(), using colors 1..max_degree(g).
inline std::vector<Color> konig_colors(const Graph& g) {
  bipartition(g);
  const std::size_t delta = max_degree(g);
  constexpr Vertex kNone = std::numeric_limits<Vertex>::max();
  // mate[x][c]: the neighbor joined to x by the edge of color c.
  std::vector<std::vector<Vertex>> mate(g.order(),
                                        std::vector<Vertex>(delta + 1, kNone));
  auto smallest_free = [&](Vertex x) {
    Color c = 1;
    while (mate[x][c] != kNone) ++c;
    return c;
  };

  for (const EdgeId& e : g.edges()) {
    Color a = smallest_free(e.u);
    Color b = smallest_free(e.v);
    if (mate[e.v][a] != kNone) {
      // Swap a/b along the alternating path leaving v on color a. In a
      // bipartite graph that path cannot end at u, so a stays free at u.
      std::vector<std::pair<Vertex, Vertex>> path;
      Vertex cur = e.v;
      Color want = a;
      while (mate[cur][want] != kNone) {
        Vertex next = mate[cur][want];
        path.emplace_back(cur, next);
        cur = next;
        want = want == a ? b : a;
      }
      want = a;
      for (auto [x, y] : path) {
        mate[x][want] = kNone;
        mate[y][want] = kNone;
        want = want == a ? b : a;
      }
      want = b;
      for (auto [x, y] : path) {
        mate[x][want] = y;
        mate[y][want] = x;
        want = want == a ? b : a;
      }
    }
    mate[e.u][a] = e.v;
    mate[e.v][a] = e.u;
  }

  std::vector<Color> colors(g.size(), 0);
  for (Vertex x = 0; x < g.order(); ++x)
    for (std::size_t c = 1; c <= delta; ++c)
      if (mate[x][c] != kNone && x < mate[x][c])
        colors[*g.edge_index(EdgeId{x, mate[x][c]})] = static_cast<Color>(c);
  return colors;
}

}  // namespace detail

/// Proper coloring of a bipartite graph with exactly max_degree(g) colors.
inline EdgeColoring konig_color(const Graph& g) {
  return detail::to_coloring(g, detail::konig_colors(g), max_degree(g));
}

// ---------------------------------------------------------------------------
// Galvin

/// Stable matching of the edges `eligible` (indices into g.edges()) where
/// X-vertices propose along their edges in ascending base color and
/// Y-vertices keep the proposal with the highest base color. In the line
/// graph oriented toward preferred edges this is a kernel.
inline std::vector<std::size_t> galvin_kernel(
    const Graph& g, const Bipartition& sides,
    const std::vector<Color>& base_colors,
    const std::vector<std::size_t>& eligible) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  auto x_end = [&](std::size_t ei) {
    const EdgeId& e = g.edges()[ei];
    return sides[e.u] == Side::X ? e.u : e.v;
  };
  auto y_end = [&](std::size_t ei) { return g.edges()[ei].other(x_end(ei)); };

  std::map<Vertex, std::vector<std::size_t>> proposals;
  for (std::size_t ei : eligible) proposals[x_end(ei)].push_back(ei);
  for (auto& [x, list] : proposals)
    std::sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
      return base_colors[a] < base_colors[b];
    });

  std::map<Vertex, std::size_t> next;  // per proposer, next list position
  std::map<Vertex, std::size_t> held;  // per Y-vertex, held edge
  std::vector<Vertex> free_proposers;
  for (auto it = proposals.rbegin(); it != proposals.rend(); ++it)
    free_proposers.push_back(it->first);

  while (!free_proposers.empty()) {
    Vertex x = free_proposers.back();
    free_proposers.pop_back();
    auto& pos = next[x];
    const auto& list = proposals[x];
    if (pos >= list.size()) continue;
    std::size_t ei = list[pos++];
    Vertex y = y_end(ei);
    auto it = held.find(y);
    std::size_t current = it == held.end() ? kNone : it->second;
    if (current == kNone) {
      held[y] = ei;
    } else if (base_colors[ei] > base_colors[current]) {
      held[y] = ei;
      free_proposers.push_back(x_end(current));
    } else {
      free_proposers.push_back(x);
    }
  }

  std::vector<std::size_t> kernel;
  for (const auto& [y, ei] : held) kernel.push_back(ei);
  std::sort(kernel.begin(), kernel.end());
  return kernel;
}

/// List edge coloring of a bipartite graph whose lists all have at least
/// max_degree(g) colors.
inline EdgeColoring galvin_list_color(const Graph& g,
                                      const ListAssignment& lists) {
  const Bipartition sides = bipartition(g);
  const std::size_t delta = max_degree(g);
  std::vector<std::vector<Color>> working(g.size());
  std::set<Color> palette;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const EdgeId& e = g.edges()[i];
    working[i] = lists.list(e);
    if (working[i].size() < delta)
      throw Error(ErrorKind::ListTooShort,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") has " + std::to_string(working[i].size()) +
                      " colors, need " + std::to_string(delta));
    palette.insert(working[i].begin(), working[i].end());
  }

  const std::vector<Color> base = detail::konig_colors(g);
  std::vector<Color> result(g.size(), 0);
  std::size_t uncolored = g.size();

  for (Color c : palette) {
    if (uncolored == 0) break;
    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (result[i] == 0 &&
          std::binary_search(working[i].begin(), working[i].end(), c))
        eligible.push_back(i);
    if (eligible.empty()) continue;
    std::vector<std::size_t> kernel = galvin_kernel(g, sides, base, eligible);
    for (std::size_t ei : kernel) {
      result[ei] = c;
      --uncolored;
    }
    // Every eligible edge outside the kernel points into it, so it loses c
    // together with at least one out-neighbor.
    for (std::size_t ei : eligible)
      if (result[ei] == 0)
        working[ei].erase(
            std::lower_bound(working[ei].begin(), working[ei].end(), c));
  }
  if (uncolored != 0)
    throw Error(ErrorKind::InternalNoKernel,
                std::to_string(uncolored) + " edges left uncolored");
  const Color top = palette.empty() ? 0 : *palette.rbegin();
  return detail::to_coloring(g, result, static_cast<std::size_t>(top));
}

// ---------------------------------------------------------------------------
// Exact search

namespace detail {

using ColorMask = std::uint64_t;
inline constexpr Color kMaxSearchColor = 64;

inline ColorMask bit(Color c) { return ColorMask{1} << (c - 1); }

struct SearchOutcome {
  enum class Status { Found, Unsatisfiable, BudgetExceeded };
  Status status = Status::Unsatisfiable;
  std::vector<Color> colors;  // indexed like g.edges() when Found
  std::uint64_t nodes = 0;
};

/// Backtracking over edge colors restricted to per-edge domains. The next
/// edge is the one with the fewest remaining colors (lowest index on ties);
/// colors are tried ascending. Assigning a color removes it from adjacent
/// domains, and a vertex whose unassigned edges have fewer distinct colors
/// left than edges fails immediately.
class ListSearch {
 public:
  ListSearch(const Graph& g, std::vector<ColorMask> domains,
             std::optional<std::uint64_t> budget)
      : g_(g), domain_(std::move(domains)), color_(g.size(), 0),
        budget_(budget) {
    line_.resize(g.size());
    incident_.resize(g.order());
    for (std::size_t i = 0; i < g.size(); ++i) {
      incident_[g.edges()[i].u].push_back(i);
      incident_[g.edges()[i].v].push_back(i);
    }
    for (Vertex x = 0; x < g.order(); ++x)
      for (std::size_t a : incident_[x])
        for (std::size_t b : incident_[x])
          if (a != b) line_[a].push_back(b);
  }

  SearchOutcome run() {
    SearchOutcome out;
    bool consistent = std::none_of(domain_.begin(), domain_.end(),
                                   [](ColorMask d) { return d == 0; });
    for (Vertex x = 0; consistent && x < g_.order(); ++x)
      consistent = pigeonhole_ok(x);
    if (consistent && descend()) {
      out.status = SearchOutcome::Status::Found;
      out.colors = color_;
    } else {
      out.status = aborted_ ? SearchOutcome::Status::BudgetExceeded
                            : SearchOutcome::Status::Unsatisfiable;
    }
    out.nodes = nodes_;
    return out;
  }

 private:
  bool pigeonhole_ok(Vertex x) const {
    ColorMask seen = 0;
    int open = 0;
    for (std::size_t i : incident_[x])
      if (color_[i] == 0) {
        seen |= domain_[i];
        ++open;
      }
    return std::popcount(seen) >= open;
  }

  bool descend() {
    std::size_t pick = g_.size();
    int best = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < g_.size(); ++i)
      if (color_[i] == 0 && std::popcount(domain_[i]) < best) {
        best = std::popcount(domain_[i]);
        pick = i;
      }
    if (pick == g_.size()) return true;

    ColorMask options = domain_[pick];
    while (options) {
      const Color c = std::countr_zero(options) + 1;
      options &= options - 1;
      if (budget_ && nodes_ >= *budget_) {
        aborted_ = true;
        return false;
      }
      ++nodes_;
      const std::size_t mark = trail_.size();
      color_[pick] = c;
      if (propagate(pick, c) && descend()) return true;
      while (trail_.size() > mark) {
        auto [i, d] = trail_.back();
        domain_[i] = d;
        trail_.pop_back();
      }
      color_[pick] = 0;
      if (aborted_) return false;
    }
    return false;
  }

  bool propagate(std::size_t pick, Color c) {
    const ColorMask b = bit(c);
    for (std::size_t j : line_[pick]) {
      if (color_[j] != 0 || !(domain_[j] & b)) continue;
      trail_.emplace_back(j, domain_[j]);
      domain_[j] &= ~b;
      if (domain_[j] == 0) return false;
    }
    const EdgeId& e = g_.edges()[pick];
    if (!pigeonhole_ok(e.u) || !pigeonhole_ok(e.v)) return false;
    for (std::size_t j : line_[pick]) {
      if (color_[j] != 0) continue;
      const EdgeId& f = g_.edges()[j];
      Vertex far = e.touches(f.u) ? f.v : f.u;
      if (!pigeonhole_ok(far)) return false;
    }
    return true;
  }

  const Graph& g_;
  std::vector<ColorMask> domain_;
  std::vector<Color> color_;
  std::vector<std::vector<std::size_t>> line_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<std::pair<std::size_t, ColorMask>> trail_;
  std::optional<std::uint64_t> budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace detail

/// Exact list edge coloring; std::nullopt means no proper coloring from the
/// lists exists. Colors must lie in 1..64.
inline std::optional<EdgeColoring> exact_list_color(
    const Graph& g, const ListAssignment& lists) {
  std::vector<detail::ColorMask> domains(g.size(), 0);
  Color top = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (Color c : lists.list(g.edges()[i])) {
      if (c < 1 || c > detail::kMaxSearchColor)
        throw Error(ErrorKind::BadParameter,
                    "exact search supports colors 1..64, got " +
                        std::to_string(c));
      domains[i] |= detail::bit(c);
      top = std::max(top, c);
    }
  auto outcome = detail::ListSearch(g, std::move(domains), std::nullopt).run();
  if (outcome.status != detail::SearchOutcome::Status::Found) return std::nullopt;
  return detail::to_coloring(g, outcome.colors, static_cast<std::size_t>(top));
}

/// List edge coloring of a bipartite graph where every edge e=uw has at
/// least max(d(u), d(w)) colors. Such a coloring always exists.
inline EdgeColoring bkw_list_color(const Graph& g, const ListAssignment& lists) {
  bipartition(g);
  const std::size_t delta = max_degree(g);
  std::size_t shortest = std::numeric_limits<std::size_t>::max();
  for (const EdgeId& e : g.edges()) {
    const std::size_t need = std::max(g.degree(e.u), g.degree(e.v));
    const std::size_t have = lists.list(e).size();
    if (have < need)
      throw Error(ErrorKind::DemandViolation,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") has " + std::to_string(have) + " colors, demand " +
                      std::to_string(need));
    shortest = std::min(shortest, have);
  }
  if (g.size() == 0 || shortest >= delta) return galvin_list_color(g, lists);
  auto found = exact_list_color(g, lists);
  if (!found)
    throw Error(ErrorKind::InternalTheoremViolation,
                "no list coloring found although every list meets its demand");
  return *found;
}

// ---------------------------------------------------------------------------
// 1-factorization

/// Perfect matchings of K_order on vertices 0..order-1 by the circle method:
/// vertex order-1 stays fixed, round r pairs it with r and pairs r+k with
/// r-k (mod order-1). Returns order-1 classes.
inline std::vector<std::vector<EdgeId>> one_factorization(std::size_t order) {
  if (order < 2)
    throw Error(ErrorKind::BadParameter, "order must be at least 2");
  if (order % 2 != 0)
    throw Error(ErrorKind::OddOrder,
                "K_" + std::to_string(order) + " has no perfect matching");
  const std::size_t ring = order - 1;
  const std::size_t half = order / 2;
  std::vector<std::vector<EdgeId>> classes(ring);
  for (std::size_t r = 0; r < ring; ++r) {
    classes[r].push_back(EdgeId::of(r, ring));
    for (std::size_t k = 1; k < half; ++k)
      classes[r].push_back(EdgeId::of((r + k) % ring, (r + ring - k) % ring));
    std::sort(classes[r].begin(), classes[r].end());
  }
  return classes;
}

}  // namespace edgex

#endif  // EDGEX_COLORING_HPP
