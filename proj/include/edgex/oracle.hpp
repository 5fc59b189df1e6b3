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

// Exact extendability decisions, non-extendable instances built around a
// saturated hub vertex, local obstruction certificates, and a harness that
// searches G x K_{n,m} for non-extendable distance-2 matchings.

#ifndef EDGEX_ORACLE_HPP
#define EDGEX_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "edgex/coloring.hpp"
#include "edgex/error.hpp"
#include "edgex/extension.hpp"
#include "edgex/families.hpp"
#include "edgex/graph.hpp"

namespace edgex {

enum class Verdict { Extendable, NotExtendable, BudgetExceeded };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Extendable: return "Extendable";
    case Verdict::NotExtendable: return "NotExtendable";
    case Verdict::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

struct OracleResult {
  Verdict verdict = Verdict::BudgetExceeded;
  /// Present iff verdict is Extendable.
  std::optional<EdgeColoring> witness;
  std::uint64_t nodes = 0;
};

/// Decides whether pre extends to a proper coloring of g with colors
/// 1..palette. BudgetExceeded is inconclusive and never a negative answer.
inline OracleResult decide_extendable(
    const Graph& g, const Precoloring& pre, std::size_t palette,
    std::optional<std::uint64_t> node_budget = std::nullopt) {
  if (palette > static_cast<std::size_t>(detail::kMaxSearchColor))
    throw Error(ErrorKind::BadParameter, "oracle supports palettes up to 64");
  std::vector<detail::ColorMask> domains(
      g.size(), palette == 0 ? 0 : (~detail::ColorMask{0} >> (64 - palette)));
  for (const auto& [e, c] : pre.entries) {
    const std::size_t i = g.require_edge(e);
    if (c < 1 || static_cast<std::size_t>(c) > palette)
      throw Error(ErrorKind::BadParameter,
                  "precolor " + std::to_string(c) + " outside palette");
    domains[i] = detail::bit(c);
  }
  auto outcome = detail::ListSearch(g, std::move(domains), node_budget).run();

  OracleResult result;
  result.nodes = outcome.nodes;
  using Status = detail::SearchOutcome::Status;
  if (outcome.status == Status::BudgetExceeded) {
    result.verdict = Verdict::BudgetExceeded;
  } else if (outcome.status == Status::Unsatisfiable) {
    result.verdict = Verdict::NotExtendable;
  } else {
    EdgeColoring witness = detail::to_coloring(g, outcome.colors, palette);
    detail::require_extension(g, witness, pre);
    result.verdict = Verdict::Extendable;
    result.witness = std::move(witness);
  }
  return result;
}

/// Edges not containing v, pairwise at distance >= 2, whose endpoints cover
/// every neighbor of v. Among all solutions, returns the one whose sequence
/// of covering edges (per neighbor in ascending order) is lexicographically
/// least. std::nullopt when none exists.
inline std::optional<std::vector<EdgeId>> find_covering_induced_matching(
    const Graph& g, Vertex v) {
  const auto& targets = g.neighbors(v);
  std::vector<EdgeId> chosen;

  std::function<bool(std::size_t)> cover = [&](std::size_t k) -> bool {
    while (k < targets.size() &&
           std::any_of(chosen.begin(), chosen.end(),
                       [&](const EdgeId& e) { return e.touches(targets[k]); }))
      ++k;
    if (k == targets.size()) return true;
    const Vertex x = targets[k];
    for (Vertex y : g.neighbors(x)) {
      if (y == v) continue;
      const EdgeId e = EdgeId::of(x, y);
      if (std::any_of(chosen.begin(), chosen.end(), [&](const EdgeId& f) {
            return within_distance_one(g, e, f);
          }))
        continue;
      chosen.push_back(e);
      if (cover(k + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!cover(0)) return std::nullopt;
  return chosen;
}

struct ObstructionCertificate {
  Vertex hub = 0;
  Color color = 0;
  /// Per edge at the hub, a precolored edge of `color` adjacent to it.
  std::vector<std::pair<EdgeId, EdgeId>> witnesses;
};

/// A vertex whose degree equals the palette size needs every color on its
/// edges; if some color is blocked on each of them by an adjacent precolored
/// edge, the precoloring cannot extend.
inline std::optional<ObstructionCertificate> check_local_obstruction(
    const Graph& g, const Precoloring& pre) {
  std::map<Vertex, std::vector<std::pair<EdgeId, Color>>> at;
  for (const auto& [e, c] : pre.entries) {
    g.require_edge(e);
    at[e.u].emplace_back(e, c);
    at[e.v].emplace_back(e, c);
  }
  auto precolored_at = [&](Vertex x, Color c) -> std::optional<EdgeId> {
    auto it = at.find(x);
    if (it == at.end()) return std::nullopt;
    for (const auto& [e, col] : it->second)
      if (col == c) return e;
    return std::nullopt;
  };

  for (Vertex w = 0; w < g.order(); ++w) {
    if (g.degree(w) == 0 || g.degree(w) != pre.palette_size) continue;
    for (std::size_t ci = 1; ci <= pre.palette_size; ++ci) {
      const Color c = static_cast<Color>(ci);
      if (precolored_at(w, c)) continue;
      ObstructionCertificate cert{w, c, {}};
      for (Vertex x : g.neighbors(w)) {
        auto witness = precolored_at(x, c);
        if (!witness) break;
        cert.witnesses.emplace_back(EdgeId::of(w, x), *witness);
      }
      if (cert.witnesses.size() == g.degree(w)) return cert;
    }
  }
  return std::nullopt;
}

inline std::optional<ObstructionCertificate> check_local_obstruction(
    const ProductGraph& p, const Precoloring& pre) {
  return check_local_obstruction(p.graph, pre);
}

struct HubInstance {
  ProductGraph product;
  Precoloring precoloring;
  Vertex hub = 0;
  Vertex left_vertex = 0;   // a in G
  Vertex right_vertex = 0;  // b in H
  std::vector<EdgeId> g_matching;
  std::vector<EdgeId> h_matching;
};

namespace detail {

struct Anchor {
  Vertex vertex;
  std::vector<EdgeId> matching;
};

inline std::optional<Anchor> coverable_max_degree_vertex(const Graph& g) {
  const std::size_t delta = max_degree(g);
  if (delta == 0) return std::nullopt;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == delta)
      if (auto mm = find_covering_induced_matching(g, v))
        return Anchor{v, std::move(*mm)};
  return std::nullopt;
}

}  // namespace detail

/// Non-extendable distance-2 matching of g x h: with hub (a,b), precolor the
/// edges (c,b)(d,b) for the covering matching cd of N(a) in g and (a,k)(a,l)
/// for the covering matching kl of N(b) in h, all with color 1. Palette is
/// Delta(g)+Delta(h), which is the degree of the hub.
inline HubInstance build_hub_instance(const Graph& g, const Graph& h) {
  bipartition(g);
  bipartition(h);
  auto left = detail::coverable_max_degree_vertex(g);
  if (!left)
    throw Error(ErrorKind::Inapplicable,
                "no maximum-degree vertex of the left graph has a neighborhood "
                "covered by an induced matching");
  auto right = detail::coverable_max_degree_vertex(h);
  if (!right)
    throw Error(ErrorKind::Inapplicable,
                "no maximum-degree vertex of the right graph has a "
                "neighborhood covered by an induced matching");

  HubInstance inst;
  inst.product = cartesian_product(g, h);
  const ProductGraph& p = inst.product;
  inst.left_vertex = left->vertex;
  inst.right_vertex = right->vertex;
  inst.hub = p.vertex(left->vertex, right->vertex);
  inst.g_matching = left->matching;
  inst.h_matching = right->matching;
  inst.precoloring.palette_size = max_degree(g) + max_degree(h);
  for (const EdgeId& e : inst.g_matching)
    inst.precoloring.set(p.vertex(e.u, right->vertex),
                         p.vertex(e.v, right->vertex), 1);
  for (const EdgeId& e : inst.h_matching)
    inst.precoloring.set(p.vertex(left->vertex, e.u),
                         p.vertex(left->vertex, e.v), 1);

  if (p.graph.degree(inst.hub) != inst.precoloring.palette_size ||
      p.graph.degree(inst.hub) != max_degree(p.graph))
    detail::proof_violation("hub is not a maximum-degree vertex of the product");
  if (!validate_precoloring(p, inst.precoloring).ok())
    detail::proof_violation("hub precoloring is not a distance-2 matching");
  auto cert = check_local_obstruction(p, inst.precoloring);
  if (!cert || cert->hub != inst.hub)
    detail::proof_violation("hub precoloring does not block color 1 at the hub");
  return inst;
}

// ---------------------------------------------------------------------------
// Exploration over G x K_{n,m}

struct ExplorationReport {
  std::size_t instances = 0;
  std::size_t extendable = 0;
  std::size_t inconclusive = 0;
  std::vector<Precoloring> counterexamples;
  std::uint64_t budget_used = 0;
  std::uint64_t seed = 0;
  bool exhaustive = false;

  /// Associative merge of two partial reports.
  ExplorationReport& operator+=(const ExplorationReport& o) {
    instances += o.instances;
    extendable += o.extendable;
    inconclusive += o.inconclusive;
    counterexamples.insert(counterexamples.end(), o.counterexamples.begin(),
                           o.counterexamples.end());
    budget_used += o.budget_used;
    exhaustive = exhaustive && o.exhaustive;
    return *this;
  }
};

namespace detail {

/// Calls visit(matching) for every distance-2 matching of g (including the
/// empty one) in lexicographic DFS order, until visit returns false.
inline void for_each_induced_matching(
    const Graph& g, const std::function<bool(const std::vector<EdgeId>&)>& visit) {
  std::vector<EdgeId> chosen;
  bool stop = false;
  std::function<void(std::size_t)> walk = [&](std::size_t start) {
    if (stop) return;
    if (!visit(chosen)) {
      stop = true;
      return;
    }
    for (std::size_t i = start; i < g.size() && !stop; ++i) {
      const EdgeId& e = g.edges()[i];
      if (std::any_of(chosen.begin(), chosen.end(), [&](const EdgeId& f) {
            return within_distance_one(g, e, f);
          }))
        continue;
      chosen.push_back(e);
      walk(i + 1);
      chosen.pop_back();
    }
  };
  walk(0);
}

}  // namespace detail

/// Decides distance-2 matching precolorings of g x K_{n,m} with palette
/// Delta(g)+n. When the number of (matching, coloring) instances is at most
/// `budget` all of them are decided; otherwise `budget` instances are drawn
/// from a generator seeded with `seed` (random induced matching prefix with
/// uniform colors) and the report is marked non-exhaustive.
inline ExplorationReport explore_complete_bipartite(
    const Graph& g, std::size_t n, std::size_t m, std::uint64_t budget,
    std::uint64_t seed = 0, std::uint64_t node_budget = 1'000'000) {
  bipartition(g);
  if (m < 1 || n < m)
    throw Error(ErrorKind::BadParameter, "need n >= m >= 1");
  const ProductGraph p = cartesian_product(g, complete_bipartite_graph(n, m));
  const std::size_t palette = max_degree(g) + n;

  ExplorationReport report;
  report.seed = seed;
  auto decide = [&](const Precoloring& pre) {
    ++report.instances;
    ++report.budget_used;
    auto r = decide_extendable(p.graph, pre, palette, node_budget);
    if (r.verdict == Verdict::Extendable)
      ++report.extendable;
    else if (r.verdict == Verdict::NotExtendable)
      report.counterexamples.push_back(pre);
    else
      ++report.inconclusive;
  };

  // Count instances, stopping as soon as the budget is exceeded.
  std::uint64_t total = 0;
  detail::for_each_induced_matching(p.graph, [&](const std::vector<EdgeId>& mm) {
    std::uint64_t ways = 1;
    for (std::size_t i = 0; i < mm.size() && ways <= budget; ++i) ways *= palette;
    total += ways;
    return total <= budget;
  });

  if (total <= budget) {
    report.exhaustive = true;
    detail::for_each_induced_matching(p.graph, [&](const std::vector<EdgeId>& mm) {
      std::vector<Color> colors(mm.size(), 1);
      while (true) {
        Precoloring pre;
        pre.palette_size = palette;
        for (std::size_t i = 0; i < mm.size(); ++i) pre.entries[mm[i]] = colors[i];
        decide(pre);
        std::size_t k = 0;
        while (k < colors.size() &&
               static_cast<std::size_t>(colors[k]) == palette)
          colors[k++] = 1;
        if (k == colors.size()) break;
        ++colors[k];
      }
      return true;
    });
    return report;
  }

  std::mt19937_64 rng(seed);
  std::vector<EdgeId> order = p.graph.edges();
  for (std::uint64_t s = 0; s < budget; ++s) {
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<EdgeId> maximal;
    for (const EdgeId& e : order)
      if (std::none_of(maximal.begin(), maximal.end(), [&](const EdgeId& f) {
            return within_distance_one(p.graph, e, f);
          }))
        maximal.push_back(e);
    std::uniform_int_distribution<std::size_t> size_dist(0, maximal.size());
    std::uniform_int_distribution<int> color_dist(1, static_cast<int>(palette));
    const std::size_t k = size_dist(rng);
    Precoloring pre;
    pre.palette_size = palette;
    for (std::size_t i = 0; i < k; ++i) pre.entries[maximal[i]] = color_dist(rng);
    decide(pre);
  }
  return report;
}

}  // namespace edgex

#endif  // EDGEX_ORACLE_HPP
