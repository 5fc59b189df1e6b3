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

#include <algorithm>
#include <map>
#include <set>

#include "catch_amalgamated.hpp"
#include "edgex/coloring.hpp"
#include "edgex/families.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace edgex;

namespace {

std::vector<std::vector<int>> aligned(const Graph& g, const ListAssignment& la) {
  std::vector<std::vector<int>> out;
  for (const EdgeId& e : g.edges()) out.push_back(la.list(e));
  return out;
}

ListAssignment random_lists(testing::Rng& rng, const Graph& g, int universe,
                            auto&& size_of) {
  ListAssignment la;
  std::vector<Color> all;
  for (Color c = 1; c <= universe; ++c) all.push_back(c);
  for (const EdgeId& e : g.edges()) {
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Color> l(all.begin(), all.begin() + static_cast<long>(size_of(e)));
    std::sort(l.begin(), l.end());
    la.lists.emplace(e, std::move(l));
  }
  la.set_degree_demand(g);
  return la;
}

}  // namespace

TEST_CASE("verify_proper", "[coloring]") {
  Graph p3 = path_graph(3);
  EdgeColoring good{{{{0, 1}, 1}, {{1, 2}, 2}}, 2};
  CHECK(verify_proper(p3, good).ok());

  EdgeColoring bad{{{{0, 1}, 1}, {{1, 2}, 1}}, 2};
  auto report = verify_proper(p3, bad);
  REQUIRE(report.conflicts.size() == 1);
  CHECK(report.conflicts[0].vertex == 1);
  CHECK(report.conflicts[0].color == 1);

  EdgeColoring wide{{{{0, 1}, 1}, {{1, 2}, 3}}, 2};
  auto r2 = verify_proper(p3, wide);
  REQUIRE(r2.palette_violations.size() == 1);
  CHECK(r2.palette_violations[0].edge == EdgeId{1, 2});

  ListAssignment la = ListAssignment::uniform(p3, 2);
  la.lists[{0, 1}] = {2};
  auto r3 = verify_proper(p3, good, la);
  REQUIRE(r3.list_violations.size() == 1);
  CHECK(r3.list_violations[0].edge == EdgeId{0, 1});

  EdgeColoring partial{{{{0, 1}, 1}}, 2};
  CHECK_THROWS_AS(verify_proper(p3, partial), Error);
  EdgeColoring foreign{{{{0, 1}, 1}, {{1, 2}, 2}, {{0, 2}, 3}}, 3};
  CHECK_THROWS_AS(verify_proper(p3, foreign), Error);
}

TEST_CASE("konig_color on K_3,3 uses three perfect matchings", "[coloring]") {
  Graph k33 = complete_bipartite_graph(3, 3);
  EdgeColoring col = konig_color(k33);
  CHECK(col.palette_size == 3);
  CHECK(verify_proper(k33, col).ok());
  std::map<Color, int> class_size;
  for (const auto& [e, c] : col.assignment) ++class_size[c];
  CHECK(class_size == std::map<Color, int>{{1, 3}, {2, 3}, {3, 3}});
}

TEST_CASE("konig_color rejects odd cycles", "[coloring]") {
  CHECK_THROWS_AS(konig_color(cycle_graph(5)), NotBipartiteError);
}

TEST_CASE("konig_color uses max_degree colors on every small bipartite graph",
          "[coloring][property]") {
  const auto graphs = testing::connected_bipartite_graphs(7);
  CHECK(graphs.size() == 68);
  for (const Graph& g : graphs) {
    EdgeColoring col = konig_color(g);
    CHECK(verify_proper(g, col).ok());
    CHECK(col.palette_size == max_degree(g));
  }
  testing::Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = testing::random_connected_bipartite(rng, 14, 5);
    EdgeColoring col = konig_color(g);
    CHECK(verify_proper(g, col).ok());
  }
}

TEST_CASE("C_4 with lists {1,2} has exactly two colorings", "[coloring]") {
  Graph c4 = cycle_graph(4);
  ListAssignment la = ListAssignment::uniform(c4, 2);
  CHECK(testing::count_list_colorings_naive(c4, aligned(c4, la)) == 2);

  EdgeColoring g = galvin_list_color(c4, la);
  CHECK(verify_proper(c4, g, la).ok());
  auto x = exact_list_color(c4, la);
  REQUIRE(x);
  CHECK(verify_proper(c4, *x, la).ok());
}

TEST_CASE("P_3 with lists {1,2} and {2,3}", "[coloring]") {
  Graph p3 = path_graph(3);
  ListAssignment la;
  la.lists[{0, 1}] = {1, 2};
  la.lists[{1, 2}] = {2, 3};
  la.set_degree_demand(p3);
  CHECK(testing::count_list_colorings_naive(p3, aligned(p3, la)) == 3);
  for (const EdgeColoring& col :
       {galvin_list_color(p3, la), *exact_list_color(p3, la), bkw_list_color(p3, la)}) {
    CHECK(verify_proper(p3, col, la).ok());
  }
}

TEST_CASE("galvin_list_color rejects short lists", "[coloring]") {
  Graph k13 = star_graph(3);
  ListAssignment la = ListAssignment::uniform(k13, 2);
  try {
    galvin_list_color(k13, la);
    FAIL("lists shorter than Delta");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ListTooShort);
  }
}

TEST_CASE("galvin_list_color on uniform Delta-lists", "[coloring][property]") {
  for (const Graph& g : testing::connected_bipartite_graphs(7)) {
    ListAssignment la = ListAssignment::uniform(g, max_degree(g));
    EdgeColoring col = galvin_list_color(g, la);
    CHECK(verify_proper(g, col, la).ok());
  }
}

TEST_CASE("galvin_list_color on random lists of size Delta",
          "[coloring][property]") {
  testing::Rng rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = testing::random_connected_bipartite(rng, 10, 4);
    const std::size_t delta = max_degree(g);
    ListAssignment la = random_lists(rng, g, static_cast<int>(delta) + 3,
                                     [&](const EdgeId&) { return delta; });
    EdgeColoring col = galvin_list_color(g, la);
    CHECK(verify_proper(g, col, la).ok());
  }
}

TEST_CASE("galvin_kernel is independent and absorbing", "[coloring][property]") {
  testing::Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = testing::random_connected_bipartite(rng, 10, 4);
    Bipartition sides = bipartition(g);
    std::vector<Color> base = detail::konig_colors(g);
    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (testing::uniform(rng, 0, 2) != 0) eligible.push_back(i);
    auto kernel = galvin_kernel(g, sides, base, eligible);
    std::set<std::size_t> in(kernel.begin(), kernel.end());
    for (std::size_t a : kernel)
      for (std::size_t b : kernel)
        if (a != b) CHECK_FALSE(g.edges()[a].shares_vertex(g.edges()[b]));
    // Each eligible edge outside the kernel meets a kernel edge it prefers:
    // at its X end one with a smaller base color, at its Y end a larger one.
    for (std::size_t e : eligible) {
      if (in.count(e)) continue;
      const EdgeId& ed = g.edges()[e];
      Vertex x = sides[ed.u] == Side::X ? ed.u : ed.v;
      Vertex y = ed.other(x);
      bool absorbed = std::any_of(kernel.begin(), kernel.end(), [&](std::size_t k) {
        const EdgeId& ke = g.edges()[k];
        return (ke.touches(x) && base[k] < base[e]) ||
               (ke.touches(y) && base[k] > base[e]);
      });
      CHECK(absorbed);
    }
  }
}

TEST_CASE("exact_list_color agrees with naive counting", "[coloring][property]") {
  testing::Rng rng(37);
  std::size_t sat = 0, unsat = 0;
  for (const Graph& g : testing::connected_bipartite_graphs(6)) {
    for (int rep = 0; rep < 10; ++rep) {
      ListAssignment la = random_lists(rng, g, 4, [&](const EdgeId&) {
        return testing::uniform(rng, 1, 3);
      });
      const bool exists = testing::count_list_colorings_naive(g, aligned(g, la)) > 0;
      auto found = exact_list_color(g, la);
      CHECK(found.has_value() == exists);
      if (found) {
        CHECK(verify_proper(g, *found, la).ok());
        ++sat;
      } else {
        ++unsat;
      }
    }
  }
  CHECK(sat > 0);
  CHECK(unsat > 0);
}

TEST_CASE("exact_list_color rejects colors outside 1..64", "[coloring]") {
  Graph k2 = path_graph(2);
  ListAssignment la;
  la.lists[{0, 1}] = {65};
  CHECK_THROWS_AS(exact_list_color(k2, la), Error);
}

TEST_CASE("bkw_list_color with lists {1..f(e)} on P_4", "[coloring]") {
  Graph p4 = path_graph(4);
  ListAssignment la;
  for (const EdgeId& e : p4.edges()) {
    std::size_t f = std::max(p4.degree(e.u), p4.degree(e.v));
    for (std::size_t c = 1; c <= f; ++c) la.lists[e].push_back(static_cast<Color>(c));
  }
  la.set_degree_demand(p4);
  EdgeColoring col = bkw_list_color(p4, la);
  CHECK(verify_proper(p4, col, la).ok());
  for (const auto& [e, c] : col.assignment)
    CHECK(static_cast<std::size_t>(c) <= la.demand.at(e));
}

TEST_CASE("bkw_list_color falls back to exact search below Delta", "[coloring]") {
  // Star K_1,3 at 0 with a pendant path 3-4-5.
  Graph g = build_graph(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}});
  ListAssignment la;
  for (Vertex leaf : {1, 2, 3}) la.lists[EdgeId{0, leaf}] = {1, 2, 3};
  la.lists[{3, 4}] = {1, 2};
  la.lists[{4, 5}] = {1, 2};
  la.set_degree_demand(g);
  REQUIRE(max_degree(g) == 3);
  REQUIRE(testing::find_list_coloring_dfs(g, aligned(g, la)));
  EdgeColoring col = bkw_list_color(g, la);
  CHECK(verify_proper(g, col, la).ok());
}

TEST_CASE("bkw_list_color enforces demand", "[coloring]") {
  Graph p3 = path_graph(3);
  ListAssignment la;
  la.lists[{0, 1}] = {1};
  la.lists[{1, 2}] = {1, 2};
  try {
    bkw_list_color(p3, la);
    FAIL("demand violation expected");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DemandViolation);
  }
  CHECK_THROWS_AS(bkw_list_color(cycle_graph(3), ListAssignment::uniform(cycle_graph(3), 3)),
                  NotBipartiteError);
}

TEST_CASE("bkw_list_color on random degree-sized lists", "[coloring][property]") {
  testing::Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = testing::random_connected_bipartite(rng, 10, 4);
    ListAssignment la = random_lists(rng, g, 6, [&](const EdgeId& e) {
      return std::max(g.degree(e.u), g.degree(e.v));
    });
    EdgeColoring col = bkw_list_color(g, la);
    CHECK(verify_proper(g, col, la).ok());
  }
}

TEST_CASE("one_factorization", "[coloring]") {
  auto k4 = one_factorization(4);
  REQUIRE(k4.size() == 3);
  std::set<EdgeId> all;
  for (const auto& cls : k4) {
    CHECK(cls.size() == 2);
    all.insert(cls.begin(), cls.end());
  }
  CHECK(all.size() == 6);

  auto k8 = one_factorization(8);
  CHECK(k8.size() == 7);
  std::size_t total = 0;
  for (const auto& cls : k8) total += cls.size();
  CHECK(total == 28);

  CHECK(one_factorization(2) == std::vector<std::vector<EdgeId>>{{{0, 1}}});

  try {
    one_factorization(5);
    FAIL("odd order");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OddOrder);
  }
  CHECK_THROWS_AS(one_factorization(0), Error);
}

TEST_CASE("one_factorization partitions K_2m into perfect matchings",
          "[coloring][property]") {
  for (std::size_t m = 1; m <= 12; ++m) {
    const std::size_t n = 2 * m;
    auto classes = one_factorization(n);
    CHECK(classes.size() == n - 1);
    std::set<EdgeId> seen;
    for (const auto& cls : classes) {
      std::vector<int> covered(n, 0);
      for (const EdgeId& e : cls) {
        CHECK(e.u < e.v);
        CHECK(e.v < n);
        ++covered[e.u];
        ++covered[e.v];
        CHECK(seen.insert(e).second);
      }
      CHECK(std::all_of(covered.begin(), covered.end(), [](int k) { return k == 1; }));
    }
    CHECK(seen.size() == m * (2 * m - 1));
  }
}
