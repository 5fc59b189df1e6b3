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

// JSON documents for graphs, products, colorings, precolorings and reports,
// plus Graphviz DOT export. Writers are deterministic (fixed key order,
// canonical edge order, two-space indent, trailing newline) so that
// read-then-write reproduces a written file byte for byte.

#ifndef EDGEX_IO_HPP
#define EDGEX_IO_HPP

#include <array>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "edgex/coloring.hpp"
#include "edgex/error.hpp"
#include "edgex/extension.hpp"
#include "edgex/families.hpp"
#include "edgex/graph.hpp"
#include "edgex/oracle.hpp"
#include "json.hpp"

namespace edgex::io {

using Json = nlohmann::ordered_json;

struct NamedGraph {
  std::string name;
  Graph graph;
};

inline std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

inline Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& ex) {
    throw Error(ErrorKind::Parse, ex.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Parse, "cannot write " + path);
  out << text;
}

namespace detail {

template <typename T>
T field(const Json& doc, const char* key) {
  try {
    return doc.at(key).get<T>();
  } catch (const Json::exception& ex) {
    throw Error(ErrorKind::Parse, std::string("field '") + key + "': " + ex.what());
  }
}

inline Json edge_array(const EdgeId& e) { return Json::array({e.u, e.v}); }

inline EdgeId edge_from(const Json& item) {
  return EdgeId::of(field<Vertex>(item, "u"), field<Vertex>(item, "v"));
}

}  // namespace detail

// -- graphs ------------------------------------------------------------------

inline Json graph_to_json(const Graph& g, const std::string& name) {
  Json doc;
  doc["name"] = name;
  doc["vertices"] = g.labels();
  Json edges = Json::array();
  for (const EdgeId& e : g.edges()) edges.push_back(detail::edge_array(e));
  doc["edges"] = std::move(edges);
  return doc;
}

inline NamedGraph graph_from_json(const Json& doc) {
  NamedGraph out;
  out.name = doc.contains("name") ? detail::field<std::string>(doc, "name") : "";
  auto labels = detail::field<std::vector<std::string>>(doc, "vertices");
  auto pairs = detail::field<std::vector<std::pair<Vertex, Vertex>>>(doc, "edges");
  out.graph = Graph(std::move(labels), pairs);
  return out;
}

// -- products ----------------------------------------------------------------

inline Json product_to_json(const ProductGraph& p, const std::string& name) {
  Json doc = graph_to_json(p.graph, name);
  Json kinds = Json::array();
  for (const EdgeKind& k : p.edge_kinds) {
    if (const auto* l = std::get_if<LayerEdge>(&k))
      kinds.push_back(Json::array(
          {"L", l->base_edge.u, l->base_edge.v, l->right_vertex}));
    else {
      const auto& f = std::get<FiberEdge>(k);
      kinds.push_back(
          Json::array({"F", f.base_vertex, f.right_edge.u, f.right_edge.v}));
    }
  }
  Json meta;
  meta["left"] = p.left_order;
  meta["right"] = p.right_order;
  meta["edge_kinds"] = std::move(kinds);
  doc["product"] = std::move(meta);
  return doc;
}

inline ProductGraph product_from_json(const Json& doc) {
  ProductGraph p;
  p.graph = graph_from_json(doc).graph;
  if (!doc.contains("product"))
    throw Error(ErrorKind::Parse, "missing 'product' metadata");
  const Json meta = detail::field<Json>(doc, "product");
  p.left_order = detail::field<std::size_t>(meta, "left");
  p.right_order = detail::field<std::size_t>(meta, "right");
  if (p.left_order * p.right_order != p.graph.order())
    throw Error(ErrorKind::Parse, "product dimensions do not match vertex count");
  for (Vertex x = 0; x < p.graph.order(); ++x)
    p.factors.emplace_back(x / p.right_order, x % p.right_order);
  const Json kinds = detail::field<Json>(meta, "edge_kinds");
  if (!kinds.is_array() || kinds.size() != p.graph.size())
    throw Error(ErrorKind::Parse, "edge_kinds must list one kind per edge");
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    const Json& k = kinds[i];
    const EdgeId& e = p.graph.edges()[i];
    try {
      const auto tag = k.at(0).get<std::string>();
      const auto a = k.at(1).get<Vertex>();
      const auto b = k.at(2).get<Vertex>();
      const auto c = k.at(3).get<Vertex>();
      EdgeId expect;
      if (tag == "L") {
        p.edge_kinds.emplace_back(LayerEdge{EdgeId::of(a, b), c});
        expect = EdgeId::of(p.vertex(a, c), p.vertex(b, c));
      } else if (tag == "F") {
        p.edge_kinds.emplace_back(FiberEdge{a, EdgeId::of(b, c)});
        expect = EdgeId::of(p.vertex(a, b), p.vertex(a, c));
      } else {
        throw Error(ErrorKind::Parse, "unknown edge kind '" + tag + "'");
      }
      if (expect != e)
        throw Error(ErrorKind::Parse,
                    "edge kind " + std::to_string(i) + " does not match its edge");
    } catch (const Json::exception& ex) {
      throw Error(ErrorKind::Parse, ex.what());
    }
  }
  return p;
}

// -- colorings and precolorings ----------------------------------------------

inline Json coloring_to_json(const EdgeColoring& col) {
  Json doc;
  doc["palette_size"] = col.palette_size;
  Json items = Json::array();
  for (const auto& [e, c] : col.assignment)
    items.push_back(Json{{"u", e.u}, {"v", e.v}, {"color", c}});
  doc["assignment"] = std::move(items);
  return doc;
}

inline EdgeColoring coloring_from_json(const Json& doc) {
  EdgeColoring col;
  col.palette_size = detail::field<std::size_t>(doc, "palette_size");
  for (const Json& item : detail::field<Json>(doc, "assignment"))
    if (!col.assignment.emplace(detail::edge_from(item),
                                detail::field<Color>(item, "color"))
             .second)
      throw Error(ErrorKind::Parse, "edge assigned twice");
  return col;
}

inline Json precoloring_to_json(const Precoloring& pre) {
  Json doc;
  doc["palette_size"] = pre.palette_size;
  Json items = Json::array();
  for (const auto& [e, c] : pre.entries)
    items.push_back(Json{{"u", e.u}, {"v", e.v}, {"color", c}});
  doc["entries"] = std::move(items);
  return doc;
}

inline Precoloring precoloring_from_json(const Json& doc) {
  Precoloring pre;
  pre.palette_size = detail::field<std::size_t>(doc, "palette_size");
  for (const Json& item : detail::field<Json>(doc, "entries"))
    if (!pre.entries.emplace(detail::edge_from(item),
                             detail::field<Color>(item, "color"))
             .second)
      throw Error(ErrorKind::Parse, "edge precolored twice");
  return pre;
}

// -- reports -----------------------------------------------------------------

inline Json report_to_json(const ColoringReport& r) {
  Json doc;
  doc["ok"] = r.ok();
  Json conflicts = Json::array();
  for (const auto& c : r.conflicts)
    conflicts.push_back(Json{{"vertex", c.vertex},
                             {"edges", Json::array({detail::edge_array(c.first),
                                                    detail::edge_array(c.second)})},
                             {"color", c.color}});
  doc["conflicts"] = std::move(conflicts);
  auto violations = [](const std::vector<ColoringReport::Violation>& vs) {
    Json out = Json::array();
    for (const auto& v : vs)
      out.push_back(Json{{"edge", detail::edge_array(v.edge)}, {"color", v.color}});
    return out;
  };
  doc["list_violations"] = violations(r.list_violations);
  doc["palette_violations"] = violations(r.palette_violations);
  return doc;
}

inline Json certificate_to_json(const ObstructionCertificate& cert) {
  Json doc;
  doc["hub"] = cert.hub;
  doc["color"] = cert.color;
  Json items = Json::array();
  for (const auto& [edge, witness] : cert.witnesses)
    items.push_back(Json{{"edge", detail::edge_array(edge)},
                         {"witness", detail::edge_array(witness)}});
  doc["witnesses"] = std::move(items);
  return doc;
}

inline Json exploration_to_json(const ExplorationReport& r) {
  Json doc;
  doc["instances"] = r.instances;
  doc["extendable"] = r.extendable;
  Json cex = Json::array();
  for (const auto& pre : r.counterexamples) cex.push_back(precoloring_to_json(pre));
  doc["counterexamples"] = std::move(cex);
  doc["budget_used"] = r.budget_used;
  doc["seed"] = r.seed;
  doc["inconclusive"] = r.inconclusive;
  doc["exhaustive"] = r.exhaustive;
  return doc;
}

// -- DOT -----------------------------------------------------------------------

inline constexpr std::array<const char*, 16> kDotPalette = {
    "red",       "blue",      "green3",   "orange",   "purple", "brown",
    "magenta",   "cyan3",     "gold",     "navy",     "darkgreen",
    "deeppink",  "sienna",    "turquoise4", "gray40", "black"};

inline const char* dot_color(Color c) {
  const auto n = static_cast<Color>(kDotPalette.size());
  return kDotPalette[static_cast<std::size_t>(((c - 1) % n + n) % n)];
}

inline std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

inline std::string to_dot(const Graph& g, const std::string& name,
                          const EdgeColoring* col = nullptr) {
  std::ostringstream os;
  os << "graph " << quote(name.empty() ? "G" : name) << " {\n";
  for (Vertex v = 0; v < g.order(); ++v)
    os << "  " << v << " [label=" << quote(g.label(v)) << "];\n";
  for (const EdgeId& e : g.edges()) {
    os << "  " << e.u << " -- " << e.v;
    if (col) {
      const Color c = col->at(e);
      os << " [color=" << quote(dot_color(c)) << ", label=" << quote(std::to_string(c))
         << "]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace edgex::io

#endif  // EDGEX_IO_HPP
