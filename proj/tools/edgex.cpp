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

// edgex: batch front end for the precoloring-extension library.
//
// Exit codes:
//   0 success
//   1 malformed input (bad files, parameters, non-bipartite graphs, failed
//     verification)
//   2 invalid precoloring (not a distance-2 matching, wrong palette)
//   3 internal invariant violation
//   4 NotExtendable verdict
//   5 inconclusive (search budget exhausted)

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "edgex/edgex.hpp"

namespace {

using namespace edgex;
namespace fs = std::filesystem;

enum Exit : int {
  kOk = 0,
  kMalformed = 1,
  kInvalidPrecoloring = 2,
  kInternal = 3,
  kNotExtendable = 4,
  kInconclusive = 5,
};

enum class LogLevel { Quiet, Info, Debug };

LogLevel log_level() {
  const char* env = std::getenv("EDGEX_LOG");
  if (!env) return LogLevel::Quiet;
  std::string v(env);
  if (v == "debug") return LogLevel::Debug;
  if (v == "info") return LogLevel::Info;
  return LogLevel::Quiet;
}

void log(LogLevel level, const std::string& msg) {
  static const LogLevel current = log_level();
  if (level != LogLevel::Quiet && static_cast<int>(level) <= static_cast<int>(current))
    std::cerr << "[edgex] " << msg << "\n";
}

int exit_code(ErrorKind kind) {
  if (is_internal(kind)) return kInternal;
  if (kind == ErrorKind::InvalidPrecoloring) return kInvalidPrecoloring;
  return kMalformed;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    io::write_file(path, text);
}

io::NamedGraph load_graph(const std::string& path) {
  return io::graph_from_json(io::parse(io::read_file(path)));
}

Precoloring load_precoloring(const std::string& path) {
  return io::precoloring_from_json(io::parse(io::read_file(path)));
}

EdgeColoring load_coloring(const std::string& path) {
  return io::coloring_from_json(io::parse(io::read_file(path)));
}

std::vector<std::size_t> parse_numbers(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoul(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::BadParameter, "not a number: '" + item + "'");
    }
  }
  return out;
}

/// "kind:args", e.g. "hypercube:3", "spider:3,2".
std::pair<std::string, std::vector<std::size_t>> split_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorKind::BadParameter, "expected kind:params, got '" + spec + "'");
  return {spec.substr(0, colon), parse_numbers(spec.substr(colon + 1))};
}

FamilySpec parse_family(const std::string& spec) {
  auto [kind, p] = split_spec(spec);
  auto need = [&, &kind = kind, &p = p](std::size_t n) {
    if (p.size() != n)
      throw Error(ErrorKind::BadParameter,
                  kind + " takes " + std::to_string(n) + " parameter(s)");
  };
  if (kind == "complete") { need(1); return family::Complete{p[0]}; }
  if (kind == "kbip") { need(2); return family::CompleteBipartite{p[0], p[1]}; }
  if (kind == "star") { need(1); return family::Star{p[0]}; }
  if (kind == "path") { need(1); return family::Path{p[0]}; }
  if (kind == "cycle") { need(1); return family::Cycle{p[0]}; }
  if (kind == "hypercube") { need(1); return family::Hypercube{p[0]}; }
  if (kind == "spider") { need(2); return family::Spider{p[0], p[1]}; }
  throw Error(ErrorKind::BadParameter, "unknown family '" + kind + "'");
}

struct Options {
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out;

  std::string family;
  std::string name;
  std::string left, right;
  std::string graph, coloring, precoloring, factor, product_out, out_dir;
  std::size_t palette = 0;
  std::uint64_t budget = 0;
  std::size_t n = 0, m = 0;
};

int cmd_build(const Options& o) {
  Graph g = standard_family(parse_family(o.family));
  const std::string name = o.name.empty() ? o.family : o.name;
  log(LogLevel::Info, "built " + name + ": " + std::to_string(g.order()) +
                          " vertices, " + std::to_string(g.size()) + " edges");
  emit(o.out, o.format == "dot" ? io::to_dot(g, name)
                                : io::dump(io::graph_to_json(g, name)));
  return kOk;
}

int cmd_product(const Options& o) {
  auto g = load_graph(o.left);
  auto h = load_graph(o.right);
  ProductGraph p = cartesian_product(g.graph, h.graph);
  const std::string name = o.name.empty() ? g.name + " x " + h.name : o.name;
  emit(o.out, o.format == "dot" ? io::to_dot(p.graph, name)
                                : io::dump(io::product_to_json(p, name)));
  return kOk;
}

int cmd_extend(const Options& o) {
  auto [kind, params] = split_spec(o.factor);
  if (params.size() != 1)
    throw Error(ErrorKind::BadParameter, "factor takes exactly one parameter");
  const std::size_t k = params[0];
  const Precoloring pre = load_precoloring(o.precoloring);

  Graph host;
  EdgeColoring col;
  if (kind == "qd") {
    col = extend_hypercube(k, pre);
    host = hypercube_graph(k);
  } else {
    if (o.graph.empty())
      throw Error(ErrorKind::BadParameter, "--graph is required for " + kind);
    const Graph g = load_graph(o.graph).graph;
    if (kind == "k2m") {
      col = extend_over_complete(g, k, pre);
      host = complete_product(g, k).graph;
    } else if (kind == "q") {
      col = extend_over_hypercube(g, k, pre);
      host = hypercube_product(g, k).graph;
    } else if (kind == "star") {
      col = extend_over_star(g, k, pre);
      host = star_product(g, k).graph;
    } else {
      throw Error(ErrorKind::BadParameter, "unknown factor kind '" + kind + "'");
    }
  }
  log(LogLevel::Info, "extended " + std::to_string(pre.entries.size()) +
                          " precolored edges to " + std::to_string(host.size()) +
                          " edges with " + std::to_string(col.palette_size) +
                          " colors");
  if (!o.product_out.empty())
    io::write_file(o.product_out, io::dump(io::graph_to_json(host, o.factor)));
  emit(o.out, o.format == "dot" ? io::to_dot(host, o.factor, &col)
                                : io::dump(io::coloring_to_json(col)));
  return kOk;
}

int cmd_verify(const Options& o) {
  const Graph g = load_graph(o.graph).graph;
  const EdgeColoring col = load_coloring(o.coloring);
  ColoringReport report = verify_proper(g, col);
  std::size_t disagreements = 0;
  if (!o.precoloring.empty()) {
    for (const auto& [e, c] : load_precoloring(o.precoloring).entries) {
      if (col.at(e) != c) {
        ++disagreements;
        std::cerr << "edge " << e << " has color " << col.at(e)
                  << " but is precolored " << c << "\n";
      }
    }
  }
  for (const auto& c : report.conflicts)
    std::cerr << "conflict at vertex " << c.vertex << " (" << g.label(c.vertex)
              << "): edges " << c.first << " and " << c.second
              << " both have color " << c.color << "\n";
  for (const auto& v : report.palette_violations)
    std::cerr << "edge " << v.edge << " has color " << v.color
              << " outside palette 1.." << col.palette_size << "\n";
  auto doc = io::report_to_json(report);
  doc["ok"] = report.ok() && disagreements == 0;
  doc["precoloring_disagreements"] = disagreements;
  emit(o.out, io::dump(doc));
  return report.ok() && disagreements == 0 ? kOk : kMalformed;
}

int cmd_oracle(const Options& o) {
  const Graph g = load_graph(o.graph).graph;
  const Precoloring pre = load_precoloring(o.precoloring);
  const std::size_t palette = o.palette ? o.palette : pre.palette_size;
  std::optional<std::uint64_t> budget;
  if (o.budget) budget = o.budget;
  if (auto cert = check_local_obstruction(g, pre))
    log(LogLevel::Info, "local obstruction at vertex " + std::to_string(cert->hub) +
                            " for color " + std::to_string(cert->color));
  OracleResult r = decide_extendable(g, pre, palette, budget);
  std::cerr << to_string(r.verdict) << " (" << r.nodes << " nodes)\n";
  if (r.witness && !o.out.empty())
    emit(o.out, io::dump(io::coloring_to_json(*r.witness)));
  switch (r.verdict) {
    case Verdict::Extendable: return kOk;
    case Verdict::NotExtendable: return kNotExtendable;
    case Verdict::BudgetExceeded: return kInconclusive;
  }
  return kInternal;
}

int cmd_counterexample(const Options& o) {
  auto g = load_graph(o.left);
  auto h = load_graph(o.right);
  HubInstance inst = build_hub_instance(g.graph, h.graph);
  auto cert = check_local_obstruction(inst.product, inst.precoloring);
  fs::create_directories(o.out_dir);
  const fs::path dir(o.out_dir);
  io::write_file((dir / "product.json").string(),
                 io::dump(io::product_to_json(inst.product, g.name + " x " + h.name)));
  io::write_file((dir / "precoloring.json").string(),
                 io::dump(io::precoloring_to_json(inst.precoloring)));
  io::write_file((dir / "certificate.json").string(),
                 io::dump(io::certificate_to_json(*cert)));
  log(LogLevel::Info, "hub " + std::to_string(inst.hub) + ", " +
                          std::to_string(inst.precoloring.entries.size()) +
                          " precolored edges, palette " +
                          std::to_string(inst.precoloring.palette_size));
  return kOk;
}

int cmd_explore11(const Options& o) {
  const Graph g = load_graph(o.graph).graph;
  ExplorationReport r = explore_complete_bipartite(g, o.n, o.m, o.budget, o.seed);
  log(LogLevel::Info, std::to_string(r.instances) + " instances, " +
                          std::to_string(r.counterexamples.size()) +
                          " counterexamples");
  emit(o.out, io::dump(io::exploration_to_json(r)));
  return r.inconclusive ? kInconclusive : kOk;
}

int cmd_export_dot(const Options& o) {
  auto g = load_graph(o.graph);
  std::optional<EdgeColoring> col;
  if (!o.coloring.empty()) col = load_coloring(o.coloring);
  emit(o.out, io::to_dot(g.graph, g.name, col ? &*col : nullptr));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Precoloring extension for edge colorings of Cartesian products"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "Seed for all randomness")->default_val(0);
  app.add_option("--format", o.format, "Output format for graphs and colorings")
      ->check(CLI::IsMember({"json", "dot"}))
      ->default_val("json");

  auto* build = app.add_subcommand("build", "Write a standard graph family");
  build->add_option("--family", o.family,
                    "complete:n | kbip:n,m | star:m | path:n | cycle:n | "
                    "hypercube:d | spider:legs,len")
      ->required();
  build->add_option("--name", o.name, "Graph name (default: the family spec)");
  build->add_option("-o,--out", o.out, "Output file (default stdout)");

  auto* product = app.add_subcommand("product", "Cartesian product of two graph files");
  product->add_option("left", o.left)->required()->check(CLI::ExistingFile);
  product->add_option("right", o.right)->required()->check(CLI::ExistingFile);
  product->add_option("--name", o.name, "Product name");
  product->add_option("-o,--out", o.out, "Output file (default stdout)");

  auto* extend = app.add_subcommand("extend", "Extend a precoloring to a full coloring");
  extend->add_option("--graph", o.graph, "Base graph G (not needed for qd)")
      ->check(CLI::ExistingFile);
  extend->add_option("--factor", o.factor, "k2m:m | q:m | star:m | qd:d")->required();
  extend->add_option("--precoloring", o.precoloring, "Precoloring over product vertex indices")
      ->required()
      ->check(CLI::ExistingFile);
  extend->add_option("--product-out", o.product_out, "Also write the host graph here");
  extend->add_option("-o,--out", o.out, "Coloring output (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check a coloring for properness");
  verify->add_option("--graph", o.graph)->required()->check(CLI::ExistingFile);
  verify->add_option("--coloring", o.coloring)->required()->check(CLI::ExistingFile);
  verify->add_option("--precoloring", o.precoloring)->check(CLI::ExistingFile);
  verify->add_option("-o,--out", o.out, "Report output (default stdout)");

  auto* oracle = app.add_subcommand("oracle", "Exact extendability decision");
  oracle->add_option("--graph", o.graph)->required()->check(CLI::ExistingFile);
  oracle->add_option("--precoloring", o.precoloring)->required()->check(CLI::ExistingFile);
  oracle->add_option("--palette", o.palette, "Palette size (default: from precoloring)");
  oracle->add_option("--budget", o.budget, "Search node budget (default: unlimited)");
  oracle->add_option("-o,--out", o.out, "Write the witness coloring here");

  auto* cex = app.add_subcommand("counterexample",
                                 "Build a non-extendable hub instance in G x H");
  cex->add_option("left", o.left)->required()->check(CLI::ExistingFile);
  cex->add_option("right", o.right)->required()->check(CLI::ExistingFile);
  cex->add_option("--out-dir", o.out_dir, "Directory for product, precoloring, certificate")
      ->required();

  auto* explore = app.add_subcommand("explore11", "Search G x K_{n,m} for counterexamples");
  explore->add_option("--graph", o.graph)->required()->check(CLI::ExistingFile);
  explore->add_option("--n", o.n)->required();
  explore->add_option("--m", o.m)->required();
  explore->add_option("--budget", o.budget, "Maximum number of instances")->required();
  explore->add_option("-o,--out", o.out, "Report output (default stdout)");

  auto* dot = app.add_subcommand("export-dot", "Write Graphviz DOT");
  dot->add_option("--graph", o.graph)->required()->check(CLI::ExistingFile);
  dot->add_option("--coloring", o.coloring)->check(CLI::ExistingFile);
  dot->add_option("-o,--out", o.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kMalformed;
  }

  try {
    if (build->parsed()) return cmd_build(o);
    if (product->parsed()) return cmd_product(o);
    if (extend->parsed()) return cmd_extend(o);
    if (verify->parsed()) return cmd_verify(o);
    if (oracle->parsed()) return cmd_oracle(o);
    if (cex->parsed()) return cmd_counterexample(o);
    if (explore->parsed()) return cmd_explore11(o);
    if (dot->parsed()) return cmd_export_dot(o);
  } catch (const Error& e) {
    std::cerr << "edgex: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "edgex: malformed JSON: " << e.what() << "\n";
    return kMalformed;
  } catch (const std::exception& e) {
    std::cerr << "edgex: " << e.what() << "\n";
    return kMalformed;
  }
  return kMalformed;
}
