// Command line front end: solve, verify, and decompose threshold-spread
// instances, generate test corpora, and emit the vertex-cover reduction.
//
// Exit codes: 0 success, 1 negative verify, 2 parse error, 3 constraint
// violation, 4 budget refusal.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dynmono/errors.hpp"
#include "dynmono/graph.hpp"
#include "dynmono/instance_io.hpp"
#include "dynmono/intervals.hpp"
#include "dynmono/oracles.hpp"
#include "dynmono/solver.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dynmono::input_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

dynmono::LoadedInstance load(const std::string& path) {
  return dynmono::instantiate(dynmono::parse_instance(read_input(path)));
}

dynmono::VertexSet parse_vertex_list(const dynmono::Graph& g, const std::string& csv) {
  std::vector<int> ids;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string item =
        csv.substr(pos, comma == std::string::npos ? csv.size() - pos : comma - pos);
    pos = (comma == std::string::npos) ? csv.size() + 1 : comma + 1;
    if (item.empty()) {
      if (csv.empty()) break;
      throw dynmono::input_error("empty vertex name in list '" + csv + "'");
    }
    ids.push_back(g.index_of(item));
  }
  return dynmono::as_vertex_set(std::move(ids));
}

void print_monopoly(const dynmono::Graph& g, int size, const dynmono::VertexSet& monopoly) {
  std::cout << "dyn " << size << "\n";
  std::cout << "monopoly";
  for (int v : monopoly) std::cout << " " << g.name(v);
  std::cout << "\n";
}

int cmd_solve(const std::string& path) {
  dynmono::LoadedInstance li = load(path);
  if (li.representation) {
    dynmono::SolveResult r = dynmono::solve(li.instance, *li.representation);
    print_monopoly(li.instance.graph, r.size, r.monopoly);
  } else {
    auto [size, witness] = dynmono::brute_force_dyn(li.instance);
    print_monopoly(li.instance.graph, size, witness);
  }
  return 0;
}

int cmd_oracle(const std::string& path, long long budget) {
  dynmono::LoadedInstance li = load(path);
  auto [size, witness] = dynmono::brute_force_dyn(li.instance, {budget});
  print_monopoly(li.instance.graph, size, witness);
  return 0;
}

int cmd_hull(const std::string& path, const std::string& seed_csv) {
  dynmono::LoadedInstance li = load(path);
  dynmono::VertexSet seed = parse_vertex_list(li.instance.graph, seed_csv);
  for (int v : dynmono::activation_order(li.instance, seed))
    std::cout << li.instance.graph.name(v) << "\n";
  return 0;
}

int cmd_verify(const std::string& path, const std::string& set_csv) {
  dynmono::LoadedInstance li = load(path);
  dynmono::VertexSet seed = parse_vertex_list(li.instance.graph, set_csv);
  bool ok = dynmono::is_dynamic_monopoly(li.instance, seed);
  std::cout << (ok ? "yes" : "no") << "\n";
  return ok ? 0 : 1;
}

int cmd_decompose(const std::string& path, int t_override) {
  dynmono::LoadedInstance li = load(path);
  if (!li.representation)
    throw dynmono::input_error("decompose requires an interval-instance file");
  const dynmono::Graph& g = li.instance.graph;
  if (g.order() == 0) throw dynmono::input_error("decompose requires at least one interval");
  int t = t_override >= 0 ? t_override : li.instance.t;
  dynmono::NormalizedRepresentation norm = dynmono::normalize(*li.representation);
  dynmono::CutStructure cuts = dynmono::compute_cut_structure(norm);
  dynmono::Decomposition dec = dynmono::compute_decomposition(cuts, t);

  std::cout << "n " << g.order() << "\n";
  std::cout << "t " << t << "\n";
  for (int v = 0; v < g.order(); ++v)
    std::cout << "interval " << g.name(v) << " " << norm.intervals[v].left << " "
              << norm.intervals[v].right << "\n";
  std::cout << "counts";
  for (int c : cuts.counts) std::cout << " " << c;
  std::cout << "\n";
  std::cout << "layers";
  for (const dynmono::Layer& layer : dec.layers) std::cout << " " << layer.cut_index;
  std::cout << "\n";
  for (std::size_t i = 0; i < dec.layers.size(); ++i) {
    const dynmono::Layer& layer = dec.layers[i];
    std::cout << "layer " << i + 1 << " cut " << layer.cut_index << "\n";
    auto print_set = [&](const char* label, const dynmono::VertexSet& s) {
      std::cout << label;
      for (int v : s) std::cout << " " << g.name(v);
      std::cout << "\n";
    };
    print_set("V", layer.prefix);
    print_set("B", layer.boundary);
    print_set("dV", layer.slice);
  }
  return 0;
}

int cmd_generate(const std::string& what, int n, std::uint64_t seed, int t) {
  if (what == "interval") {
    auto [inst, rep] = dynmono::generate_interval_instance(n, t, seed);
    std::cout << dynmono::emit_instance(dynmono::interval_file(inst, rep));
  } else if (what == "cubic") {
    dynmono::Graph g = dynmono::generate_cubic(n, seed);
    std::vector<int> tau(g.order(), 1);
    dynmono::ThresholdedInstance inst(std::move(g), std::move(tau), 1);
    std::cout << dynmono::emit_instance(dynmono::graph_file(inst));
  } else {
    throw dynmono::input_error("generate expects 'interval' or 'cubic'");
  }
  return 0;
}

int cmd_reduce(const std::string& path) {
  dynmono::LoadedInstance li = load(path);
  dynmono::ReductionOutput red = dynmono::vc_reduction(li.instance.graph);
  std::cout << dynmono::emit_instance(dynmono::graph_file(red.instance));
  for (const auto& [edge, clique] : red.gadget_map) {
    std::cout << "# gadget " << li.instance.graph.name(edge.first) << " "
              << li.instance.graph.name(edge.second) << ":";
    for (int v : clique) std::cout << " " << red.instance.graph.name(v);
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact minimum dynamic monopolies on interval graphs"};
  app.require_subcommand(1);

  std::string file;
  std::string seed_csv;
  std::string set_csv;
  std::string what;
  long long budget = 20'000'000;
  int n = 0;
  std::uint64_t seed = 0;
  int t = 2;
  int t_override = -1;
  int exit_code = 0;

  CLI::App* solve = app.add_subcommand("solve", "minimum dynamic monopoly");
  solve->add_option("FILE", file)->required();
  solve->callback([&] { exit_code = cmd_solve(file); });

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force minimum dynamic monopoly");
  oracle->add_option("FILE", file)->required();
  oracle->add_option("--budget", budget, "search step budget");
  oracle->callback([&] { exit_code = cmd_oracle(file, budget); });

  CLI::App* hull = app.add_subcommand("hull", "hull members in activation order");
  hull->add_option("FILE", file)->required();
  hull->add_option("--seed", seed_csv, "comma-separated seed vertices");
  hull->callback([&] { exit_code = cmd_hull(file, seed_csv); });

  CLI::App* verify = app.add_subcommand("verify", "is the given set a dynamic monopoly?");
  verify->add_option("FILE", file)->required();
  verify->add_option("--set", set_csv, "comma-separated vertices")->required();
  verify->callback([&] { exit_code = cmd_verify(file, set_csv); });

  CLI::App* decompose = app.add_subcommand("decompose", "cut structure and layers");
  decompose->add_option("FILE", file)->required();
  decompose->add_option("--t", t_override, "override the bound t")
      ->check(CLI::NonNegativeNumber);
  decompose->callback([&] { exit_code = cmd_decompose(file, t_override); });

  CLI::App* generate = app.add_subcommand("generate", "emit a seeded instance file");
  generate->add_option("WHAT", what, "interval or cubic")->required();
  generate->add_option("--n", n, "vertex count")->required();
  generate->add_option("--seed", seed, "generator seed")->required();
  generate->add_option("--t", t, "threshold bound (interval only)")
      ->check(CLI::NonNegativeNumber);
  generate->callback([&] { exit_code = cmd_generate(what, n, seed, t); });

  CLI::App* reduce = app.add_subcommand("reduce", "vertex-cover reduction of a cubic graph");
  reduce->add_option("FILE", file)->required();
  reduce->callback([&] { exit_code = cmd_reduce(file); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const dynmono::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const dynmono::budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const dynmono::bound_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const dynmono::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return exit_code;
}
