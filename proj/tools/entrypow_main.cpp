#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "entrypow/chordal.hpp"
#include "entrypow/graph.hpp"
#include "entrypow/hset.hpp"
#include "entrypow/json_io.hpp"
#include "entrypow/sym_matrix.hpp"
#include "entrypow/verifier.hpp"

namespace {

using entrypow::Json;

struct CommonOpts {
  std::string family;
  std::string graph_file;
  std::string output;
  std::uint64_t seed = 0;
  long trials = 1000;
  double tol = -1.0;
  double entry_scale = 1.0;
  int cap = entrypow::kDefaultVertexCap;
  std::string strategy = "mixed";
};

void add_graph_source(CLI::App* cmd, CommonOpts& o) {
  auto* fam = cmd->add_option("--family", o.family, "inline family spec, e.g. band:8,3");
  auto* gf = cmd->add_option("--graph", o.graph_file, "edge-list file");
  fam->excludes(gf);
  gf->excludes(fam);
}

void add_run_opts(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--seed", o.seed, "RNG seed (default 0, never wall-clock)");
  cmd->add_option("--trials", o.trials, "trial budget per verdict");
  cmd->add_option("--tol", o.tol, "PSD tolerance (default relative 1e-9)");
  cmd->add_option("--scale", o.entry_scale, "sampler entry scale");
  cmd->add_option("--strategy", o.strategy, "clique_sum | witness_bank | mixed");
}

entrypow::Graph load_graph(const CommonOpts& o) {
  if (!o.family.empty())
    return entrypow::generate(entrypow::FamilySpec::parse(o.family));
  if (!o.graph_file.empty()) return entrypow::read_edge_list_file(o.graph_file);
  throw std::invalid_argument("need --family or --graph");
}

entrypow::SampleConfig make_config(const CommonOpts& o) {
  entrypow::SampleConfig cfg;
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  cfg.entry_scale = o.entry_scale;
  cfg.strategy = entrypow::strategy_from_string(o.strategy);
  cfg.vertex_cap = o.cap;
  return cfg;
}

void emit(const CommonOpts& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw std::invalid_argument("cannot open output file '" + o.output + "'");
  out << text;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entrypow: entrywise power positivity on graph-structured PSD cones"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string kind = "plain";
  double alpha = 1.0;
  std::string grid_text;
  std::string replay_file;

  auto* gen = app.add_subcommand("gen", "generate a family graph as an edge list");
  add_graph_source(gen, o);
  gen->add_option("-o,--output", o.output, "output path (default stdout)");

  auto* chordal = app.add_subcommand("chordal", "chordality check with certificate");
  add_graph_source(chordal, o);
  chordal->add_option("-o,--output", o.output, "output path");

  auto* cliques = app.add_subcommand("cliques", "maximal cliques");
  add_graph_source(cliques, o);
  cliques->add_option("--cap", o.cap, "vertex cap for exponential searches");
  cliques->add_option("-o,--output", o.output, "output path");

  auto* ce = app.add_subcommand("ce", "exact chordal critical exponent report");
  add_graph_source(ce, o);
  ce->add_option("--cap", o.cap, "vertex cap");
  ce->add_option("-o,--output", o.output, "output path");

  auto* hs = app.add_subcommand("hset", "H-set report (exact or bounded)");
  add_graph_source(hs, o);
  hs->add_option("--cap", o.cap, "vertex cap");
  hs->add_option("-o,--output", o.output, "output path");

  auto* probe = app.add_subcommand("probe", "empirical per-alpha verdicts on a grid");
  add_graph_source(probe, o);
  add_run_opts(probe, o);
  probe->add_option("--grid", grid_text, "comma-separated alphas (default 0.25 steps)");
  probe->add_option("--cap", o.cap, "vertex cap");
  probe->add_option("-o,--output", o.output, "output path");

  auto* fals = app.add_subcommand("falsify", "hunt a counterexample for one power");
  add_graph_source(fals, o);
  add_run_opts(fals, o);
  fals->add_option("--kind", kind, "plain | psi | phi")->required();
  fals->add_option("--alpha", alpha, "exponent")->required();
  fals->add_option("--cap", o.cap, "vertex cap");
  fals->add_option("-o,--output", o.output, "output path");

  auto* cross = app.add_subcommand("crosscheck", "verify closed forms against the falsifier");
  add_graph_source(cross, o);
  add_run_opts(cross, o);
  cross->add_option("--cap", o.cap, "vertex cap");
  cross->add_option("-o,--output", o.output, "output path");

  auto* replay = app.add_subcommand("replay", "re-check a serialized counterexample");
  replay->add_option("file", replay_file, "falsify JSON output")->required();
  replay->add_option("-o,--output", o.output, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) {
      emit(o, entrypow::edge_list_string(load_graph(o)));
      return 0;
    }
    if (chordal->parsed()) {
      auto g = load_graph(o);
      auto mcs = entrypow::maximum_cardinality_search(g);
      Json j;
      j["chordal"] = mcs.chordal;
      j["mcs_order"] = mcs.order;
      if (!mcs.chordal) j["chordless_cycle"] = mcs.chordless_cycle;
      emit(o, entrypow::canonical_dump(j));
      return 0;
    }
    if (cliques->parsed()) {
      auto g = load_graph(o);
      Json j;
      j["cliques"] = entrypow::maximal_cliques(g, o.cap);
      emit(o, entrypow::canonical_dump(j));
      return 0;
    }
    if (ce->parsed()) {
      auto g = load_graph(o);
      emit(o, entrypow::canonical_dump(
                  entrypow::to_json(entrypow::critical_exponent_chordal(g, o.cap))));
      return 0;
    }
    if (hs->parsed()) {
      auto g = load_graph(o);
      emit(o, entrypow::canonical_dump(
                  entrypow::to_json(entrypow::hset(g, entrypow::HsetOptions{o.cap}))));
      return 0;
    }
    if (probe->parsed()) {
      auto g = load_graph(o);
      auto cfg = make_config(o);
      auto grid = grid_text.empty() ? entrypow::default_probe_grid(g)
                                    : parse_grid(grid_text);
      auto rep = entrypow::probe_hset(g, grid, cfg);
      emit(o, entrypow::canonical_dump(entrypow::to_json(rep, g)));
      return rep.consistent ? 0 : 1;
    }
    if (fals->parsed()) {
      auto g = load_graph(o);
      auto cfg = make_config(o);
      entrypow::PowerMap p{entrypow::power_kind_from_string(kind), alpha};
      auto v = entrypow::falsify(g, p, cfg, cfg.trials, o.tol);
      emit(o, entrypow::canonical_dump(entrypow::to_json(g, p, v)));
      return v.preserved ? 0 : 1;
    }
    if (cross->parsed()) {
      auto g = load_graph(o);
      auto rep = entrypow::cross_check(g, make_config(o));
      emit(o, entrypow::canonical_dump(entrypow::to_json(rep)));
      return rep.consistent ? 0 : 1;
    }
    if (replay->parsed()) {
      std::ifstream in(replay_file);
      if (!in) throw std::invalid_argument("cannot open '" + replay_file + "'");
      Json j = Json::parse(in);
      auto res = entrypow::replay_verdict(j);
      Json out;
      out["replay"] = Json{{"reproduced", res.reproduced},
                           {"in_cone", res.in_cone_ok},
                           {"powered_min_eigenvalue", res.powered_min_eigenvalue},
                           {"tolerance", res.tolerance_used}};
      emit(o, entrypow::canonical_dump(out));
      return res.reproduced ? 1 : 0;
    }
  } catch (const entrypow::capacity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
