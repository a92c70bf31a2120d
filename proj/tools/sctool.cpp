// Command-line surface: solve, pack, find-hole, check-model, gen, bench.
// Graphs are read in the DIMACS-inspired text format (see include/sct/io.hpp);
// "-" means stdin. Exit codes: 0 ok, 1 guarantee/model-check failure,
// 2 input error, 3 internal invariant failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sct/blob.hpp"
#include "sct/generators.hpp"
#include "sct/harness.hpp"
#include "sct/io.hpp"
#include "sct/solver.hpp"

namespace {

using nlohmann::json;

sct::WeightedGraph read_graph(const std::string& path) {
  if (path == "-") return sct::parse_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw sct::input_error("cannot open graph file: " + path);
  return sct::parse_graph(in);
}

sct::Rational arg_rational(const std::string& s, const char* what) {
  auto r = sct::parse_rational(s);
  if (!r) throw sct::input_error(std::string(what) + ": malformed rational '" + s + "'");
  return *r;
}

json set_to_json(const sct::VertexSet& s) {
  json a = json::array();
  s.for_each([&](int v) { a.push_back(v + 1); });
  return a;
}

json model_to_json(const sct::InducedMinorModel& m) {
  json a = json::array();
  for (const auto& bs : m.branch_sets) a.push_back(set_to_json(bs));
  return a;
}

json stats_to_json(const sct::RunStats& st) {
  return json{{"nodes", st.nodes},
              {"depth", st.max_depth},
              {"candidates", st.candidates},
              {"ms", st.wall_ms}};
}

struct CapOpts {
  long long i0 = -1, candidates = -1, depth = -1, i0_size = -1;

  sct::Caps caps() const {
    sct::Caps c;
    if (i0 >= 0) c.i0_cap = i0;
    if (candidates >= 0) c.candidate_cap = candidates;
    if (depth >= 0) c.depth_cap = depth;
    if (i0_size >= 0) c.i0_size_cap = i0_size;
    return c;
  }
};

int cmd_solve(const std::string& file, int s, int t, const std::string& eps,
              const std::string& mode, const CapOpts& co, bool timing, bool trace) {
  sct::WeightedGraph gw = read_graph(file);
  sct::SolverConfig cfg;
  cfg.s = s;
  cfg.t = t;
  cfg.epsilon = arg_rational(eps, "--eps");
  cfg.mode = sct::detail::parse_mode(mode);
  cfg.caps = co.caps();
  cfg.collect_timing = timing;
  if (trace && gw.graph.n() > 0) {
    auto params = sct::GlobalParams::derive(s, t, cfg.epsilon, gw.graph.n());
    std::optional<sct::VertexSet> guide;
    if (cfg.mode == sct::SolveMode::Guided) guide = sct::lex_least_optimum(gw).first;
    bool truncated = false;
    for (const auto& cp :
         sct::build_level(gw, s, params, cfg.mode, guide, cfg.caps, &truncated))
      std::cerr << sct::candidate_trace(cp) << "\n";
  }
  sct::SolveOutcome out = sct::solve(gw, cfg);
  json j;
  if (out.kind == sct::OutcomeKind::ModelFound) {
    j["outcome"] = "model";
    j["model"] = model_to_json(out.model);
  } else {
    j["outcome"] = "approx";
    j["independent_set"] = set_to_json(out.iset);
    j["weight"] = sct::to_string(out.weight);
    j["certified"] = out.guarantee_valid;
  }
  j["stats"] = stats_to_json(out.stats);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_pack(const std::string& file, const std::string& klass, int s, int t,
             const std::string& eps) {
  sct::WeightedGraph gw = read_graph(file);
  sct::ClassOracle oracle =
      klass == "k1" ? sct::k1_oracle()
                    : klass == "forest" ? sct::forest_oracle()
                                        : throw sct::input_error("--class must be k1 or forest");
  auto out = sct::max_packing(gw, oracle, arg_rational(eps, "--eps"), s, t);
  json j;
  if (out.kind == sct::OutcomeKind::ModelFound) {
    j["outcome"] = "model";
    if (out.model_lifted) {
      j["model"] = model_to_json(out.model);
    } else {
      j["blob_model"] = model_to_json(out.blob_model);
      json blobs = json::array();
      for (const auto& b : out.blob.blobs) blobs.push_back(set_to_json(b));
      j["blobs"] = blobs;
    }
  } else {
    j["outcome"] = "approx";
    j["packing"] = set_to_json(out.packing);
    j["weight"] = sct::to_string(out.weight);
    j["certified"] = out.guarantee_valid;
    json comps = json::array();
    for (const auto& c : sct::components(gw.graph, out.packing))
      comps.push_back(json{{"vertices", set_to_json(c)}, {"class", oracle.name}});
    j["components"] = comps;
  }
  j["stats"] = stats_to_json(out.stats);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_find_hole(const std::string& file, int t) {
  sct::WeightedGraph gw = read_graph(file);
  auto h = sct::shortest_long_hole(gw.graph, t);
  if (!h) {
    std::cout << "none\n";
    return 0;
  }
  for (size_t i = 0; i < h->cycle.size(); ++i)
    std::cout << (i ? " " : "") << h->cycle[i] + 1;
  std::cout << "\n";
  return 0;
}

int cmd_check_model(const std::string& file, const std::string& model_path, int s, int t) {
  sct::WeightedGraph gw = read_graph(file);
  std::ifstream in(model_path);
  if (!in) throw sct::input_error("cannot open model file: " + model_path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    throw sct::input_error(std::string("model file: ") + ex.what());
  }
  if (!j.contains("branch_sets") || !j["branch_sets"].is_array())
    throw sct::input_error("model file: expected {\"branch_sets\": [[...], ...]}");
  sct::InducedMinorModel m;
  m.s = s;
  m.t = t;
  for (const auto& arr : j["branch_sets"]) {
    sct::VertexSet bs(gw.graph.n());
    for (const auto& v : arr) {
      long long id = v.get<long long>();
      if (id < 1 || id > gw.graph.n())
        throw sct::input_error("model file: vertex id " + std::to_string(id) +
                               " out of range");
      bs.insert(int(id - 1));
    }
    m.branch_sets.push_back(std::move(bs));
  }
  auto verdict = sct::verify_model(gw.graph, m);
  if (verdict) {
    std::cout << "valid\n";
    return 0;
  }
  std::cout << "invalid: " << verdict.diagnostic << "\n";
  return 1;
}

int cmd_gen(const sct::InstanceSpec& spec) {
  sct::emit_graph(std::cout, sct::generate(spec));
  return 0;
}

int cmd_bench(const std::string& suite_path, const std::string& out_path, bool timing) {
  std::ifstream suite(suite_path);
  if (!suite) throw sct::input_error("cannot open suite file: " + suite_path);
  if (out_path == "-") return sct::run_experiments(suite, std::cout, std::cerr, timing);
  std::ofstream out(out_path);
  if (!out) throw sct::input_error("cannot open report file: " + out_path);
  return sct::run_experiments(suite, out, std::cerr, timing);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certificate-producing MWIS solver for graphs without s long non-adjacent holes"};
  app.require_subcommand(1);

  std::string file = "-", eps = "1/2", mode = "guided";
  int s = 1, t = 4;
  bool timing = false;
  CapOpts co;

  auto* solve = app.add_subcommand("solve", "approximate MWIS or find an sC_t model");
  solve->add_option("file", file, "graph file or -");
  solve->add_option("--s", s);
  solve->add_option("--t", t);
  solve->add_option("--eps", eps, "precision a/b in (0,1)");
  solve->add_option("--mode", mode)->check(CLI::IsMember({"strict", "guided", "heuristic"}));
  solve->add_option("--cap-i0", co.i0);
  solve->add_option("--cap-candidates", co.candidates);
  solve->add_option("--cap-depth", co.depth);
  solve->add_option("--cap-i0-size", co.i0_size);
  solve->add_flag("--timing", timing, "report wall time (breaks byte-identical output)");
  bool trace = false;
  solve->add_flag("--trace", trace, "print root-level candidate records to stderr");

  std::string klass = "forest";
  auto* pack = app.add_subcommand("pack", "approximate maximum induced packing");
  pack->add_option("file", file, "graph file or -");
  pack->add_option("--class", klass)->check(CLI::IsMember({"k1", "forest"}));
  pack->add_option("--s", s);
  pack->add_option("--t", t);
  pack->add_option("--eps", eps);

  auto* fh = app.add_subcommand("find-hole", "shortest induced cycle of length >= t");
  fh->add_option("file", file, "graph file or -");
  fh->add_option("--t", t);

  std::string model_path;
  auto* cm = app.add_subcommand("check-model", "verify an sC_t induced minor model");
  cm->add_option("file", file, "graph file or -");
  cm->add_option("--model", model_path)->required();
  cm->add_option("--s", s);
  cm->add_option("--t", t);

  sct::InstanceSpec spec;
  std::string p_str = "1/2";
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--kind", spec.kind)
      ->check(CLI::IsMember({"gnp", "planted_sct", "chordal", "cycle", "union"}));
  gen->add_option("--n", spec.n)->required();
  gen->add_option("--p", p_str, "edge probability a/b");
  gen->add_option("--s", spec.s);
  gen->add_option("--t", spec.t);
  gen->add_option("--noise", spec.noise);
  gen->add_option("--weights", spec.weights)->check(CLI::IsMember({"unit", "uniform"}));
  gen->add_option("--wmax", spec.wmax);
  gen->add_option("--seed", spec.seed);
  gen->add_option("--index", spec.index);

  std::string suite_path, out_path = "-";
  auto* bench = app.add_subcommand("bench", "run a suite and emit the CSV report");
  bench->add_option("suite", suite_path, "suite file, one JSON object per line")->required();
  bench->add_option("-o,--output", out_path, "report file or -");
  bench->add_flag("--timing", timing, "fill the ms column (breaks byte-identical output)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return cmd_solve(file, s, t, eps, mode, co, timing, trace);
    if (*pack) return cmd_pack(file, klass, s, t, eps);
    if (*fh) return cmd_find_hole(file, t);
    if (*cm) return cmd_check_model(file, model_path, s, t);
    if (*gen) {
      spec.p = arg_rational(p_str, "--p");
      return cmd_gen(spec);
    }
    if (*bench) return cmd_bench(suite_path, out_path, timing);
  } catch (const sct::invariant_violation& ex) {
    std::cerr << "invariant failure: " << ex.what() << "\n";
    return sct::kExitInvariantFailure;
  } catch (const sct::input_error& ex) {
    std::cerr << "input error: " << ex.what() << "\n";
    return sct::kExitInputError;
  } catch (const sct::oracle_cap_exceeded& ex) {
    std::cerr << "input error: " << ex.what() << "\n";
    return sct::kExitInputError;
  }
  return 0;
}
