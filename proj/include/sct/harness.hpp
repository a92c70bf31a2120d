#pragma once

#include <fstream>
#include <future>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sct/blob.hpp"
#include "sct/generators.hpp"
#include "sct/io.hpp"
#include "sct/solver.hpp"

namespace sct {

inline constexpr const char* kReportHeader = "id,mode,outcome,weight,opt,ratio,nodes,depth,ms";

inline constexpr int kExitOk = 0;
inline constexpr int kExitGuaranteeViolation = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInvariantFailure = 3;

struct ReportRow {
  std::string id;
  std::string mode;
  std::string outcome;   // approx | model
  std::string weight;
  std::string opt;       // empty when no oracle value is available
  std::string ratio;     // empty when opt is empty
  long long nodes = 0;
  int depth = 0;
  long long ms = 0;
  bool violated = false;  // certified guarantee missed

  std::string csv() const {
    std::ostringstream os;
    os << id << ',' << mode << ',' << outcome << ',' << weight << ',' << opt << ','
       << ratio << ',' << nodes << ',' << depth << ',' << ms;
    return os.str();
  }
};

/// One-candidate-per-line provenance record for a separator level.
inline std::string candidate_trace(const CandidatePair& cp) {
  nlohmann::json j;
  j["i0"] = cp.i0;
  j["hole"] = cp.hole;
  j["hprime"] = cp.hprime;
  j["case"] = cp.case_tag;
  j["a"] = cp.a;
  j["a_prime"] = cp.a_prime;
  j["x_size"] = cp.x.size();
  j["components"] = cp.n_components;
  return j.dump();
}

namespace detail {

inline Rational json_rational(const nlohmann::json& j, const char* what) {
  if (j.is_string()) {
    auto r = parse_rational(j.get<std::string>());
    if (!r) throw input_error(std::string(what) + ": malformed rational");
    return *r;
  }
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw input_error(std::string(what) + ": expected an integer or a \"a/b\" string");
}

inline SolveMode parse_mode(const std::string& m) {
  if (m == "strict") return SolveMode::Strict;
  if (m == "guided") return SolveMode::Guided;
  if (m == "heuristic") return SolveMode::Heuristic;
  throw input_error("unknown mode '" + m + "'");
}

inline WeightedGraph entry_graph(const nlohmann::json& e, uint64_t index) {
  if (e.contains("file")) {
    std::string path = e["file"].get<std::string>();
    std::ifstream in(path);
    if (!in) throw input_error("file not found: " + path);
    return parse_graph(in);
  }
  if (!e.contains("instance"))
    throw input_error("entry needs an \"instance\" object or a \"file\" path");
  const auto& i = e["instance"];
  InstanceSpec spec;
  spec.kind = i.value("kind", std::string("gnp"));
  spec.n = i.value("n", 0);
  if (i.contains("p")) spec.p = json_rational(i["p"], "instance.p");
  spec.s = i.value("s", 1);
  spec.t = i.value("t", 4);
  spec.noise = i.value("noise", 0);
  spec.weights = i.value("weights", std::string("unit"));
  spec.wmax = i.value("wmax", 10);
  spec.seed = i.value("seed", uint64_t(0));
  spec.index = i.value("index", index);
  return generate(spec);
}

inline SolverConfig entry_config(const nlohmann::json& e) {
  SolverConfig cfg;
  const auto solver = e.value("solver", nlohmann::json::object());
  cfg.s = solver.value("s", 1);
  cfg.t = solver.value("t", 4);
  cfg.epsilon = solver.contains("eps") ? json_rational(solver["eps"], "solver.eps")
                                       : Rational(1, 2);
  cfg.mode = parse_mode(solver.value("mode", std::string("guided")));
  if (solver.contains("caps")) {
    const auto& c = solver["caps"];
    if (c.contains("i0")) cfg.caps.i0_cap = c["i0"].get<long long>();
    if (c.contains("candidates")) cfg.caps.candidate_cap = c["candidates"].get<long long>();
    if (c.contains("depth")) cfg.caps.depth_cap = c["depth"].get<long long>();
    if (c.contains("i0_size")) cfg.caps.i0_size_cap = c["i0_size"].get<long long>();
  }
  return cfg;
}

inline ReportRow run_entry(const nlohmann::json& e, uint64_t index, bool timing,
                           int oracle_cap) {
  ReportRow row;
  row.id = e.contains("id") ? e["id"].get<std::string>() : std::to_string(index);
  WeightedGraph gw = entry_graph(e, index);
  SolverConfig cfg = entry_config(e);
  cfg.collect_timing = timing;
  row.mode = to_string(cfg.mode);
  SolveOutcome out = solve(gw, cfg);
  row.outcome = to_string(out.kind);
  row.nodes = out.stats.nodes;
  row.depth = out.stats.max_depth;
  row.ms = timing ? out.stats.wall_ms : 0;
  if (out.kind == OutcomeKind::ModelFound) {
    row.weight = "0";
    if (auto v = verify_model(gw.graph, out.model); !v)
      throw invariant_violation("suite entry " + row.id + ": " + v.diagnostic);
    return row;
  }
  row.weight = to_string(out.weight);
  bool want_opt = e.value("oracle_opt", true) && gw.graph.n() <= oracle_cap;
  if (want_opt) {
    auto [oset, ow] = brute_force_mwis(gw, oracle_cap);
    (void)oset;
    row.opt = to_string(ow);
    if (ow > 0) {
      row.ratio = to_string(out.weight / ow);
      if (out.guarantee_valid && out.weight < (Rational(1) - cfg.epsilon) * ow)
        row.violated = true;
    } else {
      row.ratio = "1";
    }
  }
  return row;
}

}  // namespace detail

/// Executes a suite (one JSON object per line; blank lines and lines
/// starting with '#' are skipped) and writes the CSV report. Entries run
/// concurrently; rows appear in entry order. Returns a process exit code.
inline int run_experiments(std::istream& suite, std::ostream& csv, std::ostream& err,
                           bool timing = false, int oracle_cap = 20) {
  std::vector<nlohmann::json> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(suite, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      entries.push_back(nlohmann::json::parse(line));
    } catch (const nlohmann::json::exception& ex) {
      err << "suite line " << lineno << ": " << ex.what() << "\n";
      return kExitInputError;
    }
  }
  std::vector<std::future<ReportRow>> futures;
  futures.reserve(entries.size());
  for (size_t i = 0; i < entries.size(); ++i)
    futures.push_back(std::async(std::launch::async, [&, i] {
      return detail::run_entry(entries[i], uint64_t(i), timing, oracle_cap);
    }));
  csv << kReportHeader << "\n";
  int exit_code = kExitOk;
  for (size_t i = 0; i < futures.size(); ++i) {
    try {
      ReportRow row = futures[i].get();
      csv << row.csv() << "\n";
      if (row.violated && exit_code == kExitOk) {
        err << "entry " << row.id << ": certified guarantee violated\n";
        exit_code = kExitGuaranteeViolation;
      }
    } catch (const input_error& ex) {
      err << "entry " << i << ": " << ex.what() << "\n";
      return kExitInputError;
    } catch (const invariant_violation& ex) {
      err << "entry " << i << ": " << ex.what() << "\n";
      return kExitInvariantFailure;
    }
  }
  return exit_code;
}

}  // namespace sct
