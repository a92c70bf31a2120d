#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "sct/graph.hpp"

namespace sct {

// Text format (DIMACS-inspired):
//   c <comment>
//   p <n> <m>
//   w <w_1> ... <w_n>        (optional; rationals "a/b" or integers)
//   e <u> <v>                (m lines, 1-based ids)
// Emission is canonical: edges sorted lexicographically, weights always
// present. parse(emit(g)) is the identity on the canonical form.

inline WeightedGraph parse_graph(std::istream& in) {
  auto fail = [](int line, const std::string& msg) -> WeightedGraph {
    throw input_error("line " + std::to_string(line) + ": " + msg);
  };

  int n = -1, m = -1, edges_seen = 0, lineno = 0;
  Graph g;
  std::vector<Rational> weights;
  bool have_weights = false;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      if (n >= 0) return fail(lineno, "duplicate problem line");
      if (!(ls >> n >> m) || n < 0 || m < 0)
        return fail(lineno, "malformed problem line, expected 'p <n> <m>'");
      g = Graph(n);
      weights.assign(n, Rational(1));
    } else if (tag == "w") {
      if (n < 0) return fail(lineno, "weight line before problem line");
      if (have_weights) return fail(lineno, "duplicate weight line");
      have_weights = true;
      for (int i = 0; i < n; ++i) {
        std::string tok;
        if (!(ls >> tok)) return fail(lineno, "expected " + std::to_string(n) + " weights");
        auto r = parse_rational(tok);
        if (!r) return fail(lineno, "malformed weight '" + tok + "'");
        if (*r < 0) return fail(lineno, "negative weight '" + tok + "'");
        weights[i] = *r;
      }
      std::string extra;
      if (ls >> extra) return fail(lineno, "trailing token '" + extra + "' on weight line");
    } else if (tag == "e") {
      if (n < 0) return fail(lineno, "edge line before problem line");
      long long u, v;
      if (!(ls >> u >> v)) return fail(lineno, "malformed edge line");
      if (u < 1 || u > n || v < 1 || v > n)
        return fail(lineno, "dangling vertex id on edge line");
      if (u == v) return fail(lineno, "self-loop on vertex " + std::to_string(u));
      if (g.adjacent(int(u - 1), int(v - 1)))
        return fail(lineno, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      g.add_edge(int(u - 1), int(v - 1));
      ++edges_seen;
    } else {
      return fail(lineno, "unknown line tag '" + tag + "'");
    }
  }
  if (n < 0) throw input_error("missing problem line 'p <n> <m>'");
  if (edges_seen != m)
    throw input_error("problem line announced " + std::to_string(m) + " edges but " +
                      std::to_string(edges_seen) + " were given");
  return WeightedGraph(std::move(g), std::move(weights));
}

inline WeightedGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

inline void emit_graph(std::ostream& out, const WeightedGraph& gw) {
  auto es = gw.graph.edges();  // already sorted lexicographically
  out << "p " << gw.graph.n() << ' ' << es.size() << '\n';
  if (gw.graph.n() > 0) {
    out << "w";
    for (const auto& w : gw.weights) out << ' ' << to_string(w);
    out << '\n';
  }
  for (auto [u, v] : es) out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
}

inline std::string emit_graph(const WeightedGraph& gw) {
  std::ostringstream os;
  emit_graph(os, gw);
  return os.str();
}

}  // namespace sct
