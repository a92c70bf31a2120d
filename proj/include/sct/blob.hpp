#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sct/solver.hpp"

namespace sct {

/// A hereditary graph class given by explicit predicates instead of logic:
/// membership on connected graphs, the weakly-hyperfinite component bound
/// c_delta, and a constructive splitter realizing that bound on members.
struct ClassOracle {
  std::string name;
  bool hereditary = true;
  std::function<bool(const Graph&)> membership;  // connected inputs only
  std::function<long long(const Rational&)> c_delta;
  // Deletion set Q inside `comp` (a member component of g) with
  // |Q| <= delta * |comp| leaving components of at most c_delta(delta).
  std::function<VertexSet(const Graph&, const VertexSet&, const Rational&)> split;
};

inline ClassOracle k1_oracle() {
  ClassOracle o;
  o.name = "k1";
  o.membership = [](const Graph& g) { return g.n() == 1; };
  o.c_delta = [](const Rational&) -> long long { return 1; };
  o.split = [](const Graph& g, const VertexSet&, const Rational&) {
    return VertexSet(g.n());
  };
  return o;
}

namespace detail {

// Post-order tree splitting: cut a vertex whenever the pending chunk below
// it reaches k = ceil(1/delta) vertices. Each cut pays for k vertices, so
// at most delta * n cuts; leftover chunks stay below k <= ceil(2/delta).
inline VertexSet tree_split(const Graph& g, const VertexSet& comp, long long k) {
  VertexSet q(g.n());
  std::vector<long long> cnt(g.n(), 0);
  std::vector<int> parent(g.n(), -2);
  int root = comp.first();
  std::vector<int> order;
  std::vector<int> stack{root};
  parent[root] = -1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    (g.neighbors(v) & comp).for_each([&](int u) {
      if (parent[u] == -2) {
        parent[u] = v;
        stack.push_back(u);
      }
    });
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    cnt[v] += 1;
    if (cnt[v] >= k) {
      q.insert(v);
      cnt[v] = 0;
    }
    if (parent[v] >= 0) cnt[parent[v]] += cnt[v];
  }
  return q;
}

}  // namespace detail

inline ClassOracle forest_oracle() {
  ClassOracle o;
  o.name = "forest";
  o.membership = [](const Graph& g) { return g.m() == g.n() - 1; };  // connected + acyclic
  o.c_delta = [](const Rational& delta) {
    if (delta <= 0 || delta > 1) throw input_error("c_delta: delta must be in (0,1]");
    return ceil_to_int(Rational(2) / delta);
  };
  o.split = [](const Graph& g, const VertexSet& comp, const Rational& delta) {
    long long k = ceil_to_int(Rational(1) / delta);
    return detail::tree_split(g, comp, k);
  };
  return o;
}

/// The blob graph restricted to a family of connected sets: one vertex per
/// blob, an edge whenever the union of two blobs induces a connected
/// subgraph of the base (they intersect or an edge joins them).
struct BlobGraph {
  int base_n = 0;
  std::vector<VertexSet> blobs;   // base universe, sorted by size then lex
  Graph graph;                    // blob adjacency
  std::vector<Rational> weights;  // blob weight = sum of base weights

  WeightedGraph weighted() const { return WeightedGraph(graph, weights); }

  // Blob index of a base vertex set, or -1.
  int index_of(const VertexSet& s) const {
    for (size_t i = 0; i < blobs.size(); ++i)
      if (blobs[i] == s) return int(i);
    return -1;
  }
};

namespace detail {

// Every connected set of size <= cap, each exactly once: anchored at its
// minimum vertex, grown through an extension list whose consumed entries
// stay excluded in the rest of the branch.
inline std::vector<VertexSet> connected_sets(const Graph& g, int cap) {
  std::vector<VertexSet> out;
  for (int v = 0; v < g.n(); ++v) {
    VertexSet s(g.n());
    s.insert(v);
    VertexSet forb(g.n());
    for (int u = 0; u <= v; ++u) forb.insert(u);
    auto grow = [&](auto&& self, VertexSet cur, VertexSet banned) -> void {
      out.push_back(cur);
      if (cur.size() >= cap) return;
      VertexSet ext = open_neighborhood(g, cur) - banned;
      for (int u = ext.first(); u >= 0; u = ext.next(u)) {
        VertexSet nxt = cur;
        nxt.insert(u);
        self(self, std::move(nxt), banned);
        banned.insert(u);
      }
    };
    grow(grow, std::move(s), std::move(forb));
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.lex_less(b);
  });
  return out;
}

inline BlobGraph assemble_blob_graph(const WeightedGraph& gw, std::vector<VertexSet> blobs) {
  BlobGraph bg;
  bg.base_n = gw.graph.n();
  bg.blobs = std::move(blobs);
  bg.graph = Graph(int(bg.blobs.size()));
  bg.weights.reserve(bg.blobs.size());
  for (const auto& b : bg.blobs) bg.weights.push_back(gw.weight(b));
  for (size_t i = 0; i < bg.blobs.size(); ++i)
    for (size_t j = i + 1; j < bg.blobs.size(); ++j) {
      bool touch = bg.blobs[i].intersects(bg.blobs[j]) ||
                   !are_nonadjacent(gw.graph, bg.blobs[i], bg.blobs[j]);
      if (touch) bg.graph.add_edge(int(i), int(j));
    }
  return bg;
}

}  // namespace detail

/// Full blob graph on every nonempty connected subset. Oracle-scale only.
inline BlobGraph blob_graph_full(const Graph& g, int cap = 12) {
  if (g.n() > cap)
    throw oracle_cap_exceeded("blob_graph_full: n=" + std::to_string(g.n()) +
                              " above cap " + std::to_string(cap));
  return detail::assemble_blob_graph(WeightedGraph(g), detail::connected_sets(g, g.n()));
}

/// Blob graph on connected sets of at most `cap` vertices whose induced
/// subgraph belongs to the oracle's class.
inline BlobGraph blob_graph_restricted(const WeightedGraph& gw, const ClassOracle& oracle,
                                       int cap) {
  if (cap < 1) throw input_error("blob_graph_restricted: cap must be >= 1");
  std::vector<VertexSet> keep;
  for (auto& s : detail::connected_sets(gw.graph, cap)) {
    auto [sub, orig] = gw.graph.induced(s);
    (void)orig;
    if (oracle.membership(sub)) keep.push_back(std::move(s));
  }
  return detail::assemble_blob_graph(gw, std::move(keep));
}

/// True iff every component of g[s] belongs to the oracle's class.
inline bool is_valid_packing(const Graph& g, const VertexSet& s, const ClassOracle& oracle) {
  for (const auto& comp : components(g, s)) {
    auto [sub, orig] = g.induced(comp);
    (void)orig;
    if (!oracle.membership(sub)) return false;
  }
  return true;
}

/// Exhaustive maximum-weight packing oracle, ties to the lexicographically
/// least vertex set.
inline std::pair<VertexSet, Rational> brute_force_packing(const WeightedGraph& gw,
                                                          const ClassOracle& oracle,
                                                          int cap = 16) {
  const Graph& g = gw.graph;
  if (g.n() > cap)
    throw oracle_cap_exceeded("brute_force_packing: n=" + std::to_string(g.n()) +
                              " above cap " + std::to_string(cap));
  VertexSet best(g.n());
  Rational best_w = 0;
  for (uint64_t mask = 0; mask < (uint64_t(1) << g.n()); ++mask) {
    VertexSet s(g.n());
    for (int v = 0; v < g.n(); ++v)
      if ((mask >> v) & 1) s.insert(v);
    if (!is_valid_packing(g, s, oracle)) continue;
    Rational w = gw.weight(s);
    if (w > best_w || (w == best_w && s.lex_less(best))) {
      best = s;
      best_w = w;
    }
  }
  return {best, best_w};
}

struct PackingOutcome {
  OutcomeKind kind = OutcomeKind::ApproxSet;
  VertexSet packing;  // base universe
  Rational weight;
  // When the blob-side run finds a model, it is lifted to the base graph if
  // possible; otherwise the blob-side certificate stands on its own.
  bool model_lifted = false;
  InducedMinorModel model;       // base graph, valid when model_lifted
  InducedMinorModel blob_model;  // blob graph ids
  BlobGraph blob;
  RunStats stats;
  bool guarantee_valid = true;
};

/// Approximation driver for maximum induced packings of a weakly
/// hyperfinite class: reduce to MWIS on the cap-restricted blob graph and
/// run the main solver at half precision, guided by a split-down optimum
/// packing. The (1 - eps) size guarantee is claimed for unit weights.
inline PackingOutcome max_packing(const WeightedGraph& gw, const ClassOracle& oracle,
                                  const Rational& eps, int s, int t,
                                  int brute_cap = 16) {
  if (eps <= 0 || eps >= 1) throw input_error("max_packing: epsilon must be in (0,1)");
  const Graph& g = gw.graph;
  Rational delta = eps / 2;
  long long cap = oracle.c_delta(delta);
  PackingOutcome out;
  out.packing = VertexSet(g.n());
  out.weight = 0;
  if (g.n() == 0) return out;
  out.blob = blob_graph_restricted(gw, oracle, int(std::min<long long>(cap, g.n())));

  // Guide: optimum packing with oversized components split down to the cap.
  auto [opt_pack, opt_w] = brute_force_packing(gw, oracle, brute_cap);
  (void)opt_w;
  VertexSet trimmed = opt_pack;
  for (const auto& comp : components(g, opt_pack)) {
    if (comp.size() <= cap) continue;
    trimmed -= oracle.split(g, comp, delta);
  }
  VertexSet guide(out.blob.graph.n());
  for (const auto& comp : components(g, trimmed)) {
    int idx = out.blob.index_of(comp);
    if (idx < 0)
      throw invariant_violation("max_packing: split component is not a blob");
    guide.insert(idx);
  }

  SolverConfig cfg;
  cfg.s = s;
  cfg.t = t;
  cfg.epsilon = eps / 2;
  cfg.mode = SolveMode::Guided;
  SolveOutcome so = solve(out.blob.weighted(), cfg, guide);
  out.stats = so.stats;
  out.guarantee_valid = so.guarantee_valid;

  if (so.kind == OutcomeKind::ModelFound) {
    out.kind = OutcomeKind::ModelFound;
    out.blob_model = so.model;
    // Lift per cycle: the flattened union of one blob cycle's branch sets
    // contains a base hole of length >= t, and the unions are pairwise
    // non-adjacent.
    std::vector<Hole> holes;
    bool ok = true;
    for (int i = 0; i < s && ok; ++i) {
      VertexSet flat(g.n());
      for (int j = 0; j < t; ++j)
        so.model.at(i, j).for_each([&](int b) { flat |= out.blob.blobs[b]; });
      auto [sub, orig] = g.induced(flat);
      auto h = shortest_long_hole(sub, t);
      if (!h) {
        ok = false;
        break;
      }
      Hole hr;
      for (int v : h->cycle) hr.cycle.push_back(orig[v]);
      hr.cycle = canonical_cycle(hr.cycle);
      holes.push_back(std::move(hr));
    }
    if (ok) {
      out.model = assemble_model(g, holes, s, t);
      out.model_lifted = true;
    }
    return out;
  }

  so.iset.for_each([&](int b) { out.packing |= out.blob.blobs[b]; });
  out.weight = gw.weight(out.packing);
  if (out.weight != so.weight)
    throw invariant_violation("max_packing: blob weights disagree with the base sum");
  if (!is_valid_packing(g, out.packing, oracle))
    throw invariant_violation("max_packing: returned set is not a valid packing");
  return out;
}

}  // namespace sct
