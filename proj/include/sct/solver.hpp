#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sct/minor_model.hpp"
#include "sct/mwis.hpp"
#include "sct/params.hpp"
#include "sct/separator.hpp"

namespace sct {

struct RunStats {
  long long nodes = 0;
  int max_depth = 0;
  long long candidates = 0;
  long long wall_ms = 0;
};

enum class OutcomeKind { ApproxSet, ModelFound };

inline std::string to_string(OutcomeKind k) {
  return k == OutcomeKind::ApproxSet ? "approx" : "model";
}

struct SolveOutcome {
  OutcomeKind kind = OutcomeKind::ApproxSet;
  VertexSet iset;      // meaningful when kind == ApproxSet
  Rational weight;
  InducedMinorModel model;  // meaningful when kind == ModelFound
  RunStats stats;
  // False whenever any cap truncated the search, in which case the
  // (1 - epsilon) bound is not promised.
  bool guarantee_valid = true;
};

struct SolverConfig {
  int s = 1;
  int t = 4;
  Rational epsilon;
  SolveMode mode = SolveMode::Strict;
  Caps caps;
  // Synthetic parameter override for targeted exercises; derive() otherwise.
  std::optional<GlobalParams> params_override;
  bool collect_timing = false;
};

/// A hole in g disjoint from and non-adjacent to D, found by searching
/// g - N[D]. This is the hole that certifies a large component.
inline Hole find_nonadjacent_hole(const Graph& g, const VertexSet& d, int t) {
  VertexSet rest_set = VertexSet::full(g.n()) - closed_neighborhood(g, d);
  auto [rest, rmap] = g.induced(rest_set);
  auto h = shortest_long_hole(rest, t);
  if (!h)
    throw invariant_violation("find_nonadjacent_hole: no witness hole beside the component");
  Hole out;
  out.cycle.reserve(h->cycle.size());
  for (int v : h->cycle) out.cycle.push_back(rmap[v]);
  out.cycle = canonical_cycle(out.cycle);
  return out;
}

/// Contracts s pairwise disjoint, pairwise non-adjacent holes of length
/// >= t into an sC_t model: each hole splits into t cyclically consecutive
/// arcs, the ceil(k/t)-sized arcs first. The result is verified before
/// being returned.
inline InducedMinorModel assemble_model(const Graph& g, const std::vector<Hole>& holes,
                                        int s, int t) {
  if (int(holes.size()) != s)
    throw invariant_violation("assemble_model: expected " + std::to_string(s) +
                              " holes, got " + std::to_string(holes.size()));
  InducedMinorModel m;
  m.s = s;
  m.t = t;
  m.branch_sets.assign(size_t(s) * t, VertexSet(g.n()));
  for (int i = 0; i < s; ++i) {
    const auto& cyc = holes[i].cycle;
    int k = int(cyc.size());
    if (k < t)
      throw invariant_violation("assemble_model: hole shorter than t");
    int pos = 0;
    for (int j = 0; j < t; ++j) {
      int len = k / t + (j < k % t ? 1 : 0);
      for (int a = 0; a < len; ++a) m.branch_sets[size_t(i) * t + j].insert(cyc[pos + a]);
      pos += len;
    }
  }
  if (auto v = verify_model(g, m); !v)
    throw invariant_violation("assemble_model: " + v.diagnostic);
  return m;
}

namespace detail {

// Deterministic greedy independent set, used only as the fallback result
// when a depth cap cuts the recursion short.
inline std::pair<VertexSet, Rational> greedy_mwis(const WeightedGraph& gw) {
  VertexSet avail = VertexSet::full(gw.graph.n());
  VertexSet out(gw.graph.n());
  Rational w = 0;
  while (!avail.empty()) {
    int pick = -1;
    avail.for_each([&](int v) {
      if (pick < 0 || gw.weights[v] > gw.weights[pick]) pick = v;
    });
    out.insert(pick);
    w += gw.weights[pick];
    avail -= gw.graph.closed_neighbors(pick);
  }
  return {out, w};
}

struct RecContext {
  const Graph* root_graph = nullptr;
  GlobalParams params;
  SolveMode mode = SolveMode::Strict;
  Caps caps;
  bool external_guide = false;
  RunStats stats;
  bool truncated = false;
};

// Recursion on an induced subgraph. `to_root` maps local ids to root ids;
// all returned sets and all collected holes live in root ids.
struct RecResult {
  bool model_found = false;
  InducedMinorModel model;
  VertexSet iset;  // root universe
  Rational weight;
};

inline RecResult solve_rec(RecContext& ctx, const WeightedGraph& gw,
                           const std::vector<int>& to_root, int sprime,
                           const std::optional<VertexSet>& guide_local,
                           std::vector<Hole>& holes_root, int depth) {
  const Graph& g = gw.graph;
  const int n = g.n();
  const int root_n = ctx.root_graph->n();
  ++ctx.stats.nodes;
  if (depth > ctx.stats.max_depth) ctx.stats.max_depth = depth;

  if (sprime == 0)
    return {true, assemble_model(*ctx.root_graph, holes_root, ctx.params.s, ctx.params.t),
            VertexSet(root_n), Rational(0)};

  RecResult res;
  res.iset = VertexSet(root_n);
  res.weight = 0;
  if (n == 0) return res;
  if (gw.total_weight() == 0) return res;  // the empty set is optimal

  if (ctx.caps.depth_cap && depth >= *ctx.caps.depth_cap) {
    ctx.truncated = true;
    auto [s, w] = greedy_mwis(gw);
    s.for_each([&](int v) { res.iset.insert(to_root[v]); });
    res.weight = w;
    return res;
  }

  std::optional<VertexSet> guide = guide_local;
  if (ctx.mode == SolveMode::Guided && !ctx.external_guide)
    guide = lex_least_optimum(gw).first;

  auto cands = build_level(gw, sprime, ctx.params, ctx.mode, guide, ctx.caps,
                           &ctx.truncated);
  ctx.stats.candidates += (long long)(cands.size());
  if (cands.empty()) {
    ctx.truncated = true;
    auto [s, w] = greedy_mwis(gw);
    s.for_each([&](int v) { res.iset.insert(to_root[v]); });
    res.weight = w;
    return res;
  }

  bool have_best = false;
  const VertexSet everything = VertexSet::full(n);
  long long mu_here = sprime + (n > 0 ? floor_log_base65(n) : 0);

  for (const auto& cp : cands) {
    VertexSet acc(root_n);
    cp.j.for_each([&](int v) { acc.insert(to_root[v]); });
    Rational acc_w = gw.weight(cp.j);
    bool abandoned = false;

    for (const auto& dset : components(g, everything - cp.x)) {
      int s_d = sprime;
      std::vector<Hole> holes_child = holes_root;
      if (6 * dset.size() > 5 * n) {
        s_d = sprime - 1;
        Hole h_local = find_nonadjacent_hole(g, dset, ctx.params.t);
        Hole h_root;
        for (int v : h_local.cycle) h_root.cycle.push_back(to_root[v]);
        h_root.cycle = canonical_cycle(h_root.cycle);
        holes_child.push_back(std::move(h_root));
      }
      long long mu_child = s_d + (dset.size() > 0 ? floor_log_base65(dset.size()) : 0);
      if (mu_child >= mu_here)
        throw invariant_violation("solve: potential failed to drop (" +
                                  std::to_string(mu_here) + " -> " +
                                  std::to_string(mu_child) + ")");
      auto [gw_d, dmap_local] = gw.induced(dset);
      std::vector<int> dmap;
      dmap.reserve(dmap_local.size());
      for (int v : dmap_local) dmap.push_back(to_root[v]);
      std::optional<VertexSet> guide_d;
      if (ctx.mode == SolveMode::Guided && ctx.external_guide) {
        VertexSet gd(gw_d.graph.n());
        for (size_t i = 0; i < dmap_local.size(); ++i)
          if (guide->contains(dmap_local[i])) gd.insert(int(i));
        guide_d = std::move(gd);
      }
      RecResult child =
          solve_rec(ctx, gw_d, dmap, s_d, guide_d, holes_child, depth + 1);
      if (child.model_found) return child;
      acc |= child.iset;
      acc_w += child.weight;
      (void)abandoned;
    }

    if (!have_best || acc_w > res.weight ||
        (acc_w == res.weight && acc.lex_less(res.iset))) {
      res.iset = std::move(acc);
      res.weight = std::move(acc_w);
      have_best = true;
    }
  }
  return res;
}

}  // namespace detail

/// Entry point. Returns either an independent set of weight at least
/// (1 - epsilon) times the optimum, or an sC_t induced minor model.
/// `external_guide` switches guided mode to the caller-supplied independent
/// set: the weight bound then holds against that set instead of the optimum.
inline SolveOutcome solve(const WeightedGraph& gw, const SolverConfig& cfg,
                          const std::optional<VertexSet>& external_guide = std::nullopt) {
  auto t0 = std::chrono::steady_clock::now();
  if (external_guide) {
    if (cfg.mode != SolveMode::Guided)
      throw input_error("solve: an external guide requires guided mode");
    if (!is_independent(gw.graph, *external_guide))
      throw input_error("solve: external guide is not independent");
  }
  const int n = gw.graph.n();
  SolveOutcome out;
  out.iset = VertexSet(n);
  out.weight = 0;
  if (n == 0) return out;

  detail::RecContext ctx;
  ctx.root_graph = &gw.graph;
  ctx.params = cfg.params_override
                   ? *cfg.params_override
                   : GlobalParams::derive(cfg.s, cfg.t, cfg.epsilon, n);
  ctx.mode = cfg.mode;
  ctx.caps = cfg.caps;
  ctx.external_guide = external_guide.has_value();
  if (cfg.mode == SolveMode::Strict &&
      (cfg.caps.i0_cap || cfg.caps.candidate_cap || cfg.caps.depth_cap ||
       cfg.caps.i0_size_cap))
    throw input_error("solve: strict mode forbids caps");

  std::vector<int> ident(n);
  for (int i = 0; i < n; ++i) ident[i] = i;
  std::vector<Hole> holes;
  detail::RecResult r = detail::solve_rec(ctx, gw, ident, ctx.params.s,
                                          external_guide, holes, 0);
  out.stats = ctx.stats;
  out.guarantee_valid = !ctx.truncated;
  if (cfg.collect_timing)
    out.stats.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
  if (r.model_found) {
    out.kind = OutcomeKind::ModelFound;
    out.model = std::move(r.model);
    return out;
  }
  out.kind = OutcomeKind::ApproxSet;
  out.iset = std::move(r.iset);
  out.weight = std::move(r.weight);
  if (!is_independent(gw.graph, out.iset))
    throw invariant_violation("solve: output set is not independent");
  return out;
}

}  // namespace sct
