#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sct/graph.hpp"

namespace sct {

inline bool is_independent(const Graph& g, const VertexSet& s) {
  for (int v = s.first(); v >= 0; v = s.next(v))
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

/// Parameters of the heavy-vertex cover family.
struct HeavyParams {
  Rational gamma;                         // in (0,1)
  long long size_bound = 1;               // ceil(gamma^-1 * log2 n), clamped to n
  std::optional<long long> enumeration_cap;

  static HeavyParams derive(const Rational& gamma, int n) {
    if (gamma <= 0 || gamma >= 1) throw input_error("gamma must be in (0,1)");
    HeavyParams p;
    p.gamma = gamma;
    // ceil(log2 n) exactly, then ceil of the rational quotient; the bound is
    // clamped to n since no independent set is larger.
    long long log2n = 0;
    while ((1LL << log2n) < n) ++log2n;
    Rational q = Rational(log2n) / gamma;
    BigInt bound = numerator(q) / denominator(q);
    if (bound * denominator(q) < numerator(q)) bound += 1;
    if (bound < 1) bound = 1;
    if (bound > n) bound = n;
    p.size_bound = bound.convert_to<long long>();
    return p;
  }

  long long effective_bound() const {
    if (enumeration_cap && *enumeration_cap < size_bound) return *enumeration_cap;
    return size_bound;
  }
};

/// w(N[v] cap I) >= gamma * w(I), compared exactly.
inline bool is_gamma_heavy(const WeightedGraph& gw, int v, const VertexSet& I,
                           const Rational& gamma) {
  gw.graph.check_vertex(v);
  if (!is_independent(gw.graph, I)) throw input_error("is_gamma_heavy: I is not independent");
  return gw.weight(gw.graph.closed_neighbors(v) & I) >= gamma * gw.weight(I);
}

/// Every independent set of cardinality <= bound (including the empty set),
/// in deterministic order: by size, then lexicographically.
/// This is the strict-mode realization of the cover-family contract: the
/// exhaustive family is a superset of any family of small independent sets,
/// so whenever no cap truncates it the cover guarantee holds.
inline std::vector<VertexSet> enumerate_cover_family(const WeightedGraph& gw,
                                                     const HeavyParams& p) {
  const Graph& g = gw.graph;
  long long bound = p.effective_bound();
  std::vector<VertexSet> by_size_current{VertexSet(g.n())};
  std::vector<VertexSet> out{VertexSet(g.n())};
  for (long long sz = 1; sz <= bound; ++sz) {
    std::vector<VertexSet> nxt;
    for (const auto& s : by_size_current) {
      int last = -1;
      for (int v = s.first(); v >= 0; v = s.next(v)) last = v;
      for (int v = last + 1; v < g.n(); ++v) {
        if (g.neighbors(v).intersects(s)) continue;
        VertexSet e = s;
        e.insert(v);
        nxt.push_back(std::move(e));
      }
    }
    if (nxt.empty()) break;
    out.insert(out.end(), nxt.begin(), nxt.end());
    by_size_current = std::move(nxt);
  }
  return out;
}

struct GuidedCoverResult {
  VertexSet cover;              // I0, a subset of I_star
  bool degenerate_zero_weight;  // w(I_star) = 0: every vertex is heavy
};

/// Greedy cover of the gamma-heavy vertices: repeatedly take the minimum-id
/// uncovered heavy vertex v and add the maximum-weight vertex of
/// N[v] cap I_star (ties by id). The postcondition -- every heavy vertex lies
/// in N[I0] -- is verified before returning, except in the degenerate
/// zero-weight case, which is flagged instead.
inline GuidedCoverResult guided_cover(const WeightedGraph& gw, const VertexSet& i_star,
                                      const Rational& gamma) {
  const Graph& g = gw.graph;
  if (!is_independent(g, i_star))
    throw input_error("guided_cover: I_star is not independent");
  GuidedCoverResult res{VertexSet(g.n()), false};
  Rational total = gw.weight(i_star);
  if (total == 0) {
    res.degenerate_zero_weight = true;
    return res;
  }
  Rational threshold_rhs = gamma * total;
  auto heavy = [&](int v) {
    return gw.weight(g.closed_neighbors(v) & i_star) >= threshold_rhs;
  };
  VertexSet covered = closed_neighborhood(g, res.cover);
  while (true) {
    int pick = -1;
    for (int v = 0; v < g.n(); ++v)
      if (!covered.contains(v) && heavy(v)) {
        pick = v;
        break;
      }
    if (pick < 0) break;
    VertexSet pool = g.closed_neighbors(pick) & i_star;
    int add = -1;
    pool.for_each([&](int u) {
      if (add < 0 || gw.weights[u] > gw.weights[add]) add = u;
    });
    if (add < 0)
      throw invariant_violation("guided_cover: heavy vertex with empty N[v] cap I_star");
    res.cover.insert(add);
    covered |= g.closed_neighbors(add);
  }
  for (int v = 0; v < g.n(); ++v)
    if (heavy(v) && !covered.contains(v))
      throw invariant_violation("guided_cover: postcondition failed at vertex " +
                                std::to_string(v));
  return res;
}

}  // namespace sct
