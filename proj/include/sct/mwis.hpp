#pragma once

#include <utility>
#include <vector>

#include "sct/graph.hpp"
#include "sct/heavy.hpp"
#include "sct/hole.hpp"

namespace sct {

/// Exhaustive maximum-weight independent set oracle. Plain include/exclude
/// enumeration with only a trivial weight bound, kept free of the pruning
/// machinery in exact_ctfree so the two remain independent routes.
/// Ties break to the lexicographically least vertex set.
inline std::pair<VertexSet, Rational> brute_force_mwis(const WeightedGraph& gw, int cap = 20) {
  const Graph& g = gw.graph;
  if (g.n() > cap)
    throw oracle_cap_exceeded("brute_force_mwis: n=" + std::to_string(g.n()) +
                              " above cap " + std::to_string(cap));
  VertexSet best(g.n());
  Rational best_w = 0;
  VertexSet cur(g.n());
  Rational cur_w = 0;
  // suffix_w[v] = total weight of vertices >= v
  std::vector<Rational> suffix_w(g.n() + 1, Rational(0));
  for (int v = g.n() - 1; v >= 0; --v) suffix_w[v] = suffix_w[v + 1] + gw.weights[v];
  auto rec = [&](auto&& self, int v) -> void {
    if (cur_w > best_w || (cur_w == best_w && cur.lex_less(best))) {
      best = cur;
      best_w = cur_w;
    }
    if (v == g.n()) return;
    if (cur_w + suffix_w[v] < best_w) return;
    if (!g.neighbors(v).intersects(cur)) {
      cur.insert(v);
      cur_w += gw.weights[v];
      self(self, v + 1);
      cur_w -= gw.weights[v];
      cur.erase(v);
    }
    self(self, v + 1);
  };
  rec(rec, 0);
  return {best, best_w};
}

namespace detail {

/// Branch-and-bound MWIS: component decomposition at every node, a greedy
/// lower bound, and a greedy weighted-clique-cover upper bound.
class MisBnb {
 public:
  MisBnb(const Graph& g, const std::vector<Rational>& w) : g_(g), w_(w) {}

  Rational max_weight(const VertexSet& active) {
    Rational total = 0;
    for (const auto& comp : components(g_, active)) total += solve_component(comp);
    return total;
  }

 private:
  Rational greedy_lb(const VertexSet& active) const {
    VertexSet avail = active;
    Rational lb = 0;
    while (!avail.empty()) {
      int pick = -1;
      avail.for_each([&](int v) {
        if (pick < 0 || w_[v] > w_[pick]) pick = v;
      });
      lb += w_[pick];
      avail -= g_.closed_neighbors(pick);
    }
    return lb;
  }

  Rational clique_cover_ub(const VertexSet& active) const {
    std::vector<VertexSet> cliques;
    std::vector<Rational> maxw;
    active.for_each([&](int v) {
      for (size_t i = 0; i < cliques.size(); ++i) {
        if (cliques[i].is_subset_of(g_.neighbors(v))) {
          cliques[i].insert(v);
          if (w_[v] > maxw[i]) maxw[i] = w_[v];
          return;
        }
      }
      VertexSet c(g_.n());
      c.insert(v);
      cliques.push_back(std::move(c));
      maxw.push_back(w_[v]);
    });
    Rational ub = 0;
    for (const auto& mw : maxw) ub += mw;
    return ub;
  }

  Rational solve_component(const VertexSet& comp) {
    // isolated or tiny cases fall through naturally via branching
    Rational best = greedy_lb(comp);
    branch(comp, Rational(0), best);
    return best;
  }

  void branch(const VertexSet& active, Rational acc, Rational& best) {
    if (active.empty()) {
      if (acc > best) best = acc;
      return;
    }
    if (acc + clique_cover_ub(active) <= best) return;
    auto comps = components(g_, active);
    if (comps.size() > 1) {
      Rational sum = acc;
      for (const auto& c : comps) sum += solve_component(c);
      if (sum > best) best = sum;
      return;
    }
    // branch on a maximum-degree vertex (ties by id)
    int pick = -1, pick_deg = -1;
    active.for_each([&](int v) {
      int d = (g_.neighbors(v) & active).size();
      if (d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    });
    if (pick_deg == 0) {
      Rational sum = acc;
      active.for_each([&](int v) { sum += w_[v]; });
      if (sum > best) best = sum;
      return;
    }
    branch(active - g_.closed_neighbors(pick), acc + w_[pick], best);
    VertexSet rest = active;
    rest.erase(pick);
    branch(rest, acc, best);
  }

  const Graph& g_;
  const std::vector<Rational>& w_;
};

}  // namespace detail

/// Maximum weight of an independent set inside `active`, by branch and bound.
inline Rational max_weight_is(const WeightedGraph& gw, const VertexSet& active) {
  detail::MisBnb solver(gw.graph, gw.weights);
  return solver.max_weight(active);
}

/// Lexicographically least maximum-weight independent set, rebuilt greedily
/// from repeated weight queries.
inline std::pair<VertexSet, Rational> lex_least_optimum(const WeightedGraph& gw) {
  const Graph& g = gw.graph;
  VertexSet active = VertexSet::full(g.n());
  VertexSet chosen(g.n());
  Rational opt = max_weight_is(gw, active);
  Rational have = 0;
  int from = 0;
  while (have < opt) {
    int before = from;
    for (int v = from; v < g.n(); ++v) {
      if (!active.contains(v)) continue;
      VertexSet after = active - g.closed_neighbors(v);
      // drop everything below v so the sequence stays increasing
      for (int u = after.first(); u >= 0 && u <= v; u = after.next(u)) after.erase(u);
      if (have + gw.weights[v] + max_weight_is(gw, after) == opt) {
        chosen.insert(v);
        have += gw.weights[v];
        active = after;
        from = v + 1;
        break;
      }
    }
    if (from == before)
      throw invariant_violation("lex_least_optimum: no extension reaches the optimum");
  }
  return {chosen, opt};
}

/// Exact MWIS on a graph verified to be C_{>=t}-free. Substitutes the
/// cited exact quasipolynomial algorithm with branch and bound; both
/// return a maximum-weight independent set.
inline std::pair<VertexSet, Rational> exact_ctfree(const WeightedGraph& gw, int t) {
  if (shortest_long_hole(gw.graph, t))
    throw invariant_violation("exact_ctfree: input has a hole of length >= " +
                              std::to_string(t));
  return lex_least_optimum(gw);
}

}  // namespace sct
