#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "sct/graph.hpp"
#include "sct/hole.hpp"

namespace sct {

/// Branch sets realizing sC_t in a host graph: s*t sets indexed (i, j) for
/// cycle i, position j. The negative certificate of the solver.
struct InducedMinorModel {
  int s = 0;
  int t = 0;
  std::vector<VertexSet> branch_sets;  // index i*t + j

  const VertexSet& at(int i, int j) const { return branch_sets[i * t + j]; }
};

struct ModelVerdict {
  bool ok = true;
  std::string diagnostic;  // first violated condition, machine-readable prefix

  explicit operator bool() const { return ok; }
};

/// Checks that m is a valid induced minor model of sC_t in g:
/// pairwise disjoint nonempty connected branch sets whose mutual adjacency
/// is exactly the edge set of sC_t.
inline ModelVerdict verify_model(const Graph& g, const InducedMinorModel& m) {
  auto fail = [](std::string d) { return ModelVerdict{false, std::move(d)}; };
  if (m.s < 1 || m.t < 3) return fail("pattern: s must be >= 1 and t >= 3");
  if (int(m.branch_sets.size()) != m.s * m.t)
    return fail("shape: expected " + std::to_string(m.s * m.t) + " branch sets, got " +
                std::to_string(m.branch_sets.size()));
  for (int a = 0; a < m.s * m.t; ++a) {
    const VertexSet& ba = m.branch_sets[a];
    g.check_subset(ba);
    if (ba.empty()) return fail("empty: branch set " + std::to_string(a) + " is empty");
    if (!is_connected(g, ba))
      return fail("disconnected: branch set " + std::to_string(a));
    for (int b = a + 1; b < m.s * m.t; ++b)
      if (ba.intersects(m.branch_sets[b]))
        return fail("overlap: branch sets " + std::to_string(a) + " and " + std::to_string(b));
  }
  for (int a = 0; a < m.s * m.t; ++a)
    for (int b = a + 1; b < m.s * m.t; ++b) {
      int ia = a / m.t, ja = a % m.t, ib = b / m.t, jb = b % m.t;
      int dj = std::abs(ja - jb);
      bool want = (ia == ib) && (dj == 1 || dj == m.t - 1);
      bool have = !are_nonadjacent(g, m.branch_sets[a], m.branch_sets[b]);
      if (want != have)
        return fail("adjacency mismatch: branch sets " + std::to_string(a) + " and " +
                    std::to_string(b) + (want ? " must touch" : " must not touch"));
    }
  return {};
}

/// Exhaustive search over assignments of vertices to the s*t branch sets or
/// "unused", with incremental forbidden-adjacency pruning. Oracle only.
inline bool contains_sct_bruteforce(const Graph& g, int s, int t, int cap = 12) {
  if (g.n() > cap)
    throw oracle_cap_exceeded("contains_sct_bruteforce: n=" + std::to_string(g.n()) +
                              " above cap " + std::to_string(cap));
  if (s < 1 || t < 3) throw input_error("contains_sct_bruteforce: bad pattern");
  int classes = s * t;
  if (g.n() < classes) return false;
  std::vector<VertexSet> sets(classes, VertexSet(g.n()));
  // allowed[c] = pattern classes whose vertices may be adjacent to class c
  std::vector<std::vector<bool>> compatible(classes, std::vector<bool>(classes, false));
  for (int a = 0; a < classes; ++a)
    for (int b = 0; b < classes; ++b) {
      int dj = std::abs(a % t - b % t);
      compatible[a][b] = (a == b) || (a / t == b / t && (dj == 1 || dj == t - 1));
    }
  auto full_check = [&]() {
    for (const auto& bs : sets)
      if (bs.empty() || !is_connected(g, bs)) return false;
    for (int a = 0; a < classes; ++a)
      for (int b = a + 1; b < classes; ++b) {
        bool want = compatible[a][b];
        if (want == are_nonadjacent(g, sets[a], sets[b])) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self, int v, int assigned_nonempty) -> bool {
    if (g.n() - v < classes - assigned_nonempty) return false;
    if (v == g.n()) return assigned_nonempty == classes && full_check();
    // try each class, then unused
    for (int c = 0; c < classes; ++c) {
      bool ok = true;
      for (int c2 = 0; c2 < classes && ok; ++c2)
        if (!compatible[c][c2] && g.neighbors(v).intersects(sets[c2])) ok = false;
      if (!ok) continue;
      bool was_empty = sets[c].empty();
      sets[c].insert(v);
      if (self(self, v + 1, assigned_nonempty + (was_empty ? 1 : 0))) return true;
      sets[c].erase(v);
    }
    return self(self, v + 1, assigned_nonempty);
  };
  return rec(rec, 0, 0);
}

/// Chordality by maximum cardinality search plus perfect-elimination check.
inline bool is_chordal(const Graph& g) {
  int n = g.n();
  if (n == 0) return true;
  std::vector<int> order(n, -1), pos(n, -1), wt(n, 0);
  VertexSet remaining = VertexSet::full(n);
  for (int k = n - 1; k >= 0; --k) {
    int best = -1;
    remaining.for_each([&](int v) {
      if (best < 0 || wt[v] > wt[best]) best = v;
    });
    order[k] = best;
    pos[best] = k;
    remaining.erase(best);
    (g.neighbors(best) & remaining).for_each([&](int u) { ++wt[u]; });
  }
  // order is a candidate perfect elimination ordering
  for (int k = 0; k < n; ++k) {
    int v = order[k];
    int parent = -1;
    std::vector<int> later;
    g.neighbors(v).for_each([&](int u) {
      if (pos[u] > k) {
        later.push_back(u);
        if (parent < 0 || pos[u] < pos[parent]) parent = u;
      }
    });
    for (int u : later)
      if (u != parent && !g.adjacent(parent, u)) return false;
  }
  return true;
}

inline bool has_long_hole(const Graph& g, int t) {
  if (t == 4) return !is_chordal(g);
  return shortest_long_hole(g, t).has_value();
}

namespace detail {

// Lazily enumerates every induced cycle of length >= max(t,4), one
// canonical orientation each. Stops early once f returns true.
template <typename F>
bool for_each_hole(const Graph& g, int t, F&& f) {
  int lo = std::max(4, t);
  std::vector<int> path;
  VertexSet used(g.n());
  bool stop = false;
  auto extend = [&](auto&& self) -> void {
    if (stop) return;
    int tail = path.back();
    int v0 = path.front();
    for (int w = g.neighbors(tail).first(); w >= 0 && !stop;
         w = g.neighbors(tail).next(w)) {
      if (w <= v0 || used.contains(w)) continue;
      bool chord = false;
      for (size_t i = 1; i + 1 < path.size() && !chord; ++i)
        if (g.adjacent(w, path[i])) chord = true;
      if (chord) continue;
      if (path.size() >= 2 && g.adjacent(w, v0)) {
        // closing vertex: emit if long enough and canonical orientation
        if (int(path.size()) + 1 >= lo && path[1] < w) {
          std::vector<int> cyc = path;
          cyc.push_back(w);
          if (f(cyc)) stop = true;
        }
        continue;  // w cannot stay internal: it has a chord to v0
      }
      path.push_back(w);
      used.insert(w);
      self(self);
      used.erase(w);
      path.pop_back();
    }
  };
  for (int v = 0; v < g.n() && !stop; ++v) {
    path.assign(1, v);
    used = VertexSet(g.n());
    used.insert(v);
    extend(extend);
  }
  return stop;
}

}  // namespace detail

/// Exact decision of sC_{>=t} induced-minor containment through the
/// hole-packing characterization: the pattern embeds iff the graph has s
/// pairwise disjoint, pairwise non-adjacent holes of length >= t. Unlike
/// the assignment oracle this scales to a few hundred vertices, which the
/// blob-side checks need.
inline bool contains_sct_via_holes(const Graph& g, int s, int t) {
  if (s == 0) return true;
  if (s == 1) return has_long_hole(g, t);
  VertexSet all = VertexSet::full(g.n());
  // A first hole must consist of vertices u whose removal of N[u] still
  // leaves room for the remaining s-1 holes.
  VertexSet w_filter(g.n());
  for (int u = 0; u < g.n(); ++u) {
    auto [sub, orig] = g.induced(all - g.closed_neighbors(u));
    (void)orig;
    if (contains_sct_via_holes(sub, s - 1, t)) w_filter.insert(u);
  }
  if (w_filter.empty()) return false;
  auto [gw_sub, wmap] = g.induced(w_filter);
  return detail::for_each_hole(gw_sub, t, [&](const std::vector<int>& cyc) {
    VertexSet forb(g.n());
    for (int v : cyc) forb |= g.closed_neighbors(wmap[v]);
    auto [rest, rmap] = g.induced(all - forb);
    (void)rmap;
    return contains_sct_via_holes(rest, s - 1, t);
  });
}

}  // namespace sct
