#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "sct/graph.hpp"

namespace sct {

/// An induced cycle of length >= 4, stored in canonical traversal order:
/// minimum vertex first, then the rotation direction with the smaller
/// second vertex. Canonical order makes hole comparisons and the whole
/// recursion trace deterministic.
struct Hole {
  std::vector<int> cycle;

  int length() const { return int(cycle.size()); }

  VertexSet vertex_set(int n) const {
    VertexSet s(n);
    for (int v : cycle) s.insert(v);
    return s;
  }
};

inline std::vector<int> canonical_cycle(const std::vector<int>& cyc) {
  int k = int(cyc.size());
  int mi = int(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
  std::vector<int> fwd(k), bwd(k);
  for (int i = 0; i < k; ++i) {
    fwd[i] = cyc[(mi + i) % k];
    bwd[i] = cyc[(mi - i + k) % k];
  }
  return std::min(fwd, bwd);
}

/// True iff cyc is an induced cycle of length >= max(t, 4) in g.
inline bool is_hole(const Graph& g, const std::vector<int>& cyc, int t) {
  int k = int(cyc.size());
  if (k < 4 || k < t) return false;
  VertexSet seen(g.n());
  for (int v : cyc) {
    if (v < 0 || v >= g.n() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.adjacent(cyc[i], cyc[j]) != consecutive) return false;
    }
  return true;
}

namespace detail {

// Recovers the traversal order of a vertex set known to induce a cycle.
inline std::vector<int> walk_cycle(const Graph& g, const VertexSet& s) {
  std::vector<int> order;
  int start = s.first();
  int prev = -1, cur = start;
  do {
    order.push_back(cur);
    VertexSet nb = g.neighbors(cur) & s;
    int nxt = -1;
    nb.for_each([&](int w) {
      if (w != prev && nxt < 0) nxt = w;
    });
    prev = cur;
    cur = nxt;
  } while (cur != start);
  return order;
}

// Enumerates every induced path with exactly `len` vertices, invoking
// f(path). Paths are emitted once per orientation with the smaller
// endpoint first.
template <typename F>
void for_each_induced_path(const Graph& g, int len, F&& f) {
  std::vector<int> path;
  VertexSet used(g.n());
  // forbidden = vertices adjacent to some non-tail path vertex
  auto extend = [&](auto&& self) -> void {
    if (int(path.size()) == len) {
      if (path.front() < path.back()) f(path);
      return;
    }
    int tail = path.back();
    std::vector<int> cands = g.neighbors(tail).to_vector();
    for (int w : cands) {
      if (used.contains(w)) continue;
      bool ok = true;
      for (size_t i = 0; i + 1 < path.size() && ok; ++i)
        if (g.adjacent(w, path[i])) ok = false;
      if (!ok) continue;
      path.push_back(w);
      used.insert(w);
      self(self);
      used.erase(w);
      path.pop_back();
    }
  };
  for (int v = 0; v < g.n(); ++v) {
    path.assign(1, v);
    used = VertexSet(g.n());
    used.insert(v);
    extend(extend);
  }
}

// Shortest x-y path with deterministic minimum-id parent choice inside
// `allowed` (which must contain x and y). Returns empty if none.
inline std::vector<int> bfs_path(const Graph& g, int x, int y, const VertexSet& allowed) {
  std::vector<int> parent(g.n(), -2);
  std::vector<int> frontier{x};
  parent[x] = -1;
  while (!frontier.empty() && parent[y] == -2) {
    std::vector<int> nxt;
    // frontier is in increasing id order, so parents are minimum-id
    for (int u : frontier) {
      VertexSet nb = g.neighbors(u) & allowed;
      nb.for_each([&](int w) {
        if (parent[w] == -2) {
          parent[w] = u;
          nxt.push_back(w);
        }
      });
    }
    std::sort(nxt.begin(), nxt.end());
    nxt.erase(std::unique(nxt.begin(), nxt.end()), nxt.end());
    frontier = std::move(nxt);
  }
  if (parent[y] == -2) return {};
  std::vector<int> path;
  for (int v = y; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace detail

/// Every induced cycle of length >= t (and >= 4), by exhaustive subset
/// enumeration. Oracle only: refuses above the size cap.
inline std::vector<Hole> all_holes_bruteforce(const Graph& g, int t, int cap = 14) {
  if (g.n() > cap)
    throw oracle_cap_exceeded("all_holes_bruteforce: n=" + std::to_string(g.n()) +
                              " above cap " + std::to_string(cap));
  int lo = std::max(4, t);
  std::vector<Hole> out;
  for (uint64_t mask = 0; mask < (uint64_t(1) << g.n()); ++mask) {
    if (__builtin_popcountll(mask) < lo) continue;
    VertexSet s(g.n());
    for (int v = 0; v < g.n(); ++v)
      if ((mask >> v) & 1) s.insert(v);
    bool cyclic = true;
    s.for_each([&](int v) {
      if ((g.neighbors(v) & s).size() != 2) cyclic = false;
    });
    if (!cyclic || !is_connected(g, s)) continue;
    out.push_back(Hole{canonical_cycle(detail::walk_cycle(g, s))});
  }
  std::sort(out.begin(), out.end(), [](const Hole& a, const Hole& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.cycle < b.cycle;
  });
  return out;
}

/// Shortest hole of length >= t, or nullopt when g is C_{>=t}-free.
/// Stage one looks for an induced C_t directly; stage two grows a cycle
/// from every induced t-vertex path by deleting the closed neighborhoods
/// of its internal vertices and closing through a shortest leftover path.
/// Among equal-length holes the canonically least vertex sequence wins.
inline std::optional<Hole> shortest_long_hole(const Graph& g, int t) {
  if (t < 4) throw input_error("shortest_long_hole: t must be >= 4");
  std::optional<std::vector<int>> best;
  auto offer = [&](const std::vector<int>& cyc) {
    std::vector<int> canon = canonical_cycle(cyc);
    if (!best || canon.size() < best->size() ||
        (canon.size() == best->size() && canon < *best))
      best = std::move(canon);
  };

  // Stage 1: an induced cycle with exactly t vertices, if one exists, is
  // shortest possible. Enumerate as an induced (t-1)-vertex path plus one
  // closing vertex adjacent to exactly the two endpoints.
  detail::for_each_induced_path(g, t - 1, [&](const std::vector<int>& path) {
    VertexSet cand = g.neighbors(path.front()) & g.neighbors(path.back());
    cand.for_each([&](int w) {
      for (int p : path)
        if (p == w) return;
      for (size_t i = 1; i + 1 < path.size(); ++i)
        if (g.adjacent(w, path[i])) return;
      std::vector<int> cyc = path;
      cyc.push_back(w);
      offer(cyc);
    });
  });
  if (best && int(best->size()) == t) return Hole{*best};
  best.reset();

  // Stage 2: close each induced t-vertex path through the graph minus the
  // closed neighborhoods of its internal vertices.
  detail::for_each_induced_path(g, t, [&](const std::vector<int>& path) {
    int x = path.front(), y = path.back();
    VertexSet allowed = VertexSet::full(g.n());
    for (size_t i = 1; i + 1 < path.size(); ++i) allowed -= g.closed_neighbors(path[i]);
    allowed.insert(x);
    allowed.insert(y);
    std::vector<int> xy = detail::bfs_path(g, x, y, allowed);
    if (xy.empty()) return;
    // cycle = internal path vertices (y-side first after reversal) + x..y path
    std::vector<int> cyc(path.rbegin() + 1, path.rend() - 1);
    cyc.insert(cyc.end(), xy.begin(), xy.end());
    if (!is_hole(g, cyc, t))
      throw invariant_violation("shortest_long_hole: closed cycle is not induced");
    offer(cyc);
  });

  if (!best) return std::nullopt;
  return Hole{*best};
}

}  // namespace sct
