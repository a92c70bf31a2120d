#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sct/graph.hpp"
#include "sct/heavy.hpp"
#include "sct/hole.hpp"
#include "sct/mwis.hpp"
#include "sct/params.hpp"

namespace sct {

/// Per-vertex cones (hole positions reachable by a vertical path) and their
/// transpose D(u_k) = vertices whose cone contains position k.
struct ConeTable {
  int hole_len = 0;
  std::vector<VertexSet> cone;  // per graph vertex, universe = hole_len
  std::vector<VertexSet> d;     // per hole position, universe = n
  VertexSet domain;             // vertices covered by the layering

  VertexSet all_d_union() const {
    VertexSet u(int(cone.size()));
    for (const auto& dk : d) u |= dk;
    return u;
  }
};

/// Dynamic program up the layers: cone(x) = {pos(x)} on the hole itself,
/// and cone(v) for v in L_i is the union of the cones of its neighbors in
/// L_{i-1} (a vertical path must step down one layer at a time).
inline ConeTable compute_cones(const Graph& g, const std::vector<VertexSet>& layers,
                               const std::vector<int>& hole_cycle) {
  int L = int(hole_cycle.size());
  VertexSet hole_set(g.n());
  for (int v : hole_cycle) hole_set.insert(v);
  if (layers.empty() || !(layers[0] == hole_set))
    throw input_error("compute_cones: layering seed differs from the hole");
  ConeTable ct;
  ct.hole_len = L;
  ct.cone.assign(g.n(), VertexSet(L));
  ct.d.assign(L, VertexSet(g.n()));
  ct.domain = VertexSet(g.n());
  for (int k = 0; k < L; ++k) {
    ct.cone[hole_cycle[k]].insert(k);
    ct.d[k].insert(hole_cycle[k]);
    ct.domain.insert(hole_cycle[k]);
  }
  for (size_t i = 1; i < layers.size(); ++i) {
    layers[i].for_each([&](int v) {
      ct.domain.insert(v);
      VertexSet below = g.neighbors(v) & layers[i - 1];
      below.for_each([&](int u) { ct.cone[v] |= ct.cone[u]; });
      ct.cone[v].for_each([&](int k) { ct.d[k].insert(v); });
    });
  }
  return ct;
}

/// D_{a,width}: union of D(u_{k mod L}) over k in [a, a+width-1].
/// Indices may be any integers; they normalize cyclically.
inline VertexSet stratum(const ConeTable& ct, long long a, long long width) {
  if (width < 1) throw input_error("stratum: width must be >= 1");
  int L = ct.hole_len;
  VertexSet out(int(ct.cone.size()));
  for (long long k = a; k < a + width; ++k) {
    long long idx = ((k % L) + L) % L;
    out |= ct.d[size_t(idx)];
  }
  return out;
}

/// Minimal window [a1,a2] of hole positions whose D-union reaches n2/6
/// vertices; ties break to the smaller a1. Returns nullopt when even the
/// full index range falls short (the caller then takes the fallback exit).
inline std::optional<std::pair<int, int>> interval_search(const ConeTable& ct, int n2) {
  int L = ct.hole_len;
  int best_a1 = -1, best_a2 = -1;
  for (int a1 = 0; a1 < L; ++a1) {
    if (best_a1 >= 0 && a1 + (best_a2 - best_a1) >= L) break;
    VertexSet u(int(ct.cone.size()));
    for (int a2 = a1; a2 < L; ++a2) {
      if (best_a1 >= 0 && a2 - a1 > best_a2 - best_a1) break;
      if (best_a1 >= 0 && a2 - a1 == best_a2 - best_a1 && a1 > best_a1) break;
      u |= ct.d[a2];
      if (6 * u.size() >= n2) {
        if (best_a1 < 0 || a2 - a1 < best_a2 - best_a1) {
          best_a1 = a1;
          best_a2 = a2;
        }
        break;
      }
    }
  }
  if (best_a1 < 0) return std::nullopt;
  if (best_a1 != best_a2) {
    VertexSet u(int(ct.cone.size()));
    for (int j = best_a1; j <= best_a2; ++j) u |= ct.d[j];
    if (3 * u.size() >= n2)
      throw invariant_violation("interval_search: minimal window holds >= n2/3 vertices");
  }
  return std::make_pair(best_a1, best_a2);
}

/// Deletes the neighborhood of a fixed (t-1)-vertex subpath of H, keeping
/// the component that still contains H. Afterwards every surviving vertex
/// outside H attaches to a 3-vertex subpath of H; verified at run time.
struct AttachFilterResult {
  VertexSet x1;  // N(P) \ V(H), restricted to the active set
  VertexSet g1;  // component of active - x1 containing H
};

inline AttachFilterResult attach_filter(const Graph& g, const VertexSet& active,
                                        const Hole& hole, int t) {
  int L = hole.length();
  if (L <= 2 * t + 8)
    throw input_error("attach_filter: hole must have more than 2t+8 vertices");
  VertexSet hole_set = hole.vertex_set(g.n());
  // P = u_0 .. u_{t-2} under the hole's canonical orientation
  VertexSet p(g.n());
  for (int i = 0; i < t - 1; ++i) p.insert(hole.cycle[i]);
  VertexSet x1 = (open_neighborhood(g, p) & active) - hole_set;
  VertexSet rest = active - x1;
  VertexSet g1(g.n());
  for (const auto& comp : components(g, rest))
    if (comp.contains(hole.cycle[0])) {
      g1 = comp;
      break;
    }
  if (!hole_set.is_subset_of(g1))
    throw invariant_violation("attach_filter: hole split across components");
  // Attachment claim: neighbors in H of every surviving outside vertex fit
  // into three cyclically consecutive hole vertices.
  std::vector<int> pos(g.n(), -1);
  for (int k = 0; k < L; ++k) pos[hole.cycle[k]] = k;
  for (int v = g1.first(); v >= 0; v = g1.next(v)) {
    if (hole_set.contains(v)) continue;
    VertexSet hn = g.neighbors(v) & hole_set;
    if (hn.size() <= 1) continue;
    bool fits = false;
    for (int k = 0; k < L && !fits; ++k) {
      bool all_in = true;
      hn.for_each([&](int u) {
        int delta = ((pos[u] - k) % L + L) % L;
        if (delta > 2) all_in = false;
      });
      fits = all_in;
    }
    if (!fits)
      throw invariant_violation("attach_filter: vertex " + std::to_string(v) +
                                " attaches outside a 3-vertex subpath");
  }
  return {std::move(x1), std::move(g1)};
}

enum class SolveMode { Strict, Guided, Heuristic };

inline std::string to_string(SolveMode m) {
  switch (m) {
    case SolveMode::Strict: return "strict";
    case SolveMode::Guided: return "guided";
    default: return "heuristic";
  }
}

struct Caps {
  std::optional<long long> i0_cap;         // max number of I0 branches per level
  std::optional<long long> candidate_cap;  // max emitted candidates per level
  std::optional<long long> depth_cap;
  std::optional<long long> i0_size_cap;    // enumeration size cap (heuristic default 3)
};

/// One branching unit of the recursion: a deletion set X with a committed
/// independent set J, N[J] included in X, plus the trace that produced it.
struct CandidatePair {
  VertexSet x;
  VertexSet j;
  // provenance
  int i0_index = 0;
  std::vector<int> i0;
  std::vector<int> hole;  // empty when the level was C_{>=t}-free
  int hprime = -1;
  std::string case_tag;  // ctfree | ctfree_guide | short_hole | strata_small | strata_large | hole_fallback
  long long a = -1, a_prime = -1;
  int n_components = 0;
  bool spacing_widened = false;  // strata spacing grew past 2b+1 to stay disjoint
};

namespace detail {

// Layers of a BFS restricted to `within`, seeded at `seed` (which must be a
// subset of `within`). Unlike bfs_layering this does not require global
// connectivity; unreached vertices of `within` are simply not covered.
inline std::vector<VertexSet> layers_within(const Graph& g, const VertexSet& within,
                                            const VertexSet& seed) {
  std::vector<VertexSet> layers{seed};
  VertexSet seen = seed;
  while (true) {
    VertexSet nxt = (open_neighborhood(g, layers.back()) & within) - seen;
    if (nxt.empty()) break;
    seen |= nxt;
    layers.push_back(std::move(nxt));
  }
  return layers;
}

// Strata family {D_{start}, D_{start+sp}, ...} with `count` members of the
// given width; spacing starts at 2b+1 and widens until members are pairwise
// disjoint. Returns nullopt when no spacing yields a disjoint family that
// fits the available index span.
struct StrataFamily {
  std::vector<std::pair<long long, VertexSet>> members;  // (start index, set)
  bool widened = false;
};

inline std::optional<StrataFamily> build_strata_family(const ConeTable& ct, long long start,
                                                       long long count, long long b) {
  long long spacing = 2 * b + 1;
  bool widened = false;
  int L = ct.hole_len;
  while (spacing * count <= L + spacing) {
    StrataFamily fam;
    fam.widened = widened;
    bool ok = true;
    for (long long k = 0; k < count && ok; ++k) {
      long long a = start + k * spacing;
      VertexSet s = stratum(ct, a, b);
      for (const auto& [oa, os] : fam.members)
        if (s.intersects(os)) {
          ok = false;
          break;
        }
      if (ok) fam.members.emplace_back(a, std::move(s));
    }
    if (ok) return fam;
    spacing += 2 * b + 1;
    widened = true;
  }
  return std::nullopt;
}

}  // namespace detail

/// One level of the recursion: enumerates the candidate family for
/// (G', s'). Every emitted pair is validated on the spot: J independent
/// with N[J] included in X, and each component of G' - X either small
/// (at most 5/6 of |V(G')|) or certified by a hole of G' disjoint from and
/// non-adjacent to it. In guided mode the beta-budget against the guide is
/// asserted across the emitted family.
inline std::vector<CandidatePair> build_level(const WeightedGraph& gw, int sprime,
                                              const GlobalParams& p, SolveMode mode,
                                              const std::optional<VertexSet>& guide = std::nullopt,
                                              const Caps& caps = {},
                                              bool* truncated = nullptr) {
  const Graph& g = gw.graph;
  const int n = g.n();
  if (sprime < 1) throw input_error("build_level: s' must be >= 1");
  if (mode == SolveMode::Guided && !guide)
    throw input_error("build_level: guided mode needs a guide set");
  if (mode == SolveMode::Strict && (caps.i0_cap || caps.candidate_cap || caps.i0_size_cap))
    throw input_error("build_level: strict mode forbids caps");

  auto mark_truncated = [&] {
    if (truncated) *truncated = true;
  };

  // --- the I0 family ---
  std::vector<VertexSet> i0_family;
  if (mode == SolveMode::Guided) {
    i0_family.push_back(guided_cover(gw, *guide, p.gamma).cover);
  } else {
    HeavyParams hp = HeavyParams::derive(p.gamma, std::max(n, 2));
    if (mode == SolveMode::Heuristic) {
      hp.enumeration_cap = caps.i0_size_cap.value_or(3);
      if (hp.enumeration_cap < hp.size_bound) mark_truncated();
    }
    i0_family = enumerate_cover_family(gw, hp);
    if (caps.i0_cap && (long long)(i0_family.size()) > *caps.i0_cap) {
      i0_family.resize(size_t(*caps.i0_cap));
      mark_truncated();
    }
  }

  std::vector<CandidatePair> out;
  auto emit = [&](CandidatePair cp) {
    // dedup identical (X, J) pairs
    for (const auto& prev : out)
      if (prev.x == cp.x && prev.j == cp.j) return;
    cp.x.for_each([](int) {});
    out.push_back(std::move(cp));
  };

  const VertexSet everything = VertexSet::full(n);

  for (size_t i0i = 0; i0i < i0_family.size(); ++i0i) {
    if (caps.candidate_cap && (long long)(out.size()) >= *caps.candidate_cap) {
      mark_truncated();
      break;
    }
    const VertexSet& i0 = i0_family[i0i];
    CandidatePair base;
    base.i0_index = int(i0i);
    base.i0 = i0.to_vector();

    VertexSet x0 = closed_neighborhood(g, i0);
    VertexSet g0set = everything - x0;
    auto [g0, g0map] = g.induced(g0set);
    auto hole_local = shortest_long_hole(g0, p.t);

    if (!hole_local) {
      // C_{>=t}-free remainder: solve exactly and commit everything.
      WeightedGraph gw0 = gw.induced(g0set).first;
      auto [jset_local, jw] = lex_least_optimum(gw0);
      VertexSet j = i0;
      jset_local.for_each([&](int v) { j.insert(g0map[v]); });
      CandidatePair cp = base;
      cp.x = everything;
      cp.j = j;
      cp.case_tag = "ctfree";
      emit(std::move(cp));
      if (mode == SolveMode::Guided) {
        // guide-following twin: the guide restricted to G0 is also an
        // optimum there whenever I0 came from the guide; emitting it keeps
        // the beta-budget exactly zero on this branch.
        VertexSet guide_rest = (*guide & g0set);
        Rational grw = gw.weight(guide_rest);
        if (grw == jw) {
          CandidatePair cg = base;
          cg.x = everything;
          cg.j = i0 | guide_rest;
          cg.case_tag = "ctfree_guide";
          emit(std::move(cg));
        }
      }
      continue;
    }

    // map the hole back to G' ids
    Hole hole;
    hole.cycle.reserve(hole_local->cycle.size());
    for (int v : hole_local->cycle) hole.cycle.push_back(g0map[v]);
    hole.cycle = canonical_cycle(hole.cycle);
    VertexSet hole_set = hole.vertex_set(n);
    base.hole = hole.cycle;

    auto emit_hole_fallback = [&](const char* tag) {
      // Deleting N[V(H)] inside G0 leaves only components non-adjacent to
      // H, so each is certified by H itself.
      CandidatePair cp = base;
      cp.x = x0 | (closed_neighborhood(g, hole_set) & (g0set | hole_set));
      cp.j = i0;
      cp.case_tag = tag;
      emit(std::move(cp));
    };

    if (hole.length() <= 2 * p.t + 8) {
      emit_hole_fallback("short_hole");
      continue;
    }

    // --- the long case ---
    auto af = attach_filter(g, g0set, hole, p.t);
    auto layers_full = detail::layers_within(g, af.g1, hole_set);
    int h = int(layers_full.size()) - 1;

    std::vector<int> hprimes;
    if (h <= p.hprime_range) {
      hprimes.push_back(h + 1);
    } else {
      for (long long hp = 1; hp <= p.hprime_range; ++hp) hprimes.push_back(int(hp));
    }

    bool emitted_strata = false;
    for (int hprime : hprimes) {
      VertexSet x2 = hprime <= h ? layers_full[hprime] : VertexSet(n);
      std::vector<VertexSet> g2_layers(layers_full.begin(),
                                       layers_full.begin() + std::min(hprime, h + 1));
      VertexSet g2set(n);
      for (const auto& l : g2_layers) g2set |= l;
      auto [g2, g2map] = g.induced(g2set);
      (void)g2;

      ConeTable ct = compute_cones(g, g2_layers, hole.cycle);
      int n2 = g2set.size();
      VertexSet all_d = ct.all_d_union();
      if (6 * all_d.size() < n2) {
        // Degenerate cone coverage: the interval argument has no footing,
        // so take the always-sound N[V(H)] deletion instead.
        continue;
      }
      auto window = interval_search(ct, n2);
      if (!window) continue;
      auto [a1, a2] = *window;
      int L = hole.length();

      if (a2 - a1 <= p.d) {
        auto f3 = detail::build_strata_family(ct, a1 - p.d, p.hprime_range, p.b);
        auto f4 = detail::build_strata_family(ct, a2 + 1, p.hprime_range, p.b);
        if (!f3 || !f4) continue;  // wrap-around degeneracy
        VertexSet x5(n);
        for (int jx = a1; jx <= a2; ++jx) {
          int u = hole.cycle[((jx % L) + L) % L];
          x5 |= (g.neighbors(u) & g2set);
        }
        for (const auto& [a3, x3] : f3->members) {
          for (const auto& [a4, x4] : f4->members) {
            if (x3.intersects(x4)) continue;
            CandidatePair cp = base;
            cp.hprime = hprime;
            cp.case_tag = "strata_small";
            cp.a = a3;
            cp.a_prime = a4;
            cp.spacing_widened = f3->widened || f4->widened;
            cp.x = x0 | af.x1 | x2 | x3 | x4 | x5;
            cp.j = i0;
            emit(std::move(cp));
            emitted_strata = true;
          }
        }
      } else {
        for (long long a = a1 - p.d; a <= a1 - 2 * p.b; a += 2 * p.b) {
          for (long long ap = a2 + 2 * p.b; ap <= a2 + p.d; ap += 2 * p.b) {
            VertexSet x3 = stratum(ct, a, p.b);
            VertexSet x4 = stratum(ct, ap, p.b);
            if (x3.intersects(x4)) continue;
            // two-strata disconnection holds whenever both cyclic gaps
            // clear 2b; assert it whenever this case fires cleanly
            long long fwd = (((ap - a) % L) + L) % L;
            long long bwd = L - fwd;
            if (fwd > 2 * p.b && bwd > 2 * p.b) {
              int ua = hole.cycle[size_t((((a + p.b) % L) + L) % L)];
              int ub = hole.cycle[size_t((((ap + p.b) % L) + L) % L)];
              VertexSet rem = g2set - x3 - x4;
              bool split = true;
              if (rem.contains(ua) && rem.contains(ub)) {
                for (const auto& comp : components(g, rem))
                  if (comp.contains(ua) && comp.contains(ub)) split = false;
              }
              if (!split)
                throw invariant_violation(
                    "build_level: two disjoint strata failed to disconnect G2");
            }
            CandidatePair cp = base;
            cp.hprime = hprime;
            cp.case_tag = "strata_large";
            cp.a = a;
            cp.a_prime = ap;
            cp.x = x0 | af.x1 | x2 | x3 | x4;
            cp.j = i0;
            emit(std::move(cp));
            emitted_strata = true;
          }
        }
      }
    }
    if (!emitted_strata) emit_hole_fallback("hole_fallback");
  }

  // --- validation of every emitted pair ---
  for (auto& cp : out) {
    if (!is_independent(g, cp.j))
      throw invariant_violation("build_level: emitted J is not independent");
    if (!closed_neighborhood(g, cp.j).is_subset_of(cp.x))
      throw invariant_violation("build_level: N[J] escapes X");
    auto comps = components(g, everything - cp.x);
    cp.n_components = int(comps.size());
    for (const auto& dset : comps) {
      if (6 * dset.size() <= 5 * n) continue;
      auto [rest, rmap] = g.induced(everything - closed_neighborhood(g, dset));
      (void)rmap;
      if (!shortest_long_hole(rest, p.t))
        throw invariant_violation(
            "build_level: component is large and has no non-adjacent witness hole "
            "(case " + cp.case_tag + ")");
    }
  }

  if (mode == SolveMode::Guided) {
    Rational gweight = gw.weight(*guide);
    bool ok = false;
    for (const auto& cp : out)
      if (gw.weight((cp.x - cp.j) & *guide) <= p.beta * gweight) {
        ok = true;
        break;
      }
    if (!ok)
      throw invariant_violation("build_level: no emitted candidate meets the beta-budget");
  }

  return out;
}

}  // namespace sct
