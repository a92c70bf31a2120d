#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sct/graph.hpp"
#include "sct/hole.hpp"

namespace sct {

/// Counter-based splittable generator (splitmix64). Instances in a suite
/// draw from streams keyed by (seed, index), so entries are order-free.
class Rng {
 public:
  explicit Rng(uint64_t seed, uint64_t stream = 0)
      : state_(seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1))) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, m), m >= 1, by rejection
  uint64_t below(uint64_t m) {
    uint64_t lim = UINT64_MAX - UINT64_MAX % m;
    uint64_t r;
    do {
      r = next();
    } while (r >= lim);
    return r % m;
  }

  // exact Bernoulli(p) for rational p in [0,1]
  bool bernoulli(const Rational& p) {
    BigInt lhs = BigInt(next());
    return lhs * denominator(p) < numerator(p) * (BigInt(1) << 64);
  }

 private:
  uint64_t state_;
};

struct InstanceSpec {
  std::string kind = "gnp";  // gnp | planted_sct | chordal | cycle | union
  int n = 0;
  Rational p = Rational(1, 2);  // gnp edge probability
  int s = 1;
  int t = 4;
  int noise = 0;                   // planted_sct: attempted extra edges
  std::string weights = "unit";    // unit | uniform
  long long wmax = 10;             // uniform weight range [1, wmax]
  uint64_t seed = 0;
  uint64_t index = 0;  // suite entry index, part of the stream key
};

namespace detail {

inline Graph gen_gnp(int n, const Rational& p, Rng& rng) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  return g;
}

inline Graph gen_cycle(int n) {
  if (n < 3) throw input_error("cycle: need n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

// s disjoint pairwise non-adjacent cycles of length t on the first s*t
// vertices; noise edges never fall inside or between planted cycles, so
// the cycles stay holes and stay pairwise non-adjacent.
inline Graph gen_planted_sct(int n, int s, int t, int noise, Rng& rng) {
  if (s < 1 || t < 3) throw input_error("planted_sct: bad pattern");
  if (n < s * t)
    throw input_error("planted_sct: n=" + std::to_string(n) + " below s*t=" +
                      std::to_string(s * t));
  Graph g(n);
  std::vector<int> cyc_of(n, -1);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < t; ++j) {
      int u = i * t + j;
      cyc_of[u] = i;
      g.add_edge(u, i * t + (j + 1) % t);
    }
  for (int k = 0; k < noise; ++k) {
    int u = int(rng.below(uint64_t(n)));
    int v = int(rng.below(uint64_t(n)));
    if (u == v) continue;
    if (cyc_of[u] >= 0 && cyc_of[v] >= 0) continue;  // rejection
    g.add_edge(u, v);
  }
  return g;
}

// Random interval graph: chordal, hence free of any hole.
inline Graph gen_chordal(int n, Rng& rng) {
  std::vector<std::pair<uint64_t, uint64_t>> iv(static_cast<size_t>(n));
  uint64_t span = uint64_t(4) * uint64_t(std::max(n, 1));
  for (auto& [a, b] : iv) {
    a = rng.below(span);
    b = rng.below(span);
    if (a > b) std::swap(a, b);
  }
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (iv[u].first <= iv[v].second && iv[v].first <= iv[u].second) g.add_edge(u, v);
  return g;
}

// Disjoint union: a cycle on the first half (when it fits) and G(n,p) noise
// on the rest. Exercises component handling in one instance.
inline Graph gen_union(int n, const Rational& p, Rng& rng) {
  int c = n / 2;
  Graph g(n);
  if (c >= 3)
    for (int i = 0; i < c; ++i) g.add_edge(i, (i + 1) % c);
  for (int u = c; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  return g;
}

}  // namespace detail

inline WeightedGraph generate(const InstanceSpec& spec) {
  if (spec.n < 0) throw input_error("generate: negative n");
  Rng rng(spec.seed, spec.index);
  Graph g;
  if (spec.kind == "gnp") {
    if (spec.p < 0 || spec.p > 1) throw input_error("generate: p must be in [0,1]");
    g = detail::gen_gnp(spec.n, spec.p, rng);
  } else if (spec.kind == "planted_sct") {
    g = detail::gen_planted_sct(spec.n, spec.s, spec.t, spec.noise, rng);
  } else if (spec.kind == "chordal") {
    g = detail::gen_chordal(spec.n, rng);
  } else if (spec.kind == "cycle") {
    g = detail::gen_cycle(spec.n);
  } else if (spec.kind == "union") {
    g = detail::gen_union(spec.n, spec.p, rng);
  } else {
    throw input_error("generate: unknown kind '" + spec.kind + "'");
  }
  std::vector<Rational> w(size_t(spec.n), Rational(1));
  if (spec.weights == "uniform") {
    if (spec.wmax < 1) throw input_error("generate: wmax must be >= 1");
    for (auto& x : w) x = Rational(1 + (long long)(rng.below(uint64_t(spec.wmax))));
  } else if (spec.weights != "unit") {
    throw input_error("generate: unknown weight scheme '" + spec.weights + "'");
  }
  return WeightedGraph(std::move(g), std::move(w));
}

/// A long induced cycle with tree-like decorations in the first two BFS
/// layers: layer-1 vertices attach to one or two consecutive cycle
/// vertices, layer-2 vertices hang off a single layer-1 vertex. Any extra
/// cycle so created is a triangle, so the planted cycle stays the unique
/// shortest hole of length >= 5.
inline Graph planted_long_cycle(int cycle_len, int extra, uint64_t seed) {
  if (cycle_len < 5) throw input_error("planted_long_cycle: cycle_len must be >= 5");
  Rng rng(seed, 0);
  int n = cycle_len + extra;
  Graph g(n);
  for (int i = 0; i < cycle_len; ++i) g.add_edge(i, (i + 1) % cycle_len);
  std::vector<int> layer1;
  for (int v = cycle_len; v < n; ++v) {
    bool to_cycle = layer1.empty() || rng.below(3) != 0;
    if (to_cycle) {
      int a = int(rng.below(uint64_t(cycle_len)));
      g.add_edge(v, a);
      if (rng.below(2) == 0) g.add_edge(v, (a + 1) % cycle_len);
      layer1.push_back(v);
    } else {
      g.add_edge(v, layer1[rng.below(layer1.size())]);
    }
  }
  return g;
}

}  // namespace sct
