#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "sct/rational.hpp"
#include "sct/vertex_set.hpp"

namespace sct {

/// Undirected simple graph on dense vertex ids [0, n).
/// Adjacency is stored as one bitset row per vertex; symmetric, irreflexive.
class Graph {
 public:
  Graph() : n_(0) {}
  explicit Graph(int n) : n_(n), rows_(n, VertexSet(n)) {}

  int n() const { return n_; }

  int m() const {
    int deg2 = 0;
    for (const auto& r : rows_) deg2 += r.size();
    return deg2 / 2;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw input_error("self-loop on vertex " + std::to_string(u));
    rows_[u].insert(v);
    rows_[v].insert(u);
  }

  bool adjacent(int u, int v) const { return rows_[u].contains(v); }

  const VertexSet& neighbors(int v) const { return rows_[v]; }

  VertexSet closed_neighbors(int v) const {
    VertexSet s = rows_[v];
    s.insert(v);
    return s;
  }

  int degree(int v) const { return rows_[v].size(); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      rows_[u].for_each([&](int v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw input_error("vertex id " + std::to_string(v) + " out of range [0," +
                        std::to_string(n_) + ")");
  }

  void check_subset(const VertexSet& s) const {
    if (s.universe() != n_) throw input_error("vertex set universe mismatch");
  }

  /// Induced subgraph on `keep`, plus the new-id -> old-id map.
  std::pair<Graph, std::vector<int>> induced(const VertexSet& keep) const {
    check_subset(keep);
    std::vector<int> orig = keep.to_vector();
    std::vector<int> back(n_, -1);
    for (size_t i = 0; i < orig.size(); ++i) back[orig[i]] = int(i);
    Graph g(int(orig.size()));
    for (size_t i = 0; i < orig.size(); ++i)
      rows_[orig[i]].for_each([&](int w) {
        if (back[w] > int(i)) g.add_edge(int(i), back[w]);
      });
    return {std::move(g), std::move(orig)};
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

 private:
  int n_;
  std::vector<VertexSet> rows_;
};

/// Graph plus exact nonnegative rational vertex weights. Budget inequalities
/// in the solver compare weights exactly, so nothing here ever rounds.
struct WeightedGraph {
  Graph graph;
  std::vector<Rational> weights;
  std::vector<std::string> labels;  // optional external names, may be empty

  WeightedGraph() = default;
  explicit WeightedGraph(Graph g)
      : graph(std::move(g)), weights(graph.n(), Rational(1)) {}
  WeightedGraph(Graph g, std::vector<Rational> w)
      : graph(std::move(g)), weights(std::move(w)) {
    if (int(weights.size()) != graph.n())
      throw input_error("weight vector length differs from vertex count");
    for (const auto& x : weights)
      if (x < 0) throw input_error("negative vertex weight");
  }

  Rational weight(const VertexSet& s) const {
    graph.check_subset(s);
    Rational sum = 0;
    s.for_each([&](int v) { sum += weights[v]; });
    return sum;
  }

  Rational total_weight() const {
    Rational sum = 0;
    for (const auto& w : weights) sum += w;
    return sum;
  }

  std::pair<WeightedGraph, std::vector<int>> induced(const VertexSet& keep) const {
    auto [g, orig] = graph.induced(keep);
    std::vector<Rational> w;
    w.reserve(orig.size());
    for (int v : orig) w.push_back(weights[v]);
    WeightedGraph out(std::move(g), std::move(w));
    if (!labels.empty()) {
      for (int v : orig) out.labels.push_back(labels[v]);
    }
    return {std::move(out), std::move(orig)};
  }
};

inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& x) {
  g.check_subset(x);
  VertexSet out = x;
  x.for_each([&](int v) { out |= g.neighbors(v); });
  return out;
}

inline VertexSet open_neighborhood(const Graph& g, const VertexSet& x) {
  return closed_neighborhood(g, x) - x;
}

/// Partition of S into the connected components of g[S], ordered by
/// minimum contained vertex id.
inline std::vector<VertexSet> components(const Graph& g, const VertexSet& s) {
  g.check_subset(s);
  std::vector<VertexSet> out;
  VertexSet todo = s;
  for (int v = todo.first(); v >= 0; v = todo.first()) {
    VertexSet comp(g.n());
    std::vector<int> stack{v};
    comp.insert(v);
    todo.erase(v);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      VertexSet nb = g.neighbors(u) & todo;
      nb.for_each([&](int w) {
        comp.insert(w);
        todo.erase(w);
        stack.push_back(w);
      });
    }
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g, const VertexSet& s) {
  if (s.empty()) return false;
  return components(g, s).size() == 1;
}

inline bool is_connected(const Graph& g) {
  if (g.n() == 0) return false;
  return is_connected(g, VertexSet::full(g.n()));
}

/// True iff no edge joins X and Y. Inputs must be disjoint.
inline bool are_nonadjacent(const Graph& g, const VertexSet& x, const VertexSet& y) {
  g.check_subset(x);
  g.check_subset(y);
  if (x.intersects(y)) throw input_error("are_nonadjacent: sets overlap");
  for (int v = x.first(); v >= 0; v = x.next(v))
    if (g.neighbors(v).intersects(y)) return false;
  return true;
}

/// BFS layering from a seed set: L0 = seed, L_i = N(L_{i-1}) minus earlier
/// layers. On a connected host the layers partition V.
struct Layering {
  std::vector<VertexSet> layers;

  int height() const { return int(layers.size()) - 1; }

  // Layer index of v, or -1 when v is not covered.
  int layer_of(int v) const {
    for (size_t i = 0; i < layers.size(); ++i)
      if (layers[i].contains(v)) return int(i);
    return -1;
  }
};

inline Layering bfs_layering(const Graph& g, const VertexSet& seed) {
  g.check_subset(seed);
  if (seed.empty()) throw input_error("bfs_layering: empty seed");
  if (!is_connected(g)) throw input_error("bfs_layering: graph is not connected");
  Layering lay;
  lay.layers.push_back(seed);
  VertexSet seen = seed;
  while (true) {
    VertexSet nxt = open_neighborhood(g, lay.layers.back()) - seen;
    if (nxt.empty()) break;
    seen |= nxt;
    lay.layers.push_back(std::move(nxt));
  }
  return lay;
}

}  // namespace sct
