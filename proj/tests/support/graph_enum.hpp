#pragma once

// Enumeration of all graphs up to isomorphism for small n, by extending
// (n-1)-vertex graphs with every neighborhood of a new vertex and deduping
// on a canonical labeling (lexicographically least adjacency encoding,
// found by pruned backtracking over vertex orderings).

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "sct/graph.hpp"

namespace sct::testsupport {

// Adjacency rows as bitmasks, n <= 8.
using Rows = std::vector<uint8_t>;

inline uint64_t encode(const Rows& rows) {
  // upper triangle, row major
  uint64_t code = 0;
  int n = int(rows.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) code = (code << 1) | ((rows[i] >> j) & 1);
  return code;
}

namespace detail {

inline void canon_rec(const Rows& rows, std::vector<int>& perm, std::vector<bool>& used,
                      uint64_t prefix, int bits_done, uint64_t& best, bool& have_best) {
  int n = int(rows.size());
  int k = int(perm.size());
  if (k == n) {
    if (!have_best || prefix < best) {
      best = prefix;
      have_best = true;
    }
    return;
  }
  int total_bits = n * (n - 1) / 2;
  for (int v = 0; v < n; ++v) {
    if (used[v]) continue;
    // bits contributed by placing v at position k: adjacency to perm[0..k-1]
    uint64_t p = prefix;
    for (int i = 0; i < k; ++i) p = (p << 1) | ((rows[v] >> perm[i]) & 1);
    int done = bits_done + k;
    // prune: compare against best on the shared prefix
    if (have_best) {
      uint64_t best_prefix = best >> (total_bits - done);
      if (p > best_prefix) continue;
    }
    perm.push_back(v);
    used[v] = true;
    canon_rec(rows, perm, used, p, done, best, have_best);
    perm.pop_back();
    used[v] = false;
  }
}

}  // namespace detail

// Lexicographically least encoding over all labelings. Encoding order is
// column-wise lower triangle (vertex k's adjacency to the earlier ones),
// which makes prefix pruning exact.
inline uint64_t canonical_code(const Rows& rows) {
  std::vector<int> perm;
  std::vector<bool> used(rows.size(), false);
  uint64_t best = 0;
  bool have_best = false;
  detail::canon_rec(rows, perm, used, 0, 0, best, have_best);
  return best;
}

inline Graph decode(uint64_t code, int n) {
  Graph g(n);
  // inverse of the canonical encoding: bits in order (k, i<k) for k=1..n-1
  int total = n * (n - 1) / 2;
  int bit = total;
  for (int k = 1; k < n; ++k)
    for (int i = 0; i < k; ++i) {
      --bit;
      if ((code >> bit) & 1) g.add_edge(i, k);
    }
  return g;
}

/// Every graph on exactly n vertices, one per isomorphism class.
inline std::vector<Graph> all_graphs(int n) {
  std::vector<std::set<uint64_t>> codes(size_t(n) + 1);
  codes[1].insert(0);
  for (int k = 2; k <= n; ++k) {
    for (uint64_t parent : codes[k - 1]) {
      Graph pg = decode(parent, k - 1);
      for (uint32_t nb = 0; nb < (1u << (k - 1)); ++nb) {
        Rows rows(size_t(k), 0);
        for (int i = 0; i < k - 1; ++i)
          pg.neighbors(i).for_each([&](int j) { rows[i] |= uint8_t(1u << j); });
        for (int i = 0; i < k - 1; ++i)
          if ((nb >> i) & 1) {
            rows[i] |= uint8_t(1u << (k - 1));
            rows[k - 1] |= uint8_t(1u << i);
          }
        codes[k].insert(canonical_code(rows));
      }
    }
  }
  std::vector<Graph> out;
  for (uint64_t c : codes[n]) out.push_back(decode(c, n));
  return out;
}

/// Every graph with 1..n vertices, one per isomorphism class.
inline std::vector<Graph> all_graphs_up_to(int n) {
  std::vector<Graph> out;
  for (int k = 1; k <= n; ++k) {
    auto gs = all_graphs(k);
    out.insert(out.end(), gs.begin(), gs.end());
  }
  return out;
}

inline std::vector<Graph> all_connected_graphs(int n) {
  std::vector<Graph> out;
  for (auto& g : all_graphs(n))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace sct::testsupport
