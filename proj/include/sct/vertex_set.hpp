#pragma once

#include <cstdint>
#include <vector>

namespace sct {

/// Fixed-universe bitset over vertex ids [0, n). All per-graph set algebra
/// runs through this type so membership and intersection stay O(n/64).
class VertexSet {
 public:
  VertexSet() : n_(0) {}
  explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

  static VertexSet full(int n) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v) s.insert(v);
    return s;
  }

  static VertexSet of(int n, std::initializer_list<int> vs) {
    VertexSet s(n);
    for (int v : vs) s.insert(v);
    return s;
  }

  int universe() const { return n_; }

  bool contains(int v) const {
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }
  void insert(int v) { words_[v >> 6] |= uint64_t(1) << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(uint64_t(1) << (v & 63)); }

  bool empty() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  int size() const {
    int c = 0;
    for (uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& o) const { return words_ == o.words_; }
  bool operator!=(const VertexSet& o) const { return words_ != o.words_; }

  // Lexicographic order on the sorted member sequence. Used for
  // deterministic tie-breaks throughout.
  bool lex_less(const VertexSet& o) const {
    int a = first(), b = o.first();
    while (a >= 0 && b >= 0) {
      if (a != b) return a < b;
      a = next(a);
      b = o.next(b);
    }
    // A proper prefix compares less.
    return a < 0 && b >= 0;
  }

  bool intersects(const VertexSet& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const VertexSet& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  int first() const { return scan(0); }
  // Next member strictly after v, or -1.
  int next(int v) const { return scan(v + 1); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int v = first(); v >= 0; v = next(v)) f(v);
  }

 private:
  int scan(int from) const {
    if (from >= n_) return -1;
    size_t wi = from >> 6;
    uint64_t w = words_[wi] & (~uint64_t(0) << (from & 63));
    while (true) {
      if (w) return int((wi << 6) + __builtin_ctzll(w));
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }

  int n_;
  std::vector<uint64_t> words_;
};

}  // namespace sct
