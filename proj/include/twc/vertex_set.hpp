#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace twc {

// Subset of {0, .., n-1} over 64-bit words. The universal currency of the
// library: separators, PMCs, containers, components and solutions are all
// VertexSets. Word-parallel union/intersection/difference; iteration is
// ascending by vertex id, which is what every canonical order derives from.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}
  VertexSet(int n, std::initializer_list<int> vs) : VertexSet(n) {
    for (int v : vs) set(v);
  }

  static VertexSet all(int n) {
    VertexSet s(n);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  int universe() const { return n_; }

  bool test(int v) const {
    assert(v >= 0 && v < n_);
    return (words_[v >> 6] >> (v & 63)) & 1;
  }
  void set(int v) {
    assert(v >= 0 && v < n_);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void reset(int v) {
    assert(v >= 0 && v < n_);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  // Smallest element, or -1 when empty.
  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return int(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }
  // Smallest element greater than v, or -1.
  int next(int v) const {
    ++v;
    if (v >= n_) return -1;
    std::size_t i = std::size_t(v) >> 6;
    std::uint64_t w = words_[i] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (w) return int(i * 64 + std::countr_zero(w));
      if (++i == words_.size()) return -1;
      w = words_[i];
    }
  }

  bool operator==(const VertexSet& o) const = default;

  // this ⊇ other
  bool contains_all(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (o.words_[i] & ~words_[i]) return false;
    return true;
  }
  bool contains(int v) const { return test(v); }
  bool intersects(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  // In-place a := b & c and a := b | c without reallocating; hot-loop helpers.
  void assign_and(const VertexSet& b, const VertexSet& c) {
    assert(b.n_ == c.n_);
    resize_like(b);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = b.words_[i] & c.words_[i];
  }
  void assign_or(const VertexSet& b, const VertexSet& c) {
    assert(b.n_ == c.n_);
    resize_like(b);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = b.words_[i] | c.words_[i];
  }

  struct iterator {
    const VertexSet* s;
    int v;
    int operator*() const { return v; }
    iterator& operator++() {
      v = s->next(v);
      return *this;
    }
    bool operator!=(const iterator& o) const { return v != o.v; }
  };
  iterator begin() const { return {this, first()}; }
  iterator end() const { return {this, -1}; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v : *this) out.push_back(v);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool sep = false;
    for (int v : *this) {
      if (sep) s += ' ';
      s += std::to_string(v);
      sep = true;
    }
    s += '}';
    return s;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull ^ std::uint64_t(n_);
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return std::size_t(h);
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void trim() {
    if (n_ & 63) words_.back() &= (~std::uint64_t{0}) >> (64 - (n_ & 63));
    if (n_ == 0) words_.clear();
  }
  void resize_like(const VertexSet& o) {
    n_ = o.n_;
    words_.resize(o.words_.size());
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

inline VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
inline VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
inline VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

// Characteristic-vector order: at the first vertex id where the sets differ,
// the set NOT containing it comes first. Ties in the solver's canonical
// order ≺ are broken by this comparison.
inline bool lex_less(const VertexSet& a, const VertexSet& b) {
  assert(a.universe() == b.universe());
  const auto& wa = a.words();
  const auto& wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) {
    std::uint64_t diff = wa[i] ^ wb[i];
    if (diff) {
      int bit = std::countr_zero(diff);
      return ((wa[i] >> bit) & 1) == 0;
    }
  }
  return false;
}

// Family-listing order: compare sets as ascending id sequences (so disjoint
// sets sort by smallest element, and a set precedes its proper supersets
// sharing a prefix). Used to canonicalize enumerator output.
inline bool canonical_less(const VertexSet& a, const VertexSet& b) {
  int x = a.first(), y = b.first();
  while (x != -1 && y != -1) {
    if (x != y) return x < y;
    x = a.next(x);
    y = b.next(y);
  }
  return x == -1 && y != -1;
}

}  // namespace twc

template <>
struct std::hash<twc::VertexSet> {
  std::size_t operator()(const twc::VertexSet& s) const { return s.hash(); }
};
