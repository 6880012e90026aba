#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <span>
#include <vector>

namespace cliquealpha {

/// Fixed-universe bitset over vertices 0..universe-1. Used both for
/// adjacency rows and for vertex subsets, so intersection of a row with a
/// subset is a word-parallel AND.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.set(v);
    return s;
  }

  int universe() const { return universe_; }

  bool test(int v) const {
    return (words_[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1u;
  }
  void set(int v) { words_[static_cast<size_t>(v) >> 6] |= 1ull << (v & 63); }
  void reset(int v) { words_[static_cast<size_t>(v) >> 6] &= ~(1ull << (v & 63)); }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (std::uint64_t w : words_) if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  VertexSet& operator&=(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// this \ o
  VertexSet& operator-=(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// popcount(this & o) without materializing the intersection
  int and_count(const VertexSet& o) const {
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & o.words_[i]);
    return c;
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

  /// First set vertex, or -1 if empty.
  int first() const { return next(-1); }

  /// First set vertex strictly after v, or -1.
  int next(int v) const {
    int start = v + 1;
    if (start >= universe_) return -1;
    size_t wi = static_cast<size_t>(start) >> 6;
    std::uint64_t w = words_[wi] & (~0ull << (start & 63));
    while (true) {
      if (w) return static_cast<int>((wi << 6) + std::countr_zero(w));
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        f(static_cast<int>((wi << 6) + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  bool operator==(const VertexSet& o) const {
    return universe_ == o.universe_ && words_ == o.words_;
  }

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace cliquealpha
