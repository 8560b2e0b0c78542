#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

namespace kpfree {

using Vertex = int;

/// A subset of {0, ..., universe-1} stored as a dense bitset.
///
/// Binary operations require both operands to share the same universe.
/// Iteration visits members in increasing order.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    Iterator() = default;
    Iterator(const VertexSet* set, Vertex at) : set_(set), at_(at) {}
    Vertex operator*() const { return at_; }
    Iterator& operator++() {
      at_ = set_->next(at_);
      return *this;
    }
    Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const Iterator& a, const Iterator& b) { return a.at_ == b.at_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex at_ = -1;
  };

  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_(static_cast<std::size_t>((universe + kWordBits - 1) / kWordBits), 0) {}

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v) s.insert(v);
    return s;
  }
  static VertexSet of(int universe, std::initializer_list<Vertex> members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
  }
  static VertexSet from(int universe, std::span<const Vertex> members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
  }

  int universe() const noexcept { return universe_; }

  bool contains(Vertex v) const noexcept {
    return v >= 0 && v < universe_ && ((words_[word(v)] >> bit(v)) & 1U) != 0;
  }
  void insert(Vertex v) noexcept { words_[word(v)] |= Word{1} << bit(v); }
  void erase(Vertex v) noexcept { words_[word(v)] &= ~(Word{1} << bit(v)); }
  void clear() noexcept {
    for (Word& w : words_) w = 0;
  }

  int size() const noexcept {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const noexcept {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Smallest member, or -1.
  Vertex first() const noexcept { return scan_from(0); }
  /// Smallest member strictly greater than `after`, or -1.
  Vertex next(Vertex after) const noexcept { return scan_from(after + 1); }

  Iterator begin() const { return Iterator(this, first()); }
  Iterator end() const { return Iterator(this, -1); }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Vertex v : *this) out.push_back(v);
    return out;
  }

  VertexSet& operator&=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// Complement relative to the universe.
  VertexSet complement() const {
    VertexSet c = full(universe_);
    c -= *this;
    return c;
  }

  /// Assigns a & b into *this without reallocating.
  void assign_intersection(const VertexSet& a, const VertexSet& b) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = a.words_[i] & b.words_[i];
  }

  /// Removes every member <= v.
  void clear_through(Vertex v) noexcept {
    if (v < 0) return;
    const std::size_t w = word(v);
    for (std::size_t i = 0; i < w && i < words_.size(); ++i) words_[i] = 0;
    if (w < words_.size()) {
      const int b = bit(v);
      words_[w] &= (b == kWordBits - 1) ? Word{0} : ~((Word{2} << b) - 1);
    }
  }

  bool intersects(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }
  int intersection_size(const VertexSet& o) const noexcept {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }
  bool is_subset_of(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

  /// Lexicographic order on the sorted member lists.
  bool lex_less(const VertexSet& o) const {
    Vertex a = first();
    Vertex b = o.first();
    while (a != -1 && b != -1) {
      if (a != b) return a < b;
      a = next(a);
      b = o.next(b);
    }
    return a == -1 && b != -1;
  }

  std::span<const Word> words() const noexcept { return words_; }

  /// Renders as "{0,3,5}".
  std::string to_string() const {
    std::string out = "{";
    bool first_member = true;
    for (Vertex v : *this) {
      if (!first_member) out += ',';
      out += std::to_string(v);
      first_member = false;
    }
    return out + "}";
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

 private:
  static std::size_t word(Vertex v) noexcept { return static_cast<std::size_t>(v) / kWordBits; }
  static int bit(Vertex v) noexcept { return v % kWordBits; }

  Vertex scan_from(Vertex from) const noexcept {
    if (from < 0) from = 0;
    if (from >= universe_) return -1;
    std::size_t w = word(from);
    Word cur = words_[w] & (~Word{0} << bit(from));
    while (true) {
      if (cur != 0) return static_cast<Vertex>(w * kWordBits) + std::countr_zero(cur);
      if (++w >= words_.size()) return -1;
      cur = words_[w];
    }
  }

  int universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace kpfree
