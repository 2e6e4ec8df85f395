#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace bindex {

// Subset of {0, ..., n-1} stored as a dynamic bitset. Every set remembers the
// size of its universe; binary operations require matching universes.
class VertexSet {
public:
  VertexSet() = default;

  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  VertexSet(std::size_t universe, std::initializer_list<std::size_t> members)
      : VertexSet(universe) {
    for (auto v : members)
      set(v);
  }

  static VertexSet from_list(std::size_t universe, const std::vector<std::size_t>& members) {
    VertexSet s(universe);
    for (auto v : members)
      s.set(v);
    return s;
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_)
      w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  // Low bits of mask become members 0..63.
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask) {
    VertexSet s(universe);
    if (!s.words_.empty())
      s.words_[0] = mask;
    s.trim();
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool test(std::size_t v) const noexcept {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u) != 0;
  }

  void set(std::size_t v) {
    check_member(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void reset(std::size_t v) {
    check_member(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  bool is_full() const noexcept { return count() == universe_; }

  // Least member, or nullopt for the empty set.
  std::optional<std::size_t> first() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0)
        return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return std::nullopt;
  }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t v) { out.push_back(v); });
    return out;
  }

  template <class F>
  void for_each(F&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        fn(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::optional<std::uint64_t> to_mask() const noexcept {
    if (universe_ > 64)
      return std::nullopt;
    return words_.empty() ? 0 : words_[0];
  }

  VertexSet complement() const {
    VertexSet out(*this);
    for (auto& w : out.words_)
      w = ~w;
    out.trim();
    return out;
  }

  bool intersects(const VertexSet& other) const {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & other.words_[i]) != 0)
        return true;
    return false;
  }

  bool is_subset_of(const VertexSet& other) const {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0)
        return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] |= o.words_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= o.words_[i];
    return *this;
  }

  // Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  // Lexicographic order on the ascending member lists; a proper prefix sorts first.
  friend bool lex_less(const VertexSet& a, const VertexSet& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      const std::uint64_t diff = a.words_[i] ^ b.words_[i];
      if (diff == 0)
        continue;
      const std::uint64_t low = diff & (~diff + 1);
      const bool in_a = (a.words_[i] & low) != 0;
      // The set holding the lowest differing vertex is smaller unless the
      // other set is exhausted at that point (then it is a proper prefix).
      const VertexSet& other = in_a ? b : a;
      const bool other_has_more = other.has_member_at_or_after(i, low);
      return in_a ? other_has_more : !other_has_more;
    }
    return false;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first_item = true;
    for_each([&](std::size_t v) {
      if (!first_item)
        s += ",";
      s += std::to_string(v);
      first_item = false;
    });
    return s + "}";
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

private:
  bool has_member_at_or_after(std::size_t word, std::uint64_t low_bit) const {
    if ((words_[word] & ~(low_bit - 1)) != 0)
      return true;
    for (std::size_t i = word + 1; i < words_.size(); ++i)
      if (words_[i] != 0)
        return true;
    return false;
  }

  void check_member(std::size_t v) const {
    if (v >= universe_)
      throw domain_error("vertex " + std::to_string(v) + " outside universe of size " +
                         std::to_string(universe_));
  }

  void check_same(const VertexSet& o) const {
    if (o.universe_ != universe_)
      throw domain_error("vertex sets over different universes");
  }

  void trim() {
    if (universe_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

} // namespace bindex
