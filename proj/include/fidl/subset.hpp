#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace fidl {

/// A subset of a finite universe {0, ..., n-1}, stored as a dense bitmask.
///
/// Subsets of the same universe compare as unsigned integers whose bit k is
/// element k (element 0 is the least significant bit). This is the canonical
/// enumeration order for filters, prime filters, upsets and closed pairs.
class Subset {
public:
  Subset() = default;
  explicit Subset(std::size_t universe)
      : n_{universe}, words_((universe + 63) / 64, 0) {}

  Subset(std::size_t universe, std::initializer_list<std::size_t> members)
      : Subset(universe) {
    for (auto m : members) insert(m);
  }

  Subset(std::size_t universe, std::span<const std::size_t> members)
      : Subset(universe) {
    for (auto m : members) insert(m);
  }

  static Subset full(std::size_t universe) {
    Subset s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  /// Low 64 bits as an integer; only meaningful for universes of size <= 64.
  static Subset from_mask(std::size_t universe, std::uint64_t mask) {
    if (universe > 64) throw std::invalid_argument("Subset::from_mask: universe exceeds 64");
    Subset s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    s.trim();
    return s;
  }

  std::uint64_t mask() const { return words_.empty() ? 0 : words_[0]; }

  std::size_t universe() const { return n_; }

  bool contains(std::size_t i) const {
    return i < n_ && ((words_[i / 64] >> (i % 64)) & 1U) != 0;
  }

  void insert(std::size_t i) {
    check(i);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }

  void erase(std::size_t i) {
    check(i);
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_full() const { return count() == n_; }

  bool is_subset_of(const Subset& other) const {
    same_universe(other);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & ~other.words_[k]) != 0) return false;
    return true;
  }

  bool intersects(const Subset& other) const {
    same_universe(other);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & other.words_[k]) != 0) return true;
    return false;
  }

  Subset& operator|=(const Subset& other) {
    same_universe(other);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }

  Subset& operator&=(const Subset& other) {
    same_universe(other);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }

  Subset& operator-=(const Subset& other) {
    same_universe(other);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
    return *this;
  }

  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  Subset complement() const {
    Subset c(n_);
    for (std::size_t k = 0; k < words_.size(); ++k) c.words_[k] = ~words_[k];
    c.trim();
    return c;
  }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  /// Smallest member, or universe() when empty.
  std::size_t first() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return n_;
  }

  template <class F>
  void for_each(F&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w != 0) {
        fn(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    for (std::size_t k = a.words_.size(); k-- > 0;)
      if (a.words_[k] != b.words_[k]) return a.words_[k] <=> b.words_[k];
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<std::size_t>{}(n_);
    for (auto w : words_) h = h * 1099511628211ULL ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

private:
  void check(std::size_t i) const {
    if (i >= n_) throw std::out_of_range("Subset: element index out of range");
  }
  void same_universe(const Subset& other) const {
    if (other.n_ != n_) throw std::invalid_argument("Subset: universe mismatch");
  }
  void trim() {
    if (n_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }

  std::size_t n_{0};
  std::vector<std::uint64_t> words_;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const { return s.hash(); }
};

}  // namespace fidl
