#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fidl/error.hpp"
#include "fidl/subset.hpp"

namespace fidl {

/// Dense index of an element of a finite poset or lattice.
using Element = std::uint32_t;

/// Finite partial order. `up(x)` is the principal upset {y : x <= y}.
class Poset {
public:
  Poset() = default;

  /// Validates reflexivity, antisymmetry, transitivity and label uniqueness.
  /// Throws Error(NotAPoset) naming the first violated law.
  static Poset from_table(std::vector<std::string> labels,
                          const std::vector<std::vector<bool>>& leq);

  /// Trusted constructor for orders built by this library.
  static Poset from_upsets(std::vector<std::string> labels, std::vector<Subset> up);

  static Poset antichain(std::size_t n);
  static Poset chain(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(Element x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Element> find(const std::string& label) const;

  bool leq(Element x, Element y) const { return up_[x].contains(y); }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  const Subset& up(Element x) const { return up_[x]; }
  const Subset& down(Element x) const { return down_[x]; }

  bool is_increasing(const Subset& s) const;
  bool is_decreasing(const Subset& s) const;
  Subset up_closure(const Subset& s) const;
  Subset down_closure(const Subset& s) const;

  /// Maximal (resp. minimal) elements of `s` in the induced order.
  Subset maximal_in(const Subset& s) const;
  Subset minimal_in(const Subset& s) const;

  /// Covering pairs (x, y) with x < y and nothing strictly between.
  std::vector<std::pair<Element, Element>> covers() const;

  /// Indices sorted so that x < y implies x precedes y.
  std::vector<Element> linear_extension() const;

  std::vector<std::vector<bool>> table() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.up_ == b.up_;
  }

private:
  std::vector<std::string> labels_;
  std::vector<Subset> up_;
  std::vector<Subset> down_;
};

/// Bounded distributive lattice with precomputed meet/join tables.
class FiniteLattice {
public:
  FiniteLattice() = default;

  /// Derives meet, join and bounds from the order and checks distributivity.
  /// Throws NotAPoset, NoMeetOrJoin or NotDistributive with a witness.
  static FiniteLattice validate(std::vector<std::string> labels,
                                const std::vector<std::vector<bool>>& leq);
  static FiniteLattice from_poset(Poset order);

  /// Trusted constructor for lattices built by this library (products,
  /// upset lattices). Shapes are checked, laws are not.
  static FiniteLattice from_tables(Poset order, std::vector<Element> meet,
                                   std::vector<Element> join, Element bottom, Element top);

  std::size_t size() const { return order_.size(); }
  const Poset& order() const { return order_; }
  const std::string& label(Element x) const { return order_.label(x); }

  bool leq(Element x, Element y) const { return order_.leq(x, y); }
  Element meet(Element x, Element y) const { return meet_[x * size() + y]; }
  Element join(Element x, Element y) const { return join_[x * size() + y]; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }
  bool is_trivial() const { return size() == 1; }

  Element meet_all(const Subset& s) const;
  Element join_all(const Subset& s) const;

  bool is_join_irreducible(Element x) const;
  bool is_meet_irreducible(Element x) const;
  std::vector<Element> join_irreducibles() const;
  std::vector<Element> meet_irreducibles() const;

  /// Relative pseudocomplement max{c : a /\ c <= b}.
  Element heyting_arrow(Element a, Element b) const;

  /// First distributivity failure (x, y, z), if any.
  std::optional<std::array<Element, 3>> distributivity_witness() const;

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.order_ == b.order_;
  }

private:
  Poset order_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  Element bottom_{0};
  Element top_{0};
};

bool is_filter(const FiniteLattice& l, const Subset& s);
bool is_ideal(const FiniteLattice& l, const Subset& s);
bool is_prime_filter(const FiniteLattice& l, const Subset& s);

/// Least filter containing `generators`; {top} for the empty set.
Subset fig(const FiniteLattice& l, const Subset& generators);
/// Least ideal containing `generators`; {bottom} for the empty set.
Subset idg(const FiniteLattice& l, const Subset& generators);

/// All filters in canonical (ascending bitmask) order.
std::vector<Subset> enumerate_filters(const FiniteLattice& l);

/// Prime filters of a lattice ordered by inclusion. `points` are listed in
/// canonical order; `order` is the inclusion order over them.
struct Spectrum {
  std::vector<Subset> points;
  Poset order;

  std::size_t size() const { return points.size(); }
  std::optional<Element> index_of(const Subset& carrier) const;
};

/// Primes selected from enumerate_filters by the primality predicate.
Spectrum spectrum(const FiniteLattice& l);
/// Primes as principal filters of join-irreducibles. Same result as
/// spectrum(); kept separate so the two routes can be compared.
Spectrum spectrum_via_join_irreducibles(const FiniteLattice& l);

/// Set of primes containing `a`.
Subset beta(const FiniteLattice& l, const Spectrum& s, Element a);

/// The lattice of all increasing subsets of a poset under union and
/// intersection. Element k of `lattice` is `sets[k]`.
struct IncreasingSetLattice {
  Poset base;
  std::vector<Subset> sets;
  FiniteLattice lattice;

  std::optional<Element> index_of(const Subset& upset) const;

private:
  friend IncreasingSetLattice increasing_sets(const Poset& p, std::size_t limit);
  std::unordered_map<Subset, Element, SubsetHash> index_;
};

/// All upsets of `p` in canonical order. Throws BudgetExceeded beyond `limit`.
IncreasingSetLattice increasing_sets(const Poset& p, std::size_t limit);
IncreasingSetLattice increasing_sets(const Poset& p);

/// Cartesian product of lattices with componentwise order. Element indices
/// are mixed-radix numbers with the first factor least significant.
struct ProductLattice {
  FiniteLattice lattice;
  std::vector<std::size_t> radix;

  std::vector<Element> decode(Element e) const;
  Element encode(std::span<const Element> components) const;
  Element component(Element e, std::size_t k) const;
};

/// Throws BudgetExceeded when the product exceeds `limit` elements.
ProductLattice product_lattice(const std::vector<const FiniteLattice*>& factors, std::size_t limit);

/// Equivalence relation over lattice elements, stored as canonical block ids
/// (blocks numbered by first occurrence).
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<Element> block_of);

  static Partition identity(std::size_t n);
  static Partition total(std::size_t n);

  std::size_t size() const { return block_.size(); }
  std::size_t block_count() const { return blocks_; }
  Element block(Element x) const { return block_[x]; }
  bool related(Element x, Element y) const { return block_[x] == block_[y]; }
  bool is_identity() const { return blocks_ == block_.size(); }
  bool is_total() const { return blocks_ <= 1; }
  const std::vector<Element>& blocks() const { return block_; }
  std::vector<std::vector<Element>> block_lists() const;

  /// Inclusion of relations: every pair related here is related in `other`.
  bool refines(const Partition& other) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.block_ == b.block_; }
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.block_ <=> b.block_; }

private:
  std::vector<Element> block_;
  std::size_t blocks_{0};
};

bool is_lattice_congruence(const FiniteLattice& l, const Partition& p);

/// theta(Y) = {(a, b) : beta(a) /\ Y = beta(b) /\ Y} for Y a set of primes.
Partition theta_from_closed(const FiniteLattice& l, const Spectrum& s, const Subset& y);

/// Every partition of {0..n-1}, as canonical block vectors.
std::vector<Partition> enumerate_partitions(std::size_t n);

/// Checks totality and preservation of 0, 1, meets and joins. Returns a witness
/// for the first failure, or nothing for a homomorphism.
std::optional<nlohmann::json> lattice_hom_failure(const FiniteLattice& src, const FiniteLattice& tgt,
                                               std::span<const Element> map);

}  // namespace fidl
