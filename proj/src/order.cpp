#include "fidl/order.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fidl {

namespace {

Error poset_error(std::string law, nlohmann::json witness) {
  return Error(ErrorCode::not_a_poset, "order is not a partial order: " + law,
               {{"law", law}, {"witness", std::move(witness)}});
}

}  // namespace

// ---------------------------------------------------------------- Poset

Poset Poset::from_table(std::vector<std::string> labels, const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorCode::malformed, "order has no elements");
  if (leq.size() != n)
    throw Error(ErrorCode::shape_mismatch, "leq table has wrong row count",
                {{"expected", n}, {"actual", leq.size()}});
  for (std::size_t r = 0; r < n; ++r)
    if (leq[r].size() != n)
      throw Error(ErrorCode::shape_mismatch, "leq table row has wrong length",
                  {{"row", r}, {"expected", n}, {"actual", leq[r].size()}});
  {
    std::set<std::string> seen;
    for (std::size_t k = 0; k < n; ++k)
      if (!seen.insert(labels[k]).second) throw poset_error("unique-labels", {{"label", labels[k]}});
  }
  for (std::size_t x = 0; x < n; ++x)
    if (!leq[x][x]) throw poset_error("reflexivity", {{"x", x}});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (leq[x][y] && leq[y][x]) throw poset_error("antisymmetry", {{"x", x}, {"y", y}});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!leq[x][y]) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (leq[y][z] && !leq[x][z])
          throw poset_error("transitivity", {{"x", x}, {"y", y}, {"z", z}});
    }
  std::vector<Subset> up(n, Subset(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (leq[x][y]) up[x].insert(y);
  return from_upsets(std::move(labels), std::move(up));
}

Poset Poset::from_upsets(std::vector<std::string> labels, std::vector<Subset> up) {
  const std::size_t n = labels.size();
  if (up.size() != n) throw Error(ErrorCode::shape_mismatch, "upset table size mismatch");
  Poset p;
  p.labels_ = std::move(labels);
  p.up_ = std::move(up);
  p.down_.assign(n, Subset(n));
  for (std::size_t x = 0; x < n; ++x)
    p.up_[x].for_each([&](std::size_t y) { p.down_[y].insert(x); });
  return p;
}

Poset Poset::antichain(std::size_t n) {
  std::vector<std::string> labels(n);
  std::vector<Subset> up(n, Subset(n));
  for (std::size_t k = 0; k < n; ++k) {
    labels[k] = "p" + std::to_string(k);
    up[k].insert(k);
  }
  return from_upsets(std::move(labels), std::move(up));
}

Poset Poset::chain(std::size_t n) {
  std::vector<std::string> labels(n);
  std::vector<Subset> up(n, Subset(n));
  for (std::size_t k = 0; k < n; ++k) {
    labels[k] = "c" + std::to_string(k);
    for (std::size_t j = k; j < n; ++j) up[k].insert(j);
  }
  return from_upsets(std::move(labels), std::move(up));
}

std::optional<Element> Poset::find(const std::string& label) const {
  for (std::size_t k = 0; k < labels_.size(); ++k)
    if (labels_[k] == label) return static_cast<Element>(k);
  return std::nullopt;
}

bool Poset::is_increasing(const Subset& s) const {
  bool ok = true;
  s.for_each([&](std::size_t x) { ok = ok && up_[x].is_subset_of(s); });
  return ok;
}

bool Poset::is_decreasing(const Subset& s) const {
  bool ok = true;
  s.for_each([&](std::size_t x) { ok = ok && down_[x].is_subset_of(s); });
  return ok;
}

Subset Poset::up_closure(const Subset& s) const {
  Subset out(size());
  s.for_each([&](std::size_t x) { out |= up_[x]; });
  return out;
}

Subset Poset::down_closure(const Subset& s) const {
  Subset out(size());
  s.for_each([&](std::size_t x) { out |= down_[x]; });
  return out;
}

Subset Poset::maximal_in(const Subset& s) const {
  Subset out(size());
  s.for_each([&](std::size_t x) {
    Subset above = up_[x] & s;
    above.erase(x);
    if (above.empty()) out.insert(x);
  });
  return out;
}

Subset Poset::minimal_in(const Subset& s) const {
  Subset out(size());
  s.for_each([&](std::size_t x) {
    Subset below = down_[x] & s;
    below.erase(x);
    if (below.empty()) out.insert(x);
  });
  return out;
}

std::vector<std::pair<Element, Element>> Poset::covers() const {
  std::vector<std::pair<Element, Element>> out;
  for (std::size_t x = 0; x < size(); ++x) {
    Subset above = up_[x];
    above.erase(x);
    Subset cov = minimal_in(above);
    cov.for_each([&](std::size_t y) {
      out.emplace_back(static_cast<Element>(x), static_cast<Element>(y));
    });
  }
  return out;
}

std::vector<Element> Poset::linear_extension() const {
  std::vector<Element> idx(size());
  std::iota(idx.begin(), idx.end(), Element{0});
  std::stable_sort(idx.begin(), idx.end(), [&](Element a, Element b) {
    return down_[a].count() < down_[b].count();
  });
  return idx;
}

std::vector<std::vector<bool>> Poset::table() const {
  std::vector<std::vector<bool>> t(size(), std::vector<bool>(size(), false));
  for (std::size_t x = 0; x < size(); ++x)
    up_[x].for_each([&](std::size_t y) { t[x][y] = true; });
  return t;
}

// ---------------------------------------------------------------- FiniteLattice

FiniteLattice FiniteLattice::validate(std::vector<std::string> labels,
                                      const std::vector<std::vector<bool>>& leq) {
  return from_poset(Poset::from_table(std::move(labels), leq));
}

FiniteLattice FiniteLattice::from_poset(Poset order) {
  const std::size_t n = order.size();
  if (n == 0) throw Error(ErrorCode::malformed, "lattice has no elements");
  std::vector<Element> meet(n * n), join(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Subset lower = order.down(static_cast<Element>(x)) & order.down(static_cast<Element>(y));
      Subset upper = order.up(static_cast<Element>(x)) & order.up(static_cast<Element>(y));
      std::optional<Element> m, j;
      lower.for_each([&](std::size_t c) {
        if (!m && lower.is_subset_of(order.down(static_cast<Element>(c)))) m = static_cast<Element>(c);
      });
      upper.for_each([&](std::size_t c) {
        if (!j && upper.is_subset_of(order.up(static_cast<Element>(c)))) j = static_cast<Element>(c);
      });
      if (!m || !j)
        throw Error(ErrorCode::no_meet_or_join,
                    std::string("elements have no ") + (!m ? "meet" : "join"),
                    {{"x", x}, {"y", y}, {"missing", !m ? "meet" : "join"}});
      meet[x * n + y] = *m;
      join[x * n + y] = *j;
    }
  // With all binary meets and joins present, a finite lattice is bounded.
  Element bottom = 0, top = 0;
  for (std::size_t k = 1; k < n; ++k) {
    bottom = meet[bottom * n + k];
    top = join[top * n + k];
  }
  if (!order.up(bottom).is_full() || !order.down(top).is_full())
    throw Error(ErrorCode::not_bounded, "lattice has no bounds");
  FiniteLattice l = from_tables(std::move(order), std::move(meet), std::move(join), bottom, top);
  if (auto w = l.distributivity_witness())
    throw Error(ErrorCode::not_distributive, "x/\\(y\\/z) != (x/\\y)\\/(x/\\z)",
                {{"x", (*w)[0]}, {"y", (*w)[1]}, {"z", (*w)[2]}});
  return l;
}

FiniteLattice FiniteLattice::from_tables(Poset order, std::vector<Element> meet,
                                         std::vector<Element> join, Element bottom, Element top) {
  const std::size_t n = order.size();
  if (meet.size() != n * n || join.size() != n * n || bottom >= n || top >= n)
    throw Error(ErrorCode::shape_mismatch, "lattice tables do not match the order");
  FiniteLattice l;
  l.order_ = std::move(order);
  l.meet_ = std::move(meet);
  l.join_ = std::move(join);
  l.bottom_ = bottom;
  l.top_ = top;
  return l;
}

Element FiniteLattice::meet_all(const Subset& s) const {
  Element m = top_;
  s.for_each([&](std::size_t x) { m = meet(m, static_cast<Element>(x)); });
  return m;
}

Element FiniteLattice::join_all(const Subset& s) const {
  Element j = bottom_;
  s.for_each([&](std::size_t x) { j = join(j, static_cast<Element>(x)); });
  return j;
}

bool FiniteLattice::is_join_irreducible(Element x) const {
  if (x == bottom_) return false;
  // x is join-irreducible iff it has exactly one lower cover.
  Subset below = order_.down(x);
  below.erase(x);
  return order_.maximal_in(below).count() == 1;
}

bool FiniteLattice::is_meet_irreducible(Element x) const {
  if (x == top_) return false;
  Subset above = order_.up(x);
  above.erase(x);
  return order_.minimal_in(above).count() == 1;
}

std::vector<Element> FiniteLattice::join_irreducibles() const {
  std::vector<Element> out;
  for (Element x = 0; x < size(); ++x)
    if (is_join_irreducible(x)) out.push_back(x);
  return out;
}

std::vector<Element> FiniteLattice::meet_irreducibles() const {
  std::vector<Element> out;
  for (Element x = 0; x < size(); ++x)
    if (is_meet_irreducible(x)) out.push_back(x);
  return out;
}

Element FiniteLattice::heyting_arrow(Element a, Element b) const {
  Element best = bottom_;
  for (Element c = 0; c < size(); ++c)
    if (leq(meet(a, c), b)) best = join(best, c);
  return best;
}

std::optional<std::array<Element, 3>> FiniteLattice::distributivity_witness() const {
  const auto n = static_cast<Element>(size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) return std::array{x, y, z};
  return std::nullopt;
}

// ---------------------------------------------------------------- filters

bool is_filter(const FiniteLattice& l, const Subset& s) {
  if (!s.contains(l.top()) || !l.order().is_increasing(s)) return false;
  bool ok = true;
  s.for_each([&](std::size_t a) {
    s.for_each([&](std::size_t b) {
      ok = ok && s.contains(l.meet(static_cast<Element>(a), static_cast<Element>(b)));
    });
  });
  return ok;
}

bool is_ideal(const FiniteLattice& l, const Subset& s) {
  if (!s.contains(l.bottom()) || !l.order().is_decreasing(s)) return false;
  bool ok = true;
  s.for_each([&](std::size_t a) {
    s.for_each([&](std::size_t b) {
      ok = ok && s.contains(l.join(static_cast<Element>(a), static_cast<Element>(b)));
    });
  });
  return ok;
}

bool is_prime_filter(const FiniteLattice& l, const Subset& s) {
  if (!is_filter(l, s) || s.is_full()) return false;
  const auto n = static_cast<Element>(l.size());
  for (Element a = 0; a < n; ++a)
    for (Element b = a; b < n; ++b)
      if (s.contains(l.join(a, b)) && !s.contains(a) && !s.contains(b)) return false;
  return true;
}

Subset fig(const FiniteLattice& l, const Subset& generators) {
  return l.order().up(l.meet_all(generators));
}

Subset idg(const FiniteLattice& l, const Subset& generators) {
  return l.order().down(l.join_all(generators));
}

std::vector<Subset> enumerate_filters(const FiniteLattice& l) {
  // Every filter of a finite lattice is principal, generated by its meet.
  std::vector<Subset> out;
  out.reserve(l.size());
  for (Element a = 0; a < l.size(); ++a) out.push_back(l.order().up(a));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- spectrum

std::optional<Element> Spectrum::index_of(const Subset& carrier) const {
  auto it = std::lower_bound(points.begin(), points.end(), carrier);
  if (it == points.end() || *it != carrier) return std::nullopt;
  return static_cast<Element>(it - points.begin());
}

namespace {

Spectrum spectrum_from_points(const FiniteLattice& l, std::vector<Subset> points) {
  std::sort(points.begin(), points.end());
  const std::size_t n = points.size();
  std::vector<std::string> labels(n);
  std::vector<Subset> up(n, Subset(n));
  for (std::size_t p = 0; p < n; ++p) {
    labels[p] = "[" + l.label(l.meet_all(points[p])) + ")";
    for (std::size_t q = 0; q < n; ++q)
      if (points[p].is_subset_of(points[q])) up[p].insert(q);
  }
  return Spectrum{std::move(points), Poset::from_upsets(std::move(labels), std::move(up))};
}

}  // namespace

Spectrum spectrum(const FiniteLattice& l) {
  std::vector<Subset> primes;
  for (auto& f : enumerate_filters(l))
    if (is_prime_filter(l, f)) primes.push_back(std::move(f));
  return spectrum_from_points(l, std::move(primes));
}

Spectrum spectrum_via_join_irreducibles(const FiniteLattice& l) {
  std::vector<Subset> primes;
  for (Element j : l.join_irreducibles()) primes.push_back(l.order().up(j));
  return spectrum_from_points(l, std::move(primes));
}

Subset beta(const FiniteLattice& l, const Spectrum& s, Element a) {
  (void)l;
  Subset out(s.size());
  for (std::size_t p = 0; p < s.size(); ++p)
    if (s.points[p].contains(a)) out.insert(p);
  return out;
}

// ---------------------------------------------------------------- upsets

std::optional<Element> IncreasingSetLattice::index_of(const Subset& upset) const {
  auto it = index_.find(upset);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

void collect_upsets(const Poset& p, const std::vector<Element>& order, std::size_t pos, Subset& current,
                    std::vector<Subset>& out, std::size_t limit) {
  if (pos == order.size()) {
    out.push_back(current);
    require_budget(out.size() <= limit, "increasing sets", out.size(), limit);
    return;
  }
  const Element x = order[pos];
  collect_upsets(p, order, pos + 1, current, out, limit);
  Subset strictly_above = p.up(x);
  strictly_above.erase(x);
  if (strictly_above.is_subset_of(current)) {
    current.insert(x);
    collect_upsets(p, order, pos + 1, current, out, limit);
    current.erase(x);
  }
}

std::string set_label(const Poset& p, const Subset& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t x) {
    if (!first) out += ",";
    out += p.label(static_cast<Element>(x));
    first = false;
  });
  return out + "}";
}

}  // namespace

IncreasingSetLattice increasing_sets(const Poset& p, std::size_t limit) {
  // Decide maximal elements first: x may join only once everything above it has.
  std::vector<Element> order = p.linear_extension();
  std::reverse(order.begin(), order.end());
  std::vector<Subset> sets;
  Subset current(p.size());
  collect_upsets(p, order, 0, current, sets, limit);
  std::sort(sets.begin(), sets.end());

  IncreasingSetLattice out;
  out.base = p;
  const std::size_t n = sets.size();
  for (std::size_t k = 0; k < n; ++k) out.index_.emplace(sets[k], static_cast<Element>(k));

  std::vector<std::string> labels(n);
  std::vector<Subset> up(n, Subset(n));
  std::vector<Element> meet(n * n), join(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = set_label(p, sets[a]);
    for (std::size_t b = 0; b < n; ++b) {
      if (sets[a].is_subset_of(sets[b])) up[a].insert(b);
      meet[a * n + b] = out.index_.at(sets[a] & sets[b]);
      join[a * n + b] = out.index_.at(sets[a] | sets[b]);
    }
  }
  const Element bottom = out.index_.at(Subset(p.size()));
  const Element top = out.index_.at(Subset::full(p.size()));
  out.lattice = FiniteLattice::from_tables(Poset::from_upsets(std::move(labels), std::move(up)),
                                           std::move(meet), std::move(join), bottom, top);
  out.sets = std::move(sets);
  return out;
}

IncreasingSetLattice increasing_sets(const Poset& p) {
  return increasing_sets(p, Budget::current().lattice_max);
}

// ---------------------------------------------------------------- congruences

Partition::Partition(std::vector<Element> block_of) : block_(std::move(block_of)) {
  std::vector<Element> renumber(block_.size() + 1, ~Element{0});
  Element next = 0;
  for (auto& b : block_) {
    if (b >= renumber.size()) renumber.resize(b + 1, ~Element{0});
    if (renumber[b] == ~Element{0}) renumber[b] = next++;
    b = renumber[b];
  }
  blocks_ = next;
}

Partition Partition::identity(std::size_t n) {
  std::vector<Element> b(n);
  std::iota(b.begin(), b.end(), Element{0});
  return Partition(std::move(b));
}

Partition Partition::total(std::size_t n) { return Partition(std::vector<Element>(n, 0)); }

std::vector<std::vector<Element>> Partition::block_lists() const {
  std::vector<std::vector<Element>> out(blocks_);
  for (std::size_t x = 0; x < block_.size(); ++x) out[block_[x]].push_back(static_cast<Element>(x));
  return out;
}

bool Partition::refines(const Partition& other) const {
  if (other.size() != size()) return false;
  // Every block must land inside a single block of `other`.
  std::vector<Element> image(blocks_, ~Element{0});
  for (std::size_t x = 0; x < block_.size(); ++x) {
    auto& slot = image[block_[x]];
    if (slot == ~Element{0}) slot = other.block_[x];
    else if (slot != other.block_[x]) return false;
  }
  return true;
}

bool is_lattice_congruence(const FiniteLattice& l, const Partition& p) {
  const auto n = static_cast<Element>(l.size());
  if (p.size() != n) return false;
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b) {
      if (!p.related(a, b)) continue;
      for (Element c = 0; c < n; ++c)
        if (!p.related(l.meet(a, c), l.meet(b, c)) || !p.related(l.join(a, c), l.join(b, c)))
          return false;
    }
  return true;
}

Partition theta_from_closed(const FiniteLattice& l, const Spectrum& s, const Subset& y) {
  std::vector<Subset> keys;
  std::vector<Element> block(l.size());
  for (Element a = 0; a < l.size(); ++a) {
    Subset key = beta(l, s, a) & y;
    auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end()) {
      block[a] = static_cast<Element>(keys.size());
      keys.push_back(std::move(key));
    } else {
      block[a] = static_cast<Element>(it - keys.begin());
    }
  }
  return Partition(std::move(block));
}

namespace {

void partitions_rec(std::vector<Element>& rgs, std::size_t pos, Element max_block,
                    std::vector<Partition>& out) {
  if (pos == rgs.size()) {
    out.emplace_back(rgs);
    return;
  }
  for (Element b = 0; b <= max_block + 1; ++b) {
    rgs[pos] = b;
    partitions_rec(rgs, pos + 1, std::max(max_block, b), out);
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(std::size_t n) {
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back(std::vector<Element>{});
    return out;
  }
  std::vector<Element> rgs(n, 0);
  // Restricted growth strings: rgs[0] = 0 and rgs[k] <= 1 + max(rgs[0..k)).
  partitions_rec(rgs, 1, 0, out);
  return out;
}

std::optional<nlohmann::json> lattice_hom_failure(const FiniteLattice& src, const FiniteLattice& tgt,
                                                  std::span<const Element> map) {
  const auto n = static_cast<Element>(src.size());
  if (map.size() != n) return nlohmann::json{{"law", "total"}, {"expected", n}, {"actual", map.size()}};
  for (Element x = 0; x < n; ++x)
    if (map[x] >= tgt.size()) return nlohmann::json{{"law", "range"}, {"x", x}};
  if (map[src.bottom()] != tgt.bottom()) return nlohmann::json{{"law", "bottom"}, {"x", src.bottom()}};
  if (map[src.top()] != tgt.top()) return nlohmann::json{{"law", "top"}, {"x", src.top()}};
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (map[src.meet(x, y)] != tgt.meet(map[x], map[y]))
        return nlohmann::json{{"law", "meet"}, {"x", x}, {"y", y}};
      if (map[src.join(x, y)] != tgt.join(map[x], map[y]))
        return nlohmann::json{{"law", "join"}, {"x", x}, {"y", y}};
    }
  return std::nullopt;
}

}  // namespace fidl

namespace fidl {

// ---------------------------------------------------------------- products

std::vector<Element> ProductLattice::decode(Element e) const {
  std::vector<Element> out(radix.size());
  for (std::size_t k = 0; k < radix.size(); ++k) {
    out[k] = static_cast<Element>(e % radix[k]);
    e = static_cast<Element>(e / radix[k]);
  }
  return out;
}

Element ProductLattice::encode(std::span<const Element> components) const {
  Element e = 0;
  for (std::size_t k = radix.size(); k-- > 0;) e = static_cast<Element>(e * radix[k] + components[k]);
  return e;
}

Element ProductLattice::component(Element e, std::size_t k) const {
  for (std::size_t j = 0; j < k; ++j) e = static_cast<Element>(e / radix[j]);
  return static_cast<Element>(e % radix[k]);
}

ProductLattice product_lattice(const std::vector<const FiniteLattice*>& factors, std::size_t limit) {
  if (factors.empty()) throw Error(ErrorCode::empty_base, "product of an empty family");
  ProductLattice out;
  std::size_t n = 1;
  for (const auto* f : factors) {
    out.radix.push_back(f->size());
    n *= f->size();
    require_budget(n <= limit, "product lattice", n, limit);
  }
  std::vector<std::vector<Element>> comps(n);
  std::vector<std::string> labels(n);
  for (std::size_t e = 0; e < n; ++e) {
    comps[e] = out.decode(static_cast<Element>(e));
    if (factors.size() == 1) {
      labels[e] = factors[0]->label(comps[e][0]);
      continue;
    }
    std::string lbl = "(";
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k > 0) lbl += ",";
      lbl += factors[k]->label(comps[e][k]);
    }
    labels[e] = lbl + ")";
  }
  std::vector<Subset> up(n, Subset(n));
  std::vector<Element> meet(n * n), join(n * n), tmp(factors.size());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      bool le = true;
      for (std::size_t k = 0; k < factors.size(); ++k) le = le && factors[k]->leq(comps[a][k], comps[b][k]);
      if (le) up[a].insert(b);
      for (std::size_t k = 0; k < factors.size(); ++k) tmp[k] = factors[k]->meet(comps[a][k], comps[b][k]);
      meet[a * n + b] = out.encode(tmp);
      for (std::size_t k = 0; k < factors.size(); ++k) tmp[k] = factors[k]->join(comps[a][k], comps[b][k]);
      join[a * n + b] = out.encode(tmp);
    }
  for (std::size_t k = 0; k < factors.size(); ++k) tmp[k] = factors[k]->bottom();
  const Element bottom = out.encode(tmp);
  for (std::size_t k = 0; k < factors.size(); ++k) tmp[k] = factors[k]->top();
  const Element top = out.encode(tmp);
  out.lattice = FiniteLattice::from_tables(Poset::from_upsets(std::move(labels), std::move(up)),
                                           std::move(meet), std::move(join), bottom, top);
  return out;
}

}  // namespace fidl
