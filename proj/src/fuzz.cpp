#include "fidl/fuzz.hpp"

#include <algorithm>

#include "fidl/fixtures.hpp"

namespace fidl {

namespace {

Element pick(Rng& rng, const FiniteLattice& l, Element biased, unsigned percent) {
  if (rng.chance(percent)) return biased;
  return static_cast<Element>(rng.below(l.size()));
}

struct SectionData {
  std::vector<Element> join_irr_a, join_irr_b, meet_irr_a;
  std::vector<Element> phi;   // |J(A)| x |J(B)|
  std::vector<Element> psi;   // |J(B)| x |M(A)|
};

std::optional<FidlModule> assemble(const FiniteLattice& a, const FiniteLattice& b, const SectionData& d) {
  const std::size_t na = a.size(), nb = b.size();
  const std::size_t ja = d.join_irr_a.size(), jb = d.join_irr_b.size(), ma = d.meet_irr_a.size();
  std::vector<Element> f(na * nb), i(na * nb);
  for (Element x = 0; x < na; ++x)
    for (Element c = 0; c < nb; ++c) {
      Element acc = a.bottom();
      for (std::size_t p = 0; p < ja; ++p) {
        if (!a.leq(d.join_irr_a[p], x)) continue;
        for (std::size_t q = 0; q < jb; ++q)
          if (b.leq(d.join_irr_b[q], c)) acc = a.join(acc, d.phi[p * jb + q]);
      }
      f[x * nb + c] = acc;
      Element meet = a.top();
      for (std::size_t r = 0; r < ma; ++r) {
        if (!a.leq(x, d.meet_irr_a[r])) continue;
        for (std::size_t q = 0; q < jb; ++q)
          if (b.leq(d.join_irr_b[q], c)) meet = a.meet(meet, d.psi[q * ma + r]);
      }
      i[c * na + x] = meet;
    }
  if (!FidlModule::check_axioms(a, b, f, i).empty()) return std::nullopt;
  return FidlModule::validate(a, b, std::move(f), std::move(i));
}

SectionData section_shape(const FiniteLattice& a, const FiniteLattice& b) {
  SectionData d;
  d.join_irr_a = a.join_irreducibles();
  d.join_irr_b = b.join_irreducibles();
  d.meet_irr_a = a.meet_irreducibles();
  return d;
}

Subset close_sublattice(const FiniteLattice& l, Subset s) {
  s.insert(l.bottom());
  s.insert(l.top());
  for (bool changed = true; changed;) {
    changed = false;
    for (Element x = 0; x < l.size(); ++x)
      for (Element y = 0; y < l.size(); ++y) {
        if (!s.contains(x) || !s.contains(y)) continue;
        for (Element z : {l.meet(x, y), l.join(x, y)})
          if (!s.contains(z)) {
            s.insert(z);
            changed = true;
          }
      }
  }
  return s;
}

Subset random_subset(Rng& rng, std::size_t n, unsigned percent) {
  Subset s(n);
  for (std::size_t k = 0; k < n; ++k)
    if (rng.chance(percent)) s.insert(k);
  return s;
}

FidlModule small_module(Rng& rng, std::size_t max_a, std::size_t max_b) {
  const FiniteLattice a = random_lattice(rng, max_a, 2);
  const FiniteLattice b = random_lattice(rng, max_b, 2);
  return random_module_over(rng, a, b);
}

}  // namespace

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::heyting_power: return "heyting-power";
    case Strategy::modal: return "modal";
    case Strategy::product: return "product";
    case Strategy::random_tables: return "random-tables";
  }
  return "unknown";
}

Strategy strategy_from_string(const std::string& s) {
  for (auto k : {Strategy::heyting_power, Strategy::modal, Strategy::product, Strategy::random_tables})
    if (to_string(k) == s) return k;
  throw Error(ErrorCode::malformed, "unknown strategy \"" + s + "\"", {{"strategy", s}});
}

void validate_config(const FuzzConfig& c) {
  if (c.count < 1) throw Error(ErrorCode::malformed, "count must be at least 1");
  if (c.max_a < 2 || c.max_b < 2) throw Error(ErrorCode::malformed, "size bounds must be at least 2");
  const std::size_t limit = Budget::current().lattice_max;
  if (c.max_a > limit || c.max_b > limit)
    throw Error(ErrorCode::malformed, "size bounds exceed the lattice budget", {{"limit", limit}});
}

Poset random_poset(Rng& rng, std::size_t n, unsigned percent) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    leq[a][a] = true;
    for (std::size_t b = a + 1; b < n; ++b) leq[a][b] = rng.chance(percent);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (leq[a][k] && leq[k][b]) leq[a][b] = true;
  std::vector<std::string> labels(n);
  for (std::size_t k = 0; k < n; ++k) labels[k] = "p" + std::to_string(k);
  return Poset::from_table(std::move(labels), leq);
}

FiniteLattice random_lattice(Rng& rng, std::size_t max_size, std::size_t min_size) {
  const std::size_t max_points = std::min<std::size_t>(max_size - 1, 6);
  const std::size_t min_points = min_size > 1 ? 1 : 0;
  for (int attempt = 0; attempt < 64; ++attempt) {
    const std::size_t n = min_points + rng.below(max_points - min_points + 1);
    if (n == 0) return FiniteLattice::from_poset(Poset::from_upsets({"0"}, {Subset::full(1)}));
    const unsigned percent = 20 + static_cast<unsigned>(rng.below(61));
    const Poset p = random_poset(rng, n, percent);
    try {
      IncreasingSetLattice ups = increasing_sets(p, max_size);
      if (ups.sets.size() >= min_size) return std::move(ups.lattice);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::budget_exceeded) throw;
    }
  }
  return increasing_sets(Poset::chain(1)).lattice;
}

FidlModule random_module_over(Rng& rng, const FiniteLattice& a, const FiniteLattice& b) {
  SectionData d = section_shape(a, b);
  for (std::size_t k = 0; k < d.join_irr_a.size() * d.join_irr_b.size(); ++k) d.phi.push_back(pick(rng, a, a.bottom(), 25));
  for (std::size_t k = 0; k < d.join_irr_b.size() * d.meet_irr_a.size(); ++k) d.psi.push_back(pick(rng, a, a.top(), 25));
  auto m = assemble(a, b, d);
  if (!m) throw Error(ErrorCode::axiom_violation, "generator produced an invalid module");
  return std::move(*m);
}

std::optional<FidlModule> random_tables_module(Rng& rng, const FiniteLattice& a, const FiniteLattice& b,
                                               RandomTablesStats& stats) {
  const std::size_t na = a.size(), nb = b.size();
  std::vector<Element> raw_f(na * nb), raw_i(na * nb);
  for (auto& v : raw_f) v = static_cast<Element>(rng.below(na));
  for (auto& v : raw_i) v = static_cast<Element>(rng.below(na));
  SectionData d = section_shape(a, b);
  for (Element j : d.join_irr_a)
    for (Element k : d.join_irr_b) d.phi.push_back(raw_f[j * nb + k]);
  for (Element k : d.join_irr_b)
    for (Element m : d.meet_irr_a) d.psi.push_back(raw_i[k * na + m]);
  ++stats.generated;
  auto out = assemble(a, b, d);
  if (out) ++stats.accepted;
  return out;
}

FidlModule generate_module(Rng& rng, Strategy s, std::size_t max_a, std::size_t max_b, RandomTablesStats& stats) {
  switch (s) {
    case Strategy::heyting_power: {
      const FiniteLattice h = random_lattice(rng, std::min(max_a, max_b), 2);
      std::size_t max_exp = 0;
      for (std::size_t p = h.size(); p <= max_a; p *= h.size()) ++max_exp;
      return heyting_power_module(h, 1 + rng.below(std::max<std::size_t>(max_exp, 1)));
    }
    case Strategy::modal:
      return random_module_over(rng, random_lattice(rng, max_a, 2), fixtures::chain2());
    case Strategy::product: {
      const std::size_t a1 = std::max<std::size_t>(max_a / 2, 2);
      const std::size_t b1 = std::max<std::size_t>(max_b / 2, 1);
      const FidlModule m1 = random_module_over(rng, random_lattice(rng, a1, 2), random_lattice(rng, b1 < 2 ? 2 : b1, 1));
      const std::size_t a2 = std::max<std::size_t>(max_a / m1.a().size(), 1);
      const std::size_t b2 = std::max<std::size_t>(max_b / m1.b().size(), 1);
      const FiniteLattice fa = a2 >= 2 ? random_lattice(rng, a2, 1) : random_lattice(rng, 1, 1);
      const FiniteLattice fb = b2 >= 2 ? random_lattice(rng, b2, 1) : random_lattice(rng, 1, 1);
      return product_module({m1, random_module_over(rng, fa, fb)}).module;
    }
    case Strategy::random_tables: {
      const FiniteLattice a = random_lattice(rng, max_a, 2);
      const FiniteLattice b = random_lattice(rng, max_b, 2);
      for (int attempt = 0; attempt < 100; ++attempt)
        if (auto m = random_tables_module(rng, a, b, stats)) return std::move(*m);
      return random_module_over(rng, a, b);
    }
  }
  return fixtures::mod2();
}

FiFrame random_frame(Rng& rng, std::size_t max_x, std::size_t max_y) {
  const Poset x = random_poset(rng, 1 + rng.below(max_x), 20 + static_cast<unsigned>(rng.below(50)));
  const Poset y = random_poset(rng, 1 + rng.below(max_y), 20 + static_cast<unsigned>(rng.below(50)));
  const std::size_t nx = x.size(), ny = y.size();
  const unsigned density = 5 + static_cast<unsigned>(rng.below(25));
  FiFrame f{x, y, TernaryRelation(nx, ny, nx), TernaryRelation(ny, nx, nx)};
  for (Element a = 0; a < nx; ++a)
    for (Element b = 0; b < ny; ++b)
      for (Element c = 0; c < nx; ++c)
        if (rng.chance(density))
          x.down(a).for_each([&](std::size_t da) {
            y.down(b).for_each([&](std::size_t db) {
              x.up(c).for_each([&](std::size_t uc) {
                f.r.insert(static_cast<Element>(da), static_cast<Element>(db), static_cast<Element>(uc));
              });
            });
          });
  for (Element b = 0; b < ny; ++b)
    for (Element a = 0; a < nx; ++a)
      for (Element c = 0; c < nx; ++c)
        if (rng.chance(density))
          y.down(b).for_each([&](std::size_t db) {
            x.down(a).for_each([&](std::size_t da) {
              x.up(c).for_each([&](std::size_t uc) {
                f.t.insert(static_cast<Element>(db), static_cast<Element>(da), static_cast<Element>(uc));
              });
            });
          });
  return validate_frame(std::move(f));
}

std::vector<Element> random_lattice_hom(Rng& rng, const FiniteLattice& c, const FiniteLattice& b) {
  const Spectrum sb = spectrum(b), sc = spectrum(c);
  if (sc.size() == 0 && sb.size() > 0) throw Error(ErrorCode::precondition_failed, "no homomorphism from a trivial lattice");
  std::vector<Element> mu(sb.size(), 0);
  bool ok = false;
  for (int attempt = 0; attempt < 16 && !ok; ++attempt) {
    ok = true;
    for (Element p : sb.order.linear_extension()) {
      Subset allowed = Subset::full(sc.size());
      for (Element q = 0; q < sb.size(); ++q)
        if (sb.order.less(q, p)) allowed &= sc.order.up(mu[q]);
      if (allowed.empty()) {
        ok = false;
        break;
      }
      const auto choices = allowed.elements();
      mu[p] = static_cast<Element>(choices[rng.below(choices.size())]);
    }
  }
  if (!ok) std::fill(mu.begin(), mu.end(), 0);
  std::vector<Subset> beta_b(b.size());
  for (Element e = 0; e < b.size(); ++e) beta_b[e] = beta(b, sb, e);
  std::vector<Element> h(c.size());
  for (Element e = 0; e < c.size(); ++e) {
    const Subset bc = beta(c, sc, e);
    Subset pre(sb.size());
    for (Element p = 0; p < sb.size(); ++p)
      if (bc.contains(mu[p])) pre.insert(p);
    h[e] = static_cast<Element>(std::find(beta_b.begin(), beta_b.end(), pre) - beta_b.begin());
  }
  return h;
}

FidlHomomorphism random_hom(Rng& rng, std::size_t max_a, std::size_t max_b) {
  switch (rng.below(6)) {
    case 0:
      return identity_hom(small_module(rng, max_a, max_b));
    case 1: {
      const FidlModule m1 = small_module(rng, 4, 3), m2 = small_module(rng, 3, 2);
      const ProductModule p = product_module({m1, m2});
      return p.projections[rng.below(2)];
    }
    case 2: {
      const FidlModule m = small_module(rng, 3, 3);
      const ProductModule p = product_module({m, m});
      return pairing(p, {identity_hom(m), identity_hom(m)});
    }
    case 3: {
      const FidlModule m = small_module(rng, max_a, max_b);
      const FiniteLattice c = random_lattice(rng, max_b, 2);
      return restriction_module(m, c, random_lattice_hom(rng, c, m.b()));
    }
    case 4:
      return representation_iso(small_module(rng, max_a, max_b)).beta;
    default: {
      const FidlModule m = small_module(rng, 3, 3);
      const FiniteLattice c = random_lattice(rng, 3, 2);
      const FidlHomomorphism r = restriction_module(m, c, random_lattice_hom(rng, c, m.b()));
      const ProductModule p = product_module({m, m});
      return compose(pairing(p, {identity_hom(m), identity_hom(m)}), r);
    }
  }
}

SubalgebraCandidate random_carriers(Rng& rng, const FidlModule& m) {
  SubalgebraCandidate c{close_sublattice(m.a(), random_subset(rng, m.a().size(), 30)),
                        close_sublattice(m.b(), random_subset(rng, m.b().size(), 30))};
  if (rng.chance(50)) return c;
  for (bool changed = true; changed;) {
    changed = false;
    Subset next = c.carrier_a;
    c.carrier_a.for_each([&](std::size_t x) {
      c.carrier_b.for_each([&](std::size_t b) {
        next.insert(m.f(static_cast<Element>(x), static_cast<Element>(b)));
        next.insert(m.i(static_cast<Element>(b), static_cast<Element>(x)));
      });
    });
    next = close_sublattice(m.a(), next);
    changed = !(next == c.carrier_a);
    c.carrier_a = std::move(next);
  }
  return c;
}

Corpus generate_corpus(const FuzzConfig& c) {
  validate_config(c);
  Corpus out;
  Rng rng(c.seed);
  for (std::size_t k = 0; k < c.count; ++k) {
    InstanceDocument d;
    d.kind = DocumentKind::module;
    d.meta = {{"name", std::string(to_string(c.strategy)) + "-" + std::to_string(k)},
              {"seed", c.seed},
              {"generator", kGeneratorVersion}};
    d.payload = module_to_json(generate_module(rng, c.strategy, c.max_a, c.max_b, out.stats));
    out.documents.push_back(std::move(d));
  }
  return out;
}

}  // namespace fidl
