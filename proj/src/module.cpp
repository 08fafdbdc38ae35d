#include "fidl/module.hpp"

#include <functional>

namespace fidl {

namespace {

using Json = nlohmann::json;

struct TableView {
  const FiniteLattice& a;
  const FiniteLattice& b;
  const std::vector<Element>& fus;
  const std::vector<Element>& imp;
  Element f(Element x, Element c) const { return fus[x * b.size() + c]; }
  Element i(Element c, Element x) const { return imp[c * a.size() + x]; }
};

// First witness of an axiom, scanning indices in lexicographic order.
std::optional<Json> first_failure(std::size_t n1, std::size_t n2, std::size_t n3,
                                  const std::function<std::optional<Json>(Element, Element, Element)>& probe) {
  for (Element p = 0; p < n1; ++p)
    for (Element q = 0; q < n2; ++q)
      for (Element r = 0; r < n3; ++r)
        if (auto w = probe(p, q, r)) return w;
  return std::nullopt;
}

}  // namespace

std::vector<AxiomViolation> FidlModule::check_axioms(const FiniteLattice& a, const FiniteLattice& b,
                                                     const std::vector<Element>& fusion,
                                                     const std::vector<Element>& implication) {
  const TableView t{a, b, fusion, implication};
  const std::size_t na = a.size(), nb = b.size();
  std::vector<AxiomViolation> out;
  auto record = [&](const char* name, std::optional<Json> w) {
    if (w) out.push_back({name, std::move(*w)});
  };

  record("F1", first_failure(na, na, nb, [&](Element x, Element y, Element c) -> std::optional<Json> {
           if (t.f(a.join(x, y), c) != a.join(t.f(x, c), t.f(y, c))) return Json{{"x", x}, {"y", y}, {"b", c}};
           return std::nullopt;
         }));
  record("F2", first_failure(na, nb, nb, [&](Element x, Element c, Element d) -> std::optional<Json> {
           if (t.f(x, b.join(c, d)) != a.join(t.f(x, c), t.f(x, d))) return Json{{"x", x}, {"b", c}, {"c", d}};
           return std::nullopt;
         }));
  record("F3", first_failure(1, nb, 1, [&](Element, Element c, Element) -> std::optional<Json> {
           if (t.f(a.bottom(), c) != a.bottom()) return Json{{"b", c}};
           return std::nullopt;
         }));
  record("F4", first_failure(na, 1, 1, [&](Element x, Element, Element) -> std::optional<Json> {
           if (t.f(x, b.bottom()) != a.bottom()) return Json{{"x", x}};
           return std::nullopt;
         }));
  record("I1", first_failure(nb, na, na, [&](Element c, Element x, Element y) -> std::optional<Json> {
           if (t.i(c, a.meet(x, y)) != a.meet(t.i(c, x), t.i(c, y))) return Json{{"b", c}, {"x", x}, {"y", y}};
           return std::nullopt;
         }));
  record("I2", first_failure(nb, nb, na, [&](Element c, Element d, Element x) -> std::optional<Json> {
           if (t.i(b.join(c, d), x) != a.meet(t.i(c, x), t.i(d, x))) return Json{{"b", c}, {"c", d}, {"x", x}};
           return std::nullopt;
         }));
  record("I3", first_failure(nb, 1, 1, [&](Element c, Element, Element) -> std::optional<Json> {
           if (t.i(c, a.top()) != a.top()) return Json{{"b", c}};
           return std::nullopt;
         }));
  return out;
}

FidlModule FidlModule::validate(FiniteLattice a, FiniteLattice b, std::vector<Element> fusion,
                                std::vector<Element> implication) {
  const std::size_t na = a.size(), nb = b.size();
  if (fusion.size() != na * nb)
    throw Error(ErrorCode::shape_mismatch, "fusion table must be |A| x |B|",
                {{"table", "f"}, {"expected", na * nb}, {"actual", fusion.size()}});
  if (implication.size() != na * nb)
    throw Error(ErrorCode::shape_mismatch, "implication table must be |B| x |A|",
                {{"table", "i"}, {"expected", na * nb}, {"actual", implication.size()}});
  for (std::size_t k = 0; k < fusion.size(); ++k)
    if (fusion[k] >= na)
      throw Error(ErrorCode::shape_mismatch, "fusion entry out of range",
                  {{"table", "f"}, {"row", k / nb}, {"column", k % nb}, {"value", fusion[k]}});
  for (std::size_t k = 0; k < implication.size(); ++k)
    if (implication[k] >= na)
      throw Error(ErrorCode::shape_mismatch, "implication entry out of range",
                  {{"table", "i"}, {"row", k / na}, {"column", k % na}, {"value", implication[k]}});

  auto violations = check_axioms(a, b, fusion, implication);
  if (!violations.empty()) {
    Json list = Json::array();
    std::string names;
    for (const auto& v : violations) {
      Json w = v.witness;
      w["axiom"] = v.axiom;
      list.push_back(std::move(w));
      names += (names.empty() ? "" : ",") + v.axiom;
    }
    throw Error(ErrorCode::axiom_violation, "module axioms violated: " + names, list);
  }
  FidlModule m;
  m.a_ = std::move(a);
  m.b_ = std::move(b);
  m.f_ = std::move(fusion);
  m.i_ = std::move(implication);
  return m;
}

std::vector<Element> section_f(const FidlModule& m, Element b) {
  std::vector<Element> out(m.a().size());
  for (Element x = 0; x < out.size(); ++x) out[x] = m.f(x, b);
  return out;
}

std::vector<Element> section_i(const FidlModule& m, Element b) {
  std::vector<Element> out(m.a().size());
  for (Element x = 0; x < out.size(); ++x) out[x] = m.i(b, x);
  return out;
}

Subset filter_extension(const FidlModule& m, ExtensionMode mode, const Subset& g, const Subset& h) {
  const FiniteLattice& a = m.a();
  Subset out(a.size());
  if (mode == ExtensionMode::fusion) {
    Subset values(a.size());
    g.for_each([&](std::size_t gx) {
      h.for_each([&](std::size_t hb) { values.insert(m.f(static_cast<Element>(gx), static_cast<Element>(hb))); });
    });
    return a.order().up_closure(values);
  }
  for (Element x = 0; x < a.size(); ++x) {
    bool member = false;
    h.for_each([&](std::size_t hb) {
      if (member) return;
      const Element bound = m.i(static_cast<Element>(hb), x);
      g.for_each([&](std::size_t gx) { member = member || a.leq(static_cast<Element>(gx), bound); });
    });
    if (member) out.insert(x);
  }
  return out;
}

std::optional<PrimePair> extend_to_primes(const FidlModule& m, ExtensionMode mode, const Subset& g,
                                          const Subset& h, const Subset& p,
                                          const Spectrum& spec_a, const Spectrum& spec_b) {
  const Subset base = filter_extension(m, mode, g, h);
  if (!base.is_subset_of(p))
    throw Error(ErrorCode::precondition_failed,
                mode == ExtensionMode::fusion ? "f(G,H) is not contained in P" : "i(H,G) is not contained in P",
                {{"mode", mode == ExtensionMode::fusion ? "fusion" : "implication"}});
  for (Element q = 0; q < spec_a.size(); ++q) {
    if (!g.is_subset_of(spec_a.points[q])) continue;
    for (Element r = 0; r < spec_b.size(); ++r) {
      if (!h.is_subset_of(spec_b.points[r])) continue;
      if (filter_extension(m, mode, spec_a.points[q], spec_b.points[r]).is_subset_of(p)) return PrimePair{q, r};
    }
  }
  return std::nullopt;
}

std::optional<PrimePair> extend_to_primes(const FidlModule& m, ExtensionMode mode, const Subset& g,
                                          const Subset& h, const Subset& p) {
  return extend_to_primes(m, mode, g, h, p, spectrum(m.a()), spectrum(m.b()));
}

std::optional<nlohmann::json> monotonicity_failure(const FidlModule& m) {
  const auto na = static_cast<Element>(m.a().size());
  const auto nb = static_cast<Element>(m.b().size());
  for (Element x = 0; x < na; ++x)
    for (Element y = 0; y < na; ++y) {
      if (!m.a().leq(x, y)) continue;
      for (Element b = 0; b < nb; ++b)
        for (Element c = 0; c < nb; ++c) {
          if (!m.b().leq(b, c)) continue;
          if (!m.a().leq(m.f(x, b), m.f(y, c)))
            return Json{{"operation", "f"}, {"x", x}, {"y", y}, {"b", b}, {"c", c}};
          if (!m.a().leq(m.i(c, x), m.i(b, y)))
            return Json{{"operation", "i"}, {"x", x}, {"y", y}, {"b", b}, {"c", c}};
        }
    }
  return std::nullopt;
}

FusionImplicationAlgebra as_fusion_implication_algebra(const FidlModule& m) {
  if (!(m.a() == m.b())) throw Error(ErrorCode::sort_mismatch, "fusion/implication algebra needs B = A");
  const FiniteLattice& l = m.a();
  const auto n = static_cast<Element>(l.size());
  FusionImplicationAlgebra out;
  out.fusion.resize(n * n);
  out.implication.resize(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      out.fusion[x * n + y] = m.f(x, y);
      out.implication[x * n + y] = m.i(x, y);
    }
  auto fus = [&](Element x, Element y) { return out.fusion[x * n + y]; };
  auto imp = [&](Element x, Element y) { return out.implication[x * n + y]; };

  bool ok[7] = {true, true, true, true, true, true, true};
  for (Element x = 0; x < n; ++x) {
    if (imp(x, l.top()) != l.top()) ok[4] = false;
    if (fus(x, l.bottom()) != l.bottom() || fus(l.bottom(), x) != l.bottom()) ok[3] = false;
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        if (fus(x, l.join(y, z)) != l.join(fus(x, y), fus(x, z))) ok[1] = false;
        if (fus(l.join(x, y), z) != l.join(fus(x, z), fus(y, z))) ok[2] = false;
        if (l.meet(imp(x, y), imp(x, z)) != imp(x, l.meet(y, z))) ok[5] = false;
        if (l.meet(imp(x, z), imp(y, z)) != imp(l.join(x, y), z)) ok[6] = false;
        const bool lhs = l.leq(m.f(x, y), z);
        const bool rhs = l.leq(x, m.i(y, z));
        if (lhs != rhs && !out.residuation_counterexample)
          out.residuation_counterexample = Json{{"x", x}, {"y", y}, {"z", z}, {"fusion_below", lhs}, {"below_implication", rhs}};
      }
  }
  for (int k = 1; k <= 6; ++k)
    if (!ok[k]) out.failed_identities.push_back(std::to_string(k));
  out.residuated = !out.residuation_counterexample.has_value();
  return out;
}

ModalLattice as_modal_lattice(const FidlModule& m) {
  if (m.b().size() != 2) throw Error(ErrorCode::sort_mismatch, "modal reading needs a two-element B");
  const FiniteLattice& l = m.a();
  const Element one = m.b().top();
  ModalLattice out;
  out.diamond = section_f(m, one);
  out.box = section_i(m, one);
  if (out.diamond[l.bottom()] != l.bottom()) out.failed_laws.emplace_back("diamond-bottom");
  if (out.box[l.top()] != l.top()) out.failed_laws.emplace_back("box-top");
  bool join_ok = true, meet_ok = true;
  for (Element x = 0; x < l.size(); ++x)
    for (Element y = 0; y < l.size(); ++y) {
      join_ok = join_ok && out.diamond[l.join(x, y)] == l.join(out.diamond[x], out.diamond[y]);
      meet_ok = meet_ok && out.box[l.meet(x, y)] == l.meet(out.box[x], out.box[y]);
    }
  if (!join_ok) out.failed_laws.emplace_back("diamond-join");
  if (!meet_ok) out.failed_laws.emplace_back("box-meet");
  return out;
}

FidlModule heyting_power_module(const FiniteLattice& h, std::size_t exponent) {
  if (exponent == 0) throw Error(ErrorCode::empty_base, "power over an empty index set");
  std::vector<const FiniteLattice*> factors(exponent, &h);
  ProductLattice power = product_lattice(factors, Budget::current().lattice_max);
  const std::size_t na = power.lattice.size(), nb = h.size();
  std::vector<Element> f(na * nb), i(na * nb), comps(exponent);
  for (Element g = 0; g < na; ++g) {
    const auto gc = power.decode(g);
    for (Element a = 0; a < nb; ++a) {
      for (std::size_t k = 0; k < exponent; ++k) comps[k] = h.meet(a, gc[k]);
      f[g * nb + a] = power.encode(comps);
      for (std::size_t k = 0; k < exponent; ++k) comps[k] = h.heyting_arrow(a, gc[k]);
      i[a * na + g] = power.encode(comps);
    }
  }
  return FidlModule::validate(std::move(power.lattice), h, std::move(f), std::move(i));
}

}  // namespace fidl
