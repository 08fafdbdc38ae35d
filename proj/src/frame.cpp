#include "fidl/frame.hpp"

namespace fidl {

namespace {

using Json = nlohmann::json;

std::optional<Json> relation_closure_failure(const char* name, const TernaryRelation& rel, const Poset& p1,
                                             const Poset& p2, const Poset& p3) {
  for (const auto& [a, b, c] : rel.triples()) {
    std::optional<Json> out;
    p1.down(a).for_each([&](std::size_t da) {
      if (out) return;
      p2.down(b).for_each([&](std::size_t db) {
        if (out) return;
        p3.up(c).for_each([&](std::size_t uc) {
          if (out) return;
          const auto ea = static_cast<Element>(da), eb = static_cast<Element>(db), ec = static_cast<Element>(uc);
          if (!rel.contains(ea, eb, ec))
            out = Json{{"relation", name}, {"triple", {a, b, c}}, {"lowered", {ea, eb, ec}}};
        });
      });
    });
    if (out) return out;
  }
  return std::nullopt;
}

Error condition_error(const char* name, Json witness) {
  witness["condition"] = name;
  return Error(ErrorCode::condition_violation, std::string("FI-morphism condition ") + name + " fails",
               std::move(witness));
}

// Index of a set in a spectrum; the callers only pass preimages of primes.
Element point_index(const Spectrum& s, const Subset& carrier, const char* what) {
  auto k = s.index_of(carrier);
  if (!k) throw Error(ErrorCode::precondition_failed, std::string(what) + " is not a prime filter");
  return *k;
}

Element upset_index(const IncreasingSetLattice& l, const Subset& s, const char* what) {
  auto k = l.index_of(s);
  if (!k) throw Error(ErrorCode::closure_violation, std::string(what) + " is not an increasing set");
  return *k;
}

}  // namespace

Subset TernaryRelation::third(Element a, Element b) const {
  Subset out(n3_);
  for (Element c = 0; c < n3_; ++c)
    if (contains(a, b, c)) out.insert(c);
  return out;
}

std::vector<Triple> TernaryRelation::triples() const {
  std::vector<Triple> out;
  out.reserve(count());
  bits_.for_each([&](std::size_t k) {
    const auto c = static_cast<Element>(k % n3_);
    const auto b = static_cast<Element>((k / n3_) % n2_);
    const auto a = static_cast<Element>(k / (n3_ * n2_));
    out.push_back({a, b, c});
  });
  return out;
}

FiFrame make_structure(Poset x, Poset y, const std::vector<Triple>& r, const std::vector<Triple>& t) {
  const std::size_t nx = x.size(), ny = y.size();
  FiFrame f{std::move(x), std::move(y), TernaryRelation(nx, ny, nx), TernaryRelation(ny, nx, nx)};
  for (const auto& [a, b, c] : r) {
    if (a >= nx || b >= ny || c >= nx)
      throw Error(ErrorCode::shape_mismatch, "R triple out of range", {{"relation", "R"}, {"triple", {a, b, c}}});
    f.r.insert(a, b, c);
  }
  for (const auto& [a, b, c] : t) {
    if (a >= ny || b >= nx || c >= nx)
      throw Error(ErrorCode::shape_mismatch, "T triple out of range", {{"relation", "T"}, {"triple", {a, b, c}}});
    f.t.insert(a, b, c);
  }
  return f;
}

std::optional<nlohmann::json> closure_failure(const FiFrame& f) {
  if (auto w = relation_closure_failure("R", f.r, f.x, f.y, f.x)) return w;
  return relation_closure_failure("T", f.t, f.y, f.x, f.x);
}

FiFrame validate_frame(FiFrame f) {
  if (auto w = closure_failure(f))
    throw Error(ErrorCode::closure_violation, "relation " + (*w)["relation"].get<std::string>() + " is not closed",
                *w);
  return f;
}

FiFrame validate_frame(Poset x, Poset y, const std::vector<Triple>& r, const std::vector<Triple>& t) {
  return validate_frame(make_structure(std::move(x), std::move(y), r, t));
}

Subset complex_fusion(const FiFrame& f, const Subset& u, const Subset& v) {
  Subset out(f.x.size());
  u.for_each([&](std::size_t x) {
    v.for_each([&](std::size_t y) { out |= f.r.third(static_cast<Element>(x), static_cast<Element>(y)); });
  });
  return out;
}

Subset complex_implication(const FiFrame& f, const Subset& v, const Subset& u) {
  Subset out(f.x.size());
  for (Element y = 0; y < f.x.size(); ++y) {
    bool ok = true;
    v.for_each([&](std::size_t x) { ok = ok && f.t.third(static_cast<Element>(x), y).is_subset_of(u); });
    if (ok) out.insert(y);
  }
  return out;
}

ComplexModule complex_module(const FiFrame& f) {
  const std::size_t limit = Budget::current().lattice_max;
  ComplexModule out{increasing_sets(f.x, limit), increasing_sets(f.y, limit), {}};
  const std::size_t na = out.up_x.sets.size(), nb = out.up_y.sets.size();
  std::vector<Element> fus(na * nb), imp(na * nb);
  for (Element u = 0; u < na; ++u)
    for (Element v = 0; v < nb; ++v) {
      fus[u * nb + v] = upset_index(out.up_x, complex_fusion(f, out.up_x.sets[u], out.up_y.sets[v]), "f_F(U,V)");
      imp[v * na + u] =
          upset_index(out.up_x, complex_implication(f, out.up_y.sets[v], out.up_x.sets[u]), "i_F(V,U)");
    }
  out.module = FidlModule::validate(out.up_x.lattice, out.up_y.lattice, std::move(fus), std::move(imp));
  return out;
}

CanonicalFrame canonical_frame(const FidlModule& m) {
  CanonicalFrame out{spectrum(m.a()), spectrum(m.b()), {}};
  const std::size_t nx = out.spec_a.size(), ny = out.spec_b.size();
  FiFrame f{out.spec_a.order, out.spec_b.order, TernaryRelation(nx, ny, nx), TernaryRelation(ny, nx, nx)};
  for (Element q = 0; q < nx; ++q)
    for (Element r = 0; r < ny; ++r) {
      const Subset fused = filter_extension(m, ExtensionMode::fusion, out.spec_a.points[q], out.spec_b.points[r]);
      const Subset implied =
          filter_extension(m, ExtensionMode::implication, out.spec_a.points[q], out.spec_b.points[r]);
      for (Element p = 0; p < nx; ++p) {
        if (fused.is_subset_of(out.spec_a.points[p])) f.r.insert(q, r, p);
        // here q plays the role of P in i(R, P) and p the role of Q
        if (implied.is_subset_of(out.spec_a.points[p])) f.t.insert(r, q, p);
      }
    }
  out.frame = std::move(f);
  return out;
}

MembershipReport membership_check(const FidlModule& m, const CanonicalFrame& c, Element x, Element b, Element p) {
  MembershipReport out;
  const auto& pa = c.spec_a.points;
  const auto& pb = c.spec_b.points;
  out.fusion_member = pa[p].contains(m.f(x, b));
  out.implication_member = pa[p].contains(m.i(b, x));
  for (Element q = 0; q < pa.size() && !out.fusion_witness; ++q)
    for (Element r = 0; r < pb.size(); ++r)
      if (c.frame.r.contains(q, r, p) && pa[q].contains(x) && pb[r].contains(b)) {
        out.fusion_witness = PrimePair{q, r};
        break;
      }
  out.fusion_relational = out.fusion_witness.has_value();
  for (Element r = 0; r < pb.size() && !out.implication_counterexample; ++r)
    for (Element q = 0; q < pa.size(); ++q)
      if (c.frame.t.contains(r, p, q) && pb[r].contains(b) && !pa[q].contains(x)) {
        out.implication_counterexample = PrimePair{q, r};
        break;
      }
  out.implication_relational = !out.implication_counterexample.has_value();
  return out;
}

std::optional<Error> fi_morphism_failure(const FiFrame& src, const FiFrame& tgt, const std::vector<Element>& g,
                                         const std::vector<Element>& h) {
  const std::size_t nx = src.x.size(), ny = src.y.size(), tx = tgt.x.size(), ty = tgt.y.size();
  if (g.size() != nx || h.size() != ny)
    return Error(ErrorCode::shape_mismatch, "map length does not match the source carrier",
                 {{"g", g.size()}, {"h", h.size()}, {"expected_g", nx}, {"expected_h", ny}});
  for (Element v : g)
    if (v >= tx) return Error(ErrorCode::shape_mismatch, "g value out of range", {{"value", v}});
  for (Element v : h)
    if (v >= ty) return Error(ErrorCode::shape_mismatch, "h value out of range", {{"value", v}});

  for (Element a = 0; a < nx; ++a)
    for (Element b = 0; b < nx; ++b)
      if (src.x.leq(a, b) && !tgt.x.leq(g[a], g[b]))
        return condition_error("monotone", {{"map", "g"}, {"x", a}, {"y", b}});
  for (Element a = 0; a < ny; ++a)
    for (Element b = 0; b < ny; ++b)
      if (src.y.leq(a, b) && !tgt.y.leq(h[a], h[b]))
        return condition_error("monotone", {{"map", "h"}, {"x", a}, {"y", b}});

  for (const auto& [x, y, z] : src.r.triples())
    if (!tgt.r.contains(g[x], h[y], g[z])) return condition_error("M1", {{"triple", {x, y, z}}});

  for (Element xb = 0; xb < tx; ++xb)
    for (Element yb = 0; yb < ty; ++yb)
      for (Element z = 0; z < nx; ++z) {
        if (!tgt.r.contains(xb, yb, g[z])) continue;
        bool found = false;
        for (Element x = 0; x < nx && !found; ++x)
          for (Element y = 0; y < ny && !found; ++y)
            found = src.r.contains(x, y, z) && tgt.x.leq(xb, g[x]) && tgt.y.leq(yb, h[y]);
        if (!found) return condition_error("M2", {{"x_bar", xb}, {"y_bar", yb}, {"z", z}});
      }

  for (const auto& [y, x, z] : src.t.triples())
    if (!tgt.t.contains(h[y], g[x], g[z])) return condition_error("N1", {{"triple", {y, x, z}}});

  for (Element yb = 0; yb < ty; ++yb)
    for (Element x = 0; x < nx; ++x)
      for (Element zb = 0; zb < tx; ++zb) {
        if (!tgt.t.contains(yb, g[x], zb)) continue;
        bool found = false;
        for (Element y = 0; y < ny && !found; ++y)
          for (Element z = 0; z < nx && !found; ++z)
            found = src.t.contains(y, x, z) && tgt.y.leq(yb, h[y]) && tgt.x.leq(g[z], zb);
        if (!found) return condition_error("N2", {{"y_bar", yb}, {"x", x}, {"z_bar", zb}});
      }
  return std::nullopt;
}

FiMorphism validate_fi_morphism(FiFrame src, FiFrame tgt, std::vector<Element> g, std::vector<Element> h) {
  if (auto e = fi_morphism_failure(src, tgt, g, h)) throw *e;
  return {std::move(src), std::move(tgt), std::move(g), std::move(h)};
}

FiMorphism identity_fi(const FiFrame& f) {
  std::vector<Element> g(f.x.size()), h(f.y.size());
  for (Element k = 0; k < g.size(); ++k) g[k] = k;
  for (Element k = 0; k < h.size(); ++k) h[k] = k;
  return {f, f, std::move(g), std::move(h)};
}

FiMorphism compose(const FiMorphism& second, const FiMorphism& first) {
  if (!(first.target == second.source)) throw Error(ErrorCode::target_mismatch, "FI-morphisms are not composable");
  std::vector<Element> g(first.g.size()), h(first.h.size());
  for (std::size_t k = 0; k < g.size(); ++k) g[k] = second.g[first.g[k]];
  for (std::size_t k = 0; k < h.size(); ++k) h[k] = second.h[first.h[k]];
  return {first.source, second.target, std::move(g), std::move(h)};
}

FiMorphism dual_of_hom(const FidlHomomorphism& hom, const CanonicalFrame& src, const CanonicalFrame& tgt) {
  auto preimage = [](const std::vector<Element>& map, const Subset& s) {
    Subset out(map.size());
    for (Element k = 0; k < map.size(); ++k)
      if (s.contains(map[k])) out.insert(k);
    return out;
  };
  std::vector<Element> g(tgt.spec_a.size()), h(tgt.spec_b.size());
  for (Element k = 0; k < g.size(); ++k)
    g[k] = point_index(src.spec_a, preimage(hom.alpha, tgt.spec_a.points[k]), "alpha preimage");
  for (Element k = 0; k < h.size(); ++k)
    h[k] = point_index(src.spec_b, preimage(hom.gamma, tgt.spec_b.points[k]), "gamma preimage");
  return validate_fi_morphism(tgt.frame, src.frame, std::move(g), std::move(h));
}

FiMorphism dual_of_hom(const FidlHomomorphism& hom) {
  return dual_of_hom(hom, canonical_frame(hom.source), canonical_frame(hom.target));
}

FidlHomomorphism dual_of_fi_morphism(const FiMorphism& m, const ComplexModule& src, const ComplexModule& tgt) {
  auto preimage = [](const std::vector<Element>& map, const Subset& s) {
    Subset out(map.size());
    for (Element k = 0; k < map.size(); ++k)
      if (s.contains(map[k])) out.insert(k);
    return out;
  };
  std::vector<Element> alpha(tgt.up_x.sets.size()), gamma(tgt.up_y.sets.size());
  for (Element k = 0; k < alpha.size(); ++k)
    alpha[k] = upset_index(src.up_x, preimage(m.g, tgt.up_x.sets[k]), "g preimage");
  for (Element k = 0; k < gamma.size(); ++k)
    gamma[k] = upset_index(src.up_y, preimage(m.h, tgt.up_y.sets[k]), "h preimage");
  return validate_hom(tgt.module, src.module, std::move(alpha), std::move(gamma));
}

FidlHomomorphism dual_of_fi_morphism(const FiMorphism& m) {
  return dual_of_fi_morphism(m, complex_module(m.source), complex_module(m.target));
}

FidlHomomorphism transpose_to_hom(const FidlModule& m, const CanonicalFrame& c, const FiMorphism& into) {
  const ComplexModule cm = complex_module(into.source);
  std::vector<Element> alpha(m.a().size()), gamma(m.b().size());
  for (Element a = 0; a < alpha.size(); ++a) {
    Subset s(into.g.size());
    for (Element x = 0; x < into.g.size(); ++x)
      if (c.spec_a.points[into.g[x]].contains(a)) s.insert(x);
    alpha[a] = upset_index(cm.up_x, s, "transpose of g");
  }
  for (Element b = 0; b < gamma.size(); ++b) {
    Subset s(into.h.size());
    for (Element y = 0; y < into.h.size(); ++y)
      if (c.spec_b.points[into.h[y]].contains(b)) s.insert(y);
    gamma[b] = upset_index(cm.up_y, s, "transpose of h");
  }
  return validate_hom(m, cm.module, std::move(alpha), std::move(gamma));
}

RepresentationReport representation_iso(const FidlModule& m) {
  const CanonicalFrame c = canonical_frame(m);
  const ComplexModule cm = complex_module(c.frame);
  std::vector<Element> alpha(m.a().size()), gamma(m.b().size());
  for (Element a = 0; a < alpha.size(); ++a) alpha[a] = upset_index(cm.up_x, beta(m.a(), c.spec_a, a), "beta(a)");
  for (Element b = 0; b < gamma.size(); ++b) gamma[b] = upset_index(cm.up_y, beta(m.b(), c.spec_b, b), "beta(b)");
  RepresentationReport out{validate_hom(m, cm.module, std::move(alpha), std::move(gamma)), false, std::nullopt};
  try {
    IsoReport iso = is_iso(out.beta);
    out.iso = iso.iso;
    out.inverse = std::move(iso.inverse);
  } catch (const Error&) {
    out.iso = false;
  }
  return out;
}

CounitReport counit_iso(const FiFrame& f) {
  const ComplexModule cm = complex_module(f);
  const CanonicalFrame c = canonical_frame(cm.module);
  auto epsilon = [](const IncreasingSetLattice& ups, Element point) {
    Subset s(ups.sets.size());
    for (Element k = 0; k < ups.sets.size(); ++k)
      if (ups.sets[k].contains(point)) s.insert(k);
    return s;
  };
  std::vector<Element> g(f.x.size()), h(f.y.size());
  for (Element x = 0; x < g.size(); ++x) g[x] = point_index(c.spec_a, epsilon(cm.up_x, x), "eps_X(x)");
  for (Element y = 0; y < h.size(); ++y) h[y] = point_index(c.spec_b, epsilon(cm.up_y, y), "eps_Y(y)");
  CounitReport out{validate_fi_morphism(f, c.frame, g, h), false, std::nullopt};
  auto gi = invert_map(g, c.spec_a.size());
  auto hi = invert_map(h, c.spec_b.size());
  if (!gi || !hi) return out;
  if (fi_morphism_failure(c.frame, f, *gi, *hi)) return out;
  out.inverse = FiMorphism{c.frame, f, std::move(*gi), std::move(*hi)};
  out.iso = true;
  return out;
}

bool UrquhartReport::pass() const {
  for (const auto& c : conditions)
    if (!c.pass) return false;
  return true;
}

UrquhartReport urquhart_check(const FiFrame& f) {
  UrquhartReport out;
  out.reading = "f and i in (4) and (5) are the filter extensions of the complex module";
  const std::size_t nx = f.x.size(), ny = f.y.size();
  out.conditions.push_back({"1", true, Json::object()});
  const bool shapes = f.r.dim(0) == nx && f.r.dim(1) == ny && f.r.dim(2) == nx && f.t.dim(0) == ny &&
                      f.t.dim(1) == nx && f.t.dim(2) == nx;
  out.conditions.push_back({"2", shapes, shapes ? Json::object() : Json{{"reason", "relation dimensions"}}});
  if (!shapes) return out;

  const std::size_t limit = Budget::current().lattice_max;
  const IncreasingSetLattice ux = increasing_sets(f.x, limit);
  const IncreasingSetLattice uy = increasing_sets(f.y, limit);
  ConditionResult c3{"3", true, Json::object()};
  for (Element u = 0; u < ux.sets.size() && c3.pass; ++u)
    for (Element v = 0; v < uy.sets.size() && c3.pass; ++v) {
      if (!f.x.is_increasing(complex_fusion(f, ux.sets[u], uy.sets[v])))
        c3 = {"3", false, {{"operation", "f"}, {"U", ux.lattice.label(u)}, {"V", uy.lattice.label(v)}}};
      else if (!f.x.is_increasing(complex_implication(f, uy.sets[v], ux.sets[u])))
        c3 = {"3", false, {{"operation", "i"}, {"V", uy.lattice.label(v)}, {"U", ux.lattice.label(u)}}};
    }
  out.conditions.push_back(c3);

  // eps(p) is the principal filter of the upset lattice generated by up(p);
  // f is monotone and i antitone in that argument, so the principal
  // generators decide both containments.
  ConditionResult c4{"4", true, Json::object()};
  ConditionResult c5{"5", true, Json::object()};
  for (Element x = 0; x < ny; ++x)
    for (Element y = 0; y < nx; ++y) {
      const Subset fused = f.x.up_closure(complex_fusion(f, f.x.up(y), f.y.up(x)));
      for (Element z = 0; z < nx; ++z) {
        if (c4.pass && fused.contains(z) && !f.r.contains(y, x, z))
          c4 = {"4", false, {{"y", y}, {"x", x}, {"z", z}}};
        if (!c5.pass) continue;
        bool contained = true;
        for (Element w = 0; w < ux.sets.size() && contained; ++w) {
          const Subset& ws = ux.sets[w];
          if (f.x.up(y).is_subset_of(complex_implication(f, f.y.up(x), ws)) && !ws.contains(z)) contained = false;
        }
        if (contained && !f.t.contains(x, y, z)) c5 = {"5", false, {{"x", x}, {"y", y}, {"z", z}}};
      }
    }
  out.conditions.push_back(c4);
  out.conditions.push_back(c5);
  return out;
}

}  // namespace fidl
