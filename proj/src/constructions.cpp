#include "fidl/constructions.hpp"

namespace fidl {

FidlModule trivial_module() {
  const FiniteLattice one = FiniteLattice::from_poset(Poset::from_upsets({"0"}, {Subset::full(1)}));
  return FidlModule::validate(one, one, {0}, {0});
}

FidlHomomorphism restriction_module(const FidlModule& m, const FiniteLattice& c, const std::vector<Element>& h) {
  if (h.size() != c.size())
    throw Error(ErrorCode::not_a_homomorphism, "h is not total on C", {{"expected", c.size()}, {"actual", h.size()}});
  for (Element v : h)
    if (v >= m.b().size()) throw Error(ErrorCode::not_a_homomorphism, "h leaves B", {{"value", v}});
  if (auto w = lattice_hom_failure(c, m.b(), h))
    throw Error(ErrorCode::not_a_homomorphism, "h is not a bounded lattice homomorphism", *w);

  const std::size_t na = m.a().size(), nc = c.size();
  std::vector<Element> f(na * nc), i(na * nc);
  for (Element x = 0; x < na; ++x)
    for (Element k = 0; k < nc; ++k) {
      f[x * nc + k] = m.f(x, h[k]);
      i[k * na + x] = m.i(h[k], x);
    }
  FidlModule n = FidlModule::validate(m.a(), c, std::move(f), std::move(i));
  std::vector<Element> id(na);
  for (Element x = 0; x < na; ++x) id[x] = x;
  return validate_hom(std::move(n), m, std::move(id), h);
}

ProductModule product_module(const std::vector<FidlModule>& members) {
  if (members.empty()) throw Error(ErrorCode::empty_base, "product of an empty family");
  const std::size_t limit = Budget::current().lattice_max;
  std::vector<const FiniteLattice*> fa, fb;
  for (const auto& m : members) {
    fa.push_back(&m.a());
    fb.push_back(&m.b());
  }
  ProductModule out;
  out.a = product_lattice(fa, limit);
  out.b = product_lattice(fb, limit);
  const std::size_t na = out.a.lattice.size(), nb = out.b.lattice.size(), k = members.size();
  std::vector<Element> f(na * nb), i(na * nb), tmp(k);
  for (Element x = 0; x < na; ++x) {
    const auto xc = out.a.decode(x);
    for (Element b = 0; b < nb; ++b) {
      const auto bc = out.b.decode(b);
      for (std::size_t j = 0; j < k; ++j) tmp[j] = members[j].f(xc[j], bc[j]);
      f[x * nb + b] = out.a.encode(tmp);
      for (std::size_t j = 0; j < k; ++j) tmp[j] = members[j].i(bc[j], xc[j]);
      i[b * na + x] = out.a.encode(tmp);
    }
  }
  out.module = FidlModule::validate(out.a.lattice, out.b.lattice, std::move(f), std::move(i));
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Element> pa(na), pb(nb);
    for (Element x = 0; x < na; ++x) pa[x] = out.a.component(x, j);
    for (Element b = 0; b < nb; ++b) pb[b] = out.b.component(b, j);
    out.projections.push_back(validate_hom(out.module, members[j], std::move(pa), std::move(pb)));
  }
  return out;
}

FidlHomomorphism pairing(const ProductModule& product, const std::vector<FidlHomomorphism>& cone) {
  if (cone.size() != product.projections.size())
    throw Error(ErrorCode::target_mismatch, "cone size differs from the number of factors",
                {{"cone", cone.size()}, {"factors", product.projections.size()}});
  if (cone.empty()) throw Error(ErrorCode::empty_base, "empty cone");
  const FidlModule& src = cone.front().source;
  for (std::size_t j = 0; j < cone.size(); ++j) {
    if (!(cone[j].source == src)) throw Error(ErrorCode::target_mismatch, "cone legs have different sources", {{"leg", j}});
    if (!(cone[j].target == product.projections[j].target))
      throw Error(ErrorCode::target_mismatch, "cone leg does not land in its factor", {{"leg", j}});
  }
  std::vector<Element> alpha(src.a().size()), gamma(src.b().size()), tmp(cone.size());
  for (Element x = 0; x < alpha.size(); ++x) {
    for (std::size_t j = 0; j < cone.size(); ++j) tmp[j] = cone[j].alpha[x];
    alpha[x] = product.a.encode(tmp);
  }
  for (Element b = 0; b < gamma.size(); ++b) {
    for (std::size_t j = 0; j < cone.size(); ++j) tmp[j] = cone[j].gamma[b];
    gamma[b] = product.b.encode(tmp);
  }
  return validate_hom(src, product.module, std::move(alpha), std::move(gamma));
}

SubdirectReport check_subdirect_embedding(const FidlModule& m, const std::vector<FidlModule>& factors,
                                          const FidlHomomorphism& hom) {
  const ProductModule product = product_module(factors);
  if (!(hom.target == product.module))
    throw Error(ErrorCode::target_mismatch, "homomorphism target is not the product of the factors");
  if (!(hom.source == m)) throw Error(ErrorCode::target_mismatch, "homomorphism source is not the given module");
  SubdirectReport out;
  out.injective = is_injective(hom.alpha) && is_injective(hom.gamma);
  bool all_onto = true;
  for (const auto& pi : product.projections) {
    const FidlHomomorphism leg = compose(pi, hom);
    const bool onto = is_surjective(leg.alpha, pi.target.a().size()) && is_surjective(leg.gamma, pi.target.b().size());
    out.onto.push_back(onto);
    all_onto = all_onto && onto;
  }
  out.subdirect = out.injective && all_onto;
  return out;
}

}  // namespace fidl
