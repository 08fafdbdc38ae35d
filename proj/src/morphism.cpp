#include "fidl/morphism.hpp"

#include <algorithm>

namespace fidl {

std::optional<Error> hom_failure(const FidlModule& src, const FidlModule& tgt,
                                 const std::vector<Element>& alpha, const std::vector<Element>& gamma) {
  if (alpha.size() != src.a().size() || gamma.size() != src.b().size())
    return Error(ErrorCode::shape_mismatch, "map length does not match the source carrier",
                 {{"alpha", alpha.size()}, {"gamma", gamma.size()},
                  {"expected_alpha", src.a().size()}, {"expected_gamma", src.b().size()}});
  for (Element v : alpha)
    if (v >= tgt.a().size()) return Error(ErrorCode::shape_mismatch, "alpha value out of range", {{"value", v}});
  for (Element v : gamma)
    if (v >= tgt.b().size()) return Error(ErrorCode::shape_mismatch, "gamma value out of range", {{"value", v}});

  if (auto w = lattice_hom_failure(src.a(), tgt.a(), alpha)) {
    (*w)["side"] = "A";
    return Error(ErrorCode::not_lattice_hom, "alpha is not a bounded lattice homomorphism", *w);
  }
  if (auto w = lattice_hom_failure(src.b(), tgt.b(), gamma)) {
    (*w)["side"] = "B";
    return Error(ErrorCode::not_lattice_hom, "gamma is not a bounded lattice homomorphism", *w);
  }
  for (Element x = 0; x < src.a().size(); ++x)
    for (Element b = 0; b < src.b().size(); ++b)
      if (alpha[src.f(x, b)] != tgt.f(alpha[x], gamma[b]))
        return Error(ErrorCode::square_violation, "fusion square does not commute",
                     {{"square", "fusion"}, {"x", x}, {"b", b}});
  for (Element b = 0; b < src.b().size(); ++b)
    for (Element x = 0; x < src.a().size(); ++x)
      if (alpha[src.i(b, x)] != tgt.i(gamma[b], alpha[x]))
        return Error(ErrorCode::square_violation, "implication square does not commute",
                     {{"square", "implication"}, {"b", b}, {"x", x}});
  return std::nullopt;
}

FidlHomomorphism validate_hom(FidlModule src, FidlModule tgt, std::vector<Element> alpha,
                              std::vector<Element> gamma) {
  if (auto e = hom_failure(src, tgt, alpha, gamma)) throw *e;
  return {std::move(src), std::move(tgt), std::move(alpha), std::move(gamma)};
}

FidlHomomorphism identity_hom(const FidlModule& m) {
  std::vector<Element> a(m.a().size()), b(m.b().size());
  for (Element k = 0; k < a.size(); ++k) a[k] = k;
  for (Element k = 0; k < b.size(); ++k) b[k] = k;
  return {m, m, std::move(a), std::move(b)};
}

FidlHomomorphism compose(const FidlHomomorphism& second, const FidlHomomorphism& first) {
  if (!(first.target == second.source))
    throw Error(ErrorCode::target_mismatch, "homomorphisms are not composable");
  std::vector<Element> a(first.alpha.size()), b(first.gamma.size());
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = second.alpha[first.alpha[k]];
  for (std::size_t k = 0; k < b.size(); ++k) b[k] = second.gamma[first.gamma[k]];
  return {first.source, second.target, std::move(a), std::move(b)};
}

std::optional<std::vector<Element>> invert_map(const std::vector<Element>& map, std::size_t target_size) {
  if (map.size() != target_size) return std::nullopt;
  std::vector<Element> inv(target_size, static_cast<Element>(target_size));
  for (Element k = 0; k < map.size(); ++k) {
    if (inv[map[k]] != target_size) return std::nullopt;
    inv[map[k]] = k;
  }
  return inv;
}

bool is_injective(const std::vector<Element>& map) {
  std::vector<Element> sorted = map;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool is_surjective(const std::vector<Element>& map, std::size_t target_size) {
  std::vector<bool> hit(target_size, false);
  for (Element v : map) hit[v] = true;
  return std::find(hit.begin(), hit.end(), false) == hit.end();
}

IsoReport is_iso(const FidlHomomorphism& hom) {
  auto a = invert_map(hom.alpha, hom.target.a().size());
  auto b = invert_map(hom.gamma, hom.target.b().size());
  if (!a || !b) return {};
  return {true, validate_hom(hom.target, hom.source, std::move(*a), std::move(*b))};
}

}  // namespace fidl
