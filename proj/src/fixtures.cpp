#include "fidl/fixtures.hpp"

namespace fidl::fixtures {

namespace {

std::vector<std::vector<bool>> order_closure(std::size_t n, const std::vector<std::pair<Element, Element>>& below) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t k = 0; k < n; ++k) leq[k][k] = true;
  for (const auto& [a, b] : below) leq[a][b] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (leq[a][k] && leq[k][b]) leq[a][b] = true;
  return leq;
}

}  // namespace

FiniteLattice lattice_from_pairs(std::vector<std::string> labels,
                                 const std::vector<std::pair<Element, Element>>& below) {
  const auto leq = order_closure(labels.size(), below);
  return FiniteLattice::validate(std::move(labels), leq);
}

FiniteLattice chain2() { return lattice_from_pairs({"0", "1"}, {{0, 1}}); }

FiniteLattice chain3() { return lattice_from_pairs({"0", "m", "1"}, {{0, 1}, {1, 2}}); }

FiniteLattice bool4() { return lattice_from_pairs({"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

std::pair<std::vector<std::string>, std::vector<std::vector<bool>>> m3_table() {
  return {{"0", "a", "b", "c", "1"}, order_closure(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}})};
}

FidlModule heyting_module(const FiniteLattice& l) {
  const auto n = static_cast<Element>(l.size());
  std::vector<Element> f(n * n), i(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element b = 0; b < n; ++b) {
      f[x * n + b] = l.meet(x, b);
      i[b * n + x] = l.heyting_arrow(b, x);
    }
  return FidlModule::validate(l, l, std::move(f), std::move(i));
}

FidlModule mod2() { return heyting_module(chain2()); }

FidlModule modal_bool4() {
  const FiniteLattice a = bool4();
  std::vector<Element> f(8), i(8);
  for (Element x = 0; x < 4; ++x) {
    f[x * 2 + 0] = a.bottom();
    f[x * 2 + 1] = x;
    i[0 * 4 + x] = a.top();
    i[1 * 4 + x] = x;
  }
  return FidlModule::validate(a, chain2(), std::move(f), std::move(i));
}

FiFrame ptframe() {
  const Poset pt = Poset::from_upsets({"pt"}, {Subset::full(1)});
  return validate_frame(pt, pt, {{0, 0, 0}}, {{0, 0, 0}});
}

}  // namespace fidl::fixtures
