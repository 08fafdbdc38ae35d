#include "fidl/subalgebra.hpp"

namespace fidl {

namespace {

using Json = nlohmann::json;

std::optional<Json> sublattice_failure(const FiniteLattice& l, const Subset& s) {
  if (s.universe() != l.size()) return Json{{"law", "size"}, {"expected", l.size()}, {"actual", s.universe()}};
  if (!s.contains(l.bottom())) return Json{{"law", "bottom"}};
  if (!s.contains(l.top())) return Json{{"law", "top"}};
  std::optional<Json> out;
  s.for_each([&](std::size_t a) {
    s.for_each([&](std::size_t b) {
      if (out) return;
      const auto x = static_cast<Element>(a), y = static_cast<Element>(b);
      if (!s.contains(l.meet(x, y))) out = Json{{"law", "meet"}, {"x", x}, {"y", y}};
      else if (!s.contains(l.join(x, y))) out = Json{{"law", "join"}, {"x", x}, {"y", y}};
    });
  });
  return out;
}

}  // namespace

void require_sublattices(const FidlModule& m, const SubalgebraCandidate& c) {
  if (auto w = sublattice_failure(m.a(), c.carrier_a)) {
    (*w)["side"] = "A";
    throw Error(ErrorCode::carrier_not_sublattice, "carrier of A is not a bounded sublattice", *w);
  }
  if (auto w = sublattice_failure(m.b(), c.carrier_b)) {
    (*w)["side"] = "B";
    throw Error(ErrorCode::carrier_not_sublattice, "carrier of B is not a bounded sublattice", *w);
  }
}

SubalgebraVerdict validate_subalgebra_direct(const FidlModule& m, const SubalgebraCandidate& c) {
  require_sublattices(m, c);
  SubalgebraVerdict out{true, true, Json::object(), Json::object()};
  c.carrier_a.for_each([&](std::size_t xs) {
    c.carrier_b.for_each([&](std::size_t bs) {
      const auto x = static_cast<Element>(xs), b = static_cast<Element>(bs);
      if (out.fusion_closed && !c.carrier_a.contains(m.f(x, b))) {
        out.fusion_closed = false;
        out.fusion_witness = {{"x", x}, {"b", b}, {"value", m.f(x, b)}};
      }
      if (out.implication_closed && !c.carrier_a.contains(m.i(b, x))) {
        out.implication_closed = false;
        out.implication_witness = {{"b", b}, {"x", x}, {"value", m.i(b, x)}};
      }
    });
  });
  return out;
}

SubalgebraVerdict validate_subalgebra_relational(const FidlModule& m, const SubalgebraCandidate& c,
                                                 const CanonicalFrame& frame) {
  require_sublattices(m, c);
  const auto& pa = frame.spec_a.points;
  const auto& pb = frame.spec_b.points;
  const auto& r = frame.frame.r;
  const auto& t = frame.frame.t;
  const auto na = static_cast<Element>(pa.size()), nb = static_cast<Element>(pb.size());
  auto within = [](const Subset& s, const Subset& carrier, const Subset& target) {
    return (s & carrier).is_subset_of(target);
  };
  SubalgebraVerdict out{true, true, Json::object(), Json::object()};

  for (Element p = 0; p < na; ++p)
    for (Element q = 0; q < na; ++q) {
      if (!within(pa[p], c.carrier_a, pa[q])) continue;
      for (Element q1 = 0; q1 < na; ++q1)
        for (Element r1 = 0; r1 < nb; ++r1) {
          if (out.fusion_closed && r.contains(q1, r1, p)) {
            bool found = false;
            for (Element q2 = 0; q2 < na && !found; ++q2)
              for (Element r2 = 0; r2 < nb && !found; ++r2)
                found = within(pa[q1], c.carrier_a, pa[q2]) && within(pb[r1], c.carrier_b, pb[r2]) &&
                        r.contains(q2, r2, q);
            if (!found) {
              out.fusion_closed = false;
              out.fusion_witness = {{"P", p}, {"Q", q}, {"Q1", q1}, {"R1", r1}};
            }
          }
          if (out.implication_closed && t.contains(r1, q, q1)) {
            bool found = false;
            for (Element q2 = 0; q2 < na && !found; ++q2)
              for (Element r2 = 0; r2 < nb && !found; ++r2)
                found = within(pa[q2], c.carrier_a, pa[q1]) && within(pb[r1], c.carrier_b, pb[r2]) &&
                        t.contains(r2, p, q2);
            if (!found) {
              out.implication_closed = false;
              out.implication_witness = {{"P", p}, {"Q", q}, {"Q1", q1}, {"R1", r1}};
            }
          }
        }
    }
  return out;
}

SubalgebraVerdict validate_subalgebra_relational(const FidlModule& m, const SubalgebraCandidate& c) {
  return validate_subalgebra_relational(m, c, canonical_frame(m));
}

}  // namespace fidl
