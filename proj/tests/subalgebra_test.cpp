#include <gtest/gtest.h>

#include "fidl/fixtures.hpp"
#include "fidl/fuzz.hpp"

using namespace fidl;
using fidl::fixtures::mod2;
using fidl::fixtures::modal_bool4;

namespace {

SubalgebraCandidate carriers(std::size_t na, std::initializer_list<Element> a, std::size_t nb,
                             std::initializer_list<Element> b) {
  SubalgebraCandidate c{Subset(na), Subset(nb)};
  for (Element x : a) c.carrier_a.insert(x);
  for (Element y : b) c.carrier_b.insert(y);
  return c;
}

// Closure of the carriers under f and i, read off the tables directly.
std::pair<bool, bool> closed_by_tables(const FidlModule& m, const SubalgebraCandidate& c) {
  bool f_ok = true, i_ok = true;
  for (Element x = 0; x < m.a().size(); ++x)
    for (Element b = 0; b < m.b().size(); ++b) {
      if (!c.carrier_a.contains(x) || !c.carrier_b.contains(b)) continue;
      f_ok = f_ok && c.carrier_a.contains(m.f(x, b));
      i_ok = i_ok && c.carrier_a.contains(m.i(b, x));
    }
  return {f_ok, i_ok};
}

void expect_checkers_agree(const FidlModule& m, const SubalgebraCandidate& c) {
  const SubalgebraVerdict d = validate_subalgebra_direct(m, c);
  const SubalgebraVerdict r = validate_subalgebra_relational(m, c);
  const auto [f_ok, i_ok] = closed_by_tables(m, c);
  EXPECT_EQ(d.fusion_closed, f_ok);
  EXPECT_EQ(d.implication_closed, i_ok);
  EXPECT_EQ(r.fusion_closed, f_ok);
  EXPECT_EQ(r.implication_closed, i_ok);
}

}  // namespace

TEST(Subalgebra, FullCarriers) {
  for (const auto& m : {mod2(), modal_bool4(), fixtures::heyting_module(fixtures::bool4())}) {
    const SubalgebraCandidate c{Subset::full(m.a().size()), Subset::full(m.b().size())};
    EXPECT_TRUE(validate_subalgebra_direct(m, c).subalgebra());
    EXPECT_TRUE(validate_subalgebra_relational(m, c).subalgebra());
  }
}

TEST(Subalgebra, BoundsOnlyInModalBoolean) {
  const FidlModule m = modal_bool4();
  const auto c = carriers(4, {0, 3}, 2, {0, 1});
  EXPECT_TRUE(validate_subalgebra_direct(m, c).subalgebra());
  expect_checkers_agree(m, c);
}

TEST(Subalgebra, HeytingChainThreeWithTwoElementCarrier) {
  // A' = {0,1}, B' = CHAIN3: f(1,m) = m leaves A', every i value stays in A'.
  const FidlModule m = fixtures::heyting_module(fixtures::chain3());
  const auto c = carriers(3, {0, 2}, 3, {0, 1, 2});
  const SubalgebraVerdict d = validate_subalgebra_direct(m, c);
  EXPECT_FALSE(d.fusion_closed);
  EXPECT_TRUE(d.implication_closed);
  expect_checkers_agree(m, c);
}

TEST(Subalgebra, NonSublatticeIsAnError) {
  try {
    validate_subalgebra_direct(mod2(), carriers(2, {1}, 2, {0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::carrier_not_sublattice);
    EXPECT_EQ(e.witness()["side"], "A");
  }
  try {
    validate_subalgebra_relational(modal_bool4(), carriers(4, {0, 1, 2, 3}, 2, {1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::carrier_not_sublattice);
  }
}

TEST(Subalgebra, RandomCarriersAgree) {
  Rng rng(3);
  RandomTablesStats stats;
  for (int k = 0; k < 60; ++k) {
    const FidlModule m = generate_module(rng, static_cast<Strategy>(k % 4), 6, 4, stats);
    expect_checkers_agree(m, random_carriers(rng, m));
  }
}
