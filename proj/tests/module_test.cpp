#include <gtest/gtest.h>

#include <algorithm>

#include "fidl/fixtures.hpp"

using namespace fidl;
using fidl::fixtures::bool4;
using fidl::fixtures::chain2;
using fidl::fixtures::chain3;
using fidl::fixtures::mod2;
using fidl::fixtures::modal_bool4;

namespace {

Subset set_of(std::size_t n, std::initializer_list<Element> xs) {
  Subset s(n);
  for (Element x : xs) s.insert(x);
  return s;
}

std::vector<Element> flat(const std::vector<std::vector<Element>>& rows) {
  std::vector<Element> out;
  for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

// Extension read straight off the definition, without the library helper.
Subset extension_by_definition(const FidlModule& m, ExtensionMode mode, const Subset& g, const Subset& h) {
  Subset out(m.a().size());
  for (Element x = 0; x < m.a().size(); ++x)
    g.for_each([&](std::size_t gg) {
      h.for_each([&](std::size_t hh) {
        const auto a = static_cast<Element>(gg);
        const auto b = static_cast<Element>(hh);
        if (mode == ExtensionMode::fusion ? m.a().leq(m.f(a, b), x) : m.a().leq(a, m.i(b, x))) out.insert(x);
      });
    });
  return out;
}

}  // namespace

TEST(Axioms, ModTwoIsValid) {
  const FidlModule m = mod2();
  EXPECT_TRUE(FidlModule::check_axioms(m.a(), m.b(), m.fusion_table(), m.implication_table()).empty());
  EXPECT_EQ(m.f(1, 1), 1u);
  EXPECT_EQ(m.i(1, 0), 0u);
  EXPECT_EQ(m.i(0, 0), 1u);
}

TEST(Axioms, BrokenThirdImplicationAxiomIsReported) {
  const FidlModule m = mod2();
  auto i = m.implication_table();
  i[1 * 2 + 1] = 0;
  try {
    FidlModule::validate(m.a(), m.b(), m.fusion_table(), i);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::axiom_violation);
    ASSERT_TRUE(e.witness().is_array());
    bool found = false;
    for (const auto& w : e.witness())
      if (w["axiom"] == "I3") {
        EXPECT_EQ(w["b"], 1);
        found = true;
      }
    EXPECT_TRUE(found);
  }
}

TEST(Axioms, ModalBooleanExampleFromTables) {
  // f(x,1)=x, f(x,0)=0, i(1,x)=x, i(0,x)=1.
  const FidlModule m = FidlModule::validate(bool4(), chain2(), flat({{0, 0}, {0, 1}, {0, 2}, {0, 3}}),
                                            flat({{3, 3, 3, 3}, {0, 1, 2, 3}}));
  EXPECT_EQ(m, modal_bool4());
}

TEST(Axioms, ShapeMismatch) {
  try {
    FidlModule::validate(chain2(), chain2(), {0, 0, 0}, {1, 1, 0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::shape_mismatch);
  }
}

TEST(Sections, ModTwo) {
  const FidlModule m = mod2();
  EXPECT_EQ(section_f(m, 1), (std::vector<Element>{0, 1}));
  EXPECT_EQ(section_f(m, 0), (std::vector<Element>{0, 0}));
  EXPECT_EQ(section_i(m, 0), (std::vector<Element>{1, 1}));
}

TEST(Monotonicity, HoldsOnFixtures) {
  for (const auto& m : {mod2(), modal_bool4(), fixtures::heyting_module(chain3())}) EXPECT_FALSE(monotonicity_failure(m));
}

TEST(FilterExtension, Examples) {
  const FidlModule m = mod2();
  EXPECT_EQ(filter_extension(m, ExtensionMode::fusion, set_of(2, {1}), set_of(2, {1})), set_of(2, {1}));
  EXPECT_EQ(filter_extension(m, ExtensionMode::implication, Subset::full(2), set_of(2, {1})), Subset::full(2));
  const FidlModule modal = modal_bool4();
  EXPECT_EQ(filter_extension(modal, ExtensionMode::fusion, set_of(4, {1, 3}), set_of(2, {1})), set_of(4, {1, 3}));
}

TEST(FilterExtension, AgreesWithDefinitionAndIsAFilter) {
  for (const auto& m : {mod2(), modal_bool4(), fixtures::heyting_module(chain3()), fixtures::heyting_module(bool4())})
    for (ExtensionMode mode : {ExtensionMode::fusion, ExtensionMode::implication})
      for (const Subset& g : enumerate_filters(m.a()))
        for (const Subset& h : enumerate_filters(m.b())) {
          const Subset e = filter_extension(m, mode, g, h);
          EXPECT_EQ(e, extension_by_definition(m, mode, g, h));
          EXPECT_TRUE(is_filter(m.a(), e));
        }
}

TEST(PrimeExtension, ModTwo) {
  const FidlModule m = mod2();
  const auto w = extend_to_primes(m, ExtensionMode::fusion, set_of(2, {1}), set_of(2, {1}), set_of(2, {1}));
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (PrimePair{0, 0}));
  try {
    extend_to_primes(m, ExtensionMode::fusion, Subset::full(2), set_of(2, {1}), set_of(2, {1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::precondition_failed);
  }
}

TEST(PrimeExtension, ModalBoolean) {
  const FidlModule m = modal_bool4();
  const Spectrum sa = spectrum(m.a()), sb = spectrum(m.b());
  const Subset pa = set_of(4, {1, 3});
  const auto w = extend_to_primes(m, ExtensionMode::fusion, pa, set_of(2, {1}), pa, sa, sb);
  ASSERT_TRUE(w);
  EXPECT_EQ(sa.points[w->q], pa);
  EXPECT_EQ(sb.points[w->r], set_of(2, {1}));
}

TEST(Membership, ModTwoExamples) {
  const FidlModule m = mod2();
  const CanonicalFrame c = canonical_frame(m);
  const MembershipReport one = membership_check(m, c, 1, 1, 0);
  EXPECT_TRUE(one.fusion_member);
  EXPECT_TRUE(one.fusion_relational);
  ASSERT_TRUE(one.fusion_witness);
  EXPECT_EQ(*one.fusion_witness, (PrimePair{0, 0}));
  EXPECT_TRUE(one.implication_member);
  EXPECT_TRUE(one.implication_relational);
  const MembershipReport zero = membership_check(m, c, 0, 1, 0);
  EXPECT_FALSE(zero.fusion_member);
  EXPECT_FALSE(zero.fusion_relational);
  EXPECT_FALSE(zero.fusion_witness);
}

TEST(Membership, BothSidesAgreeOnFixtures) {
  for (const auto& m : {mod2(), modal_bool4(), fixtures::heyting_module(chain3()), fixtures::heyting_module(bool4())}) {
    const CanonicalFrame c = canonical_frame(m);
    for (Element x = 0; x < m.a().size(); ++x)
      for (Element b = 0; b < m.b().size(); ++b)
        for (Element p = 0; p < c.spec_a.size(); ++p) EXPECT_TRUE(membership_check(m, c, x, b, p).agrees());
  }
}

TEST(Membership, NeedsImplicationToBeTopAtBottom) {
  // i(b,x) = x for every b satisfies I1-I3, yet i(0,x) = 1 fails. The
  // relational side quantifies over primes containing 0, of which there are
  // none, so it is always true and the equivalence breaks at b = 0.
  const FidlModule m = FidlModule::validate(chain2(), chain2(), flat({{0, 0}, {0, 1}}), flat({{0, 1}, {0, 1}}));
  const CanonicalFrame c = canonical_frame(m);
  const MembershipReport r = membership_check(m, c, 0, 0, 0);
  EXPECT_FALSE(r.implication_member);
  EXPECT_TRUE(r.implication_relational);
  bool iso = false;
  try {
    iso = representation_iso(m).iso;
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::square_violation);
  }
  EXPECT_FALSE(iso);
}

TEST(FusionImplication, ModTwoIsResiduated) {
  const auto fi = as_fusion_implication_algebra(mod2());
  EXPECT_TRUE(fi.failed_identities.empty());
  EXPECT_TRUE(fi.residuated);
  EXPECT_EQ(fi.fusion, (std::vector<Element>{0, 0, 0, 1}));
}

TEST(FusionImplication, HeytingChainThreeIsResiduated) {
  const FidlModule m = fixtures::heyting_module(chain3());
  const auto fi = as_fusion_implication_algebra(m);
  EXPECT_TRUE(fi.residuated);
  int agree = 0;
  for (Element x = 0; x < 3; ++x)
    for (Element y = 0; y < 3; ++y)
      for (Element z = 0; z < 3; ++z)
        agree += m.a().leq(m.f(x, y), z) == m.a().leq(x, m.i(y, z));
  EXPECT_EQ(agree, 27);
}

TEST(FusionImplication, ConstantTopImplicationIsNotResiduated) {
  const FidlModule m = FidlModule::validate(chain2(), chain2(), flat({{0, 0}, {0, 1}}), flat({{1, 1}, {1, 1}}));
  const auto fi = as_fusion_implication_algebra(m);
  EXPECT_TRUE(fi.failed_identities.empty());
  EXPECT_FALSE(fi.residuated);
  ASSERT_TRUE(fi.residuation_counterexample);
}

TEST(FusionImplication, SortMismatch) {
  try {
    as_fusion_implication_algebra(modal_bool4());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::sort_mismatch);
  }
}

TEST(Modal, IdentityOperators) {
  for (const auto& m : {modal_bool4(), mod2()}) {
    const ModalLattice ml = as_modal_lattice(m);
    EXPECT_TRUE(ml.failed_laws.empty());
    for (Element x = 0; x < m.a().size(); ++x) {
      EXPECT_EQ(ml.diamond[x], x);
      EXPECT_EQ(ml.box[x], x);
    }
  }
}

TEST(Modal, CollapsingDiamond) {
  // f(x,1) = 1 for x != 0 on BOOL4; i(1,x) = 1 iff x = 1 else 0 is its box partner.
  const FidlModule m = FidlModule::validate(bool4(), chain2(), flat({{0, 0}, {0, 3}, {0, 3}, {0, 3}}),
                                            flat({{3, 3, 3, 3}, {0, 0, 0, 3}}));
  const ModalLattice ml = as_modal_lattice(m);
  EXPECT_TRUE(ml.failed_laws.empty());
  EXPECT_EQ(ml.diamond, (std::vector<Element>{0, 3, 3, 3}));
}

TEST(HeytingPower, ChainTwoSingleIndexIsModTwo) {
  const FidlModule m = heyting_power_module(chain2(), 1);
  EXPECT_EQ(m.fusion_table(), mod2().fusion_table());
  EXPECT_EQ(m.implication_table(), mod2().implication_table());
}

TEST(HeytingPower, ChainTwoSquared) {
  const FidlModule m = heyting_power_module(chain2(), 2);
  EXPECT_EQ(m.a().size(), 4u);
  EXPECT_EQ(m.b().size(), 2u);
  EXPECT_EQ(spectrum(m.a()).size(), 2u);
  EXPECT_TRUE(FidlModule::check_axioms(m.a(), m.b(), m.fusion_table(), m.implication_table()).empty());
}

TEST(HeytingPower, ChainThreeArrow) {
  const FidlModule m = heyting_power_module(chain3(), 1);
  // a -> b = max{c : a /\ c <= b}, computed here by scanning the chain.
  for (Element a = 0; a < 3; ++a)
    for (Element b = 0; b < 3; ++b) {
      Element best = 0;
      for (Element c = 0; c < 3; ++c)
        if (std::min(a, c) <= b) best = c;
      EXPECT_EQ(m.i(a, b), best);
      EXPECT_EQ(m.f(b, a), std::min(a, b));
    }
}

TEST(HeytingPower, EmptyBaseAndBudget) {
  try {
    heyting_power_module(chain2(), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::empty_base);
  }
  try {
    heyting_power_module(chain2(), 13);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::budget_exceeded);
  }
}
