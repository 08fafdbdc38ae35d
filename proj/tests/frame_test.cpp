#include <gtest/gtest.h>

#include <algorithm>

#include "fidl/constructions.hpp"
#include "fidl/fixtures.hpp"

using namespace fidl;
using fidl::fixtures::mod2;
using fidl::fixtures::modal_bool4;
using fidl::fixtures::ptframe;

namespace {

std::vector<Triple> all_triples(std::size_t n1, std::size_t n2, std::size_t n3) {
  std::vector<Triple> out;
  for (Element a = 0; a < n1; ++a)
    for (Element b = 0; b < n2; ++b)
      for (Element c = 0; c < n3; ++c) out.push_back({a, b, c});
  return out;
}

// X = 2-chain, Y = point, R and T full.
FiFrame full_chain_frame() {
  return validate_frame(Poset::chain(2), Poset::chain(1), all_triples(2, 1, 2), all_triples(1, 2, 2));
}

FiFrame empty_frame() { return make_structure(Poset::from_upsets({}, {}), Poset::from_upsets({}, {}), {}, {}); }

bool same_structure(const FiFrame& a, const FiFrame& b) {
  return a.x.table() == b.x.table() && a.y.table() == b.y.table() && a.r == b.r && a.t == b.t;
}

}  // namespace

TEST(Frame, PointFrameIsValid) {
  const FiFrame f = ptframe();
  EXPECT_FALSE(closure_failure(f));
  EXPECT_TRUE(f.r.contains(0, 0, 0));
  EXPECT_TRUE(f.t.contains(0, 0, 0));
}

TEST(Frame, MissingDownwardTriplesAreReported) {
  // R = {(y, pt, x)} with x < y needs (x,pt,x), (x,pt,y) and (y,pt,y) as well.
  try {
    validate_frame(Poset::chain(2), Poset::chain(1), {{1, 0, 0}}, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::closure_violation);
    EXPECT_EQ(e.witness()["relation"], "R");
  }
}

TEST(Frame, EmptyRelationsAreValid) {
  EXPECT_NO_THROW(validate_frame(Poset::chain(2), Poset::antichain(2), {}, {}));
  EXPECT_NO_THROW(validate_frame(empty_frame()));
}

TEST(ComplexModule, PointFrameGivesModTwo) {
  const ComplexModule c = complex_module(ptframe());
  EXPECT_EQ(c.module.a().size(), 2u);
  EXPECT_EQ(c.module.fusion_table(), mod2().fusion_table());
  EXPECT_EQ(c.module.implication_table(), mod2().implication_table());
}

TEST(ComplexModule, EmptyRelations) {
  const FiFrame f = validate_frame(Poset::chain(2), Poset::antichain(2), {}, {});
  const ComplexModule c = complex_module(f);
  const FidlModule& m = c.module;
  for (Element u = 0; u < m.a().size(); ++u)
    for (Element v = 0; v < m.b().size(); ++v) {
      EXPECT_EQ(m.f(u, v), m.a().bottom());
      EXPECT_EQ(m.i(v, u), m.a().top());
    }
}

TEST(ComplexModule, SetFormulasByDefinition) {
  const FiFrame f = full_chain_frame();
  const auto ux = increasing_sets(f.x).sets, uy = increasing_sets(f.y).sets;
  for (const Subset& u : ux)
    for (const Subset& v : uy) {
      Subset fused(f.x.size()), implied(f.x.size());
      for (Element z = 0; z < f.x.size(); ++z) {
        bool any = false, all = true;
        for (Element x = 0; x < f.x.size(); ++x)
          for (Element y = 0; y < f.y.size(); ++y) {
            if (u.contains(x) && v.contains(y) && f.r.contains(x, y, z)) any = true;
          }
        for (Element y = 0; y < f.y.size(); ++y)
          for (Element w = 0; w < f.x.size(); ++w)
            if (f.t.contains(y, z, w) && v.contains(y) && !u.contains(w)) all = false;
        if (any) fused.insert(z);
        if (all) implied.insert(z);
      }
      EXPECT_EQ(complex_fusion(f, u, v), fused);
      EXPECT_EQ(complex_implication(f, v, u), implied);
    }
}

TEST(CanonicalFrame, ModTwoIsThePointFrame) {
  const CanonicalFrame c = canonical_frame(mod2());
  EXPECT_TRUE(same_structure(c.frame, ptframe()));
}

TEST(CanonicalFrame, TrivialModuleHasEmptySpectra) {
  const CanonicalFrame c = canonical_frame(trivial_module());
  EXPECT_EQ(c.frame.x.size(), 0u);
  EXPECT_EQ(c.frame.y.size(), 0u);
}

TEST(CanonicalFrame, ModalBooleanByContainmentScan) {
  const FidlModule m = modal_bool4();
  const CanonicalFrame c = canonical_frame(m);
  ASSERT_EQ(c.frame.x.size(), 2u);
  ASSERT_EQ(c.frame.y.size(), 1u);
  for (Element q = 0; q < 2; ++q)
    for (Element r = 0; r < 1; ++r)
      for (Element p = 0; p < 2; ++p) {
        bool contained = true;
        for (Element x = 0; x < 4; ++x)
          for (Element b = 0; b < 2; ++b)
            if (c.spec_a.points[q].contains(x) && c.spec_b.points[r].contains(b) && !c.spec_a.points[p].contains(m.f(x, b)))
              contained = false;
        EXPECT_EQ(c.frame.r.contains(q, r, p), contained);
      }
  // diamond = identity, so R relates each prime only to itself.
  EXPECT_EQ(c.frame.r.count(), 2u);
}

TEST(FiMorphism, IdentityOnPointFrame) {
  EXPECT_FALSE(fi_morphism_failure(ptframe(), ptframe(), {0}, {0}));
}

TEST(FiMorphism, IntoPointFrameFromFullFrame) {
  EXPECT_FALSE(fi_morphism_failure(full_chain_frame(), ptframe(), {0, 0}, {0}));
}

TEST(FiMorphism, CollapsingEmptyRelationFailsBackCondition) {
  const FiFrame src = validate_frame(Poset::chain(2), Poset::chain(1), {}, {});
  const auto e = fi_morphism_failure(src, ptframe(), {0, 0}, {0});
  ASSERT_TRUE(e);
  EXPECT_EQ(e->code(), ErrorCode::condition_violation);
  EXPECT_EQ(e->witness()["condition"], "M2");
}

TEST(FiMorphism, NonMonotoneIsRejected) {
  const auto e = fi_morphism_failure(full_chain_frame(), full_chain_frame(), {1, 0}, {0});
  ASSERT_TRUE(e);
  EXPECT_EQ(e->witness()["condition"], "monotone");
}

TEST(Duality, IdentityHomDualisesToIdentity) {
  const FiMorphism d = dual_of_hom(identity_hom(mod2()));
  EXPECT_EQ(d.g, std::vector<Element>{0});
  EXPECT_EQ(d.h, std::vector<Element>{0});
  EXPECT_FALSE(fi_morphism_failure(d.source, d.target, d.g, d.h));
}

TEST(Duality, ProjectionDualIsInjective) {
  const ProductModule p = product_module({mod2(), mod2()});
  const FiMorphism d = dual_of_hom(p.projections[0]);
  EXPECT_FALSE(fi_morphism_failure(d.source, d.target, d.g, d.h));
  EXPECT_EQ(d.source.x.size(), 1u);
  EXPECT_EQ(d.target.x.size(), 2u);
  EXPECT_TRUE(is_injective(d.g));
  EXPECT_TRUE(is_injective(d.h));
}

TEST(Duality, IdentityFiMorphismDualisesToIdentityHom) {
  const FidlHomomorphism h = dual_of_fi_morphism(identity_fi(ptframe()));
  EXPECT_EQ(h.alpha, (std::vector<Element>{0, 1}));
  EXPECT_EQ(h.gamma, (std::vector<Element>{0, 1}));
}

TEST(Duality, EmptyFrameMorphism) {
  const FiMorphism m = validate_fi_morphism(empty_frame(), ptframe(), {}, {});
  const FidlHomomorphism h = dual_of_fi_morphism(m);
  EXPECT_EQ(h.source.a().size(), 2u);
  EXPECT_EQ(h.target.a().size(), 1u);
  EXPECT_FALSE(hom_failure(h.source, h.target, h.alpha, h.gamma));
}

TEST(Duality, FiMorphismDualPassesDirectDiagramCheck) {
  const FiMorphism m = validate_fi_morphism(full_chain_frame(), ptframe(), {0, 0}, {0});
  const FidlHomomorphism h = dual_of_fi_morphism(m);
  EXPECT_FALSE(hom_failure(h.source, h.target, h.alpha, h.gamma));
}

TEST(Representation, Fixtures) {
  for (const auto& m : {mod2(), trivial_module(), modal_bool4(), fixtures::heyting_module(fixtures::chain3())}) {
    const RepresentationReport r = representation_iso(m);
    EXPECT_TRUE(r.iso);
    ASSERT_TRUE(r.inverse);
    const ComplexModule target = complex_module(canonical_frame(m).frame);
    for (Element x = 0; x < m.a().size(); ++x)
      for (Element b = 0; b < m.b().size(); ++b) {
        EXPECT_EQ(r.beta.alpha[m.f(x, b)], target.module.f(r.beta.alpha[x], r.beta.gamma[b]));
        EXPECT_EQ(r.beta.alpha[m.i(b, x)], target.module.i(r.beta.gamma[b], r.beta.alpha[x]));
      }
  }
}

TEST(Counit, Fixtures) {
  for (const auto& f : {ptframe(), full_chain_frame(), empty_frame()}) {
    const CounitReport r = counit_iso(f);
    EXPECT_TRUE(r.iso);
    EXPECT_EQ(r.epsilon.g.size(), f.x.size());
    EXPECT_EQ(r.epsilon.h.size(), f.y.size());
  }
}

TEST(Urquhart, PointFramePassesEverything) {
  const UrquhartReport r = urquhart_check(ptframe());
  ASSERT_EQ(r.conditions.size(), 5u);
  EXPECT_TRUE(r.pass());
}

TEST(Urquhart, CanonicalFramesPass) {
  for (const auto& m : {mod2(), modal_bool4(), fixtures::heyting_module(fixtures::bool4())})
    EXPECT_TRUE(urquhart_check(canonical_frame(m).frame).pass());
}

TEST(Urquhart, RemovingOneTripleBreaksConditionFour) {
  auto r = all_triples(2, 1, 2);
  r.erase(std::find(r.begin(), r.end(), Triple{0, 0, 1}));
  const FiFrame f = make_structure(Poset::chain(2), Poset::chain(1), r, all_triples(1, 2, 2));
  const UrquhartReport u = urquhart_check(f);
  EXPECT_FALSE(u.pass());
  for (const auto& c : u.conditions) {
    if (c.name == "4") {
      EXPECT_FALSE(c.pass);
      EXPECT_EQ(c.witness, (nlohmann::json{{"x", 0}, {"y", 0}, {"z", 1}}));
    } else {
      EXPECT_TRUE(c.pass) << c.name;
    }
  }
}
