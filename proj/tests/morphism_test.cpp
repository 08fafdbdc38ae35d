#include <gtest/gtest.h>

#include "fidl/constructions.hpp"
#include "fidl/fixtures.hpp"

using namespace fidl;
using fidl::fixtures::bool4;
using fidl::fixtures::chain2;
using fidl::fixtures::chain3;
using fidl::fixtures::mod2;
using fidl::fixtures::modal_bool4;

namespace {

// Pointwise check that the double dual of k agrees with k through beta.
void expect_double_dual_agrees(const FidlHomomorphism& k) {
  const RepresentationReport bs = representation_iso(k.source), bt = representation_iso(k.target);
  const FidlHomomorphism dd = dual_of_fi_morphism(dual_of_hom(k));
  for (Element x = 0; x < k.source.a().size(); ++x) EXPECT_EQ(dd.alpha[bs.beta.alpha[x]], bt.beta.alpha[k.alpha[x]]);
  for (Element b = 0; b < k.source.b().size(); ++b) EXPECT_EQ(dd.gamma[bs.beta.gamma[b]], bt.beta.gamma[k.gamma[b]]);
}

}  // namespace

TEST(Hom, IdentityOnModTwo) {
  EXPECT_FALSE(hom_failure(mod2(), mod2(), {0, 1}, {0, 1}));
}

TEST(Hom, SwapIsNotALatticeHom) {
  const auto e = hom_failure(mod2(), mod2(), {1, 0}, {0, 1});
  ASSERT_TRUE(e);
  EXPECT_EQ(e->code(), ErrorCode::not_lattice_hom);
  EXPECT_EQ(e->witness()["side"], "A");
}

TEST(Hom, ShapeMismatch) {
  const auto e = hom_failure(mod2(), mod2(), {0}, {0, 1});
  ASSERT_TRUE(e);
  EXPECT_EQ(e->code(), ErrorCode::shape_mismatch);
}

TEST(Hom, ProjectionIsValidButNotIso) {
  const ProductModule p = product_module({mod2(), mod2()});
  for (const auto& pi : p.projections) {
    EXPECT_FALSE(hom_failure(pi.source, pi.target, pi.alpha, pi.gamma));
    EXPECT_FALSE(is_iso(pi).iso);
  }
}

TEST(Hom, IdentityAndBetaAreIsos) {
  const IsoReport id = is_iso(identity_hom(mod2()));
  EXPECT_TRUE(id.iso);
  ASSERT_TRUE(id.inverse);
  EXPECT_EQ(id.inverse->alpha, (std::vector<Element>{0, 1}));
  const IsoReport beta = is_iso(representation_iso(mod2()).beta);
  EXPECT_TRUE(beta.iso);
  EXPECT_TRUE(beta.inverse);
}

TEST(Hom, CompositionAndIdentities) {
  const ProductModule p = product_module({mod2(), mod2()});
  const FidlHomomorphism diag = pairing(p, {identity_hom(mod2()), identity_hom(mod2())});
  const FidlHomomorphism back = compose(p.projections[1], diag);
  EXPECT_EQ(back.alpha, (std::vector<Element>{0, 1}));
  EXPECT_EQ(back.gamma, (std::vector<Element>{0, 1}));
  const FidlHomomorphism left = compose(identity_hom(p.module), diag);
  EXPECT_EQ(left.alpha, diag.alpha);
  try {
    compose(diag, diag);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::target_mismatch);
  }
}

TEST(Restriction, IdentityKeepsTheModule) {
  for (const auto& m : {mod2(), modal_bool4()}) {
    const FidlHomomorphism r = restriction_module(m, chain2(), {0, 1});
    EXPECT_EQ(r.source.fusion_table(), m.fusion_table());
    EXPECT_EQ(r.source.implication_table(), m.implication_table());
    EXPECT_EQ(r.target, m);
  }
}

TEST(Restriction, UnboundedMapIsRejected) {
  // h(1) = a does not preserve the top, so (id, h) is not a homomorphism.
  try {
    restriction_module(fixtures::heyting_module(bool4()), chain2(), {0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_a_homomorphism);
  }
}

TEST(Restriction, SectionFamilyIsSubstituted) {
  const FidlModule m = fixtures::heyting_module(bool4());
  const std::vector<Element> h{0, 1, 3};  // 0 -> 0, m -> a, 1 -> 1
  const FidlHomomorphism r = restriction_module(m, chain3(), h);
  const FidlModule& n = r.source;
  for (Element x = 0; x < 4; ++x)
    for (Element c = 0; c < 3; ++c) {
      EXPECT_EQ(n.f(x, c), m.f(x, h[c]));
      EXPECT_EQ(n.i(c, x), m.i(h[c], x));
    }
  EXPECT_EQ(n.f(3, 1), 1u);
  EXPECT_FALSE(hom_failure(n, m, r.alpha, r.gamma));
}

TEST(Restriction, DualIsIdentityWithPreimage) {
  const FidlModule m = fixtures::heyting_module(bool4());
  const std::vector<Element> h{0, 1, 3};
  const FidlHomomorphism r = restriction_module(m, chain3(), h);
  const CanonicalFrame cn = canonical_frame(r.source), cm = canonical_frame(m);
  const FiMorphism d = dual_of_hom(r, cn, cm);
  for (Element p = 0; p < cm.spec_a.size(); ++p) EXPECT_EQ(cn.spec_a.points[d.g[p]], cm.spec_a.points[p]);
  for (Element q = 0; q < cm.spec_b.size(); ++q) {
    Subset pre(3);
    for (Element c = 0; c < 3; ++c)
      if (cm.spec_b.points[q].contains(h[c])) pre.insert(c);
    EXPECT_EQ(cn.spec_b.points[d.h[q]], pre);
  }
}

TEST(Product, UnaryAndBinary) {
  const ProductModule one = product_module({mod2()});
  EXPECT_EQ(one.module.fusion_table(), mod2().fusion_table());
  EXPECT_TRUE(is_iso(one.projections[0]).iso);
  const ProductModule two = product_module({mod2(), mod2()});
  EXPECT_EQ(two.module.a().size(), 4u);
  EXPECT_EQ(two.module.b().size(), 4u);
  EXPECT_TRUE(FidlModule::check_axioms(two.module.a(), two.module.b(), two.module.fusion_table(),
                                       two.module.implication_table())
                  .empty());
}

TEST(Product, TrivialFactorIsTerminal) {
  const ProductModule p = product_module({mod2(), trivial_module()});
  EXPECT_EQ(p.module.a().size(), 2u);
  EXPECT_TRUE(is_iso(p.projections[0]).iso);
}

TEST(Product, ComponentwiseOperations) {
  const FidlModule m = modal_bool4(), n = mod2();
  const ProductModule p = product_module({m, n});
  for (Element x = 0; x < p.module.a().size(); ++x)
    for (Element b = 0; b < p.module.b().size(); ++b) {
      const auto xs = p.a.decode(x), bs = p.b.decode(b);
      const auto fx = p.a.decode(p.module.f(x, b)), ix = p.a.decode(p.module.i(b, x));
      EXPECT_EQ(fx[0], m.f(xs[0], bs[0]));
      EXPECT_EQ(fx[1], n.f(xs[1], bs[1]));
      EXPECT_EQ(ix[0], m.i(bs[0], xs[0]));
      EXPECT_EQ(ix[1], n.i(bs[1], xs[1]));
    }
}

TEST(Subdirect, DiagonalIsSubdirect) {
  const ProductModule p = product_module({mod2(), mod2()});
  const FidlHomomorphism diag = pairing(p, {identity_hom(mod2()), identity_hom(mod2())});
  const SubdirectReport r = check_subdirect_embedding(mod2(), {mod2(), mod2()}, diag);
  EXPECT_TRUE(r.injective);
  EXPECT_TRUE(r.subdirect);
}

TEST(Subdirect, ProperSubalgebraIntoOneFactorIsNotOnto) {
  // {0,1} of the Heyting CHAIN3 module with B = {0,1} is a subalgebra; its
  // inclusion misses m.
  const FidlModule h3 = fixtures::heyting_module(chain3());
  const FidlModule sub = FidlModule::validate(chain2(), chain2(), {0, 0, 0, 1}, {1, 1, 0, 1});
  const FidlHomomorphism inc = validate_hom(sub, h3, {0, 2}, {0, 2});
  const ProductModule p = product_module({h3});
  const FidlHomomorphism into = pairing(p, {inc});
  const SubdirectReport r = check_subdirect_embedding(sub, {h3}, into);
  EXPECT_TRUE(r.injective);
  EXPECT_FALSE(r.subdirect);
}

TEST(Subdirect, BetaIntoUnaryProduct) {
  const RepresentationReport rep = representation_iso(modal_bool4());
  const FidlModule target = rep.beta.target;
  const ProductModule p = product_module({target});
  const SubdirectReport r = check_subdirect_embedding(modal_bool4(), {target}, pairing(p, {rep.beta}));
  EXPECT_TRUE(r.subdirect);
}

TEST(Duality, DualsOfHomsAreFiMorphisms) {
  const ProductModule p = product_module({mod2(), modal_bool4()});
  std::vector<FidlHomomorphism> homs = {identity_hom(mod2()), p.projections[0], p.projections[1],
                                        representation_iso(modal_bool4()).beta,
                                        restriction_module(fixtures::heyting_module(bool4()), chain3(), {0, 1, 3})};
  for (const auto& k : homs) {
    const FiMorphism d = dual_of_hom(k);
    EXPECT_FALSE(fi_morphism_failure(d.source, d.target, d.g, d.h));
    expect_double_dual_agrees(k);
  }
}

TEST(Duality, TransposeOfIdentityIsBeta) {
  const FidlModule m = modal_bool4();
  const CanonicalFrame c = canonical_frame(m);
  const FidlHomomorphism t = transpose_to_hom(m, c, identity_fi(c.frame));
  const RepresentationReport rep = representation_iso(m);
  EXPECT_FALSE(hom_failure(t.source, t.target, t.alpha, t.gamma));
  EXPECT_EQ(t.alpha, rep.beta.alpha);
  EXPECT_EQ(t.gamma, rep.beta.gamma);
}
