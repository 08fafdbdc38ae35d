#include <gtest/gtest.h>

#include <algorithm>

#include "fidl/congruence.hpp"
#include "fidl/constructions.hpp"
#include "fidl/fixtures.hpp"
#include "fidl/fuzz.hpp"

using namespace fidl;
using fidl::fixtures::mod2;
using fidl::fixtures::modal_bool4;
using fidl::fixtures::ptframe;

namespace {

FidlCongruence cong(std::size_t na, bool total_a, std::size_t nb, bool total_b) {
  return {total_a ? Partition::total(na) : Partition::identity(na), total_b ? Partition::total(nb) : Partition::identity(nb)};
}

Subset set_of(std::size_t n, std::initializer_list<Element> xs) {
  Subset s(n);
  for (Element x : xs) s.insert(x);
  return s;
}

// A = CHAIN2, B trivial, f = 0 and i = 1: only the two bounds of Con.
FidlModule simple_module() {
  const FiniteLattice one = FiniteLattice::from_poset(Poset::chain(1));
  return FidlModule::validate(fixtures::chain2(), one, {0, 0}, {1, 1});
}

// Strong closedness read literally, with maximality inside each section.
struct Oracle {
  const FiFrame& f;

  bool max_in_r(Element x, Element y, Element z) const {
    if (!f.r.contains(x, y, z)) return false;
    for (Element x2 = 0; x2 < f.x.size(); ++x2)
      if (f.x.less(x, x2) && f.r.contains(x2, y, z)) return false;
    for (Element y2 = 0; y2 < f.y.size(); ++y2)
      if (f.y.less(y, y2) && f.r.contains(x, y2, z)) return false;
    return true;
  }
  bool in_d(Element x, Element y, Element z) const {
    if (!f.t.contains(y, x, z)) return false;
    for (Element y2 = 0; y2 < f.y.size(); ++y2)
      if (f.y.less(y, y2) && f.t.contains(y2, x, z)) return false;
    for (Element z2 = 0; z2 < f.x.size(); ++z2)
      if (f.x.less(z2, z) && f.t.contains(y, x, z2)) return false;
    return true;
  }
  bool r_closed(const Subset& z1, const Subset& z2) const {
    for (Element z = 0; z < f.x.size(); ++z) {
      if (!z1.contains(z)) continue;
      for (Element x = 0; x < f.x.size(); ++x)
        for (Element y = 0; y < f.y.size(); ++y)
          if (max_in_r(x, y, z) && !(z1.contains(x) && z2.contains(y))) return false;
    }
    return true;
  }
  bool t_closed(const Subset& z1, const Subset& z2) const {
    for (Element x = 0; x < f.x.size(); ++x) {
      if (!z1.contains(x)) continue;
      for (Element y = 0; y < f.y.size(); ++y)
        for (Element z = 0; z < f.x.size(); ++z)
          if (in_d(x, y, z) && !(z2.contains(y) && z1.contains(z))) return false;
    }
    return true;
  }
};

}  // namespace

TEST(Congruences, ModTwoByPartitions) {
  const FidlModule m = mod2();
  const auto con = congruences_by_partitions(m, Compatibility::both);
  std::vector<FidlCongruence> expected{cong(2, false, 2, false), cong(2, true, 2, false), cong(2, true, 2, true)};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(con, expected);
  const auto w = compatibility_failure(m, cong(2, false, 2, true), Compatibility::fusion);
  ASSERT_TRUE(w);
  EXPECT_EQ((*w)["condition"], "C1");
  EXPECT_EQ(m.f((*w)["a"], (*w)["b"]) == m.f((*w)["c"], (*w)["d"]), false);
}

TEST(Congruences, TrivialModuleHasOne) {
  EXPECT_EQ(congruences(trivial_module(), Compatibility::both).size(), 1u);
}

TEST(Congruences, BoundsAlwaysPresent) {
  for (const auto& m : {mod2(), modal_bool4(), fixtures::heyting_module(fixtures::chain3())}) {
    const auto con = congruences(m, Compatibility::both);
    const auto na = m.a().size(), nb = m.b().size();
    EXPECT_NE(std::find(con.begin(), con.end(), cong(na, false, nb, false)), con.end());
    EXPECT_NE(std::find(con.begin(), con.end(), cong(na, true, nb, true)), con.end());
  }
}

TEST(Congruences, OraclesAgree) {
  Rng rng(5);
  RandomTablesStats stats;
  std::vector<FidlModule> ms = {mod2(), modal_bool4(), fixtures::heyting_module(fixtures::chain3())};
  for (int k = 0; k < 20; ++k) ms.push_back(generate_module(rng, static_cast<Strategy>(k % 4), 6, 4, stats));
  for (const auto& m : ms)
    for (Compatibility c : {Compatibility::fusion, Compatibility::implication, Compatibility::both})
      EXPECT_EQ(congruences_by_partitions(m, c), congruences_by_spectra(m, c));
}

TEST(Neighborhoods, PointFrame) {
  const FiFrame f = ptframe();
  EXPECT_EQ(max_r_inverse(f, 0), (std::vector<std::pair<Element, Element>>{{0, 0}}));
  EXPECT_EQ(d_set(f, 0), (std::vector<std::pair<Element, Element>>{{0, 0}}));
  EXPECT_EQ(r1_set(f, 0, 0), Subset::full(1));
  EXPECT_EQ(t3_set(f, 0, 0), Subset::full(1));
}

TEST(Neighborhoods, EmptyRelation) {
  const FiFrame f = validate_frame(Poset::chain(2), Poset::chain(1), {}, {});
  for (Element z = 0; z < 2; ++z) EXPECT_TRUE(max_r_inverse(f, z).empty());
}

TEST(ClosedPairs, CanonicalFrameOfModTwo) {
  const auto zs = enumerate_strongly_closed(canonical_frame(mod2()).frame);
  ASSERT_EQ(zs.size(), 3u);
  EXPECT_EQ(zs[0].z1, Subset(1));
  EXPECT_EQ(zs[0].z2, Subset(1));
  EXPECT_EQ(zs[1].z1, Subset(1));
  EXPECT_EQ(zs[1].z2, Subset::full(1));
  EXPECT_EQ(zs[2].z1, Subset::full(1));
  EXPECT_EQ(zs[2].z2, Subset::full(1));
  const ClosedPairTester t(ptframe());
  EXPECT_FALSE(t.evaluate(Subset::full(1), Subset(1)).r_closed);
}

TEST(ClosedPairs, EmptyRelationsAndEmptyFrame) {
  const FiFrame f = validate_frame(Poset::chain(2), Poset::antichain(2), {}, {});
  EXPECT_EQ(enumerate_strongly_closed(f).size(), 16u);
  const FiFrame e = make_structure(Poset::from_upsets({}, {}), Poset::from_upsets({}, {}), {}, {});
  EXPECT_EQ(enumerate_strongly_closed(e).size(), 1u);
}

TEST(ClosedPairs, MatchDefinitionOnRandomFrames) {
  Rng rng(9);
  for (int k = 0; k < 60; ++k) {
    const FiFrame f = random_frame(rng, 4, 3);
    const Oracle o{f};
    const ClosedPairTester t(f);
    for (std::uint64_t m1 = 0; m1 < (1ull << f.x.size()); ++m1)
      for (std::uint64_t m2 = 0; m2 < (1ull << f.y.size()); ++m2) {
        const Subset z1 = Subset::from_mask(f.x.size(), m1), z2 = Subset::from_mask(f.y.size(), m2);
        const ClosedPair z = t.evaluate(z1, z2);
        EXPECT_EQ(z.r_closed, o.r_closed(z1, z2));
        EXPECT_EQ(z.t_closed, o.t_closed(z1, z2));
      }
  }
}

TEST(ThetaPair, ModTwo) {
  const FidlModule m = mod2();
  const CanonicalFrame c = canonical_frame(m);
  const ClosedPairTester t(c.frame);
  EXPECT_EQ(theta_pair(m, c, t.evaluate(Subset::full(1), Subset::full(1))), cong(2, false, 2, false));
  EXPECT_EQ(theta_pair(m, c, t.evaluate(Subset(1), Subset(1))), cong(2, true, 2, true));
  EXPECT_EQ(theta_pair(m, c, t.evaluate(Subset(1), Subset::full(1))), cong(2, true, 2, false));
  try {
    theta_pair(m, c, t.evaluate(Subset::full(1), Subset(1)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_strongly_closed);
  }
}

TEST(Closure, PointFrame) {
  const FiFrame f = ptframe();
  const ClosedPair a = closure_strongly_closed(f, Subset::full(1), Subset::full(1));
  EXPECT_TRUE(a.z1.is_full() && a.z2.is_full());
  const ClosedPair b = closure_strongly_closed(f, Subset::full(1), Subset(1));
  EXPECT_TRUE(b.z1.is_full() && b.z2.is_full());
  const ClosedPair c = closure_strongly_closed(f, Subset(1), Subset(1));
  EXPECT_TRUE(c.z1.empty() && c.z2.empty());
}

TEST(Closure, IsTheLeastEnumeratedSuperset) {
  Rng rng(13);
  for (int k = 0; k < 40; ++k) {
    const FiFrame f = random_frame(rng, 4, 3);
    const auto all = enumerate_strongly_closed(f);
    for (std::uint64_t m1 = 0; m1 < (1ull << f.x.size()); ++m1)
      for (std::uint64_t m2 = 0; m2 < (1ull << f.y.size()); ++m2) {
        const Subset s1 = Subset::from_mask(f.x.size(), m1), s2 = Subset::from_mask(f.y.size(), m2);
        const ClosedPair cl = closure_strongly_closed(f, s1, s2);
        for (const auto& z : all)
          if (s1.is_subset_of(z.z1) && s2.is_subset_of(z.z2))
            EXPECT_TRUE(cl.z1.is_subset_of(z.z1) && cl.z2.is_subset_of(z.z2));
        EXPECT_NE(std::find(all.begin(), all.end(), cl), all.end());
      }
  }
}

TEST(AntiIsomorphism, Fixtures) {
  for (const auto& m : {mod2(), trivial_module(), modal_bool4(), product_module({mod2(), mod2()}).module}) {
    const AntiIsoReport r = anti_isomorphism_check(m);
    EXPECT_TRUE(r.pass());
    EXPECT_TRUE(r.oracles_agree);
  }
  const AntiIsoReport t = anti_isomorphism_check(trivial_module());
  for (const auto& p : t.pairings) {
    EXPECT_EQ(p.closed_count, 1u);
    EXPECT_EQ(p.congruence_count, 1u);
  }
}

TEST(Classify, ModTwoIsSubdirectlyIrreducibleNotSimple) {
  const ClassifyReport r = classify(mod2());
  EXPECT_EQ(r.verdict, Verdict::si_not_simple);
  EXPECT_EQ(r.con_size, 3u);
  EXPECT_EQ(r.strongly_closed_count, 3u);
  EXPECT_EQ(r.count("point_closure_simple"), 1u);
  EXPECT_EQ(r.count("closed_pairs_simple"), 0u);
  const auto j = to_json(r);
  EXPECT_EQ(j["verdict"], "subdirectly_irreducible_not_simple");
}

TEST(Classify, TrivialAndSimpleAndNotSi) {
  EXPECT_EQ(classify(trivial_module()).verdict, Verdict::trivial);
  const ClassifyReport s = classify(simple_module());
  EXPECT_EQ(s.verdict, Verdict::simple);
  EXPECT_TRUE(s.discrepancies.empty());
  const ClassifyReport n = classify(modal_bool4());
  EXPECT_EQ(n.verdict, Verdict::not_si);
  EXPECT_FALSE(n.subdirectly_irreducible);
}

TEST(Classify, SimpleIffOnlyTrivialClosedPairs) {
  Rng rng(17);
  RandomTablesStats stats;
  for (int k = 0; k < 40; ++k) {
    const FidlModule m = generate_module(rng, static_cast<Strategy>(k % 4), 6, 4, stats);
    const ClassifyReport r = classify(m);
    EXPECT_EQ(r.count("closed_pairs_simple"), 0u);
    EXPECT_EQ(r.con_size, r.strongly_closed_count);
  }
}
