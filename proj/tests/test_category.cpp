#include <gtest/gtest.h>

#include "eqloc/category.hpp"

using namespace eqloc;

namespace {

FinCategory terminal_category() {
  return FinCategory({"*"}, {{0, 0}}, {0}, [](int, int) { return 0; });
}

// 0 → 1 with one non-identity arrow
FinCategory arrow_category() {
  return FinCategory({"a", "b"}, {{0, 0}, {1, 1}, {0, 1}}, {0, 1}, [](int g, int f) {
    if (f == 0) return g;
    if (g == 1) return f;
    return f == 2 ? 2 : g;
  });
}

std::size_t count_total(const FinCategory& c) { return c.num_morphisms(); }

}  // namespace

TEST(FinCategory, RejectsNonAssociative) {
  // one object, two arrows {e, x} with x∘x = e would be fine; make e fail unit law
  EXPECT_THROW(FinCategory({"*"}, {{0, 0}, {0, 0}}, {0}, [](int, int) { return 1; }), StructureMismatch);
}

TEST(OrbitCategory, S3) {
  auto oc = build_orbit_category(PermGroup::symmetric(3));
  ASSERT_EQ(oc.num_objects(), 4u);
  EXPECT_EQ(oc.cat.hom(1, 1).size(), 1u);  // G/C2
  EXPECT_EQ(oc.cat.hom(0, 1).size(), 3u);  // G/1 → G/C2
  EXPECT_EQ(oc.cat.hom(1, 2).size(), 0u);  // G/C2 → G/C3
  EXPECT_EQ(oc.cat.hom(2, 2).size(), 2u);  // W(C3) = Z/2
}

TEST(OrbitCategory, EndOfFreeOrbitIsG) {
  for (auto g : {PermGroup::cyclic(2), PermGroup::cyclic(4), PermGroup::klein_four(), PermGroup::symmetric(3),
                 PermGroup::dihedral(4), PermGroup::quaternion(), PermGroup::alternating(4), PermGroup::symmetric(4)}) {
    auto oc = build_orbit_category(g);
    EXPECT_EQ(oc.cat.hom(0, 0).size(), g.order());
    const int top = static_cast<int>(oc.num_objects()) - 1;
    for (int h = 0; h < top; ++h) {
      EXPECT_TRUE(oc.cat.hom(top, h).empty());
      EXPECT_EQ(oc.cat.hom(h, top).size(), 1u);
    }
    // End(G/1) ≅ G: payload multiplication matches the group law
    for (int f : oc.cat.hom(0, 0))
      for (int k : oc.cat.hom(0, 0))
        EXPECT_EQ(oc.payload[static_cast<std::size_t>(oc.cat.compose(k, f))],
                  g.mul(oc.payload[static_cast<std::size_t>(f)], oc.payload[static_cast<std::size_t>(k)]));
  }
}

TEST(OrbitCategory, HomSizesMatchFixedPointCounts) {
  // |Hom(G/H, G/K)| = |(G/K)^H|, counted directly on cosets
  PermGroup g = PermGroup::symmetric(4);
  auto oc = build_orbit_category(g);
  for (int a = 0; a < static_cast<int>(oc.num_objects()); ++a)
    for (int b = 0; b < static_cast<int>(oc.num_objects()); ++b) {
      const auto& H = oc.subgroup[static_cast<std::size_t>(a)];
      const auto& K = oc.subgroup[static_cast<std::size_t>(b)];
      std::set<int> fixed;
      for (int x = 0; x < static_cast<int>(g.order()); ++x) {
        bool ok = true;
        for (int h : H.members())
          if (g.coset_rep(g.mul(h, x), K) != g.coset_rep(x, K)) ok = false;
        if (ok) fixed.insert(g.coset_rep(x, K));
      }
      EXPECT_EQ(oc.cat.hom(a, b).size(), fixed.size());
    }
}

TEST(TwistedArrow, Counts) {
  EXPECT_EQ(twisted_arrow_category(terminal_category()).cat.num_objects(), 1u);
  EXPECT_EQ(twisted_arrow_category(arrow_category()).cat.num_objects(), 3u);
  auto oc = build_orbit_category(PermGroup::cyclic(2));
  // End(G/1) has 2 maps, G/1 → G/G one, End(G/G) one, G/G → G/1 none
  EXPECT_EQ(twisted_arrow_category(oc.cat).cat.num_objects(), 4u);
}

TEST(TwistedArrow, ProjectionIsFunctor) {
  for (auto g : {PermGroup::cyclic(2), PermGroup::cyclic(4), PermGroup::symmetric(3)}) {
    auto oc = build_orbit_category(g);
    auto tw = twisted_arrow_category(oc.cat);
    tw.cat.check_laws();
    EXPECT_TRUE(is_functor(twisted_projection(tw, oc.cat)));
  }
}

TEST(Subcategory, Family) {
  PermGroup s3 = PermGroup::symmetric(3);
  auto oc = build_orbit_category(s3);
  EXPECT_EQ(full_subcategory_family(oc, all_subgroups(s3)).cat.num_morphisms(), count_total(oc.cat));
  EXPECT_EQ(full_subcategory_family(oc, empty_family(s3)).cat.num_objects(), 0u);
  auto sub = full_subcategory_family(oc, family_of_gamma(s3, 1));
  EXPECT_EQ(sub.objects, (std::vector<int>{0, 2}));
  EXPECT_TRUE(is_functor(inclusion(sub, oc.cat)));
}

TEST(Comma, Examples) {
  PermGroup s3 = PermGroup::symmetric(3);
  auto oc = build_orbit_category(s3);
  auto whole = full_subcategory_family(oc, all_subgroups(s3));
  auto iw = inclusion(whole, oc.cat);
  for (int s = 0; s < 4; ++s) {
    auto c = comma_over(iw, s, Variance::Covariant);
    // (S, id) is terminal
    int term = -1;
    for (std::size_t o = 0; o < c.objects.size(); ++o)
      if (c.objects[o].first == s && c.objects[o].second == oc.cat.identity(s)) term = static_cast<int>(o);
    ASSERT_GE(term, 0);
    for (int o = 0; o < static_cast<int>(c.cat.num_objects()); ++o) EXPECT_EQ(c.cat.hom(o, term).size(), 1u);
  }
  auto fperp = full_subcategory_family(oc, complement(s3, family_of_gamma(s3, 1)));
  EXPECT_EQ(comma_over(inclusion(fperp, oc.cat), 0, Variance::Covariant).cat.num_objects(), 0u);

  PermGroup z2 = PermGroup::cyclic(2);
  auto oz = build_orbit_category(z2);
  auto top = full_subcategory_family(oz, complement(z2, family_of_gamma(z2, 1)));
  auto c = comma_over(inclusion(top, oz.cat), 0, Variance::Contravariant);
  EXPECT_EQ(c.cat.num_objects(), 1u);
}

TEST(Comma, FamilyFootnote) {
  // covariant comma over S with stabilizer in F, relative to F⊥, is empty
  for (auto g : {PermGroup::cyclic(4), PermGroup::symmetric(3), PermGroup::dihedral(4)}) {
    auto oc = build_orbit_category(g);
    for (std::size_t c = 0; c < g.conjugacy_classes().size(); ++c) {
      Family f = family_of_gamma(g, c);
      auto perp = full_subcategory_family(oc, complement(g, f));
      auto ip = inclusion(perp, oc.cat);
      for (int s : family_objects(oc, f)) EXPECT_EQ(comma_over(ip, s, Variance::Covariant).cat.num_objects(), 0u);
    }
  }
}

TEST(Skeleton, CollapsesIsomorphicObjects) {
  auto oc = build_orbit_category(PermGroup::cyclic(2));
  auto tw = twisted_arrow_category(oc.cat);
  auto sk = skeleton(tw.cat);
  // the two automorphisms of G/1 are isomorphic objects of Tw
  EXPECT_EQ(sk.sub.cat.num_objects(), 3u);
  EXPECT_EQ(skeleton(oc.cat).sub.cat.num_objects(), 2u);
}

TEST(Slice, Examples) {
  for (auto g : {PermGroup::symmetric(3), PermGroup::cyclic(4)}) {
    auto oc = build_orbit_category(g);
    for (const auto& cls : subgroup_classes(g)) {
      auto r = slice_equivalence_check(oc, cls.representative, all_subgroups(g));
      EXPECT_TRUE(r.equivalence()) << g.name() << " " << cls.label;
    }
  }
  PermGroup z4 = PermGroup::cyclic(4);
  auto oc = build_orbit_category(z4);
  auto f = make_family(z4, {true, true, false});
  auto r = slice_equivalence_check(oc, subgroup_classes(z4)[1].representative, f);
  EXPECT_TRUE(r.equivalence());
  EXPECT_EQ(r.source_objects, 2u);
}
