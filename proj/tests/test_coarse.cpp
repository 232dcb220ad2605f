#include <gtest/gtest.h>

#include "eqloc/coarse.hpp"

using namespace eqloc;

namespace {

// brute-force closure oracle: iterate the five rules on explicit relations
std::vector<std::vector<bool>> closure_oracle(int n, const std::vector<Entourage>& gens) {
  std::vector<std::vector<bool>> r(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int x = 0; x < n; ++x) r[x][x] = true;
  for (const auto& U : gens)
    for (auto [a, b] : U) r[a][b] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (!r[a][b]) continue;
        if (!r[b][a]) r[b][a] = changed = true;
        for (int c = 0; c < n; ++c)
          if (r[b][c] && !r[a][c]) r[a][c] = changed = true;
      }
  }
  return r;
}

GBornCoarseSpace swap_space(int n, std::vector<Entourage> cg, std::vector<PointSet> bg, Perm swap) {
  return make_gspace(PermGroup::cyclic(2), BornCoarseSpace(n, std::move(cg), std::move(bg)), {swap});
}

}  // namespace

TEST(BornCoarse, ClosureMatchesOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    std::vector<Entourage> gens(2);
    for (auto& U : gens)
      for (int k = 0; k < 3; ++k) U.push_back({static_cast<int>(rng() % n), static_cast<int>(rng() % n)});
    BornCoarseSpace X(n, gens, {});
    auto r = closure_oracle(n, gens);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) EXPECT_EQ(X.close(a, b), r[a][b]);
    EXPECT_TRUE(X.normalized().same_structure(X));
    EXPECT_TRUE(X.normalized().normalized().same_structure(X));
  }
}

TEST(BornCoarse, MorphismExamples) {
  auto mm = BornCoarseSpace::max_max(2), mn = BornCoarseSpace::min_max(2);
  EXPECT_TRUE(check_morphism({0, 1}, mm, mm).accepted);
  auto r = check_morphism({0, 1}, mm, mn);
  EXPECT_FALSE(r.accepted);
  ASSERT_TRUE(r.bad_entourage.has_value());
  EXPECT_EQ(*r.bad_entourage, (Entourage{{0, 1}}));
  // into max-max: always controlled; proper for bounded source
  EXPECT_TRUE(check_morphism({1, 1, 0}, BornCoarseSpace::min_max(3), mm).accepted);
  // a point with unbounded preimage is rejected
  BornCoarseSpace unb(2, {}, {{0}});
  auto p = check_morphism({0, 0}, unb, mm);
  EXPECT_FALSE(p.accepted);
  EXPECT_TRUE(p.bad_bounded.has_value());
}

TEST(BornCoarse, CompletionExamples) {
  auto X = swap_space(2, {}, {{0}}, {1, 0});
  auto B = g_completion(X);
  EXPECT_TRUE(B.base.is_bounded({0, 1}));
  EXPECT_FALSE(X.base.is_bounded({1}));
  auto T = trivial_gspace(PermGroup::cyclic(3), BornCoarseSpace(3, {{{0, 1}}}, {{2}}));
  EXPECT_TRUE(g_completion(T).base.same_structure(T.base));
  // free action with singleton bornology: orbits become bounded
  auto G = PermGroup::cyclic(3);
  auto F = make_gspace(G, BornCoarseSpace(6, {}, {{0}, {3}}), {{1, 2, 0, 4, 5, 3}});
  auto FB = g_completion(F);
  EXPECT_TRUE(FB.base.is_bounded({0, 1, 2, 3, 4, 5}));
}

TEST(BornCoarse, FixedPointExamples) {
  auto X = swap_space(3, {}, {{0, 1, 2}}, {1, 0, 2});
  auto G = X.group;
  auto XG = fixed_points(X, G.whole());
  EXPECT_EQ(XG.points, (PointSet{2}));
  auto X1 = fixed_points(X, G.trivial_subgroup());
  EXPECT_EQ(X1.points.size(), 3u);
  EXPECT_EQ(X1.weyl.group.order(), 2u);
  EXPECT_TRUE(X1.space.base.same_structure(g_completion(X).base));
}

TEST(BornCoarse, OrbitHomSpaceExamples) {
  auto X = swap_space(2, {}, {{0, 1}}, {1, 0});
  auto G = X.group;
  auto XG = orbit_hom_space(X, G.whole());
  EXPECT_TRUE(XG.fixed.empty());
  auto X1 = orbit_hom_space(X, G.trivial_subgroup());
  EXPECT_EQ(X1.fixed, (PointSet{0, 1}));
  auto pull = orbit_pullback(X, XG, X1, 0);
  EXPECT_TRUE(pull.empty());
  EXPECT_TRUE(check_morphism(pull, XG.space, X1.space).accepted);
}

TEST(BornCoarse, TensorExamples) {
  auto G = PermGroup::cyclic(2);
  auto X = swap_space(2, {{{0, 1}}}, {{0}}, {1, 0});
  GSet point{1, std::vector<Perm>(2, Perm{0})};
  EXPECT_TRUE(tensor_min_max(point, X).base.same_structure(X.base));
  auto S = orbit_gset(G, G.trivial_subgroup());
  auto T = tensor_min_max(S, trivial_gspace(G, BornCoarseSpace::min_max(1)));
  EXPECT_EQ(T.size(), 2);
  EXPECT_FALSE(T.base.close(0, 1));
  EXPECT_TRUE(T.base.is_bounded({0, 1}));
  auto SX = tensor_min_max(S, X);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (a / 2 != b / 2) EXPECT_FALSE(SX.base.close(a, b));
}

TEST(BornCoarse, EvaluationExamples) {
  auto G = PermGroup::cyclic(3);
  auto X = make_gspace(G, BornCoarseSpace(4, {{{0, 1}, {1, 2}}}, {{0, 3}}), {{1, 2, 0, 3}});
  EXPECT_TRUE(evaluation_map(X, G.whole()).ok());
  EXPECT_TRUE(evaluation_map(X, G.trivial_subgroup()).ok());
}

TEST(BornCoarse, FlasqueExamples) {
  auto bounded = BornCoarseSpace::max_max(3);
  EXPECT_FALSE(flasqueness_witness_check(bounded, {0, 1, 2}).accepted());
  EXPECT_TRUE(flasqueness_witness_check(BornCoarseSpace(0, {}, {}), {}).accepted());
  // truncation model {0..n}: max coarse, singletons below n bounded, shift
  const int n = 5;
  std::vector<PointSet> singles;
  for (int i = 0; i < n; ++i) singles.push_back({i});
  Entourage all;
  for (int i = 1; i <= n; ++i) all.push_back({0, i});
  BornCoarseSpace T(n + 1, {all}, singles);
  std::vector<int> shift;
  for (int x = 0; x <= n; ++x) shift.push_back(std::min(x + 1, n));
  auto r = flasqueness_witness_check(T, shift);
  EXPECT_TRUE(r.morphism);
  EXPECT_TRUE(r.close_to_identity);
  EXPECT_TRUE(r.iterates_controlled);
  EXPECT_TRUE(r.leaves_bounded);
  // a shift that is not close to the identity under the minimal structure
  BornCoarseSpace Tmin(n + 1, {}, singles);
  EXPECT_FALSE(flasqueness_witness_check(Tmin, shift).close_to_identity);
}

TEST(BornCoarse, ComplementaryPairExamples) {
  auto X = swap_space(4, {}, {{0, 1, 2, 3}}, {1, 0, 3, 2});
  EXPECT_TRUE(complementary_pair_check(X, {0, 1, 2, 3}, {{}}).ok());
  EXPECT_TRUE(complementary_pair_check(X, {}, {{0, 1, 2, 3}}).ok());
  auto r = complementary_pair_check(X, {0, 1}, {{2, 3}});
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.fixed_point_pairs.size(), 2u);
  EXPECT_FALSE(complementary_pair_check(X, {0}, {{2, 3}}).ok());
}

TEST(BornCoarse, ActionMustBeHomomorphism) {
  auto G = PermGroup::cyclic(2);
  EXPECT_THROW(make_gspace(G, BornCoarseSpace::min_max(3), {{1, 2, 0}}), InvalidInput);
}

TEST(BornCoarse, RandomBattery) {
  std::mt19937_64 rng(2024);
  std::vector<PermGroup> groups{PermGroup::cyclic(2), PermGroup::cyclic(3), PermGroup::cyclic(4), PermGroup::symmetric(3),
                                PermGroup::klein_four()};
  int count = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const auto& G = groups[static_cast<std::size_t>(trial) % groups.size()];
    auto X = random_gspace(G, rng);
    ASSERT_LE(X.size(), 16);
    auto e = coarse_battery_entry(X);
    EXPECT_TRUE(e.ok()) << e.description << ": " << e.failure;
    ++count;
  }
  EXPECT_GE(count, 20);
}
