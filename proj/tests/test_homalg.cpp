#include <random>

#include <gtest/gtest.h>

#include "eqloc/homalg.hpp"

using namespace eqloc;

namespace {

HomologyGroup Z(std::size_t free, std::vector<Int> torsion = {}) { return {free, std::move(torsion)}; }

// Homology straight from dense SNF of every differential, no reduction;
// the transform-producing elimination is independent of the modular path.
Homology dense_oracle(const ChainComplex& C) {
  Homology h(C.ranks.size());
  std::vector<std::size_t> r(C.ranks.size() + 1, 0);
  std::vector<std::vector<Int>> t(C.ranks.size() + 1);
  for (int k = 1; k <= C.top(); ++k) {
    auto s = smith_normal_form(C.d[static_cast<std::size_t>(k)].to_dense(), true);
    r[static_cast<std::size_t>(k)] = s.rank;
    for (std::size_t i = 0; i < s.rank; ++i)
      if (s.diagonal[i] > 1) t[static_cast<std::size_t>(k)].push_back(s.diagonal[i]);
  }
  for (int k = 0; k <= C.top(); ++k) {
    h[static_cast<std::size_t>(k)].free = C.rank(k) - r[static_cast<std::size_t>(k)] - r[static_cast<std::size_t>(k + 1)];
    h[static_cast<std::size_t>(k)].torsion = t[static_cast<std::size_t>(k + 1)];
  }
  return h;
}

SimplicialSetFin boundary_triangle() {
  // vertices 0,1,2; edges [1,2],[0,2],[0,1] with d_i deleting vertex i
  SimplicialSetFin X;
  X.count = {3, 3};
  X.faces = {{}, {{2, 1}, {2, 0}, {1, 0}}};
  return X;
}

SimplicialSetFin interval() {
  SimplicialSetFin X;
  X.count = {2, 1};
  X.faces = {{}, {{1, 0}}};
  return X;
}

// One object, morphisms = elements of Z/n, composition = addition.
FinCategory cyclic_group_category(int n) {
  std::vector<Arrow> arrows(static_cast<std::size_t>(n), Arrow{0, 0});
  return FinCategory({"*"}, arrows, {0}, [n](int g, int f) { return (g + f) % n; });
}

// ℤ ← ℤ ← ℤ ... with differentials 0, 2, 0, 2, ...
ChainComplex periodic_oracle(Ring ring, int top) {
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 1), 1);
  ChainComplex C(ring, ranks);
  for (int k = 2; k <= top; k += 2) C.d[static_cast<std::size_t>(k)].c[0].emplace_back(0, Int(2));
  return C;
}

}  // namespace

TEST(Homology, ZeroComplex) {
  ChainComplex C(Ring::ZZ, {0, 0});
  for (const auto& g : homology(C)) EXPECT_TRUE(g.is_zero());
}

TEST(Homology, CircleAndBoundary) {
  auto X = boundary_triangle();
  EXPECT_TRUE(X.check_face_identities());
  auto h = homology(chains(X, Ring::ZZ));
  EXPECT_EQ(h[0], Z(1));
  EXPECT_EQ(h[1], Z(1));
  auto hi = homology(chains(interval(), Ring::ZZ));
  EXPECT_EQ(hi[0], Z(1));
  EXPECT_EQ(hi[1], Z(0));
}

TEST(Homology, EmptyAndPoint) {
  EXPECT_TRUE(chains(SimplicialSetFin{}, Ring::ZZ).is_zero());
  SimplicialSetFin pt;
  pt.count = {1};
  pt.faces = {{}};
  auto h = homology(chains(pt, Ring::QQ));
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h[0], Z(1));
}

TEST(Homology, TorsionExample) {
  // RP^2-like: ℤ ←0− ℤ ←2− ℤ
  auto C = ChainComplex::from_dense(Ring::ZZ, {1, 1, 1}, {IntMatrix(1, 1), IntMatrix::from_rows({{2}})});
  auto h = homology(C);
  EXPECT_EQ(h[0], Z(1));
  EXPECT_EQ(h[1], Z(0, {2}));
  EXPECT_EQ(h[2], Z(0));
  EXPECT_EQ(h[1].invariants(), "2");
  EXPECT_EQ(h[0].invariants(), "0");
  C.ring = Ring::QQ;
  EXPECT_EQ(homology(C)[1], Z(0));
}

TEST(Homology, ReductionMatchesDenseOracle) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int trial = 0; trial < 80; ++trial) {
    // d1 = A·P, d2 = Q·B with P·Q = 0 guaranteed by building P from a kernel
    std::size_t n0 = 1 + rng() % 4, n1 = 2 + rng() % 5, n2 = 1 + rng() % 4;
    IntMatrix d1(n0, n1);
    for (std::size_t i = 0; i < n0; ++i)
      for (std::size_t j = 0; j < n1; ++j) d1(i, j) = (rng() % 3 == 0) ? val(rng) : 0;
    auto ker = integer_kernel(d1);
    IntMatrix d2(n1, n2);
    for (std::size_t j = 0; j < n2 && !ker.empty(); ++j)
      for (const auto& v : ker) {
        int c = val(rng);
        for (std::size_t i = 0; i < n1; ++i) d2(i, j) += c * v[i];
      }
    auto C = ChainComplex::from_dense(Ring::ZZ, {n0, n1, n2}, {d1, d2});
    ASSERT_TRUE(C.d_squared_zero());
    EXPECT_EQ(homology(C), dense_oracle(C));
  }
}

TEST(Homology, Int64OverflowFallsBack) {
  // entries near 2^62 force the bignum path during elimination
  Int big = Int(1) << 62;
  auto C = ChainComplex::from_dense(Ring::ZZ, {2, 2}, {IntMatrix::from_rows({{1, big}, {big, 1}})});
  auto h = homology(C);
  EXPECT_EQ(h, dense_oracle(C));
}

TEST(Cone, QuasiIsoExamples) {
  auto I = chains(interval(), Ring::ZZ);
  EXPECT_TRUE(quasi_iso_in_range(identity_map(I), I, I, 0, 3));
  EXPECT_FALSE(quasi_iso_in_range(zero_map(I, I), I, I, 0, 0));
  // two endpoints into the interval
  ChainComplex pts = ChainComplex::free_module(Ring::ZZ, 2);
  ChainMap inc{{SparseMatrix::identity(2)}};
  EXPECT_FALSE(quasi_iso_in_range(inc, pts, I, 0, 0));
  // one endpoint into the interval is a homotopy equivalence
  ChainComplex pt = ChainComplex::free_module(Ring::ZZ, 1);
  SparseMatrix e(2, 1);
  e.c[0].emplace_back(0, Int(1));
  EXPECT_TRUE(quasi_iso_in_range(ChainMap{{e}}, pt, I, 0, 2));
}

TEST(Tensor, KunnethOnSmallComplexes) {
  auto S = chains(boundary_triangle(), Ring::ZZ);
  auto I = chains(interval(), Ring::ZZ);
  auto T = tensor(I, S);
  EXPECT_TRUE(T.d_squared_zero());
  auto h = homology(T);
  EXPECT_EQ(h[0], Z(1));
  EXPECT_EQ(h[1], Z(1));
  EXPECT_EQ(h[2], Z(0));
  auto TT = tensor(S, S);  // torus
  auto ht = homology(TT);
  EXPECT_EQ(ht[1], Z(2));
  EXPECT_EQ(ht[2], Z(1));
}

TEST(Hocolim, TerminalCategoryIsIdentity) {
  auto C = std::make_shared<FinCategory>(FinCategory({"*"}, {{0, 0}}, {0}, [](int, int) { return 0; }));
  auto S = chains(boundary_triangle(), Ring::ZZ);
  auto h = homology(hocolim_trunc(constant_functor(C, S), 3));
  EXPECT_TRUE(homology_agrees(h, homology(S), 0, 2));
}

TEST(Hocolim, ClassifyingSpaceOfZ2) {
  auto C = std::make_shared<FinCategory>(cyclic_group_category(2));
  auto DZ = constant_functor(C, ChainComplex::free_module(Ring::ZZ, 1));
  ChainComplex bar = hocolim_trunc(DZ, 4);
  EXPECT_TRUE(bar.d_squared_zero());
  auto h = homology(bar);
  auto oracle = homology(periodic_oracle(Ring::ZZ, 5));
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(h[static_cast<std::size_t>(k)], oracle[static_cast<std::size_t>(k)]) << k;
  EXPECT_EQ(h[1], Z(0, {2}));
  EXPECT_EQ(h[3], Z(0, {2}));
  auto DQ = constant_functor(C, ChainComplex::free_module(Ring::QQ, 1));
  auto hq = homology(hocolim_trunc(DQ, 4));
  EXPECT_EQ(hq[0], Z(1));
  for (int k = 1; k <= 3; ++k) EXPECT_TRUE(hq[static_cast<std::size_t>(k)].is_zero());
  EXPECT_TRUE(truncation_stable(DZ, 4));
}

TEST(Hocolim, ClassifyingSpaceOfZ3) {
  auto C = std::make_shared<FinCategory>(cyclic_group_category(3));
  auto h = homology(hocolim_trunc(constant_functor(C, ChainComplex::free_module(Ring::ZZ, 1)), 5));
  EXPECT_EQ(h[1], Z(0, {3}));
  EXPECT_EQ(h[2], Z(0));
  EXPECT_EQ(h[3], Z(0, {3}));
}

TEST(Hocoend, TerminalAndIsomorphicObjects) {
  FinCategory term({"*"}, {{0, 0}}, {0}, [](int, int) { return 0; });
  auto tc = std::make_shared<FinCategory>(term);
  auto S = chains(boundary_triangle(), Ring::ZZ);
  auto E = constant_functor(tc, ChainComplex::free_module(Ring::ZZ, 1));
  auto X = constant_functor(std::make_shared<FinCategory>(term.op()), S);
  EXPECT_TRUE(homology_agrees(homology(hocoend_pairing(term, E, X, 3)), homology(S), 0, 2));

  // two objects joined by inverse isomorphisms a⇄b
  FinCategory iso({"a", "b"}, {{0, 0}, {1, 1}, {0, 1}, {1, 0}}, {0, 1}, [](int g, int f) {
    if (f <= 1) return g;
    if (g <= 1) return f;
    return f == 2 ? 0 : 1;  // (b→a)∘(a→b) = id_a, (a→b)∘(b→a) = id_b
  });
  auto ic = std::make_shared<FinCategory>(iso);
  auto Q = ChainComplex::free_module(Ring::QQ, 1);
  auto h = homology(hocoend_pairing(iso, constant_functor(ic, Q), constant_functor(std::make_shared<FinCategory>(iso.op()), Q), 3));
  EXPECT_EQ(h[0], Z(1));
  for (std::size_t k = 1; k <= 2; ++k) EXPECT_TRUE(h[k].is_zero());
}

TEST(Hocoend, CoYonedaOnOrbitCategory) {
  for (auto g : {PermGroup::cyclic(2), PermGroup::cyclic(3)}) {
    auto oc = build_orbit_category(g);
    auto C = std::make_shared<FinCategory>(oc.cat);
    auto Cop = std::make_shared<FinCategory>(oc.cat.op());
    // X(T) = a contravariant functor built from Hom(−, G/G) ⊔ circle
    auto S = chains(boundary_triangle(), Ring::ZZ);
    auto X = constant_functor(Cop, S);
    for (int t0 = 0; t0 < static_cast<int>(oc.num_objects()); ++t0) {
      auto E = representable_functor(C, t0, Ring::ZZ);
      ASSERT_TRUE(E.check());
      auto h = homology(hocoend_pairing(oc.cat, E, X, 3));
      auto expect = homology(S);
      for (int k = 0; k <= 2; ++k) EXPECT_EQ(homology_at(h, k), homology_at(expect, k)) << g.name() << " T0=" << t0 << " k=" << k;
    }
  }
}

namespace {

// Strict coend of (S,T) ↦ ℚ[Hom(T,S)]: endomorphisms modulo a∘b ~ b∘a.
std::size_t strict_trace_classes(const FinCategory& C) {
  const int m = static_cast<int>(C.num_morphisms());
  std::vector<int> parent(static_cast<std::size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]); };
  for (int a = 0; a < m; ++a)
    for (int b : C.hom(C.dst(a), C.src(a))) parent[static_cast<std::size_t>(find(C.compose(b, a)))] = find(C.compose(a, b));
  std::set<int> roots;
  for (int o = 0; o < static_cast<int>(C.num_objects()); ++o)
    for (int e : C.hom(o, o)) roots.insert(find(e));
  return roots.size();
}

}  // namespace

TEST(Hocoend, HomBifunctorAgainstStrictCoend) {
  auto oc = build_orbit_category(PermGroup::cyclic(2));
  const FinCategory& C = oc.cat;
  TwistedArrow tw = twisted_arrow_category(C);
  ChainFunctor P;
  P.source = std::make_shared<FinCategory>(tw.cat.op());
  P.ring = Ring::QQ;
  // F̃(f: i→j) = ℚ[Hom(j, i)], a Tw morphism (u, v) acts by h ↦ u∘h∘v
  for (int f : tw.object_arrow) P.value.push_back(ChainComplex::free_module(Ring::QQ, C.hom(C.dst(f), C.src(f)).size()));
  for (std::size_t m = 0; m < tw.pairs.size(); ++m) {
    auto [u, v] = tw.pairs[m];
    int f = tw.object_arrow[static_cast<std::size_t>(tw.cat.src(static_cast<int>(m)))];
    int f2 = tw.object_arrow[static_cast<std::size_t>(tw.cat.dst(static_cast<int>(m)))];
    const auto& from = C.hom(C.dst(f2), C.src(f2));
    const auto& to = C.hom(C.dst(f), C.src(f));
    SparseMatrix mat(to.size(), from.size());
    for (std::size_t j = 0; j < from.size(); ++j) {
      int h = C.compose(u, C.compose(from[j], v));
      mat.c[j].emplace_back(static_cast<int>(std::find(to.begin(), to.end(), h) - to.begin()), Int(1));
    }
    P.map.push_back(ChainMap{{mat}});
  }
  ASSERT_TRUE(P.check());
  auto h = homology(hocoend_trunc(P, 3));
  EXPECT_EQ(strict_trace_classes(C), 3u);
  EXPECT_EQ(h[0].free, strict_trace_classes(C));
}
