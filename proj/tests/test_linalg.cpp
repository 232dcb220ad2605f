#include <random>

#include <gtest/gtest.h>

#include "eqloc/linalg.hpp"

using namespace eqloc;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// |det| of a square integer matrix by cofactor expansion; small sizes only
Int det_oracle(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != j) minor(i - 1, kk++) = m(i, k);
    Int term = m(0, j) * det_oracle(minor);
    acc += (j % 2 == 0) ? term : Int(-term);
  }
  return acc;
}

}  // namespace

TEST(Smith, IdentityAndZero) {
  auto s = smith_normal_form(IntMatrix::identity(3));
  EXPECT_EQ(s.D, IntMatrix::identity(3));
  auto z = smith_normal_form(IntMatrix(2, 3));
  EXPECT_TRUE(z.D.is_zero());
  EXPECT_EQ(z.rank, 0u);
}

TEST(Smith, TwoByTwo) {
  auto s = smith_normal_form(IntMatrix::from_rows({{2, 4}, {6, 8}}));
  EXPECT_EQ(s.diagonal, (std::vector<Int>{2, 4}));
}

TEST(Smith, RoundTripRandom) {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    IntMatrix m = random_matrix(rng, r, c, -9, 9);
    auto s = smith_normal_form(m);
    EXPECT_EQ(s.U * m * s.V, s.D);
    for (std::size_t i = 0; i + 1 < s.rank; ++i) EXPECT_EQ(s.diagonal[i + 1] % s.diagonal[i], 0);
    for (std::size_t i = 0; i < s.rank; ++i) EXPECT_GT(s.diagonal[i], 0);
    EXPECT_EQ(s.rank, rank(to_rational(m)));
    EXPECT_EQ(s.rank, rank(m));
    if (r == c && r <= 5) {
      Int prod = 1;
      for (std::size_t i = 0; i < s.rank; ++i) prod *= s.diagonal[i];
      Int d = det_oracle(m);
      EXPECT_EQ(s.rank == r ? prod : Int(0), d < 0 ? Int(-d) : d);
    }
  }
}

TEST(Smith, ModularDiagonalMatchesTransforms) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = 1 + rng() % 10, c = 1 + rng() % 10;
    IntMatrix m = random_matrix(rng, r, c, -6, 6);
    // sparsify and add a dependent row so rank deficiency and torsion both occur
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (rng() % 3 == 0) m(i, j) = 0;
    if (r > 2)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = 2 * m(0, j) - 4 * m(1, j);
    auto full = smith_normal_form(m, true);
    auto diag = smith_normal_form(m, false);
    EXPECT_EQ(diag.rank, full.rank);
    EXPECT_EQ(diag.diagonal, full.diagonal);
    if (r == c && r <= 5) {
      Int prod = 1;
      for (const auto& d : diag.diagonal) prod *= d;
      Int d = det_oracle(m);
      EXPECT_EQ(diag.rank == r ? prod : Int(0), d < 0 ? Int(-d) : d);
    }
  }
}

TEST(Smith, NoCoefficientBlowUp) {
  std::mt19937 rng(5);
  // dense 40x41: plain Euclidean elimination never finishes on these
  IntMatrix dense = random_matrix(rng, 40, 41, -20, 20);
  auto s = smith_normal_form(dense, false);
  EXPECT_EQ(s.rank, rank(to_rational(dense)));
  // unit pivots against unit entries once cycled forever
  IntMatrix sparse = IntMatrix::from_rows({{0, 0, -2, 0, -2, 0, 0, 0, 0},
                                           {0, 0, 0, -3, -3, 3, 0, -2, 0},
                                           {0, 2, 0, 0, 3, 0, -1, -2, 0},
                                           {0, 0, -2, 2, 0, -1, 0, 0, 0},
                                           {0, 0, 0, 0, 2, 0, -3, 0, 0},
                                           {0, 3, 0, 3, 0, 0, 0, 0, 0},
                                           {1, 1, 0, 0, 0, 0, 0, 3, 3},
                                           {0, -2, 0, 0, 0, 0, 0, 0, 0},
                                           {0, 0, 0, 0, -3, 0, 0, 0, -3},
                                           {-1, -2, 0, 0, 0, 0, 0, -1, 0},
                                           {0, 0, -6, 6, 0, -6, 0, 4, 0}});
  auto a = smith_normal_form(sparse, true);
  auto b = smith_normal_form(sparse, false);
  EXPECT_EQ(a.U * sparse * a.V, a.D);
  EXPECT_EQ(a.diagonal, b.diagonal);
}

TEST(Smith, KernelIsKernel) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix m = random_matrix(rng, 1 + rng() % 3, 2 + rng() % 4, -4, 4);
    auto ker = integer_kernel(m);
    EXPECT_EQ(ker.size(), m.cols() - rank(m));
    for (const auto& v : ker) {
      IntMatrix col(v.size(), 1);
      for (std::size_t i = 0; i < v.size(); ++i) col(i, 0) = v[i];
      EXPECT_TRUE((m * col).is_zero());
    }
  }
}

TEST(Hermite, CanonicalUnderRowOps) {
  std::vector<std::vector<Int>> a = {{2, 4, 6}, {1, 1, 1}};
  std::vector<std::vector<Int>> b = {{3, 5, 7}, {-1, -1, -1}};  // a0+a1, -a1
  EXPECT_EQ(hermite_normal_form(a), hermite_normal_form(b));
}
