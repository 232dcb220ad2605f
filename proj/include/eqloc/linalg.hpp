#pragma once

// Exact dense linear algebra over Z and Q: Smith and Hermite normal forms,
// integer kernels and rational ranks.

#include <algorithm>
#include <cassert>
#include <ostream>
#include <utility>
#include <vector>

#include "eqloc/core.hpp"

namespace eqloc {

template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      assert(rows[i].size() == m.cols_);
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& v) { return v == 0; });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  Matrix scaled(const T& s) const {
    Matrix r = *this;
    for (auto& v : r.data_) v *= s;
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += f * row[src]
  void add_row(std::size_t dst, std::size_t src, const T& f) {
    if (f == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += f * (*this)(src, j);
  }
  // col[dst] += f * col[src]
  void add_col(std::size_t dst, std::size_t src, const T& f) {
    if (f == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += f * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }
  void negate_col(std::size_t c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<long>(i * cols_),
                          data_.begin() + static_cast<long>((i + 1) * cols_));
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rational>;

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

/// U * M * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
  std::vector<Int> diagonal;  // nonzero invariant factors, ascending by divisibility
  std::size_t rank = 0;
};

namespace detail {

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// Floor division for the Euclidean step; remainders stay in [0, |b|).
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

}  // namespace detail

namespace detail {

// g = x·a + y·b with g = gcd(a, b) >= 0.
inline void ext_gcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
  // a | b keeps the trivial combination, so clearing never moves the pivot
  if (a != 0 && b % a == 0) {
    g = abs_int(a), x = a < 0 ? -1 : 1, y = 0;
    return;
  }
  Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1, s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1), r1 = std::move(r2);
    s0 = std::move(s1), s1 = std::move(s2);
    t0 = std::move(t1), t1 = std::move(t2);
  }
  if (r0 < 0) r0 = -r0, s0 = -s0, t0 = -t0;
  g = r0, x = s0, y = t0;
}

// (row a, row b) <- [[x, y], [u, v]] · (row a, row b)
inline void mix_rows(IntMatrix& M, std::size_t a, std::size_t b, const Int& x, const Int& y, const Int& u, const Int& v) {
  for (std::size_t j = 0; j < M.cols(); ++j) {
    Int p = M(a, j), q = M(b, j);
    M(a, j) = x * p + y * q;
    M(b, j) = u * p + v * q;
  }
}

inline void mix_cols(IntMatrix& M, std::size_t a, std::size_t b, const Int& x, const Int& y, const Int& u, const Int& v) {
  for (std::size_t i = 0; i < M.rows(); ++i) {
    Int p = M(i, a), q = M(i, b);
    M(i, a) = x * p + y * q;
    M(i, b) = u * p + v * q;
  }
}

}  // namespace detail

namespace detail {

// Rank and one nonzero maximal minor, by fraction-free (Bareiss) elimination
// with full pivoting; every intermediate entry is a minor of M.
inline std::pair<std::size_t, Int> rank_and_minor(IntMatrix A) {
  const std::size_t m = A.rows(), n = A.cols();
  Int prev = 1;
  std::size_t k = 0;
  for (; k < m && k < n; ++k) {
    std::size_t pi = m, pj = n;
    for (std::size_t i = k; i < m && pi == m; ++i)
      for (std::size_t j = k; j < n; ++j)
        if (A(i, j) != 0) {
          pi = i, pj = j;
          break;
        }
    if (pi == m) break;
    A.swap_rows(k, pi);
    A.swap_cols(k, pj);
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) A(i, j) = (A(k, k) * A(i, j) - A(i, k) * A(k, j)) / prev;
      A(i, k) = 0;
    }
    prev = A(k, k);
  }
  return {k, k == 0 ? Int(1) : abs_int(prev)};
}

inline Int gcd_int(Int a, Int b) {
  a = abs_int(a), b = abs_int(b);
  while (b != 0) {
    Int r = a % b;
    a = std::move(b), b = std::move(r);
  }
  return a;
}

inline Int mod_pos(const Int& a, const Int& d) {
  Int r = a % d;
  return r < 0 ? Int(r + d) : r;
}

// Nonzero invariant factors without transforms. With Δ a nonzero maximal
// minor, every d_i divides Δ, so the columns of M together with ΔZ^m have
// invariant factors d_1..d_r, Δ, ..., Δ; elimination on that lattice can
// reduce every entry mod Δ, which bounds coefficient growth.
inline std::vector<Int> invariant_factors_modular(const IntMatrix& M) {
  auto [r, delta] = rank_and_minor(M);
  if (r == 0) return {};
  if (delta == 1) return std::vector<Int>(r, Int(1));
  const std::size_t m = M.rows(), n = M.cols();
  IntMatrix A(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = mod_pos(M(i, j), delta);
  auto reduce_row = [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) A(i, j) = mod_pos(A(i, j), delta);
  };
  auto reduce_col = [&](std::size_t j) {
    for (std::size_t i = 0; i < m; ++i) A(i, j) = mod_pos(A(i, j), delta);
  };
  std::vector<Int> diag;
  for (std::size_t t = 0; t < m && t < n; ++t) {
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (A(i, j) != 0 && (pi == m || A(i, j) < A(pi, pj))) pi = i, pj = j;
    if (pi == m) break;  // the rest is ΔZ
    A.swap_rows(t, pi);
    A.swap_cols(t, pj);
    for (bool dirty = true; dirty;) {
      dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (A(i, t) == 0) continue;
        Int g, x, y;
        ext_gcd(A(t, t), A(i, t), g, x, y);
        mix_rows(A, t, i, x, y, Int(-(A(i, t) / g)), Int(A(t, t) / g));
        reduce_row(t);
        reduce_row(i);
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (A(t, j) == 0) continue;
        Int g, x, y;
        ext_gcd(A(t, t), A(t, j), g, x, y);
        mix_cols(A, t, j, x, y, Int(-(A(t, j) / g)), Int(A(t, t) / g));
        reduce_col(t);
        reduce_col(j);
        dirty = true;  // column t may be refilled
      }
      if (dirty) {
        dirty = false;
        for (std::size_t i = t + 1; i < m; ++i) dirty |= A(i, t) != 0;
      }
    }
    diag.push_back(gcd_int(A(t, t), delta));
  }
  // a diagonal lattice diag(g_i) with g_i | Δ, normalized to a divisibility chain
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      Int g = gcd_int(diag[i], diag[j]);
      if (g == diag[i]) continue;
      Int l = diag[i] / g * diag[j];
      diag[i] = g, diag[j] = l;
    }
  while (diag.size() < r) diag.push_back(delta);
  diag.resize(r);
  return diag;
}

}  // namespace detail

/// Entries are cleared with unimodular 2x2 Bezout steps against the pivot,
/// which keeps coefficient growth polynomial on the matrices met here; plain
/// Euclidean row swapping blows up doubly exponentially on dense inputs.
inline SmithForm smith_normal_form(const IntMatrix& M, bool with_transforms = true) {
  using detail::abs_int;
  const std::size_t m = M.rows(), n = M.cols();
  SmithForm out;
  if (!with_transforms) {
    out.diagonal = detail::invariant_factors_modular(M);
    out.rank = out.diagonal.size();
    out.D = IntMatrix(m, n);
    for (std::size_t i = 0; i < out.rank; ++i) out.D(i, i) = out.diagonal[i];
    return out;
  }
  out.D = M;
  if (with_transforms) {
    out.U = IntMatrix::identity(m);
    out.V = IntMatrix::identity(n);
  }
  IntMatrix& A = out.D;
  auto row_swap = [&](std::size_t a, std::size_t b) {
    A.swap_rows(a, b);
    if (with_transforms) out.U.swap_rows(a, b);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    A.swap_cols(a, b);
    if (with_transforms) out.V.swap_cols(a, b);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const Int& f) {
    A.add_row(dst, src, f);
    if (with_transforms) out.U.add_row(dst, src, f);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Int& f) {
    A.add_col(dst, src, f);
    if (with_transforms) out.V.add_col(dst, src, f);
  };
  // clear A(i, t) against the pivot A(t, t)
  auto clear_row = [&](std::size_t t, std::size_t i) {
    const Int a = A(t, t), b = A(i, t);
    if (b % a == 0) {
      row_add(i, t, Int(-(b / a)));
      return;
    }
    Int g, x, y;
    detail::ext_gcd(a, b, g, x, y);
    const Int u = -(b / g), v = a / g;
    detail::mix_rows(A, t, i, x, y, u, v);
    if (with_transforms) detail::mix_rows(out.U, t, i, x, y, u, v);
  };
  auto clear_col = [&](std::size_t t, std::size_t j) {
    const Int a = A(t, t), b = A(t, j);
    if (b % a == 0) {
      col_add(j, t, Int(-(b / a)));
      return;
    }
    Int g, x, y;
    detail::ext_gcd(a, b, g, x, y);
    const Int u = -(b / g), v = a / g;
    detail::mix_cols(A, t, j, x, y, u, v);
    if (with_transforms) detail::mix_cols(out.V, t, j, x, y, u, v);
  };

  std::size_t t = 0;
  while (t < m && t < n) {
    // pivot: smallest nonzero |entry| in the trailing block
    bool found = false;
    std::size_t pi = t, pj = t;
    Int best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (A(i, j) != 0 && (!found || abs_int(A(i, j)) < best)) {
          found = true;
          best = abs_int(A(i, j));
          pi = i;
          pj = j;
        }
    if (!found) break;
    row_swap(t, pi);
    col_swap(t, pj);

    for (;;) {
      for (std::size_t i = t + 1; i < m; ++i)
        if (A(i, t) != 0) clear_row(t, i);
      bool dirty = false;
      for (std::size_t j = t + 1; j < n; ++j)
        if (A(t, j) != 0) {
          // a non-divisible entry shrinks the pivot and refills column t
          dirty |= A(t, j) % A(t, t) != 0;
          clear_col(t, j);
        }
      if (dirty) continue;
      // divisibility of the trailing block by the pivot
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (A(i, j) % A(t, t) != 0) {
            row_add(t, i, Int(1));
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (A(t, t) < 0) {
      A.negate_row(t);
      if (with_transforms) out.U.negate_row(t);
    }
    ++t;
  }
  out.rank = t;
  for (std::size_t i = 0; i < t; ++i) out.diagonal.push_back(A(i, i));
  return out;
}

/// Z-basis of the integer kernel {x : M x = 0}, one vector per entry.
inline std::vector<std::vector<Int>> integer_kernel(const IntMatrix& M) {
  SmithForm s = smith_normal_form(M, true);
  std::vector<std::vector<Int>> basis;
  for (std::size_t j = s.rank; j < M.cols(); ++j) basis.push_back(s.V.col(j));
  return basis;
}

/// Row-style Hermite normal form of the lattice spanned by the given rows.
/// Zero rows are dropped; pivots positive, entries above a pivot in [0, pivot).
inline std::vector<std::vector<Int>> hermite_normal_form(std::vector<std::vector<Int>> rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    for (;;) {
      // smallest nonzero |entry| in column c among rows r..
      std::size_t piv = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 &&
            (piv == rows.size() || detail::abs_int(rows[i][c]) < detail::abs_int(rows[piv][c])))
          piv = i;
      if (piv == rows.size()) break;
      std::swap(rows[r], rows[piv]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Int q = detail::floor_div(rows[i][c], rows[r][c]);
        for (std::size_t k = 0; k < n; ++k) rows[i][k] -= q * rows[r][k];
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (r < rows.size() && rows[r][c] != 0) {
      if (rows[r][c] < 0)
        for (auto& v : rows[r]) v = -v;
      for (std::size_t i = 0; i < r; ++i) {
        Int q = detail::floor_div(rows[i][c], rows[r][c]);
        for (std::size_t k = 0; k < n; ++k) rows[i][k] -= q * rows[r][k];
      }
      ++r;
    }
  }
  rows.resize(r);
  return rows;
}

inline std::size_t rank(RatMatrix A) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
    std::size_t piv = r;
    while (piv < A.rows() && A(piv, c) == 0) ++piv;
    if (piv == A.rows()) continue;
    A.swap_rows(r, piv);
    for (std::size_t i = r + 1; i < A.rows(); ++i) {
      if (A(i, c) == 0) continue;
      Rational f = A(i, c) / A(r, c);
      A.add_row(i, r, Rational(-f));
    }
    ++r;
  }
  return r;
}

/// Rank over Q of an integer matrix (fraction-free elimination).
inline std::size_t rank(IntMatrix A) {
  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
    std::size_t piv = r;
    while (piv < A.rows() && A(piv, c) == 0) ++piv;
    if (piv == A.rows()) continue;
    A.swap_rows(r, piv);
    for (std::size_t i = r + 1; i < A.rows(); ++i) {
      for (std::size_t j = c + 1; j < A.cols(); ++j)
        A(i, j) = (A(r, c) * A(i, j) - A(i, c) * A(r, j)) / prev;
      A(i, c) = 0;
    }
    prev = A(r, c);
    ++r;
  }
  return r;
}

}  // namespace eqloc
