#pragma once

// Chain-level homological algebra over Z and Q: sparse integer matrices,
// complexes and chain maps, homology by unit-pivot reduction followed by
// Smith normal form, mapping cones, tensor products, semi-simplicial sets and
// the normalized bar models for homotopy colimits and coends.

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "eqloc/category.hpp"
#include "eqloc/core.hpp"
#include "eqloc/linalg.hpp"

namespace eqloc {

enum class Ring { ZZ, QQ };

inline std::string ring_name(Ring r) { return r == Ring::ZZ ? "ZZ" : "QQ"; }

using SparseCol = std::vector<std::pair<int, Int>>;  // (row, value), sorted, no zeros

/// Column-major sparse integer matrix.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseCol> c;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t k) : rows(r), cols(k), c(k) {}

  static SparseMatrix identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.c[i].emplace_back(static_cast<int>(i), Int(1));
    return m;
  }
  static SparseMatrix from_dense(const IntMatrix& d) {
    SparseMatrix m(d.rows(), d.cols());
    for (std::size_t j = 0; j < d.cols(); ++j)
      for (std::size_t i = 0; i < d.rows(); ++i)
        if (d(i, j) != 0) m.c[j].emplace_back(static_cast<int>(i), d(i, j));
    return m;
  }
  IntMatrix to_dense() const {
    IntMatrix d(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
      for (const auto& [i, v] : c[j]) d(static_cast<std::size_t>(i), j) = v;
    return d;
  }

  /// Sorts each column, merges duplicate rows and drops zeros.
  void normalize() {
    for (auto& col : c) {
      std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      SparseCol out;
      for (auto& e : col) {
        if (!out.empty() && out.back().first == e.first)
          out.back().second += e.second;
        else
          out.push_back(std::move(e));
      }
      out.erase(std::remove_if(out.begin(), out.end(), [](const auto& e) { return e.second == 0; }), out.end());
      col = std::move(out);
    }
  }

  bool is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const SparseCol& col) { return col.empty(); });
  }
  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& col : c) n += col.size();
    return n;
  }
  Int at(std::size_t i, std::size_t j) const {
    for (const auto& [r, v] : c[j])
      if (static_cast<std::size_t>(r) == i) return v;
    return 0;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.c == b.c;
  }
  friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) { return !(a == b); }
};

/// A·B.
inline SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw InvalidInput("sparse product dimension mismatch");
  SparseMatrix m(a.rows, b.cols);
  std::vector<Int> acc(a.rows);
  std::vector<int> touched;
  std::vector<char> mark(a.rows, 0);
  for (std::size_t j = 0; j < b.cols; ++j) {
    touched.clear();
    for (const auto& [k, v] : b.c[j])
      for (const auto& [i, w] : a.c[static_cast<std::size_t>(k)]) {
        auto ui = static_cast<std::size_t>(i);
        if (!mark[ui]) {
          mark[ui] = 1;
          acc[ui] = 0;
          touched.push_back(i);
        }
        acc[ui] += w * v;
      }
    std::sort(touched.begin(), touched.end());
    for (int i : touched) {
      auto ui = static_cast<std::size_t>(i);
      mark[ui] = 0;
      if (acc[ui] != 0) m.c[j].emplace_back(i, acc[ui]);
    }
  }
  return m;
}

inline SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b, const Int& sb = 1) {
  if (a.rows != b.rows || a.cols != b.cols) throw InvalidInput("sparse sum dimension mismatch");
  SparseMatrix m = a;
  for (std::size_t j = 0; j < b.cols; ++j)
    for (const auto& [i, v] : b.c[j]) m.c[j].emplace_back(i, sb * v);
  m.normalize();
  return m;
}

inline SparseMatrix scaled(SparseMatrix m, const Int& s) {
  if (s == 0) return SparseMatrix(m.rows, m.cols);
  for (auto& col : m.c)
    for (auto& e : col) e.second *= s;
  return m;
}

/// Kronecker product: (a⊗b)[(i,k),(j,l)] = a[i,j]·b[k,l], row index i·b.rows + k.
inline SparseMatrix kronecker(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix m(a.rows * b.rows, a.cols * b.cols);
  for (std::size_t j = 0; j < a.cols; ++j)
    for (std::size_t l = 0; l < b.cols; ++l) {
      auto& col = m.c[j * b.cols + l];
      for (const auto& [i, v] : a.c[j])
        for (const auto& [k, w] : b.c[l])
          col.emplace_back(static_cast<int>(static_cast<std::size_t>(i) * b.rows + static_cast<std::size_t>(k)), v * w);
    }
  return m;
}

/// Bounded complex C_0 ← C_1 ← ... ← C_top of free modules over Z or Q.
/// d[k]: C_k → C_{k-1} has shape ranks[k-1] × ranks[k]; d[0] is unused.
struct ChainComplex {
  Ring ring = Ring::ZZ;
  std::vector<std::size_t> ranks;
  std::vector<SparseMatrix> d;

  ChainComplex() = default;
  explicit ChainComplex(Ring r, std::vector<std::size_t> rk = {}) : ring(r), ranks(std::move(rk)) {
    d.resize(ranks.size());
    for (std::size_t k = 1; k < ranks.size(); ++k) d[k] = SparseMatrix(ranks[k - 1], ranks[k]);
  }

  /// Concentrated in degree 0 with the given rank.
  static ChainComplex free_module(Ring r, std::size_t rank) { return ChainComplex(r, {rank}); }

  static ChainComplex from_dense(Ring r, const std::vector<std::size_t>& ranks, const std::vector<IntMatrix>& ds) {
    ChainComplex c(r, ranks);
    for (std::size_t k = 0; k < ds.size(); ++k) c.d[k + 1] = SparseMatrix::from_dense(ds[k]);
    c.validate();
    return c;
  }

  int top() const { return static_cast<int>(ranks.size()) - 1; }
  std::size_t rank(int k) const { return k < 0 || k > top() ? 0 : ranks[static_cast<std::size_t>(k)]; }
  bool is_zero() const {
    return std::all_of(ranks.begin(), ranks.end(), [](std::size_t r) { return r == 0; });
  }
  /// d_k as a matrix; zero when k is outside the stored range.
  SparseMatrix differential(int k) const {
    if (k >= 1 && k <= top()) return d[static_cast<std::size_t>(k)];
    return SparseMatrix(rank(k - 1), rank(k));
  }

  void validate() const {
    if (d.size() != ranks.size()) throw InvalidInput("differential count mismatch");
    for (int k = 1; k <= top(); ++k) {
      const auto& m = d[static_cast<std::size_t>(k)];
      if (m.rows != rank(k - 1) || m.cols != rank(k)) throw InvalidInput("differential shape mismatch in degree " + std::to_string(k));
    }
  }

  bool d_squared_zero() const {
    for (int k = 2; k <= top(); ++k)
      if (!multiply(d[static_cast<std::size_t>(k - 1)], d[static_cast<std::size_t>(k)]).is_zero()) return false;
    return true;
  }

  /// Drops trailing zero degrees.
  void trim() {
    while (!ranks.empty() && ranks.back() == 0) {
      ranks.pop_back();
      d.pop_back();
    }
  }
};

/// Per-degree chain map f_k: A_k → B_k.
struct ChainMap {
  std::vector<SparseMatrix> f;

  SparseMatrix at(int k, const ChainComplex& A, const ChainComplex& B) const {
    if (k >= 0 && static_cast<std::size_t>(k) < f.size()) return f[static_cast<std::size_t>(k)];
    return SparseMatrix(B.rank(k), A.rank(k));
  }
};

inline ChainMap identity_map(const ChainComplex& A) {
  ChainMap m;
  for (std::size_t r : A.ranks) m.f.push_back(SparseMatrix::identity(r));
  return m;
}

inline ChainMap zero_map(const ChainComplex& A, const ChainComplex& B) {
  ChainMap m;
  for (int k = 0; k <= A.top(); ++k) m.f.emplace_back(B.rank(k), A.rank(k));
  return m;
}

/// g∘f.
inline ChainMap compose(const ChainMap& g, const ChainMap& f, const ChainComplex& A, const ChainComplex& B, const ChainComplex& C) {
  ChainMap m;
  for (int k = 0; k <= A.top(); ++k) m.f.push_back(multiply(g.at(k, B, C), f.at(k, A, B)));
  return m;
}

inline bool maps_equal(const ChainMap& f, const ChainMap& g, const ChainComplex& A, const ChainComplex& B) {
  for (int k = 0; k <= A.top(); ++k)
    if (f.at(k, A, B) != g.at(k, A, B)) return false;
  return true;
}

/// Shapes match and d_B f = f d_A in every degree.
inline bool is_chain_map(const ChainMap& f, const ChainComplex& A, const ChainComplex& B) {
  for (int k = 0; k <= A.top(); ++k) {
    auto fk = f.at(k, A, B);
    if (fk.rows != B.rank(k) || fk.cols != A.rank(k)) return false;
  }
  for (int k = 1; k <= A.top(); ++k)
    if (multiply(B.differential(k), f.at(k, A, B)) != multiply(f.at(k - 1, A, B), A.differential(k))) return false;
  return true;
}

/// One homology group: Z^free ⊕ ⊕ Z/t_i (over Q only `free` is meaningful).
struct HomologyGroup {
  std::size_t free = 0;
  std::vector<Int> torsion;  // invariant factors > 1, ascending by divisibility

  bool is_zero() const { return free == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup& a, const HomologyGroup& b) { return a.free == b.free && a.torsion == b.torsion; }
  friend bool operator!=(const HomologyGroup& a, const HomologyGroup& b) { return !(a == b); }

  /// Invariant factors d1|d2|...; 0 stands for a free summand, "1" for the zero group.
  std::string invariants() const {
    if (is_zero()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : torsion) {
      os << (first ? "" : "|") << t;
      first = false;
    }
    for (std::size_t i = 0; i < free; ++i) {
      os << (first ? "" : "|") << 0;
      first = false;
    }
    return os.str();
  }

  std::string pretty(Ring ring) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    const char* base = ring == Ring::ZZ ? "Z" : "Q";
    bool first = true;
    if (free > 0) {
      os << base;
      if (free > 1) os << "^" << free;
      first = false;
    }
    for (const auto& t : torsion) {
      os << (first ? "" : " + ") << "Z/" << t;
      first = false;
    }
    return os.str();
  }
};

using Homology = std::vector<HomologyGroup>;

namespace detail {

struct Overflow {};

inline long long ck_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline long long ck_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline Int ck_mul(const Int& a, const Int& b) { return a * b; }
inline Int ck_sub(const Int& a, const Int& b) { return a - b; }

inline long long from_int(const Int& v, long long*) {
  if (v > Int(std::numeric_limits<long long>::max()) || v < Int(std::numeric_limits<long long>::min())) throw Overflow{};
  return v.convert_to<long long>();
}
inline Int from_int(const Int& v, Int*) { return v; }

template <class T>
bool is_unit(const T& v) {
  return v == 1 || v == -1;
}

template <class T>
struct WorkMatrix {
  std::vector<std::vector<std::pair<int, T>>> col;
  std::vector<std::vector<int>> row_cols;  // lazy: may hold stale column ids
  std::vector<int> row_nnz;

  const T* find(std::size_t c, int r) const {
    const auto& v = col[c];
    auto it = std::lower_bound(v.begin(), v.end(), r, [](const auto& e, int x) { return e.first < x; });
    return it != v.end() && it->first == r ? &it->second : nullptr;
  }

  std::vector<int> live_columns_in_row(int r) {
    auto& lst = row_cols[static_cast<std::size_t>(r)];
    std::sort(lst.begin(), lst.end());
    lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    std::vector<int> out;
    for (int c : lst)
      if (find(static_cast<std::size_t>(c), r)) out.push_back(c);
    lst = out;
    return out;
  }

  void remove_row(int r) {
    for (int c : live_columns_in_row(r)) {
      auto& v = col[static_cast<std::size_t>(c)];
      v.erase(std::lower_bound(v.begin(), v.end(), r, [](const auto& e, int x) { return e.first < x; }));
    }
    row_cols[static_cast<std::size_t>(r)].clear();
    row_nnz[static_cast<std::size_t>(r)] = 0;
  }

  void remove_col(std::size_t c) {
    for (const auto& e : col[c]) --row_nnz[static_cast<std::size_t>(e.first)];
    col[c].clear();
  }

  /// col[c] -= f·col[p]
  void axpy(std::size_t c, const T& f, std::size_t p) {
    const auto& a = col[c];
    const auto& b = col[p];
    std::vector<std::pair<int, T>> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        T v = ck_sub(T(0), ck_mul(f, b[j].second));
        ++row_nnz[static_cast<std::size_t>(b[j].first)];
        row_cols[static_cast<std::size_t>(b[j].first)].push_back(static_cast<int>(c));
        out.emplace_back(b[j].first, std::move(v));
        ++j;
      } else {
        T v = ck_sub(a[i].second, ck_mul(f, b[j].second));
        if (v == 0)
          --row_nnz[static_cast<std::size_t>(a[i].first)];
        else
          out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    col[c] = std::move(out);
  }
};

/// Remaining differentials after eliminating every reachable ±1 pivot; each
/// elimination is a chain homotopy equivalence, so homology is unchanged.
/// Ranks of the reduced complex together with its differentials, the latter
/// stripped of zero rows and columns.
struct Reduced {
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> d;
};

template <class T>
Reduced reduce_complex(const ChainComplex& C) {
  const int top = C.top();
  std::vector<std::vector<char>> alive(static_cast<std::size_t>(std::max(top + 1, 0)));
  for (int k = 0; k <= top; ++k) alive[static_cast<std::size_t>(k)].assign(C.rank(k), 1);
  std::vector<WorkMatrix<T>> W(static_cast<std::size_t>(std::max(top + 1, 0)));
  for (int k = 1; k <= top; ++k) {
    auto& w = W[static_cast<std::size_t>(k)];
    const auto& m = C.d[static_cast<std::size_t>(k)];
    w.col.resize(m.cols);
    w.row_cols.resize(m.rows);
    w.row_nnz.assign(m.rows, 0);
    for (std::size_t j = 0; j < m.cols; ++j)
      for (const auto& [i, v] : m.c[j]) {
        w.col[j].emplace_back(i, from_int(v, static_cast<T*>(nullptr)));
        w.row_cols[static_cast<std::size_t>(i)].push_back(static_cast<int>(j));
        ++w.row_nnz[static_cast<std::size_t>(i)];
      }
  }

  bool progress = true;
  while (progress) {
    progress = false;
    for (int k = 1; k <= top; ++k) {
      auto& w = W[static_cast<std::size_t>(k)];
      std::vector<std::size_t> order;
      for (std::size_t j = 0; j < w.col.size(); ++j)
        if (alive[static_cast<std::size_t>(k)][j] && !w.col[j].empty()) order.push_back(j);
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w.col[a].size() < w.col[b].size(); });
      for (std::size_t i : order) {
        if (!alive[static_cast<std::size_t>(k)][i]) continue;
        // Markowitz-style choice of the unit pivot in this column
        int best = -1;
        long long best_cost = -1;
        for (const auto& [r, v] : w.col[i]) {
          if (!is_unit(v)) continue;
          long long cost = static_cast<long long>(w.row_nnz[static_cast<std::size_t>(r)]);
          if (best < 0 || cost < best_cost) {
            best = r;
            best_cost = cost;
          }
        }
        if (best < 0) continue;
        const int j = best;
        const T eps = *w.find(i, j);
        for (int c : w.live_columns_in_row(j)) {
          if (static_cast<std::size_t>(c) == i) continue;
          T f = ck_mul(*w.find(static_cast<std::size_t>(c), j), eps);
          w.axpy(static_cast<std::size_t>(c), f, i);
        }
        w.remove_col(i);
        w.row_cols[static_cast<std::size_t>(j)].clear();
        w.row_nnz[static_cast<std::size_t>(j)] = 0;
        alive[static_cast<std::size_t>(k)][i] = 0;
        alive[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j)] = 0;
        if (k + 1 <= top) W[static_cast<std::size_t>(k + 1)].remove_row(static_cast<int>(i));
        if (k - 1 >= 1) W[static_cast<std::size_t>(k - 1)].remove_col(static_cast<std::size_t>(j));
        progress = true;
      }
    }
  }

  // Surviving generators are counted, but only rows and columns carrying a
  // nonzero entry enter the residual matrices: the rest change neither rank
  // nor invariant factors, and in the top truncated degrees they dominate.
  Reduced out;
  out.ranks.resize(static_cast<std::size_t>(std::max(top + 1, 0)));
  out.d.resize(static_cast<std::size_t>(std::max(top + 1, 0)));
  for (int k = 0; k <= top; ++k)
    out.ranks[static_cast<std::size_t>(k)] =
        static_cast<std::size_t>(std::count(alive[static_cast<std::size_t>(k)].begin(), alive[static_cast<std::size_t>(k)].end(), 1));
  for (int k = 1; k <= top; ++k) {
    const auto& w = W[static_cast<std::size_t>(k)];
    const auto& live_rows = alive[static_cast<std::size_t>(k - 1)];
    std::vector<int> row_index(live_rows.size(), -1);
    std::vector<std::size_t> cols;
    int nrows = 0;
    for (std::size_t j = 0; j < w.col.size(); ++j) {
      if (!alive[static_cast<std::size_t>(k)][j]) continue;
      bool any = false;
      for (const auto& e : w.col[j]) {
        const auto r = static_cast<std::size_t>(e.first);
        if (!live_rows[r]) continue;
        any = true;
        if (row_index[r] < 0) row_index[r] = nrows++;
      }
      if (any) cols.push_back(j);
    }
    IntMatrix m(static_cast<std::size_t>(nrows), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (const auto& [r, v] : w.col[cols[c]])
        if (live_rows[static_cast<std::size_t>(r)]) m(static_cast<std::size_t>(row_index[static_cast<std::size_t>(r)]), c) = Int(v);
    out.d[static_cast<std::size_t>(k)] = std::move(m);
  }
  return out;
}

inline Reduced reduce(const ChainComplex& C) {
  try {
    return reduce_complex<long long>(C);
  } catch (const Overflow&) {
    return reduce_complex<Int>(C);
  }
}

}  // namespace detail

/// Homology in degrees 0..top, via unit-pivot reduction then SNF (Z) or rank (Q).
inline Homology homology(const ChainComplex& C) {
  const int top = C.top();
  Homology h(static_cast<std::size_t>(std::max(top + 1, 0)));
  if (top < 0) return h;
  auto reduced = detail::reduce(C);
  std::vector<std::size_t> n(static_cast<std::size_t>(top + 1)), r(static_cast<std::size_t>(top + 2), 0);
  std::vector<std::vector<Int>> factors(static_cast<std::size_t>(top + 2));
  for (int k = 0; k <= top; ++k) n[static_cast<std::size_t>(k)] = reduced.ranks[static_cast<std::size_t>(k)];
  for (int k = 1; k <= top; ++k) {
    const auto& m = reduced.d[static_cast<std::size_t>(k)];
    if (m.rows() == 0 || m.cols() == 0) continue;
    if (C.ring == Ring::ZZ) {
      auto s = smith_normal_form(m, false);
      r[static_cast<std::size_t>(k)] = s.rank;
      for (std::size_t i = 0; i < s.rank; ++i)
        if (s.diagonal[i] > 1) factors[static_cast<std::size_t>(k)].push_back(s.diagonal[i]);
    } else {
      r[static_cast<std::size_t>(k)] = rank(m);
    }
  }
  for (int k = 0; k <= top; ++k) {
    auto& g = h[static_cast<std::size_t>(k)];
    g.free = n[static_cast<std::size_t>(k)] - r[static_cast<std::size_t>(k)] - r[static_cast<std::size_t>(k + 1)];
    g.torsion = factors[static_cast<std::size_t>(k + 1)];
  }
  return h;
}

/// Homology group in degree k, zero outside the stored range.
inline HomologyGroup homology_at(const Homology& h, int k) {
  return k >= 0 && static_cast<std::size_t>(k) < h.size() ? h[static_cast<std::size_t>(k)] : HomologyGroup{};
}

/// Degreewise equality in [lo, hi], treating missing degrees as zero.
inline bool homology_agrees(const Homology& a, const Homology& b, int lo, int hi) {
  for (int k = lo; k <= hi; ++k)
    if (homology_at(a, k) != homology_at(b, k)) return false;
  return true;
}

/// Cone(f)_n = A_{n-1} ⊕ B_n with d(a, b) = (-d a, f(a) + d b).
inline ChainComplex mapping_cone(const ChainMap& f, const ChainComplex& A, const ChainComplex& B) {
  const int top = std::max(A.top() + 1, B.top());
  std::vector<std::size_t> ranks;
  for (int n = 0; n <= top; ++n) ranks.push_back(A.rank(n - 1) + B.rank(n));
  ChainComplex C(A.ring, ranks);
  for (int n = 1; n <= top; ++n) {
    SparseMatrix m(ranks[static_cast<std::size_t>(n - 1)], ranks[static_cast<std::size_t>(n)]);
    const std::size_t a_lo = A.rank(n - 2);  // row offset of B_{n-1} in Cone_{n-1}
    const std::size_t a_n = A.rank(n - 1);   // column offset of B_n in Cone_n
    // columns from A_{n-1}
    if (n - 1 >= 0 && a_n > 0) {
      SparseMatrix da = A.differential(n - 1);
      SparseMatrix fa = f.at(n - 1, A, B);
      for (std::size_t j = 0; j < a_n; ++j) {
        auto& col = m.c[j];
        if (n - 1 >= 1)
          for (const auto& [i, v] : da.c[j]) col.emplace_back(i, -v);
        for (const auto& [i, v] : fa.c[j]) col.emplace_back(static_cast<int>(a_lo + static_cast<std::size_t>(i)), v);
      }
    }
    SparseMatrix db = B.differential(n);
    for (std::size_t j = 0; j < B.rank(n); ++j)
      for (const auto& [i, v] : db.c[j]) m.c[a_n + j].emplace_back(static_cast<int>(a_lo + static_cast<std::size_t>(i)), v);
    m.normalize();
    C.d[static_cast<std::size_t>(n)] = std::move(m);
  }
  return C;
}

/// True iff the cone of f is acyclic in degrees [a, b+1], i.e. f induces
/// isomorphisms on homology in degrees [a, b].
inline bool quasi_iso_in_range(const ChainMap& f, const ChainComplex& A, const ChainComplex& B, int a, int b) {
  if (!is_chain_map(f, A, B)) throw InvalidInput("not a chain map");
  ChainComplex cone = mapping_cone(f, A, B);
  // homology at b+1 needs the differential out of degree b+2
  while (cone.top() < b + 2) {
    cone.ranks.push_back(0);
    cone.d.emplace_back(cone.ranks[cone.ranks.size() - 2], 0);
  }
  Homology h = homology(cone);
  for (int k = std::max(a, 0); k <= b + 1; ++k)
    if (!homology_at(h, k).is_zero()) return false;
  return true;
}

/// Offset of the block A_p ⊗ B_{n-p} inside (A⊗B)_n.
inline std::size_t tensor_offset(const ChainComplex& A, const ChainComplex& B, int n, int p) {
  std::size_t off = 0;
  for (int q = 0; q < p; ++q) off += A.rank(q) * B.rank(n - q);
  return off;
}

/// (A⊗B)_n = ⊕ A_p ⊗ B_{n-p}, d(a⊗b) = da⊗b + (-1)^p a⊗db.
inline ChainComplex tensor(const ChainComplex& A, const ChainComplex& B) {
  const int top = std::max(A.top(), 0) + std::max(B.top(), 0);
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 1), 0);
  for (int n = 0; n <= top; ++n)
    for (int p = 0; p <= n; ++p) ranks[static_cast<std::size_t>(n)] += A.rank(p) * B.rank(n - p);
  ChainComplex C(A.ring == Ring::QQ || B.ring == Ring::QQ ? Ring::QQ : Ring::ZZ, ranks);
  for (int n = 1; n <= top; ++n) {
    SparseMatrix m(ranks[static_cast<std::size_t>(n - 1)], ranks[static_cast<std::size_t>(n)]);
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      const std::size_t bq = B.rank(q);
      const std::size_t src = tensor_offset(A, B, n, p);
      if (A.rank(p) * bq == 0) continue;
      if (p >= 1) {
        SparseMatrix da = A.differential(p);
        const std::size_t dst = tensor_offset(A, B, n - 1, p - 1);
        for (std::size_t a = 0; a < A.rank(p); ++a)
          for (const auto& [a2, v] : da.c[a])
            for (std::size_t b = 0; b < bq; ++b)
              m.c[src + a * bq + b].emplace_back(static_cast<int>(dst + static_cast<std::size_t>(a2) * bq + b), v);
      }
      if (q >= 1) {
        SparseMatrix db = B.differential(q);
        const std::size_t dst = tensor_offset(A, B, n - 1, p);
        const std::size_t bq1 = B.rank(q - 1);
        const Int sign = p % 2 == 0 ? 1 : -1;
        for (std::size_t a = 0; a < A.rank(p); ++a)
          for (std::size_t b = 0; b < bq; ++b)
            for (const auto& [b2, v] : db.c[b])
              m.c[src + a * bq + b].emplace_back(static_cast<int>(dst + a * bq1 + static_cast<std::size_t>(b2)), sign * v);
      }
    }
    m.normalize();
    C.d[static_cast<std::size_t>(n)] = std::move(m);
  }
  return C;
}

/// f⊗g: A⊗B → A'⊗B'.
inline ChainMap tensor_map(const ChainMap& f, const ChainMap& g, const ChainComplex& A, const ChainComplex& B,
                           const ChainComplex& A2, const ChainComplex& B2) {
  ChainComplex T = tensor(A, B), T2 = tensor(A2, B2);
  ChainMap out;
  for (int n = 0; n <= T.top(); ++n) {
    SparseMatrix m(T2.rank(n), T.rank(n));
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      if (A.rank(p) * B.rank(q) == 0 || A2.rank(p) * B2.rank(q) == 0) continue;
      SparseMatrix k = kronecker(f.at(p, A, A2), g.at(q, B, B2));
      const std::size_t src = tensor_offset(A, B, n, p), dst = tensor_offset(A2, B2, n, p);
      for (std::size_t j = 0; j < k.cols; ++j)
        for (const auto& [i, v] : k.c[j]) m.c[src + j].emplace_back(static_cast<int>(dst + static_cast<std::size_t>(i)), v);
    }
    m.normalize();
    out.f.push_back(std::move(m));
  }
  return out;
}

/// A semi-simplicial set: simplices per dimension and their face maps.
struct SimplicialSetFin {
  std::vector<std::size_t> count;                   // simplices per dimension
  std::vector<std::vector<std::vector<int>>> faces; // faces[n][s][i] = d_i s (n ≥ 1)

  int dim() const { return static_cast<int>(count.size()) - 1; }
  bool empty() const { return count.empty() || count[0] == 0; }

  /// d_i d_j = d_{j-1} d_i for i < j.
  bool check_face_identities() const {
    for (int n = 2; n <= dim(); ++n)
      for (std::size_t s = 0; s < count[static_cast<std::size_t>(n)]; ++s)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i < j; ++i) {
            int dj = faces[static_cast<std::size_t>(n)][s][static_cast<std::size_t>(j)];
            int di = faces[static_cast<std::size_t>(n)][s][static_cast<std::size_t>(i)];
            if (faces[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(dj)][static_cast<std::size_t>(i)] !=
                faces[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(di)][static_cast<std::size_t>(j - 1)])
              return false;
          }
    return true;
  }
};

/// Normalized chains with boundary Σ (-1)^i d_i.
inline ChainComplex chains(const SimplicialSetFin& X, Ring ring) {
  if (X.empty()) return ChainComplex(ring);
  ChainComplex C(ring, X.count);
  for (int n = 1; n <= X.dim(); ++n) {
    SparseMatrix m(X.count[static_cast<std::size_t>(n - 1)], X.count[static_cast<std::size_t>(n)]);
    for (std::size_t s = 0; s < X.count[static_cast<std::size_t>(n)]; ++s)
      for (int i = 0; i <= n; ++i)
        m.c[s].emplace_back(X.faces[static_cast<std::size_t>(n)][s][static_cast<std::size_t>(i)], i % 2 == 0 ? Int(1) : Int(-1));
    m.normalize();
    C.d[static_cast<std::size_t>(n)] = std::move(m);
  }
  return C;
}

/// A covariant functor from a finite category into chain complexes.
struct ChainFunctor {
  std::shared_ptr<const FinCategory> source;
  Ring ring = Ring::ZZ;
  std::vector<ChainComplex> value;  // per object
  std::vector<ChainMap> map;        // per morphism

  const ChainComplex& at(int obj) const { return value[static_cast<std::size_t>(obj)]; }
  const ChainMap& of(int f) const { return map[static_cast<std::size_t>(f)]; }

  /// Chain maps, identities and composition, all exhaustively.
  bool check() const {
    const auto& C = *source;
    if (value.size() != C.num_objects() || map.size() != C.num_morphisms()) return false;
    for (int f = 0; f < static_cast<int>(C.num_morphisms()); ++f)
      if (!is_chain_map(of(f), at(C.src(f)), at(C.dst(f)))) return false;
    for (int o = 0; o < static_cast<int>(C.num_objects()); ++o)
      if (!maps_equal(of(C.identity(o)), identity_map(at(o)), at(o), at(o))) return false;
    for (int b = 0; b < static_cast<int>(C.num_objects()); ++b)
      for (int f : C.morphisms_into(b))
        for (int g : C.morphisms_out_of(b)) {
          const auto& A = at(C.src(f));
          const auto& Cc = at(C.dst(g));
          if (!maps_equal(of(C.compose(g, f)), compose(of(g), of(f), A, at(b), Cc), A, Cc)) return false;
        }
    return true;
  }
};

/// Restriction of a functor along a full subcategory inclusion.
inline ChainFunctor restrict_functor(const ChainFunctor& D, const SubCategory& sub) {
  ChainFunctor R;
  R.source = std::make_shared<FinCategory>(sub.cat);
  R.ring = D.ring;
  for (int o : sub.objects) R.value.push_back(D.at(o));
  for (int m : sub.morphisms) R.map.push_back(D.of(m));
  return R;
}

namespace detail {

/// Chains c0 → ... → cq of non-identity morphisms, grouped by length, each
/// keyed by (c0, morphisms). Only chains whose first value is nonzero.
struct BarChains {
  std::vector<std::vector<std::pair<int, std::vector<int>>>> chains;  // [q] -> (c0, f1..fq)
  std::vector<std::map<std::pair<int, std::vector<int>>, int>> index;

  int find(std::size_t q, int c0, const std::vector<int>& fs) const {
    auto it = index[q].find({c0, fs});
    return it == index[q].end() ? -1 : it->second;
  }
};

inline BarChains enumerate_chains(const FinCategory& C, int N, const std::vector<bool>& start_ok) {
  BarChains b;
  b.chains.resize(static_cast<std::size_t>(N + 1));
  b.index.resize(static_cast<std::size_t>(N + 1));
  for (int o = 0; o < static_cast<int>(C.num_objects()); ++o)
    if (start_ok[static_cast<std::size_t>(o)]) b.chains[0].push_back({o, {}});
  for (int q = 1; q <= N; ++q)
    for (const auto& [c0, fs] : b.chains[static_cast<std::size_t>(q - 1)]) {
      int end = fs.empty() ? c0 : C.dst(fs.back());
      for (int f : C.morphisms_out_of(end)) {
        if (C.is_identity(f)) continue;
        auto g = fs;
        g.push_back(f);
        b.chains[static_cast<std::size_t>(q)].push_back({c0, std::move(g)});
      }
    }
  for (std::size_t q = 0; q < b.chains.size(); ++q)
    for (std::size_t i = 0; i < b.chains[q].size(); ++i) b.index[q].emplace(b.chains[q][i], static_cast<int>(i));
  return b;
}

}  // namespace detail

namespace detail {

/// Generator layout of the truncated bar complex: degree n holds blocks
/// (q, chain, p = n - q) ordered by q, then chain.
struct BarLayout {
  BarChains bar;
  std::vector<std::vector<std::vector<std::size_t>>> offset;  // [q][chain][p]
  std::vector<std::size_t> ranks;
  int vtop = 0;
};

inline BarLayout bar_layout(const ChainFunctor& D, int N) {
  if (N < 0) throw InvalidInput("truncation must be nonnegative");
  const FinCategory& C = *D.source;
  BarLayout L;
  std::vector<bool> nonzero(C.num_objects());
  for (int o = 0; o < static_cast<int>(C.num_objects()); ++o) {
    nonzero[static_cast<std::size_t>(o)] = !D.at(o).is_zero();
    L.vtop = std::max(L.vtop, D.at(o).top());
  }
  L.bar = enumerate_chains(C, N, nonzero);
  const int top = N + L.vtop;
  L.ranks.assign(static_cast<std::size_t>(top + 1), 0);
  L.offset.resize(static_cast<std::size_t>(N + 1));
  for (int q = 0; q <= N; ++q)
    L.offset[static_cast<std::size_t>(q)].assign(L.bar.chains[static_cast<std::size_t>(q)].size(),
                                                 std::vector<std::size_t>(static_cast<std::size_t>(L.vtop + 1), 0));
  for (int n = 0; n <= top; ++n)
    for (int q = 0; q <= std::min(n, N); ++q) {
      const int p = n - q;
      if (p > L.vtop) continue;
      auto& oq = L.offset[static_cast<std::size_t>(q)];
      for (std::size_t s = 0; s < L.bar.chains[static_cast<std::size_t>(q)].size(); ++s) {
        oq[s][static_cast<std::size_t>(p)] = L.ranks[static_cast<std::size_t>(n)];
        L.ranks[static_cast<std::size_t>(n)] += D.at(L.bar.chains[static_cast<std::size_t>(q)][s].first).rank(p);
      }
    }
  return L;
}

}  // namespace detail

/// Truncated homotopy colimit: the total complex of the normalized
/// simplicial replacement, bar degrees q ≤ N. Correct in degrees ≤ N-1.
inline ChainComplex hocolim_trunc(const ChainFunctor& D, int N) {
  const FinCategory& C = *D.source;
  detail::BarLayout L = detail::bar_layout(D, N);
  const auto& bar = L.bar;
  const auto& offset = L.offset;
  const auto& ranks = L.ranks;
  const int vtop = L.vtop;
  const int top = N + vtop;
  ChainComplex T(D.ring, ranks);
  for (int n = 1; n <= top; ++n) {
    SparseMatrix m(ranks[static_cast<std::size_t>(n - 1)], ranks[static_cast<std::size_t>(n)]);
    for (int q = 0; q <= std::min(n, N); ++q) {
      const int p = n - q;
      if (p > vtop) continue;
      const Int qsign = q % 2 == 0 ? 1 : -1;
      for (std::size_t s = 0; s < bar.chains[static_cast<std::size_t>(q)].size(); ++s) {
        const auto& [c0, fs] = bar.chains[static_cast<std::size_t>(q)][s];
        const ChainComplex& V = D.at(c0);
        const std::size_t dimp = V.rank(p);
        if (dimp == 0) continue;
        const std::size_t src = offset[static_cast<std::size_t>(q)][s][static_cast<std::size_t>(p)];
        auto emit = [&](std::size_t row, const Int& v, std::size_t colx) { m.c[src + colx].emplace_back(static_cast<int>(row), v); };
        if (q >= 1) {
          // d_0: apply D(f1), drop c0
          {
            const int c1 = C.dst(fs[0]);
            std::vector<int> rest(fs.begin() + 1, fs.end());
            int t = bar.find(static_cast<std::size_t>(q - 1), c1, rest);
            if (t >= 0) {
              const std::size_t dst = offset[static_cast<std::size_t>(q - 1)][static_cast<std::size_t>(t)][static_cast<std::size_t>(p)];
              SparseMatrix fm = D.of(fs[0]).at(p, V, D.at(c1));
              for (std::size_t x = 0; x < dimp; ++x)
                for (const auto& [r, v] : fm.c[x]) emit(dst + static_cast<std::size_t>(r), v, x);
            }
          }
          // inner faces compose; degenerate results vanish
          for (int i = 1; i < q; ++i) {
            int comp = C.compose(fs[static_cast<std::size_t>(i)], fs[static_cast<std::size_t>(i - 1)]);
            if (C.is_identity(comp)) continue;
            std::vector<int> g;
            g.reserve(fs.size() - 1);
            for (int k = 0; k < i - 1; ++k) g.push_back(fs[static_cast<std::size_t>(k)]);
            g.push_back(comp);
            for (int k = i + 1; k < q; ++k) g.push_back(fs[static_cast<std::size_t>(k)]);
            int t = bar.find(static_cast<std::size_t>(q - 1), c0, g);
            const std::size_t dst = offset[static_cast<std::size_t>(q - 1)][static_cast<std::size_t>(t)][static_cast<std::size_t>(p)];
            const Int sign = i % 2 == 0 ? 1 : -1;
            for (std::size_t x = 0; x < dimp; ++x) emit(dst + x, sign, x);
          }
          // d_q: drop the last morphism
          {
            std::vector<int> g(fs.begin(), fs.end() - 1);
            int t = bar.find(static_cast<std::size_t>(q - 1), c0, g);
            const std::size_t dst = offset[static_cast<std::size_t>(q - 1)][static_cast<std::size_t>(t)][static_cast<std::size_t>(p)];
            for (std::size_t x = 0; x < dimp; ++x) emit(dst + x, qsign, x);
          }
        }
        if (p >= 1) {
          const std::size_t dst = offset[static_cast<std::size_t>(q)][s][static_cast<std::size_t>(p - 1)];
          const SparseMatrix& dv = V.d[static_cast<std::size_t>(p)];
          for (std::size_t x = 0; x < dimp; ++x)
            for (const auto& [r, v] : dv.c[x]) emit(dst + static_cast<std::size_t>(r), qsign * v, x);
        }
      }
    }
    m.normalize();
    T.d[static_cast<std::size_t>(n)] = std::move(m);
  }
  return T;
}

/// Restriction of a chain presented by bar degree: the summands with q = 0
/// mapped to a target complex by per-object maps (used by assembly and counit
/// maps). component[o]: D(o) → target.
inline ChainMap hocolim_augmentation(const ChainFunctor& D, int N, const ChainComplex& hocolim,
                                     const std::vector<ChainMap>& component, const ChainComplex& target) {
  const FinCategory& C = *D.source;
  int vtop = 0;
  for (int o = 0; o < static_cast<int>(C.num_objects()); ++o) vtop = std::max(vtop, D.at(o).top());
  ChainMap out;
  for (int n = 0; n <= hocolim.top(); ++n) out.f.emplace_back(target.rank(n), hocolim.rank(n));
  // bar degree 0 generators come first in each degree, ordered by object
  for (int p = 0; p <= std::min(vtop, hocolim.top()); ++p) {
    std::size_t off = 0;
    for (int o = 0; o < static_cast<int>(C.num_objects()); ++o) {
      const auto& V = D.at(o);
      if (V.is_zero()) continue;
      SparseMatrix m = component[static_cast<std::size_t>(o)].at(p, V, target);
      for (std::size_t x = 0; x < V.rank(p); ++x) out.f[static_cast<std::size_t>(p)].c[off + x] = m.c[x];
      off += V.rank(p);
    }
  }
  (void)N;
  return out;
}

/// Map of truncated bar complexes induced by a natural transformation
/// α: D → D2 over the same category, applied summandwise.
inline ChainMap hocolim_map(const ChainFunctor& D, const ChainFunctor& D2, const std::vector<ChainMap>& alpha, int N) {
  detail::BarLayout A = detail::bar_layout(D, N), B = detail::bar_layout(D2, N);
  ChainMap out;
  for (std::size_t n = 0; n < A.ranks.size(); ++n) out.f.emplace_back(n < B.ranks.size() ? B.ranks[n] : 0, A.ranks[n]);
  for (std::size_t q = 0; q < A.bar.chains.size(); ++q)
    for (std::size_t s = 0; s < A.bar.chains[q].size(); ++s) {
      const auto& [c0, fs] = A.bar.chains[q][s];
      int t = B.bar.find(q, c0, fs);
      if (t < 0) continue;
      const ChainComplex& V = D.at(c0);
      for (int p = 0; p <= V.top(); ++p) {
        const int n = static_cast<int>(q) + p;
        SparseMatrix m = alpha[static_cast<std::size_t>(c0)].at(p, V, D2.at(c0));
        const std::size_t src = A.offset[q][s][static_cast<std::size_t>(p)];
        const std::size_t dst = B.offset[q][static_cast<std::size_t>(t)][static_cast<std::size_t>(p)];
        for (std::size_t x = 0; x < V.rank(p); ++x)
          for (const auto& [r, v] : m.c[x]) out.f[static_cast<std::size_t>(n)].c[src + x].emplace_back(static_cast<int>(dst + static_cast<std::size_t>(r)), v);
      }
    }
  for (auto& m : out.f) m.normalize();
  return out;
}

/// Map of truncated bar complexes induced by a functor φ of index categories
/// and a natural transformation α: D → D2∘φ. Chains that φ sends to
/// degenerate ones (some morphism becomes an identity) map to zero.
inline ChainMap hocolim_induced(const ChainFunctor& D, const ChainFunctor& D2, const FunctorData& phi,
                                const std::vector<ChainMap>& alpha, int N) {
  detail::BarLayout A = detail::bar_layout(D, N), B = detail::bar_layout(D2, N);
  ChainMap out;
  for (std::size_t n = 0; n < A.ranks.size(); ++n) out.f.emplace_back(n < B.ranks.size() ? B.ranks[n] : 0, A.ranks[n]);
  for (std::size_t q = 0; q < A.bar.chains.size(); ++q)
    for (std::size_t s = 0; s < A.bar.chains[q].size(); ++s) {
      const auto& [c0, fs] = A.bar.chains[q][s];
      std::vector<int> gs;
      bool degenerate = false;
      for (int f : fs) {
        degenerate |= phi.target->is_identity(phi(f));
        gs.push_back(phi(f));
      }
      if (degenerate) continue;
      const int d0 = phi.object(c0);
      int t = B.bar.find(q, d0, gs);
      if (t < 0) continue;  // D2 vanishes at φ(c0)
      const ChainComplex& V = D.at(c0);
      for (int p = 0; p <= V.top(); ++p) {
        SparseMatrix m = alpha[static_cast<std::size_t>(c0)].at(p, V, D2.at(d0));
        const std::size_t src = A.offset[q][s][static_cast<std::size_t>(p)];
        const std::size_t dst = B.offset[q][static_cast<std::size_t>(t)][static_cast<std::size_t>(p)];
        for (std::size_t x = 0; x < V.rank(p); ++x)
          for (const auto& [r, v] : m.c[x])
            out.f[q + static_cast<std::size_t>(p)].c[src + x].emplace_back(static_cast<int>(dst + static_cast<std::size_t>(r)), v);
      }
    }
  for (auto& m : out.f) m.normalize();
  return out;
}

/// Truncation stability: homology of the N and N+1 truncations agrees in
/// degrees ≤ N-1.
inline bool truncation_stable(const ChainFunctor& D, int N) {
  return homology_agrees(homology(hocolim_trunc(D, N)), homology(hocolim_trunc(D, N + 1)), 0, N - 1);
}

/// Homotopy coend of a functor given on Tw(I)^op (object f: i→j carries
/// F̃(f)). Computed as the homotopy colimit over a skeleton of Tw(I)^op, which
/// is equivalent to Tw(I)^op, so the homotopy colimit is unchanged.
inline ChainComplex hocoend_trunc(const ChainFunctor& Ftw, int N) {
  Skeleton sk = skeleton(*Ftw.source);
  return hocolim_trunc(restrict_functor(Ftw, sk.sub), N);
}

/// The constant functor with value V and identity maps.
inline ChainFunctor constant_functor(std::shared_ptr<const FinCategory> C, const ChainComplex& V) {
  ChainFunctor F;
  F.source = std::move(C);
  F.ring = V.ring;
  F.value.assign(F.source->num_objects(), V);
  F.map.assign(F.source->num_morphisms(), identity_map(V));
  return F;
}

/// ℤ[Hom(T0, −)] (or ℚ[...]) in degree 0, acting by post-composition.
inline ChainFunctor representable_functor(std::shared_ptr<const FinCategory> C, int T0, Ring ring) {
  ChainFunctor F;
  F.source = C;
  F.ring = ring;
  for (int o = 0; o < static_cast<int>(C->num_objects()); ++o)
    F.value.push_back(ChainComplex::free_module(ring, C->hom(T0, o).size()));
  for (int f = 0; f < static_cast<int>(C->num_morphisms()); ++f) {
    const auto& src = C->hom(T0, C->src(f));
    const auto& dst = C->hom(T0, C->dst(f));
    SparseMatrix m(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
      int h = C->compose(f, src[j]);
      m.c[j].emplace_back(static_cast<int>(std::find(dst.begin(), dst.end(), h) - dst.begin()), Int(1));
    }
    F.map.push_back(ChainMap{{m}});
  }
  return F;
}

/// The functor on Tw(C)^op sending f: i → j to E(i) ⊗ X(j), where E is a
/// functor on C and X a functor on C^op; a Tw morphism (u, v) acts as E(u) ⊗ X(v).
inline ChainFunctor pairing_functor(const FinCategory& C, const ChainFunctor& E, const ChainFunctor& X) {
  TwistedArrow tw = twisted_arrow_category(C);
  ChainFunctor P;
  P.source = std::make_shared<FinCategory>(tw.cat.op());
  P.ring = E.ring == Ring::QQ || X.ring == Ring::QQ ? Ring::QQ : Ring::ZZ;
  for (int f : tw.object_arrow) P.value.push_back(tensor(E.at(C.src(f)), X.at(C.dst(f))));
  for (std::size_t m = 0; m < tw.pairs.size(); ++m) {
    auto [u, v] = tw.pairs[m];
    // Tw morphism f → f' becomes f' → f in the opposite category
    const int f = tw.object_arrow[static_cast<std::size_t>(tw.cat.src(static_cast<int>(m)))];
    const int f2 = tw.object_arrow[static_cast<std::size_t>(tw.cat.dst(static_cast<int>(m)))];
    P.map.push_back(tensor_map(E.of(u), X.of(v), E.at(C.src(f2)), X.at(C.dst(f2)), E.at(C.src(f)), X.at(C.dst(f))));
  }
  for (auto& v : P.value) v.ring = P.ring;
  return P;
}

/// The map ∫^C E ⊗ X → ∫^C E ⊗ X2 induced by a natural transformation
/// α: X → X2 of functors on C^op.
struct CoendMap {
  ChainComplex source;
  ChainComplex target;
  ChainMap map;
};

inline CoendMap hocoend_pairing_map(const FinCategory& C, const ChainFunctor& E, const ChainFunctor& X, const ChainFunctor& X2,
                                    const std::vector<ChainMap>& alpha, int N) {
  ChainFunctor P = pairing_functor(C, E, X), P2 = pairing_functor(C, E, X2);
  TwistedArrow tw = twisted_arrow_category(C);
  Skeleton sk = skeleton(*P.source);
  ChainFunctor R = restrict_functor(P, sk.sub), R2 = restrict_functor(P2, sk.sub);
  std::vector<ChainMap> beta;
  for (int o : sk.sub.objects) {
    const int f = tw.object_arrow[static_cast<std::size_t>(o)];
    const ChainComplex& Ei = E.at(C.src(f));
    beta.push_back(tensor_map(identity_map(Ei), alpha[static_cast<std::size_t>(C.dst(f))], Ei, X.at(C.dst(f)), Ei, X2.at(C.dst(f))));
  }
  CoendMap out{hocolim_trunc(R, N), hocolim_trunc(R2, N), hocolim_map(R, R2, beta, N)};
  return out;
}

/// ∫^C E ⊗ X, truncated at bar degree N.
inline ChainComplex hocoend_pairing(const FinCategory& C, const ChainFunctor& E, const ChainFunctor& X, int N) {
  return hocoend_trunc(pairing_functor(C, E, X), N);
}

}  // namespace eqloc
