#pragma once

// Character tables by Dixon's method, the representation ring R(G) with
// restriction and induction, the prime ideal (γ), Segal elements and the
// rational localization at (γ) through central idempotents.

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "eqloc/core.hpp"
#include "eqloc/cyclotomic.hpp"
#include "eqloc/fingroup.hpp"
#include "eqloc/linalg.hpp"

namespace eqloc {

struct CharacterTable {
  PermGroup group;
  FieldPtr field;
  std::vector<std::size_t> class_sizes;
  std::vector<int> class_reps;               // element ids
  std::vector<std::vector<Cyc>> chi;         // chi[irrep][class]
  std::vector<Int> degrees;
  std::vector<std::string> names;

  std::size_t size() const { return chi.size(); }
  std::size_t num_classes() const { return class_sizes.size(); }

  /// ⟨a, b⟩ = (1/|G|) Σ |C| a(C) conj(b(C)).
  Cyc inner(const std::vector<Cyc>& a, const std::vector<Cyc>& b) const {
    Cyc s(field);
    for (std::size_t k = 0; k < num_classes(); ++k) s += a[k] * b[k].conj() * Rational(static_cast<long long>(class_sizes[k]));
    return s * Rational(1, static_cast<long long>(group.order()));
  }

  /// Multiplicities of the irreducibles in a class function (must be integral).
  std::vector<Int> decompose(const std::vector<Cyc>& f) const {
    std::vector<Int> out;
    for (const auto& c : chi) {
      Cyc m = inner(f, c);
      Rational r = m.rational();
      if (denominator(r) != 1) throw StructureMismatch("class function is not a virtual character");
      out.push_back(numerator(r));
    }
    return out;
  }

  /// Character of Σ a_i χ_i at a class.
  Cyc value(const std::vector<Int>& a, std::size_t cls) const {
    Cyc s(field);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0) s += chi[i][cls] * Rational(a[i]);
    return s;
  }

  bool row_orthogonal() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) {
        Cyc v = inner(chi[i], chi[j]);
        if (v != Cyc(field, Rational(i == j ? 1 : 0))) return false;
      }
    return true;
  }

  /// Σ_χ χ(C_a) conj χ(C_b) = δ_ab |G|/|C_a|.
  bool column_orthogonal() const {
    for (std::size_t a = 0; a < num_classes(); ++a)
      for (std::size_t b = 0; b < num_classes(); ++b) {
        Cyc s(field);
        for (const auto& row : chi) s += row[a] * row[b].conj();
        Rational expect = a == b ? Rational(static_cast<long long>(group.order()), static_cast<long long>(class_sizes[a])) : Rational(0);
        if (s != Cyc(field, expect)) return false;
      }
    return true;
  }
};

namespace detail {

inline long long mod_pow(long long a, long long e, long long p) {
  long long r = 1;
  a %= p;
  if (a < 0) a += p;
  while (e > 0) {
    if (e & 1) r = static_cast<long long>(static_cast<__int128>(r) * a % p);
    a = static_cast<long long>(static_cast<__int128>(a) * a % p);
    e >>= 1;
  }
  return r;
}
inline long long mod_inv(long long a, long long p) { return mod_pow(a, p - 2, p); }

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Null space basis of an r×c matrix over F_p.
inline std::vector<std::vector<long long>> kernel_mod_p(std::vector<std::vector<long long>> a, std::size_t cols, long long p) {
  const std::size_t rows = a.size();
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    long long inv = mod_inv(a[r][c], p);
    for (auto& x : a[r]) x = x * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      long long f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<long long>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<long long> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[static_cast<std::size_t>(pivot_col[i])] = (p - a[i][f]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

namespace detail {

struct TableRow {
  Int degree;
  std::vector<Cyc> values;
};

/// Canonical row order (trivial first, then by degree and values) and names.
inline void finish_table(CharacterTable& T, std::vector<TableRow> rows) {
  auto is_trivial = [](const TableRow& a) {
    for (const auto& v : a.values)
      if (!(v.is_rational() && v.rational() == 1)) return false;
    return true;
  };
  std::sort(rows.begin(), rows.end(), [&](const TableRow& a, const TableRow& b) {
    bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.values < b.values;
  });
  std::size_t rational_linear = 0;
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].degree == 1 && std::all_of(rows[i].values.begin(), rows[i].values.end(), [](const Cyc& v) { return v.is_rational(); }))
      ++rational_linear;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    T.degrees.push_back(rows[i].degree);
    T.chi.push_back(rows[i].values);
    bool rat = std::all_of(rows[i].values.begin(), rows[i].values.end(), [](const Cyc& v) { return v.is_rational(); });
    if (i == 0)
      T.names.push_back("triv");
    else if (rows[i].degree == 1 && rat && rational_linear == 1)
      T.names.push_back("sign");
    else
      T.names.push_back("chi" + std::to_string(i));
  }
}

}  // namespace detail

/// Dixon's algorithm: simultaneous eigenvectors of the class-sum matrices over
/// F_p (p ≡ 1 mod exp(G), p > 2√|G|), then lifting through roots of unity.
/// Values live in Q(ζ_m) with m = `conductor` (a multiple of exp(G); default exp(G)).
inline CharacterTable character_table(const PermGroup& G, int conductor = 0, std::size_t bound = kDefaultGroupBound) {
  if (G.order() > bound) throw GroupTooLarge("|G| = " + std::to_string(G.order()) + " exceeds bound " + std::to_string(bound));
  const long long n = static_cast<long long>(G.order());
  const long long e = static_cast<long long>(G.exponent());
  if (conductor == 0) conductor = static_cast<int>(e);
  if (conductor % e != 0) throw InvalidInput("conductor must be a multiple of the group exponent");
  const auto& classes = G.conjugacy_classes();
  const std::size_t r = classes.size();

  long long p = e + 1;
  while (!detail::is_prime(p) || static_cast<double>(p) <= 2.0 * std::sqrt(static_cast<double>(n))) p += e;

  // inverse classes
  std::vector<std::size_t> inv_class(r);
  for (std::size_t k = 0; k < r; ++k) inv_class[k] = static_cast<std::size_t>(G.class_of(G.inv(classes[k].representative)));

  // c[i][j][k] = #{x ∈ C_i : x^-1 z_k ∈ C_j}
  std::vector<std::vector<std::vector<long long>>> c(r, std::vector<std::vector<long long>>(r, std::vector<long long>(r, 0)));
  for (std::size_t i = 0; i < r; ++i)
    for (int x : classes[i].members)
      for (std::size_t k = 0; k < r; ++k) {
        int y = G.mul(G.inv(x), classes[k].representative);
        ++c[i][static_cast<std::size_t>(G.class_of(y))][k];
      }

  // split F_p^r into common eigenspaces of A_i, (A_i)_{jk} = c_ijk
  std::vector<std::vector<std::vector<long long>>> spaces;
  {
    std::vector<std::vector<long long>> full;
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<long long> v(r, 0);
      v[j] = 1;
      full.push_back(v);
    }
    spaces.push_back(full);
  }
  for (std::size_t i = 1; i < r; ++i) {
    std::vector<std::vector<std::vector<long long>>> next;
    for (auto& V : spaces) {
      if (V.size() == 1) {
        next.push_back(V);
        continue;
      }
      // images A_i v for basis vectors
      std::vector<std::vector<long long>> img;
      for (const auto& v : V) {
        std::vector<long long> w(r, 0);
        for (std::size_t j = 0; j < r; ++j) {
          long long s = 0;
          for (std::size_t k = 0; k < r; ++k) s = (s + c[i][j][k] % p * v[k]) % p;
          w[j] = s;
        }
        img.push_back(w);
      }
      std::size_t found = 0;
      for (long long lam = 0; lam < p && found < V.size(); ++lam) {
        // columns (A_i - λ) v_j, rows indexed by coordinates
        std::vector<std::vector<long long>> m(r, std::vector<long long>(V.size()));
        for (std::size_t j = 0; j < V.size(); ++j)
          for (std::size_t t = 0; t < r; ++t) m[t][j] = ((img[j][t] - lam * V[j][t]) % p + p) % p;
        auto ker = detail::kernel_mod_p(m, V.size(), p);
        if (ker.empty()) continue;
        std::vector<std::vector<long long>> W;
        for (const auto& a : ker) {
          std::vector<long long> w(r, 0);
          for (std::size_t j = 0; j < V.size(); ++j)
            for (std::size_t t = 0; t < r; ++t) w[t] = (w[t] + a[j] * V[j][t]) % p;
          W.push_back(w);
        }
        found += W.size();
        next.push_back(std::move(W));
      }
      if (found != V.size()) throw StructureMismatch("class-sum matrices not diagonalizable mod p");
    }
    spaces = std::move(next);
  }
  for (const auto& V : spaces)
    if (V.size() != 1) throw StructureMismatch("Dixon splitting did not separate all characters");

  // primitive e-th root of unity mod p
  long long gen = 2;
  for (;; ++gen) {
    bool ok = true;
    long long phi = p - 1, q = phi;
    for (long long f = 2; f * f <= q; ++f) {
      if (q % f) continue;
      while (q % f == 0) q /= f;
      if (detail::mod_pow(gen, phi / f, p) == 1) ok = false;
    }
    if (q > 1 && detail::mod_pow(gen, phi / q, p) == 1) ok = false;
    if (ok) break;
  }
  const long long z = detail::mod_pow(gen, (p - 1) / e, p);

  auto field = std::make_shared<const CyclotomicField>(conductor);
  CharacterTable T{G, field, {}, {}, {}, {}, {}};
  for (const auto& cl : classes) {
    T.class_sizes.push_back(cl.members.size());
    T.class_reps.push_back(cl.representative);
  }

  std::vector<detail::TableRow> rows;
  for (const auto& V : spaces) {
    std::vector<long long> w = V[0];
    long long inv0 = detail::mod_inv(w[0], p);
    for (auto& x : w) x = x * inv0 % p;
    long long s = 0;
    for (std::size_t k = 0; k < r; ++k)
      s = (s + w[k] * w[inv_class[k]] % p * detail::mod_inv(static_cast<long long>(T.class_sizes[k]) % p, p)) % p;
    long long d2 = n % p * detail::mod_inv(s, p) % p;
    long long d = 0;
    for (long long t = 1; t * t <= n; ++t)
      if (t * t % p == d2) d = t;
    if (d == 0) throw StructureMismatch("no admissible character degree");
    std::vector<long long> val(r);
    for (std::size_t k = 0; k < r; ++k) val[k] = w[k] * d % p * detail::mod_inv(static_cast<long long>(T.class_sizes[k]) % p, p) % p;
    detail::TableRow row{Int(d), {}};
    for (std::size_t k = 0; k < r; ++k) {
      const int g = classes[k].representative;
      const long long o = G.element_order(g);
      const long long zo = detail::mod_pow(z, e / o, p);
      Cyc x(field);
      for (long long j = 0; j < o; ++j) {
        long long m = 0;
        int gl = G.identity();
        for (long long l = 0; l < o; ++l) {
          m = (m + val[static_cast<std::size_t>(G.class_of(gl))] * detail::mod_pow(zo, (p - 1 - (j * l) % (p - 1)) % (p - 1), p)) % p;
          gl = G.mul(gl, g);
        }
        m = m * detail::mod_inv(o % p, p) % p;
        if (m > d) throw StructureMismatch("eigenvalue multiplicity exceeds degree");
        if (m != 0) x += Cyc::root(field, j * (conductor / o)) * Rational(m);
      }
      row.values.push_back(std::move(x));
    }
    rows.push_back(std::move(row));
  }

  detail::finish_table(T, std::move(rows));
  if (!T.row_orthogonal()) throw StructureMismatch("computed table fails orthogonality");
  return T;
}

/// Character table of a subgroup, with the dictionary to the parent group.
/// A table supplied from outside: class representatives (element ids, any
/// order) and character values in the power basis of Q(ζ_conductor), one
/// row per irreducible. Checked for orthogonality and completeness.
inline CharacterTable supplied_character_table(const PermGroup& G, int conductor, const std::vector<int>& reps,
                                               const std::vector<std::vector<std::vector<Rational>>>& irreducibles) {
  const auto& classes = G.conjugacy_classes();
  if (conductor < 1 || conductor % static_cast<int>(G.exponent()) != 0) throw InvalidInput("conductor must be a multiple of the group exponent");
  if (reps.size() != classes.size()) throw InvalidInput("one representative per conjugacy class is required");
  std::vector<int> column(classes.size(), -1);
  for (std::size_t j = 0; j < reps.size(); ++j) {
    auto& slot = column[static_cast<std::size_t>(G.class_of(reps[j]))];
    if (slot >= 0) throw InvalidInput("two representatives of the same class");
    slot = static_cast<int>(j);
  }
  auto field = std::make_shared<const CyclotomicField>(conductor);
  CharacterTable T{G, field, {}, {}, {}, {}, {}};
  for (const auto& cl : classes) {
    T.class_sizes.push_back(cl.members.size());
    T.class_reps.push_back(cl.representative);
  }
  if (irreducibles.size() != classes.size()) throw InvalidInput("the number of irreducibles must equal the number of classes");
  std::vector<detail::TableRow> rows;
  for (const auto& irr : irreducibles) {
    if (irr.size() != classes.size()) throw InvalidInput("character row has the wrong length");
    detail::TableRow row;
    for (std::size_t k = 0; k < classes.size(); ++k) {
      const auto& coeffs = irr[static_cast<std::size_t>(column[k])];
      Cyc v(field);
      for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) v += Cyc::root(field, static_cast<long long>(i)) * coeffs[i];
      row.values.push_back(v);
    }
    Rational d = row.values[static_cast<std::size_t>(G.class_of(G.identity()))].rational();
    if (denominator(d) != 1 || d <= 0) throw InvalidInput("character degree must be a positive integer");
    row.degree = numerator(d);
    rows.push_back(std::move(row));
  }
  detail::finish_table(T, std::move(rows));
  if (!T.row_orthogonal()) throw StructureMismatch("supplied table fails orthogonality");
  return T;
}

struct SubgroupTable {
  Subgroup sub;
  CharacterTable table;
  std::vector<int> class_in_sub;  // parent element id -> class of H, or -1
  std::vector<int> rep_in_parent; // class of H -> parent element id
};

/// Rational classes: element classes merged under g ~ g^k, gcd(k, |g|) = 1.
struct RationalClasses {
  std::vector<std::vector<std::size_t>> classes;  // each a sorted list of element classes
  std::vector<std::size_t> of_class;              // element class -> rational class
};

inline RationalClasses rational_class_decomposition(const PermGroup& G) {
  const auto& cls = G.conjugacy_classes();
  RationalClasses rc;
  rc.of_class.assign(cls.size(), static_cast<std::size_t>(-1));
  for (std::size_t c = 0; c < cls.size(); ++c) {
    if (rc.of_class[c] != static_cast<std::size_t>(-1)) continue;
    const int g = cls[c].representative;
    const int o = G.element_order(g);
    std::vector<std::size_t> members;
    for (int k = 1; k <= o; ++k)
      if (std::gcd(k, o) == 1) members.push_back(static_cast<std::size_t>(G.class_of(G.power(g, k))));
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (auto m : members) rc.of_class[m] = rc.classes.size();
    rc.classes.push_back(members);
  }
  return rc;
}

/// An element of R(G) by coordinates in the irreducible basis.
using RElement = std::vector<Int>;

struct SegalResult {
  bool found = false;
  RElement eta;
  std::string value;            // character value at γ, when found
  bool theorem_violation = false;  // H ∩ γ = ∅ but no element exists
};

struct VanishingResult {
  bool vanishes = false;
  RElement witness;
};

/// R(G) together with cached subgroup tables. Thread-safe.
class RepRing {
public:
  explicit RepRing(const PermGroup& G, std::size_t bound = kDefaultGroupBound)
      : G_(G), table_(character_table(G, 0, bound)), bound_(bound) {}
  /// With a supplied table for G; subgroup tables are still computed.
  RepRing(const PermGroup& G, CharacterTable table, std::size_t bound = kDefaultGroupBound)
      : G_(G), table_(std::move(table)), bound_(bound) {}

  const PermGroup& group() const { return G_; }
  const CharacterTable& table() const { return table_; }
  const FieldPtr& field() const { return table_.field; }

  /// Table of H with values in the field of G.
  const SubgroupTable& subgroup(const Subgroup& H) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(H.members());
    if (it != cache_.end()) return *it->second;
    PermGroup Hg = PermGroup::from_subgroup(G_, H);
    auto st = std::make_shared<SubgroupTable>(SubgroupTable{H, character_table(Hg, table_.field->conductor(), bound_), {}, {}});
    st->class_in_sub.assign(G_.order(), -1);
    for (int x = 0; x < static_cast<int>(Hg.order()); ++x)
      st->class_in_sub[static_cast<std::size_t>(G_.index_of(Hg.element(x)))] = Hg.class_of(x);
    for (int rep : st->table.class_reps) st->rep_in_parent.push_back(G_.index_of(Hg.element(rep)));
    // share the field object so Cyc arithmetic mixes freely
    for (auto& row : st->table.chi)
      for (auto& v : row) {
        Cyc w(table_.field);
        w += v.field() == table_.field ? v : rebase(v);
        v = w;
      }
    st->table.field = table_.field;
    return *cache_.emplace(H.members(), st).first->second;
  }

  /// Res: R(G) → R(H); column j holds the multiplicities of χ_j|_H.
  IntMatrix restriction_matrix(const Subgroup& H) const {
    const SubgroupTable& st = subgroup(H);
    IntMatrix M(st.table.size(), table_.size());
    for (std::size_t j = 0; j < table_.size(); ++j) {
      std::vector<Cyc> res;
      for (int g : st.rep_in_parent) res.push_back(table_.chi[j][static_cast<std::size_t>(G_.class_of(g))]);
      auto m = st.table.decompose(res);
      for (std::size_t i = 0; i < m.size(); ++i) M(i, j) = m[i];
    }
    return M;
  }

  /// R(H) → R(K) for g^-1 H g ⊆ K: conjugate by g, then induce up to K.
  IntMatrix induction_matrix(const Subgroup& H, const Subgroup& K, int g) const {
    const SubgroupTable& sh = subgroup(H);
    const SubgroupTable& sk = subgroup(K);
    const int gi = G_.inv(g);
    IntMatrix M(sk.table.size(), sh.table.size());
    for (std::size_t j = 0; j < sh.table.size(); ++j) {
      std::vector<Cyc> ind;
      for (int y : sk.rep_in_parent) {
        Cyc s(field());
        for (int x : K.members()) {
          int w = G_.mul(G_.mul(g, G_.mul(G_.mul(G_.inv(x), y), x)), gi);  // g x^-1 y x g^-1
          int hc = sh.class_in_sub[static_cast<std::size_t>(w)];
          if (hc >= 0) s += sh.table.chi[j][static_cast<std::size_t>(hc)];
        }
        ind.push_back(s * Rational(1, static_cast<long long>(H.order())));
      }
      auto m = sk.table.decompose(ind);
      for (std::size_t i = 0; i < m.size(); ++i) M(i, j) = m[i];
    }
    return M;
  }

  /// Coordinates of the product χ_a χ_b.
  RElement product(std::size_t a, std::size_t b) const {
    std::vector<Cyc> f;
    for (std::size_t k = 0; k < table_.num_classes(); ++k) f.push_back(table_.chi[a][k] * table_.chi[b][k]);
    return table_.decompose(f);
  }

  Cyc value(const RElement& eta, std::size_t gamma) const { return table_.value(eta, gamma); }

  bool in_gamma_ideal(const RElement& eta, std::size_t gamma) const { return value(eta, gamma).is_zero(); }

  RElement unit() const {
    RElement u(table_.size(), 0);
    u[0] = 1;
    return u;
  }

  /// η with η|_H = 0 and χ_η(γ) ≠ 0, searched on the canonical (Hermite)
  /// basis of ker Res. If every basis vector vanishes at γ, so does every
  /// lattice element, hence no combination is needed.
  SegalResult segal_element(const Subgroup& H, std::size_t gamma) const {
    SegalResult out;
    auto basis = hermite_normal_form(integer_kernel(restriction_matrix(H)));
    for (auto& v : basis) {
      Cyc val = value(v, gamma);
      if (val.is_zero()) continue;
      out.found = true;
      // sign: make the first nonzero coordinate positive
      auto it = std::find_if(v.begin(), v.end(), [](const Int& x) { return x != 0; });
      if (it != v.end() && *it < 0) {
        for (auto& x : v) x = -x;
        val = -val;
      }
      out.eta = v;
      out.value = val.str();
      return out;
    }
    bool meets = std::any_of(H.members().begin(), H.members().end(),
                             [&](int h) { return static_cast<std::size_t>(G_.class_of(h)) == gamma; });
    out.theorem_violation = !meets;
    return out;
  }

  /// M_(γ) = 0 iff the annihilator of M has an element outside (γ). For
  /// M = R(H) the annihilator is ker Res.
  VanishingResult module_vanishes_localized(const Subgroup& H, std::size_t gamma) const {
    auto s = segal_element(H, gamma);
    return {s.found, s.eta};
  }

  /// Same test for an explicitly supplied annihilator lattice basis.
  VanishingResult module_vanishes_localized(const std::vector<RElement>& annihilator, std::size_t gamma) const {
    if (annihilator.empty()) throw UnsupportedModule("no annihilator data");
    for (const auto& a : annihilator)
      if (!value(a, gamma).is_zero()) return {true, a};
    return {false, {}};
  }

  /// Action of the idempotent of a rational class on R(H) ⊗ Q, in the
  /// irreducible basis of H: entry (a, b) = (1/|H|) Σ_{h ∈ H ∩ c} ψ_b(h) conj ψ_a(h).
  RatMatrix idempotent_action(const Subgroup& H, const std::vector<std::size_t>& rational_class) const {
    const SubgroupTable& st = subgroup(H);
    const std::size_t s = st.table.size();
    std::vector<bool> in_c(table_.num_classes(), false);
    for (auto c : rational_class) in_c[c] = true;
    RatMatrix E(s, s);
    for (std::size_t a = 0; a < s; ++a)
      for (std::size_t b = 0; b < s; ++b) {
        Cyc acc(field());
        for (std::size_t k = 0; k < st.table.num_classes(); ++k) {
          if (!in_c[static_cast<std::size_t>(G_.class_of(st.rep_in_parent[k]))]) continue;
          acc += st.table.chi[b][k] * st.table.chi[a][k].conj() * Rational(static_cast<long long>(st.table.class_sizes[k]));
        }
        E(a, b) = (acc * Rational(1, static_cast<long long>(H.order()))).rational();
      }
    return E;
  }

  /// Idempotent e_c ∈ R(G) ⊗ Q of a rational class, by coordinates.
  std::vector<Rational> idempotent(const std::vector<std::size_t>& rational_class) const {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < table_.size(); ++i) {
      Cyc s(field());
      for (auto c : rational_class) s += table_.chi[i][c].conj() * Rational(static_cast<long long>(table_.class_sizes[c]));
      out.push_back((s * Rational(1, static_cast<long long>(G_.order()))).rational());
    }
    return out;
  }

  std::string format(const RElement& eta) const {
    std::string s;
    for (std::size_t i = 0; i < eta.size(); ++i) {
      if (eta[i] == 0) continue;
      Int a = eta[i] < 0 ? Int(-eta[i]) : eta[i];
      std::string term = (a == 1 ? std::string() : a.str() + "*") + "[" + table_.names[i] + "]";
      if (s.empty())
        s = (eta[i] < 0 ? "-" : "") + term;
      else
        s += (eta[i] < 0 ? "-" : "+") + term;
    }
    return s.empty() ? "0" : s;
  }

private:
  Cyc rebase(const Cyc& v) const {
    if (v.field()->conductor() != table_.field->conductor()) throw StructureMismatch("conductor mismatch");
    Cyc w(table_.field);
    for (std::size_t i = 0; i < v.coefficients().size(); ++i)
      if (v.coefficients()[i] != 0) w += Cyc::root(table_.field, static_cast<long long>(i)) * v.coefficients()[i];
    return w;
  }

  PermGroup G_;
  CharacterTable table_;
  std::size_t bound_;
  mutable std::mutex mu_;
  mutable std::map<std::vector<int>, std::shared_ptr<SubgroupTable>> cache_;
};

/// Localized verdict for a map between R(G)⊗Q-modules given by the action of
/// the idempotent on source and target: the γ-factor map is an isomorphism.
struct LocalizedMapVerdict {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::size_t rank = 0;
  bool iso() const { return source_dim == target_dim && rank == source_dim; }
};

inline LocalizedMapVerdict rational_localize_map(const RatMatrix& phi, const RatMatrix& E_source, const RatMatrix& E_target) {
  LocalizedMapVerdict v;
  v.source_dim = rank(E_source);
  v.target_dim = rank(E_target);
  v.rank = rank(E_target * phi * E_source);
  return v;
}

}  // namespace eqloc
