#pragma once

// Finite (G-)bornological coarse spaces. On a finite carrier the coarse
// structure generated by entourages U_i is the set of all subsets of the
// equivalence relation R spanned by the U_i, and the bornology generated by
// bounded sets B_i is the set of subsets of ∪ B_i. Both are stored through
// these maximal elements; membership is a subset test.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "eqloc/category.hpp"
#include "eqloc/core.hpp"
#include "eqloc/fingroup.hpp"

namespace eqloc {

using Entourage = std::vector<std::pair<int, int>>;
using PointSet = std::vector<int>;

class BornCoarseSpace {
public:
  BornCoarseSpace() = default;
  BornCoarseSpace(int n, std::vector<Entourage> coarse_generators, std::vector<PointSet> bornology_generators)
      : n_(n), coarse_gens_(std::move(coarse_generators)), born_gens_(std::move(bornology_generators)) {
    if (n < 0) throw InvalidInput("negative carrier size");
    comp_.resize(static_cast<std::size_t>(n));
    std::iota(comp_.begin(), comp_.end(), 0);
    for (const auto& U : coarse_gens_)
      for (auto [a, b] : U) {
        check_point(a);
        check_point(b);
        unite(a, b);
      }
    for (int x = 0; x < n; ++x) comp_[static_cast<std::size_t>(x)] = find(x);
    bounded_.assign(static_cast<std::size_t>(n), false);
    for (const auto& B : born_gens_)
      for (int x : B) {
        check_point(x);
        bounded_[static_cast<std::size_t>(x)] = true;
      }
  }

  /// Minimal coarse structure (diagonal) and maximal bornology.
  static BornCoarseSpace min_max(int n) { return BornCoarseSpace(n, {}, {all_points(n)}); }
  /// Maximal coarse structure and maximal bornology.
  static BornCoarseSpace max_max(int n) {
    Entourage U;
    for (int x = 1; x < n; ++x) U.push_back({0, x});
    return BornCoarseSpace(n, {U}, {all_points(n)});
  }

  int size() const { return n_; }
  const std::vector<Entourage>& coarse_generators() const { return coarse_gens_; }
  const std::vector<PointSet>& bornology_generators() const { return born_gens_; }

  /// (x, y) lies in the maximal entourage.
  bool close(int x, int y) const { return comp_[static_cast<std::size_t>(x)] == comp_[static_cast<std::size_t>(y)]; }
  bool is_entourage(const Entourage& U) const {
    return std::all_of(U.begin(), U.end(), [&](auto p) { return close(p.first, p.second); });
  }
  bool is_bounded_point(int x) const { return bounded_[static_cast<std::size_t>(x)]; }
  bool is_bounded(const PointSet& B) const {
    return std::all_of(B.begin(), B.end(), [&](int x) { return is_bounded_point(x); });
  }
  /// Component label of the maximal entourage (smallest member).
  int component(int x) const { return comp_[static_cast<std::size_t>(x)]; }
  PointSet max_bounded() const {
    PointSet out;
    for (int x = 0; x < n_; ++x)
      if (is_bounded_point(x)) out.push_back(x);
    return out;
  }

  /// Bounded sets cover the carrier.
  bool is_covering() const { return std::all_of(bounded_.begin(), bounded_.end(), [](bool b) { return b; }); }
  /// U[B] bounded for all entourages U and bounded B.
  bool is_compatible() const {
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        if (close(x, y) && is_bounded_point(x) && !is_bounded_point(y)) return false;
    return true;
  }

  /// Canonical generators of the closure: one star per component, one bounded set.
  BornCoarseSpace normalized() const {
    Entourage U;
    for (int x = 0; x < n_; ++x)
      if (component(x) != x) U.push_back({component(x), x});
    std::vector<Entourage> cg;
    if (!U.empty()) cg.push_back(U);
    std::vector<PointSet> bg;
    if (!max_bounded().empty()) bg.push_back(max_bounded());
    return BornCoarseSpace(n_, cg, bg);
  }

  /// Same closures (generators may differ).
  bool same_structure(const BornCoarseSpace& o) const { return n_ == o.n_ && comp_ == o.comp_ && bounded_ == o.bounded_; }

  /// Induced structure on a subset, with points renumbered in the given order.
  BornCoarseSpace subspace(const PointSet& pts) const {
    Entourage U;
    std::vector<PointSet> bg(1);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j)
        if (close(pts[i], pts[j])) U.push_back({static_cast<int>(j), static_cast<int>(i)});
      if (is_bounded_point(pts[i])) bg[0].push_back(static_cast<int>(i));
    }
    std::vector<Entourage> cg;
    if (!U.empty()) cg.push_back(U);
    if (bg[0].empty()) bg.clear();
    return BornCoarseSpace(static_cast<int>(pts.size()), cg, bg);
  }

  static PointSet all_points(int n) {
    PointSet p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
  }

private:
  void check_point(int x) const {
    if (x < 0 || x >= n_) throw InvalidInput("point " + std::to_string(x) + " outside carrier");
  }
  int find(int x) {
    while (comp_[static_cast<std::size_t>(x)] != x) x = comp_[static_cast<std::size_t>(x)] = comp_[static_cast<std::size_t>(comp_[static_cast<std::size_t>(x)])];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    comp_[static_cast<std::size_t>(b)] = a;
  }

  int n_ = 0;
  std::vector<Entourage> coarse_gens_;
  std::vector<PointSet> born_gens_;
  std::vector<int> comp_;
  std::vector<bool> bounded_;
};

/// Result of a morphism check. On rejection exactly one witness is set.
struct CoarseMap {
  bool accepted = false;
  std::vector<int> function;
  std::optional<Entourage> bad_entourage;  // image is not an entourage
  std::optional<PointSet> bad_bounded;     // preimage is not bounded
  explicit operator bool() const { return accepted; }
  std::string reason() const {
    if (accepted) return "accepted";
    std::string s = bad_entourage ? "not controlled on {" : "not proper on {";
    if (bad_entourage)
      for (std::size_t i = 0; i < bad_entourage->size(); ++i)
        s += (i ? "," : "") + std::string("(") + std::to_string((*bad_entourage)[i].first) + "," + std::to_string((*bad_entourage)[i].second) + ")";
    else
      for (std::size_t i = 0; i < bad_bounded->size(); ++i) s += (i ? "," : "") + std::to_string((*bad_bounded)[i]);
    return s + "}";
  }
};

/// Controlled and proper, checked on generators (sufficient by closure).
inline CoarseMap check_morphism(const std::vector<int>& f, const BornCoarseSpace& X, const BornCoarseSpace& Y) {
  if (static_cast<int>(f.size()) != X.size()) throw InvalidInput("map is not total on the source");
  for (int v : f)
    if (v < 0 || v >= Y.size()) throw InvalidInput("map leaves the target carrier");
  CoarseMap out;
  out.function = f;
  for (const auto& U : X.coarse_generators())
    for (auto [a, b] : U)
      if (!Y.close(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)])) {
        out.bad_entourage = Entourage{{a, b}};
        return out;
      }
  auto preimage_ok = [&](const PointSet& B) {
    for (int x = 0; x < X.size(); ++x)
      if (!X.is_bounded_point(x) && std::find(B.begin(), B.end(), f[static_cast<std::size_t>(x)]) != B.end()) return false;
    return true;
  };
  for (const auto& B : Y.bornology_generators())
    if (!preimage_ok(B)) {
      out.bad_bounded = B;
      return out;
    }
  out.accepted = true;
  return out;
}

/// A bornological coarse space with a G-action by automorphisms.
struct GBornCoarseSpace {
  PermGroup group;
  BornCoarseSpace base;
  std::vector<Perm> action;  // group element id -> permutation of the carrier

  int act(int g, int x) const { return action[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)]; }
  int size() const { return base.size(); }

  /// The maximal entourage is G-invariant, so invariant entourages are cofinal.
  bool is_g_coarse() const {
    for (const auto& p : action)
      for (int x = 0; x < size(); ++x)
        for (int y = 0; y < size(); ++y)
          if (base.close(x, y) && !base.close(p[static_cast<std::size_t>(x)], p[static_cast<std::size_t>(y)])) return false;
    return true;
  }

  /// Every group element is an automorphism of the bornological coarse space.
  bool acts_by_automorphisms() const {
    for (const auto& p : action) {
      if (!check_morphism(p, base, base)) return false;
      if (!check_morphism(perm_inverse(p), base, base)) return false;
    }
    return true;
  }

  bool is_equivariant_map(const std::vector<int>& f, const GBornCoarseSpace& Y) const {
    for (int g = 0; g < static_cast<int>(group.order()); ++g)
      for (int x = 0; x < size(); ++x)
        if (f[static_cast<std::size_t>(act(g, x))] != Y.act(g, f[static_cast<std::size_t>(x)])) return false;
    return true;
  }

  bool is_invariant(const PointSet& S) const {
    for (const auto& p : action)
      for (int x : S)
        if (std::find(S.begin(), S.end(), p[static_cast<std::size_t>(x)]) == S.end()) return false;
    return true;
  }

  PointSet fixed_set(const Subgroup& H) const {
    PointSet out;
    for (int x = 0; x < size(); ++x)
      if (std::all_of(H.members().begin(), H.members().end(), [&](int h) { return act(h, x) == x; })) out.push_back(x);
    return out;
  }

  std::vector<Perm> generator_images() const {
    std::vector<Perm> out;
    for (const auto& s : group.generators()) out.push_back(action[static_cast<std::size_t>(group.index_of(s))]);
    return out;
  }
};

inline GBornCoarseSpace make_gspace(const PermGroup& G, BornCoarseSpace X, const std::vector<Perm>& generator_images) {
  GBornCoarseSpace out{G, std::move(X), {}};
  out.action = action_homomorphism(G, out.base.size(), generator_images);
  return out;
}

inline GBornCoarseSpace trivial_gspace(const PermGroup& G, BornCoarseSpace X) {
  GBornCoarseSpace out{G, std::move(X), {}};
  out.action.assign(G.order(), perm_identity(static_cast<std::size_t>(out.base.size())));
  return out;
}

/// B_G X: bornology regenerated from the G-orbits of bounded sets.
inline GBornCoarseSpace g_completion(const GBornCoarseSpace& X) {
  PointSet B;
  for (int x : X.base.max_bounded())
    for (const auto& p : X.action) B.push_back(p[static_cast<std::size_t>(x)]);
  std::sort(B.begin(), B.end());
  B.erase(std::unique(B.begin(), B.end()), B.end());
  std::vector<PointSet> bg;
  if (!B.empty()) bg.push_back(B);
  return GBornCoarseSpace{X.group, BornCoarseSpace(X.size(), X.base.coarse_generators(), bg), X.action};
}

/// X^H with the structure induced from B_G X and the residual W_G(H)-action.
struct FixedPointSpace {
  WeylGroup weyl;
  PointSet points;          // carrier of X^H inside X
  GBornCoarseSpace space;   // over weyl.group
};

inline FixedPointSpace fixed_points(const GBornCoarseSpace& X, const Subgroup& H) {
  const PermGroup& G = X.group;
  WeylGroup W = weyl_group(G, H);
  PointSet pts = X.fixed_set(H);
  BornCoarseSpace sub = g_completion(X).base.subspace(pts);
  std::vector<Perm> act;
  for (int w = 0; w < static_cast<int>(W.group.order()); ++w) {
    int n = W.section[static_cast<std::size_t>(w)];
    Perm p(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
      p[i] = static_cast<int>(std::lower_bound(pts.begin(), pts.end(), X.act(n, pts[i])) - pts.begin());
    act.push_back(p);
  }
  return FixedPointSpace{W, pts, GBornCoarseSpace{W.group, sub, act}};
}

/// f^H: X^H → Y^H for an equivariant f.
inline std::vector<int> restrict_to_fixed(const std::vector<int>& f, const FixedPointSpace& XH, const FixedPointSpace& YH) {
  std::vector<int> out;
  for (int x : XH.points) {
    int y = f[static_cast<std::size_t>(x)];
    auto it = std::lower_bound(YH.points.begin(), YH.points.end(), y);
    if (it == YH.points.end() || *it != y) throw StructureMismatch("equivariant map does not preserve fixed points");
    out.push_back(static_cast<int>(it - YH.points.begin()));
  }
  return out;
}

/// X^(S) for S = G/K: equivariant maps S → X, each stored by its values on
/// the cosets of K (in orbit-category order). Carrier point i is the map with
/// f(eK) = fixed[i].
struct OrbitHomSpace {
  Subgroup K;
  std::vector<int> cosets;                 // minimal coset representatives
  PointSet fixed;                          // f(eK) for each point
  std::vector<std::vector<int>> maps;      // maps[i][c] = f(cosets[c] K)
  BornCoarseSpace space;
};

inline std::vector<int> coset_reps_of(const PermGroup& G, const Subgroup& K) {
  std::vector<int> reps;
  for (int g = 0; g < static_cast<int>(G.order()); ++g) reps.push_back(G.coset_rep(g, K));
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

inline OrbitHomSpace orbit_hom_space(const GBornCoarseSpace& X, const Subgroup& K) {
  const PermGroup& G = X.group;
  OrbitHomSpace out{K, coset_reps_of(G, K), X.fixed_set(K), {}, {}};
  for (int x : out.fixed) {
    std::vector<int> f;
    for (int c : out.cosets) f.push_back(X.act(c, x));
    out.maps.push_back(f);
  }
  GBornCoarseSpace BX = g_completion(X);
  // structure pulled back along evaluation at each base point; all must agree
  for (std::size_t c = 0; c < out.cosets.size(); ++c) {
    PointSet image;
    for (const auto& f : out.maps) image.push_back(f[c]);
    // pull back: points i, j close iff images close; bounded iff image bounded
    Entourage U;
    PointSet B;
    for (std::size_t i = 0; i < image.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j)
        if (BX.base.close(image[i], image[j])) U.push_back({static_cast<int>(j), static_cast<int>(i)});
      if (BX.base.is_bounded_point(image[i])) B.push_back(static_cast<int>(i));
    }
    std::vector<Entourage> cg;
    if (!U.empty()) cg.push_back(U);
    std::vector<PointSet> bg;
    if (!B.empty()) bg.push_back(B);
    BornCoarseSpace s(static_cast<int>(image.size()), cg, bg);
    if (c == 0)
      out.space = s;
    else if (!s.same_structure(out.space))
      throw StructureMismatch("X^(S) structure depends on the base point");
  }
  return out;
}

/// φ*: X^(T) → X^(S) for φ: S = G/H → T = G/K with eH ↦ gK; f ↦ f∘φ.
inline std::vector<int> orbit_pullback(const GBornCoarseSpace& X, const OrbitHomSpace& XT, const OrbitHomSpace& XS, int g) {
  std::vector<int> out;
  for (int x : XT.fixed) {
    int y = X.act(g, x);
    auto it = std::lower_bound(XS.fixed.begin(), XS.fixed.end(), y);
    if (it == XS.fixed.end() || *it != y) throw StructureMismatch("pullback leaves X^(S)");
    out.push_back(static_cast<int>(it - XS.fixed.begin()));
  }
  return out;
}

/// A finite G-set given by the permutation of each group element.
struct GSet {
  int size = 0;
  std::vector<Perm> action;
};

inline GSet orbit_gset(const PermGroup& G, const Subgroup& K) {
  auto reps = coset_reps_of(G, K);
  GSet S{static_cast<int>(reps.size()), {}};
  for (int g = 0; g < static_cast<int>(G.order()); ++g) {
    Perm p(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i)
      p[i] = static_cast<int>(std::lower_bound(reps.begin(), reps.end(), G.coset_rep(G.mul(g, reps[i]), K)) - reps.begin());
    S.action.push_back(p);
  }
  return S;
}

/// S_min,max ⊗ X: carrier S × X (point s·|X| + x), coarse generated by
/// diag_S × U, bornology by S × B, diagonal action.
inline GBornCoarseSpace tensor_min_max(const GSet& S, const GBornCoarseSpace& X) {
  const int n = X.size();
  std::vector<Entourage> cg;
  for (const auto& U : X.base.coarse_generators()) {
    Entourage V;
    for (int s = 0; s < S.size; ++s)
      for (auto [a, b] : U) V.push_back({s * n + a, s * n + b});
    cg.push_back(V);
  }
  std::vector<PointSet> bg;
  for (const auto& B : X.base.bornology_generators()) {
    PointSet C;
    for (int s = 0; s < S.size; ++s)
      for (int x : B) C.push_back(s * n + x);
    std::sort(C.begin(), C.end());
    bg.push_back(C);
  }
  std::vector<Perm> act;
  for (std::size_t g = 0; g < X.group.order(); ++g) {
    Perm p(static_cast<std::size_t>(S.size * n));
    for (int s = 0; s < S.size; ++s)
      for (int x = 0; x < n; ++x) p[static_cast<std::size_t>(s * n + x)] = S.action[g][static_cast<std::size_t>(s)] * n + X.action[g][static_cast<std::size_t>(x)];
    act.push_back(p);
  }
  return GBornCoarseSpace{X.group, BornCoarseSpace(S.size * n, cg, bg), act};
}

/// e_S: S_min,max ⊗ X^(S) → X, (s, f) ↦ f(s). X^(S) carries the trivial action.
struct EvaluationReport {
  CoarseMap map;
  bool equivariant = false;
  bool ok() const { return map.accepted && equivariant; }
};

inline EvaluationReport evaluation_map(const GBornCoarseSpace& X, const Subgroup& K) {
  OrbitHomSpace XS = orbit_hom_space(X, K);
  GSet S = orbit_gset(X.group, K);
  GBornCoarseSpace T = tensor_min_max(S, trivial_gspace(X.group, XS.space));
  const int m = static_cast<int>(XS.maps.size());
  std::vector<int> f(static_cast<std::size_t>(S.size * m));
  for (int s = 0; s < S.size; ++s)
    for (int i = 0; i < m; ++i) f[static_cast<std::size_t>(s * m + i)] = XS.maps[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)];
  EvaluationReport r;
  r.map = check_morphism(f, T.base, X.base);
  r.equivariant = T.is_equivariant_map(f, X);
  return r;
}

struct FlasqueReport {
  bool morphism = false;
  bool close_to_identity = false;
  bool iterates_controlled = false;
  bool leaves_bounded = false;
  bool completion_preserved = true;  // only meaningful for equivariant f on a G-space
  bool accepted() const { return morphism && close_to_identity && iterates_controlled && leaves_bounded && completion_preserved; }
};

namespace detail {

inline FlasqueReport flasque_conditions(const BornCoarseSpace& X, const std::vector<int>& f) {
  FlasqueReport r;
  const int n = X.size();
  r.morphism = check_morphism(f, X, X).accepted;
  r.close_to_identity = true;
  for (int x = 0; x < n; ++x) r.close_to_identity &= X.close(x, f[static_cast<std::size_t>(x)]);
  // iterates f^k for k = 0..n cover every distinct power on a finite carrier
  // up to the eventual cycle, which is reached by k = n
  r.iterates_controlled = true;
  std::vector<int> fk = BornCoarseSpace::all_points(n);
  std::vector<bool> image(static_cast<std::size_t>(n), true);
  for (int k = 0; k <= 2 * n; ++k) {
    for (const auto& U : X.coarse_generators())
      for (auto [a, b] : U) r.iterates_controlled &= X.close(fk[static_cast<std::size_t>(a)], fk[static_cast<std::size_t>(b)]);
    if (k == 2 * n) break;
    for (auto& v : fk) v = f[static_cast<std::size_t>(v)];
  }
  // f^k(X) for k ≥ n is the eventual image
  r.leaves_bounded = true;
  for (int x = 0; x < n; ++x) {
    int y = fk[static_cast<std::size_t>(x)];
    if (X.is_bounded_point(y)) r.leaves_bounded = false;
  }
  return r;
}

}  // namespace detail

/// Checks a supplied flasqueness witness f. Continuity in the entourage
/// direction holds vacuously on a finite carrier.
inline FlasqueReport flasqueness_witness_check(const BornCoarseSpace& X, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != X.size()) throw InvalidInput("witness is not total");
  return detail::flasque_conditions(X, f);
}

inline FlasqueReport flasqueness_witness_check(const GBornCoarseSpace& X, const std::vector<int>& f) {
  FlasqueReport r = flasqueness_witness_check(X.base, f);
  if (X.is_equivariant_map(f, X)) r.completion_preserved = detail::flasque_conditions(g_completion(X).base, f).accepted();
  return r;
}

struct ComplementaryPairReport {
  bool covers = false;      // Z ∪ Y_i = X for some stage
  bool filtered = false;    // stages increase
  bool invariant = false;   // Z and every stage G-invariant
  bool big = false;         // U[Y_i] lies in a later stage for every entourage
  std::vector<std::pair<std::string, bool>> fixed_point_pairs;  // per subgroup class
  bool ok() const {
    return covers && filtered && invariant &&
           std::all_of(fixed_point_pairs.begin(), fixed_point_pairs.end(), [](auto& p) { return p.second; });
  }
};

inline ComplementaryPairReport complementary_pair_check(const GBornCoarseSpace& X, const PointSet& Z, const std::vector<PointSet>& Y) {
  auto sorted = [](PointSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  };
  auto covers = [](int n, const PointSet& z, const std::vector<PointSet>& y) {
    for (const auto& stage : y) {
      std::vector<bool> hit(static_cast<std::size_t>(n), false);
      for (int x : z) hit[static_cast<std::size_t>(x)] = true;
      for (int x : stage) hit[static_cast<std::size_t>(x)] = true;
      if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) return true;
    }
    return false;
  };
  ComplementaryPairReport r;
  const PointSet z = sorted(Z);
  std::vector<PointSet> y;
  for (const auto& s : Y) y.push_back(sorted(s));
  r.covers = covers(X.size(), z, y);
  r.filtered = true;
  for (std::size_t i = 1; i < y.size(); ++i) r.filtered &= std::includes(y[i].begin(), y[i].end(), y[i - 1].begin(), y[i - 1].end());
  r.invariant = X.is_invariant(z);
  for (const auto& s : y) r.invariant &= X.is_invariant(s);
  r.big = true;
  if (!y.empty()) {
    const PointSet& last = y.back();
    for (int a : y.back())
      for (int b = 0; b < X.size(); ++b)
        if (X.base.close(a, b) && !std::binary_search(last.begin(), last.end(), b)) r.big = false;
  }
  for (const auto& cls : subgroup_classes(X.group)) {
    PointSet fixed = X.fixed_set(cls.representative);
    auto restrict = [&](const PointSet& s) {
      PointSet out;
      for (std::size_t i = 0; i < fixed.size(); ++i)
        if (std::binary_search(s.begin(), s.end(), fixed[i])) out.push_back(static_cast<int>(i));
      return out;
    };
    std::vector<PointSet> yh;
    for (const auto& s : y) yh.push_back(restrict(s));
    r.fixed_point_pairs.push_back({cls.label, covers(static_cast<int>(fixed.size()), restrict(z), yh)});
  }
  return r;
}

/// Random G-space: a disjoint union of orbits G/K with G-saturated random
/// entourages and a bornology that is G-saturated half of the time.
inline GBornCoarseSpace random_gspace(const PermGroup& G, std::mt19937_64& rng, int max_points = 16) {
  const auto classes = subgroup_classes(G);
  std::vector<std::vector<int>> blocks;  // point ids per orbit
  std::vector<GSet> orbits;
  int n = 0;
  std::uniform_int_distribution<std::size_t> pick(0, classes.size() - 1);
  for (int tries = 0; tries < 8; ++tries) {
    const Subgroup& K = classes[pick(rng)].representative;
    GSet S = orbit_gset(G, K);
    if (n + S.size > max_points) continue;
    std::vector<int> ids(static_cast<std::size_t>(S.size));
    std::iota(ids.begin(), ids.end(), n);
    n += S.size;
    blocks.push_back(ids);
    orbits.push_back(S);
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) break;
  }
  if (n == 0) {
    orbits.push_back(orbit_gset(G, G.whole()));
    blocks.push_back({0});
    n = 1;
  }
  std::vector<Perm> act;
  for (std::size_t g = 0; g < G.order(); ++g) {
    Perm p(static_cast<std::size_t>(n));
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (std::size_t i = 0; i < blocks[b].size(); ++i) p[static_cast<std::size_t>(blocks[b][i])] = blocks[b][static_cast<std::size_t>(orbits[b].action[g][i])];
    act.push_back(p);
  }
  std::uniform_int_distribution<int> pt(0, n - 1);
  Entourage U;
  int pairs = std::uniform_int_distribution<int>(0, n)(rng);
  for (int i = 0; i < pairs; ++i) {
    int a = pt(rng), b = pt(rng);
    for (const auto& p : act) U.push_back({p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]});
  }
  std::vector<Entourage> cg;
  if (!U.empty()) cg.push_back(U);
  std::vector<PointSet> bg;
  int sets = std::uniform_int_distribution<int>(0, 3)(rng);
  for (int i = 0; i < sets; ++i) {
    PointSet B;
    for (int x = 0; x < n; ++x)
      if (std::uniform_int_distribution<int>(0, 1)(rng)) B.push_back(x);
    if (!B.empty()) bg.push_back(B);
  }
  if (std::uniform_int_distribution<int>(0, 1)(rng)) {
    for (auto& B : bg) {
      PointSet C;
      for (const auto& p : act)
        for (int x : B) C.push_back(p[static_cast<std::size_t>(x)]);
      std::sort(C.begin(), C.end());
      C.erase(std::unique(C.begin(), C.end()), C.end());
      B = C;
    }
  }
  return GBornCoarseSpace{G, BornCoarseSpace(n, cg, bg), act};
}

/// Outcome of the coarse lemma battery on one G-space.
struct CoarseBatteryEntry {
  std::string description;
  bool g_coarse = false;
  bool evaluation_ok = false;     // e_S accepted and equivariant for every orbit S
  bool pullback_ok = false;       // every φ* accepted
  bool functorial_ok = false;     // (ψφ)* = φ*ψ*
  bool fixed_point_ok = false;    // f^H accepted for the test G-maps
  std::string failure;
  bool ok() const { return g_coarse && evaluation_ok && pullback_ok && functorial_ok && fixed_point_ok; }
};

/// Runs the executable lemmas on X: evaluation maps, φ* functoriality and
/// fixed-point functoriality for the fold map X ⊔ X → X and for the identity
/// into a coarsened copy.
inline CoarseBatteryEntry coarse_battery_entry(const GBornCoarseSpace& X) {
  const PermGroup& G = X.group;
  CoarseBatteryEntry e;
  e.description = G.name() + " on " + std::to_string(X.size()) + " points";
  e.g_coarse = X.is_g_coarse();
  OrbitCategory oc = build_orbit_category(G);
  std::vector<OrbitHomSpace> hs;
  e.evaluation_ok = true;
  for (std::size_t o = 0; o < oc.num_objects(); ++o) {
    const Subgroup& K = oc.subgroup[o];
    hs.push_back(orbit_hom_space(X, K));
    auto r = evaluation_map(X, K);
    if (!r.ok()) {
      e.evaluation_ok = false;
      e.failure = "e_S for " + oc.cat.label(static_cast<int>(o)) + ": " + r.map.reason();
    }
  }
  // φ* for every orbit morphism
  std::vector<std::vector<int>> pull(oc.cat.num_morphisms());
  e.pullback_ok = true;
  for (int m = 0; m < static_cast<int>(oc.cat.num_morphisms()); ++m) {
    int s = oc.cat.src(m), t = oc.cat.dst(m);
    pull[static_cast<std::size_t>(m)] = orbit_pullback(X, hs[static_cast<std::size_t>(t)], hs[static_cast<std::size_t>(s)], oc.payload[static_cast<std::size_t>(m)]);
    auto c = check_morphism(pull[static_cast<std::size_t>(m)], hs[static_cast<std::size_t>(t)].space, hs[static_cast<std::size_t>(s)].space);
    if (!c) {
      e.pullback_ok = false;
      e.failure = "phi* rejected: " + c.reason();
    }
  }
  e.functorial_ok = true;
  for (int f = 0; f < static_cast<int>(oc.cat.num_morphisms()); ++f)
    for (int g : oc.cat.morphisms_out_of(oc.cat.dst(f))) {
      int gf = oc.cat.compose(g, f);
      const auto& pf = pull[static_cast<std::size_t>(f)];
      const auto& pg = pull[static_cast<std::size_t>(g)];
      std::vector<int> comp;
      for (int v : pg) comp.push_back(pf[static_cast<std::size_t>(v)]);
      if (comp != pull[static_cast<std::size_t>(gf)]) e.functorial_ok = false;
    }
  // test G-maps
  const int n = X.size();
  std::vector<Entourage> cg = X.base.coarse_generators();
  std::vector<PointSet> bg = X.base.bornology_generators();
  GBornCoarseSpace XX{G, BornCoarseSpace(2 * n, {}, {}), {}};
  {
    std::vector<Entourage> c2;
    for (const auto& U : cg) {
      Entourage V = U;
      for (auto [a, b] : U) V.push_back({a + n, b + n});
      c2.push_back(V);
    }
    std::vector<PointSet> b2;
    for (const auto& B : bg) {
      PointSet C = B;
      for (int x : B) C.push_back(x + n);
      b2.push_back(C);
    }
    XX.base = BornCoarseSpace(2 * n, c2, b2);
    for (const auto& p : X.action) {
      Perm q(static_cast<std::size_t>(2 * n));
      for (int x = 0; x < n; ++x) {
        q[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(x)];
        q[static_cast<std::size_t>(x + n)] = p[static_cast<std::size_t>(x)] + n;
      }
      XX.action.push_back(q);
    }
  }
  std::vector<int> fold(static_cast<std::size_t>(2 * n));
  for (int x = 0; x < 2 * n; ++x) fold[static_cast<std::size_t>(x)] = x % n;
  // coarsened copy: one extra G-saturated entourage, bornology cut to an invariant part
  GBornCoarseSpace Xc = X;
  {
    Entourage extra;
    if (n > 1)
      for (const auto& p : X.action) extra.push_back({p[0], p[static_cast<std::size_t>(n - 1)]});
    auto c2 = cg;
    if (!extra.empty()) c2.push_back(extra);
    PointSet B;
    for (int x : X.base.max_bounded())
      if (std::all_of(X.action.begin(), X.action.end(), [&](const Perm& p) { return X.base.is_bounded_point(p[static_cast<std::size_t>(x)]); }))
        B.push_back(x);
    std::vector<PointSet> b2;
    if (!B.empty()) b2.push_back(B);
    Xc.base = BornCoarseSpace(n, c2, b2);
  }
  std::vector<int> id = BornCoarseSpace::all_points(n);
  e.fixed_point_ok = true;
  struct Case {
    const GBornCoarseSpace* src;
    const GBornCoarseSpace* dst;
    const std::vector<int>* f;
  };
  for (const Case& c : {Case{&XX, &X, &fold}, Case{&X, &Xc, &id}}) {
    if (!c.src->is_equivariant_map(*c.f, *c.dst) || !check_morphism(*c.f, g_completion(*c.src).base, g_completion(*c.dst).base)) {
      e.fixed_point_ok = false;
      e.failure = "test map is not a morphism of completions";
      continue;
    }
    for (const auto& cls : subgroup_classes(G)) {
      auto A = fixed_points(*c.src, cls.representative);
      auto B = fixed_points(*c.dst, cls.representative);
      auto fh = restrict_to_fixed(*c.f, A, B);
      auto r = check_morphism(fh, A.space.base, B.space.base);
      if (!r || !A.space.is_equivariant_map(fh, B.space)) {
        e.fixed_point_ok = false;
        e.failure = "f^H rejected for H = " + cls.label + ": " + r.reason();
      }
    }
  }
  return e;
}

}  // namespace eqloc
