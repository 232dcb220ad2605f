#pragma once

// G-simplicial complexes, fixed-point presheaves on the orbit category, the
// coend E^G(X), the Kan-extension presheaves X^F, cellular Bredon chains,
// assembly maps and the two localization verifiers.

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eqloc/category.hpp"
#include "eqloc/core.hpp"
#include "eqloc/fingroup.hpp"
#include "eqloc/homalg.hpp"
#include "eqloc/linalg.hpp"
#include "eqloc/repring.hpp"

namespace eqloc {

/// Sorts v and returns the sign of the sorting permutation (0 if v repeats).
inline int sort_with_sign(std::vector<int>& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] == v[i - 1]) return 0;
  return sign;
}

/// An abstract simplicial complex on vertices 0..n-1. Simplices are sorted
/// vertex lists, grouped by dimension and ordered lexicographically. A
/// subcomplex keeps the vertex numbering of its ambient complex.
class SimplicialComplex {
public:
  SimplicialComplex() = default;

  /// Closes the given simplices under faces.
  SimplicialComplex(int n, const std::vector<std::vector<int>>& given) : n_(n) {
    std::vector<std::set<std::vector<int>>> by_dim;
    for (auto s : given) {
      if (s.empty()) continue;
      for (int v : s)
        if (v < 0 || v >= n) throw InvalidInput("simplex vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
      if (sort_with_sign(s) == 0) throw InvalidInput("simplex repeats a vertex");
      // all nonempty subsets
      const std::size_t k = s.size();
      if (k > 20) throw InvalidInput("simplex dimension too large");
      for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
        std::vector<int> f;
        for (std::size_t i = 0; i < k; ++i)
          if (mask & (1UL << i)) f.push_back(s[i]);
        if (by_dim.size() < f.size()) by_dim.resize(f.size());
        by_dim[f.size() - 1].insert(f);
      }
    }
    for (const auto& d : by_dim) simplices_.emplace_back(d.begin(), d.end());
    build_index();
  }

  int vertices() const { return n_; }
  int dim() const { return static_cast<int>(simplices_.size()) - 1; }
  bool empty() const { return simplices_.empty(); }
  std::size_t count(int k) const { return k < 0 || k > dim() ? 0 : simplices_[static_cast<std::size_t>(k)].size(); }
  const std::vector<std::vector<int>>& simplices(int k) const { return simplices_[static_cast<std::size_t>(k)]; }
  const std::vector<int>& simplex(int k, int i) const { return simplices_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]; }
  int find(const std::vector<int>& s) const {
    if (s.empty() || static_cast<int>(s.size()) - 1 > dim()) return -1;
    const auto& idx = index_[s.size() - 1];
    auto it = idx.find(s);
    return it == idx.end() ? -1 : it->second;
  }
  std::vector<std::vector<int>> all_simplices() const {
    std::vector<std::vector<int>> out;
    for (const auto& d : simplices_) out.insert(out.end(), d.begin(), d.end());
    return out;
  }

  /// The full subcomplex on the marked vertices.
  SimplicialComplex full_subcomplex(const std::vector<bool>& keep) const {
    std::vector<std::vector<int>> kept;
    for (const auto& d : simplices_)
      for (const auto& s : d)
        if (std::all_of(s.begin(), s.end(), [&](int v) { return keep[static_cast<std::size_t>(v)]; })) kept.push_back(s);
    return SimplicialComplex(n_, kept);
  }

  /// Semi-simplicial structure with d_i deleting the i-th vertex.
  SimplicialSetFin semi_simplicial() const {
    SimplicialSetFin X;
    for (const auto& d : simplices_) X.count.push_back(d.size());
    X.faces.resize(simplices_.size());
    for (std::size_t k = 1; k < simplices_.size(); ++k)
      for (const auto& s : simplices_[k]) {
        std::vector<int> fs;
        for (std::size_t i = 0; i < s.size(); ++i) {
          std::vector<int> f = s;
          f.erase(f.begin() + static_cast<long>(i));
          fs.push_back(find(f));
        }
        X.faces[k].push_back(fs);
      }
    return X;
  }

  ChainComplex chains(Ring ring) const { return eqloc::chains(semi_simplicial(), ring); }

  bool operator==(const SimplicialComplex& o) const { return n_ == o.n_ && simplices_ == o.simplices_; }

private:
  void build_index() {
    index_.assign(simplices_.size(), {});
    for (std::size_t k = 0; k < simplices_.size(); ++k)
      for (std::size_t i = 0; i < simplices_[k].size(); ++i) index_[k].emplace(simplices_[k][i], static_cast<int>(i));
  }

  int n_ = 0;
  std::vector<std::vector<std::vector<int>>> simplices_;
  std::vector<std::map<std::vector<int>, int>> index_;
};

/// Chain map induced by a vertex map; simplices that collapse map to zero.
inline ChainMap simplicial_chain_map(const SimplicialComplex& A, const SimplicialComplex& B, const std::vector<int>& vertex_map, Ring ring) {
  ChainComplex CA = A.chains(ring), CB = B.chains(ring);
  ChainMap out;
  for (int k = 0; k <= CA.top(); ++k) {
    SparseMatrix m(CB.rank(k), CA.rank(k));
    for (std::size_t i = 0; i < A.count(k); ++i) {
      std::vector<int> img;
      for (int v : A.simplex(k, static_cast<int>(i))) img.push_back(vertex_map[static_cast<std::size_t>(v)]);
      int sign = sort_with_sign(img);
      if (sign == 0) continue;
      int j = B.find(img);
      if (j < 0) throw StructureMismatch("vertex map is not simplicial");
      m.c[i].emplace_back(j, Int(sign));
    }
    out.f.push_back(std::move(m));
  }
  return out;
}

/// A simplicial complex with a G-action on vertices permuting simplices.
struct GSimplicialComplex {
  PermGroup group;
  SimplicialComplex cx;
  std::vector<Perm> action;  // group element id -> vertex permutation

  int dim() const { return cx.dim(); }

  std::vector<int> image(int g, const std::vector<int>& s, int* sign = nullptr) const {
    std::vector<int> out;
    for (int v : s) out.push_back(action[static_cast<std::size_t>(g)][static_cast<std::size_t>(v)]);
    int sg = sort_with_sign(out);
    if (sign) *sign = sg;
    return out;
  }

  /// Setwise stabilizer.
  Subgroup stabilizer(const std::vector<int>& s) const {
    std::vector<int> members;
    for (int g = 0; g < static_cast<int>(group.order()); ++g)
      if (image(g, s) == s) members.push_back(g);
    return Subgroup(members, group.order());
  }

  std::vector<int> fixed_vertices_mask(const Subgroup& H) const {
    std::vector<int> mask(static_cast<std::size_t>(cx.vertices()), 1);
    for (int h : H.members())
      for (int v = 0; v < cx.vertices(); ++v)
        if (action[static_cast<std::size_t>(h)][static_cast<std::size_t>(v)] != v) mask[static_cast<std::size_t>(v)] = 0;
    return mask;
  }

  void validate() const {
    for (std::size_t g = 0; g < action.size(); ++g)
      for (int k = 0; k <= dim(); ++k)
        for (const auto& s : cx.simplices(k))
          if (cx.find(image(static_cast<int>(g), s)) < 0) throw InvalidInput("action does not permute simplices");
  }
};

inline GSimplicialComplex make_gcomplex(const PermGroup& G, int n, const std::vector<std::vector<int>>& simplices,
                                        const std::vector<Perm>& generator_images) {
  GSimplicialComplex X{G, SimplicialComplex(n, simplices), action_homomorphism(G, n, generator_images)};
  X.validate();
  return X;
}

inline GSimplicialComplex with_trivial_action(const PermGroup& G, const SimplicialComplex& cx) {
  return GSimplicialComplex{G, cx, std::vector<Perm>(G.order(), perm_identity(static_cast<std::size_t>(cx.vertices())))};
}

/// Any g fixing a simplex setwise fixes it pointwise.
inline bool is_regular(const GSimplicialComplex& X) {
  for (int k = 1; k <= X.dim(); ++k)
    for (const auto& s : X.cx.simplices(k))
      for (int g = 0; g < static_cast<int>(X.group.order()); ++g) {
        if (X.image(g, s) != s) continue;
        for (int v : s)
          if (X.action[static_cast<std::size_t>(g)][static_cast<std::size_t>(v)] != v) return false;
      }
  return true;
}

/// Barycentric subdivision: vertices are the simplices of X (by dimension,
/// then lexicographically), simplices are chains of proper faces.
inline GSimplicialComplex barycentric_subdivision(const GSimplicialComplex& X) {
  std::vector<std::vector<int>> verts = X.cx.all_simplices();
  std::map<std::vector<int>, int> id;
  for (std::size_t i = 0; i < verts.size(); ++i) id.emplace(verts[i], static_cast<int>(i));
  auto is_face = [](const std::vector<int>& a, const std::vector<int>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  // maximal chains suffice: the constructor closes under faces
  std::vector<std::vector<int>> chains;
  std::vector<std::vector<int>> frontier;
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (verts[i].size() == 1) frontier.push_back({static_cast<int>(i)});
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& c : frontier) {
      bool extended = false;
      const auto& top = verts[static_cast<std::size_t>(c.back())];
      for (std::size_t j = 0; j < verts.size(); ++j)
        if (verts[j].size() == top.size() + 1 && is_face(top, verts[j])) {
          auto d = c;
          d.push_back(static_cast<int>(j));
          next.push_back(d);
          extended = true;
        }
      if (!extended) chains.push_back(c);
    }
    frontier = std::move(next);
  }
  GSimplicialComplex out{X.group, SimplicialComplex(static_cast<int>(verts.size()), chains), {}};
  for (std::size_t g = 0; g < X.action.size(); ++g) {
    Perm p(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) p[i] = id.at(X.image(static_cast<int>(g), verts[i]));
    out.action.push_back(p);
  }
  return out;
}

/// Barycentric subdivision, repeated until regular (at most twice).
inline GSimplicialComplex equivariant_subdivision(const GSimplicialComplex& X) {
  GSimplicialComplex Y = barycentric_subdivision(X);
  if (!is_regular(Y)) Y = barycentric_subdivision(Y);
  if (!is_regular(Y)) throw NotRegular("subdivision did not produce a regular complex");
  return Y;
}

/// X itself when regular, otherwise its equivariant subdivision.
inline GSimplicialComplex ensure_regular(const GSimplicialComplex& X) {
  return is_regular(X) ? X : equivariant_subdivision(X);
}

/// Full subcomplex on the H-fixed vertices; the H-fixed space when X is regular.
inline SimplicialComplex fixed_subcomplex(const GSimplicialComplex& X, const Subgroup& H) {
  auto mask = X.fixed_vertices_mask(H);
  return X.cx.full_subcomplex(std::vector<bool>(mask.begin(), mask.end()));
}

/// X^γ = ∪_{g ∈ γ} X^g with the restricted action.
inline GSimplicialComplex gamma_fixed_subcomplex(const GSimplicialComplex& X, std::size_t gamma) {
  const PermGroup& G = X.group;
  std::vector<std::vector<int>> kept;
  for (int g : G.conjugacy_classes()[gamma].members) {
    SimplicialComplex f = fixed_subcomplex(X, G.generate({g}));
    auto all = f.all_simplices();
    kept.insert(kept.end(), all.begin(), all.end());
  }
  return GSimplicialComplex{G, SimplicialComplex(X.cx.vertices(), kept), X.action};
}

using OrbitPtr = std::shared_ptr<const OrbitCategory>;

inline OrbitPtr make_orbit_category(const PermGroup& G) { return std::make_shared<const OrbitCategory>(build_orbit_category(G)); }

/// A presheaf of chain complexes on the orbit category (a functor on GOrb^op).
/// Simplicial presheaves also keep their values as complexes.
struct OrbitPresheaf {
  OrbitPtr orb;
  ChainFunctor chains;                    // source: orb->cat.op()
  std::vector<SimplicialComplex> spaces;  // empty unless simplicial

  bool empty_at(int o) const { return chains.at(o).is_zero(); }
  bool objectwise_empty() const {
    for (int o = 0; o < static_cast<int>(orb->num_objects()); ++o)
      if (!empty_at(o)) return false;
    return true;
  }
};

/// Ỹ(X): G/H ↦ X^H, with the orbit morphism eH ↦ gK acting X^K → X^H by g.
inline OrbitPresheaf tilde_Y(const GSimplicialComplex& X, const OrbitPtr& orb, Ring ring = Ring::ZZ) {
  if (!is_regular(X)) throw NotRegular("tilde_Y needs a regular complex; subdivide first");
  const OrbitCategory& oc = *orb;
  OrbitPresheaf P{orb, {}, {}};
  P.chains.source = std::make_shared<const FinCategory>(oc.cat.op());
  P.chains.ring = ring;
  for (std::size_t o = 0; o < oc.num_objects(); ++o) {
    P.spaces.push_back(fixed_subcomplex(X, oc.subgroup[o]));
    P.chains.value.push_back(P.spaces.back().chains(ring));
  }
  for (int m = 0; m < static_cast<int>(oc.cat.num_morphisms()); ++m) {
    const int s = oc.cat.src(m), t = oc.cat.dst(m);
    const int g = oc.payload[static_cast<std::size_t>(m)];
    P.chains.map.push_back(simplicial_chain_map(P.spaces[static_cast<std::size_t>(t)], P.spaces[static_cast<std::size_t>(s)],
                                                X.action[static_cast<std::size_t>(g)], ring));
  }
  return P;
}

/// Ỹ(f) for an equivariant simplicial map f: X → Y, objectwise.
inline std::vector<ChainMap> tilde_Y_map(const OrbitPresheaf& A, const OrbitPresheaf& B, const std::vector<int>& vertex_map) {
  std::vector<ChainMap> out;
  for (std::size_t o = 0; o < A.spaces.size(); ++o)
    out.push_back(simplicial_chain_map(A.spaces[o], B.spaces[o], vertex_map, A.chains.ring));
  return out;
}

/// α: A → B is a natural transformation of functors into chain complexes.
inline bool is_natural(const ChainFunctor& A, const ChainFunctor& B, const std::vector<ChainMap>& alpha) {
  const FinCategory& C = *A.source;
  for (int o = 0; o < static_cast<int>(C.num_objects()); ++o)
    if (!is_chain_map(alpha[static_cast<std::size_t>(o)], A.at(o), B.at(o))) return false;
  for (int f = 0; f < static_cast<int>(C.num_morphisms()); ++f) {
    const int s = C.src(f), t = C.dst(f);
    ChainMap l = compose(alpha[static_cast<std::size_t>(t)], A.of(f), A.at(s), A.at(t), B.at(t));
    ChainMap r = compose(B.of(f), alpha[static_cast<std::size_t>(s)], A.at(s), B.at(s), B.at(t));
    if (!maps_equal(l, r, A.at(s), B.at(t))) return false;
  }
  return true;
}

/// X^F with its counit X^F → X.
struct KanExtension {
  OrbitPresheaf value;
  std::vector<ChainMap> counit;
};

namespace detail {

/// Index data for X^F at one orbit object: the skeleton of the comma
/// category of F⊥-orbits under S, opposite so that X is covariant on it.
struct CommaIndex {
  CommaCategory comma;
  Skeleton skel;
  std::shared_ptr<const FinCategory> index;  // skel.sub.cat.op()
  ChainFunctor diagram;
};

}  // namespace detail

/// X^F = Ind_{F⊥} Res_{F⊥} X: at S the homotopy colimit of X(T) over the
/// orbits T ∈ F⊥ under S, truncated at bar degree N. Comma categories of the
/// orbit category are thin, so their skeleta are posets; structure maps
/// reindex along S' → S and correct by the unique isomorphisms.
inline KanExtension presheaf_XF(const OrbitPresheaf& X, const Family& F, int N) {
  const OrbitCategory& oc = *X.orb;
  const PermGroup& G = oc.group;
  SubCategory A = full_subcategory_family(oc, complement(G, F));
  FunctorData iota = inclusion(A, oc.cat);
  const int n = static_cast<int>(oc.num_objects());
  std::vector<detail::CommaIndex> idx(static_cast<std::size_t>(n));
  KanExtension out{OrbitPresheaf{X.orb, {}, {}}, {}};
  out.value.chains.source = X.chains.source;
  out.value.chains.ring = X.chains.ring;
  for (int S = 0; S < n; ++S) {
    auto& ci = idx[static_cast<std::size_t>(S)];
    ci.comma = comma_over(iota, S, Variance::Contravariant);
    ci.skel = skeleton(ci.comma.cat);
    ci.index = std::make_shared<const FinCategory>(ci.skel.sub.cat.op());
    ci.diagram.source = ci.index;
    ci.diagram.ring = X.chains.ring;
    std::vector<ChainMap> comps;
    for (int k : ci.skel.sub.objects) {
      auto [t, f] = ci.comma.objects[static_cast<std::size_t>(k)];
      ci.diagram.value.push_back(X.chains.at(A.objects[static_cast<std::size_t>(t)]));
      comps.push_back(X.chains.of(f));
    }
    for (int m : ci.skel.sub.morphisms) {
      const int u = ci.comma.morphisms[static_cast<std::size_t>(m)];
      ci.diagram.map.push_back(X.chains.of(A.morphisms[static_cast<std::size_t>(u)]));
    }
    out.value.chains.value.push_back(hocolim_trunc(ci.diagram, N));
    out.counit.push_back(hocolim_augmentation(ci.diagram, N, out.value.chains.value.back(), comps, X.chains.at(S)));
  }
  // φ: S' → S in GOrb gives X^F(S) → X^F(S')
  for (int phi = 0; phi < static_cast<int>(oc.cat.num_morphisms()); ++phi) {
    const int S2 = oc.cat.src(phi), S = oc.cat.dst(phi);
    const auto& ci = idx[static_cast<std::size_t>(S)];
    const auto& cj = idx[static_cast<std::size_t>(S2)];
    auto comma_object = [&](const detail::CommaIndex& c, int t, int f) {
      for (std::size_t k = 0; k < c.comma.objects.size(); ++k)
        if (c.comma.objects[k] == std::make_pair(t, f)) return static_cast<int>(k);
      throw StructureMismatch("comma object missing");
    };
    FunctorData F2{ci.index.get(), cj.index.get(), {}, {}};
    std::vector<ChainMap> alpha;
    for (int k : ci.skel.sub.objects) {
      auto [t, f] = ci.comma.objects[static_cast<std::size_t>(k)];
      int k2 = comma_object(cj, t, oc.cat.compose(f, phi));
      int rep = cj.skel.class_of[static_cast<std::size_t>(k2)];
      F2.object_map.push_back(rep);
      // the unique comma morphism rep → (t, f∘φ), underlying w with X(w): X(t) → X(t_rep)
      int parent_rep = cj.skel.sub.objects[static_cast<std::size_t>(rep)];
      const auto& hs = cj.comma.cat.hom(parent_rep, k2);
      if (hs.size() != 1) throw StructureMismatch("comma category is not thin");
      alpha.push_back(X.chains.of(A.morphisms[static_cast<std::size_t>(cj.comma.morphisms[static_cast<std::size_t>(hs[0])])]));
    }
    // skeleton morphisms: a → b in the comma; their images are the unique
    // morphisms between the image representatives
    for (int m : ci.skel.sub.morphisms) {
      int a = ci.comma.cat.src(m), b = ci.comma.cat.dst(m);
      int ra = F2.object_map[static_cast<std::size_t>(ci.skel.class_of[static_cast<std::size_t>(a)])];
      int rb = F2.object_map[static_cast<std::size_t>(ci.skel.class_of[static_cast<std::size_t>(b)])];
      const auto& hs = cj.skel.sub.cat.hom(ra, rb);
      if (hs.size() != 1) throw StructureMismatch("comma skeleton is not thin");
      F2.morphism_map.push_back(hs[0]);
    }
    out.value.chains.map.push_back(hocolim_induced(ci.diagram, cj.diagram, F2, alpha, N));
  }
  return out;
}

/// E^G(X) = ∫^{GOrb} E ⊗ X, E covariant on GOrb and X a presheaf.
inline ChainComplex coend_EG(const ChainFunctor& E, const OrbitPresheaf& X, int N) {
  return hocoend_pairing(X.orb->cat, E, X.chains, N);
}

// ---------------------------------------------------------------------------
// Coefficient systems: covariant functors on GOrb.

inline ChainFunctor constant_coefficients(const OrbitPtr& orb, Ring ring) {
  return constant_functor(std::make_shared<const FinCategory>(orb->cat), ChainComplex::free_module(ring, 1));
}

/// ℤ (or ℚ) on orbits outside F, 0 on orbits in F; identities where defined.
inline ChainFunctor zero_on_family(const OrbitPtr& orb, const Family& F, Ring ring) {
  const OrbitCategory& oc = *orb;
  ChainFunctor E;
  E.source = std::make_shared<const FinCategory>(oc.cat);
  E.ring = ring;
  auto in_f = [&](int o) { return F.contains(static_cast<std::size_t>(oc.subgroup_class[static_cast<std::size_t>(o)])); };
  for (int o = 0; o < static_cast<int>(oc.num_objects()); ++o) E.value.push_back(ChainComplex::free_module(ring, in_f(o) ? 0 : 1));
  for (int m = 0; m < static_cast<int>(oc.cat.num_morphisms()); ++m) {
    const bool live = !in_f(oc.cat.src(m)) && !in_f(oc.cat.dst(m));
    SparseMatrix s(in_f(oc.cat.dst(m)) ? 0 : 1, in_f(oc.cat.src(m)) ? 0 : 1);
    if (live) s.c[0].emplace_back(0, Int(1));
    E.map.push_back(ChainMap{{s}});
  }
  return E;
}

/// R(−): G/H ↦ R(H) in the irreducible basis, maps by conjugation and induction.
inline ChainFunctor repring_coefficients(const OrbitPtr& orb, const RepRing& R) {
  const OrbitCategory& oc = *orb;
  ChainFunctor E;
  E.source = std::make_shared<const FinCategory>(oc.cat);
  E.ring = Ring::ZZ;
  for (const auto& H : oc.subgroup) E.value.push_back(ChainComplex::free_module(Ring::ZZ, R.subgroup(H).table.size()));
  for (int m = 0; m < static_cast<int>(oc.cat.num_morphisms()); ++m) {
    const auto& H = oc.subgroup[static_cast<std::size_t>(oc.cat.src(m))];
    const auto& K = oc.subgroup[static_cast<std::size_t>(oc.cat.dst(m))];
    E.map.push_back(ChainMap{{SparseMatrix::from_dense(R.induction_matrix(H, K, oc.payload[static_cast<std::size_t>(m)]))}});
  }
  return E;
}

/// E has zero homology on every orbit of F.
inline bool vanishes_on(const ChainFunctor& E, const OrbitCategory& oc, const Family& F) {
  for (int o = 0; o < static_cast<int>(oc.num_objects()); ++o)
    if (F.contains(static_cast<std::size_t>(oc.subgroup_class[static_cast<std::size_t>(o)]))) {
      for (const auto& h : homology(E.at(o)))
        if (!h.is_zero()) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Cellular Bredon chains.

/// One orbit of n-simplices: its representative (whose stabilizer is the
/// chosen representative subgroup of its class) and orbit-category object.
struct CellOrbit {
  std::vector<int> rep;
  int object = 0;
  std::size_t offset = 0;  // first generator in C_n
};

struct CellStructure {
  std::vector<std::vector<CellOrbit>> orbits;          // per dimension
  std::vector<std::map<std::vector<int>, std::pair<int, int>>> locate;  // simplex -> (orbit, h with h·rep = simplex)
};

inline CellStructure cell_structure(const GSimplicialComplex& X, const OrbitCategory& oc) {
  const PermGroup& G = X.group;
  CellStructure cs;
  cs.orbits.resize(static_cast<std::size_t>(X.dim() + 1));
  cs.locate.resize(static_cast<std::size_t>(X.dim() + 1));
  for (int k = 0; k <= X.dim(); ++k) {
    auto& loc = cs.locate[static_cast<std::size_t>(k)];
    for (const auto& s : X.cx.simplices(k)) {
      if (loc.count(s)) continue;
      std::vector<std::vector<int>> orbit;
      for (int g = 0; g < static_cast<int>(G.order()); ++g) orbit.push_back(X.image(g, s));
      std::sort(orbit.begin(), orbit.end());
      orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
      Subgroup st = X.stabilizer(s);
      const int obj = oc.object_of_class(G.subgroup_class_of(st));
      const Subgroup& K = oc.subgroup[static_cast<std::size_t>(obj)];
      std::vector<int> rep;
      for (const auto& t : orbit)
        if (X.stabilizer(t) == K) {
          rep = t;
          break;
        }
      const int id = static_cast<int>(cs.orbits[static_cast<std::size_t>(k)].size());
      cs.orbits[static_cast<std::size_t>(k)].push_back({rep, obj, 0});
      for (int g = 0; g < static_cast<int>(G.order()); ++g) {
        auto t = X.image(g, rep);
        if (!loc.count(t)) loc.emplace(t, std::make_pair(id, g));
      }
    }
  }
  return cs;
}

struct CellularComplex {
  ChainComplex complex;
  CellStructure cells;
};

/// Bredon chains with a degree-0 coefficient system M: C_n = ⊕ M(G/G_σ) over
/// orbit representatives σ, boundary Σ (-1)^i (orientation) M(G/G_σ → G/G_{d_i σ}).
inline CellularComplex bredon_cellular(const GSimplicialComplex& X, const ChainFunctor& M, const OrbitCategory& oc) {
  if (!is_regular(X)) throw NotRegular("cellular chains need a regular complex");
  for (const auto& v : M.value)
    if (v.top() > 0) throw InvalidInput("coefficient system must be concentrated in degree 0");
  CellularComplex out{ChainComplex(M.ring), cell_structure(X, oc)};
  auto& cs = out.cells;
  std::vector<std::size_t> ranks;
  for (auto& dimk : cs.orbits) {
    std::size_t r = 0;
    for (auto& c : dimk) {
      c.offset = r;
      r += M.at(c.object).rank(0);
    }
    ranks.push_back(r);
  }
  ChainComplex C(M.ring, ranks);
  for (int k = 1; k <= X.dim(); ++k) {
    SparseMatrix m(ranks[static_cast<std::size_t>(k - 1)], ranks[static_cast<std::size_t>(k)]);
    for (const auto& c : cs.orbits[static_cast<std::size_t>(k)]) {
      for (std::size_t i = 0; i < c.rep.size(); ++i) {
        std::vector<int> face = c.rep;
        face.erase(face.begin() + static_cast<long>(i));
        auto [orb, h] = cs.locate[static_cast<std::size_t>(k - 1)].at(face);
        const CellOrbit& fo = cs.orbits[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(orb)];
        int orient = 1;
        X.image(h, fo.rep, &orient);
        const int sign = (i % 2 == 0 ? 1 : -1) * orient;
        const int mor = oc.morphism(c.object, fo.object, h);
        SparseMatrix fm = M.of(mor).at(0, M.at(c.object), M.at(fo.object));
        for (std::size_t x = 0; x < fm.cols; ++x)
          for (const auto& [r, v] : fm.c[x]) m.c[c.offset + x].emplace_back(static_cast<int>(fo.offset + static_cast<std::size_t>(r)), Int(sign) * v);
      }
    }
    m.normalize();
    C.d[static_cast<std::size_t>(k)] = std::move(m);
  }
  out.complex = std::move(C);
  return out;
}

/// Cellular map induced by an equivariant simplicial map f: X → Y.
inline ChainMap cellular_map(const GSimplicialComplex& X, const CellularComplex& CX, const GSimplicialComplex& Y,
                             const CellularComplex& CY, const std::vector<int>& vertex_map, const ChainFunctor& M, const OrbitCategory& oc) {
  ChainMap out;
  for (int k = 0; k <= CX.complex.top(); ++k) {
    SparseMatrix m(CY.complex.rank(k), CX.complex.rank(k));
    for (const auto& c : CX.cells.orbits[static_cast<std::size_t>(k)]) {
      std::vector<int> img;
      for (int v : c.rep) img.push_back(vertex_map[static_cast<std::size_t>(v)]);
      int sf = sort_with_sign(img);
      if (sf == 0) continue;
      auto it = CY.cells.locate[static_cast<std::size_t>(k)].find(img);
      if (it == CY.cells.locate[static_cast<std::size_t>(k)].end()) throw StructureMismatch("map leaves the target complex");
      auto [orb, h] = it->second;
      const CellOrbit& to = CY.cells.orbits[static_cast<std::size_t>(k)][static_cast<std::size_t>(orb)];
      int sh = 1;
      Y.image(h, to.rep, &sh);
      const int mor = oc.morphism(c.object, to.object, h);
      SparseMatrix fm = M.of(mor).at(0, M.at(c.object), M.at(to.object));
      for (std::size_t x = 0; x < fm.cols; ++x)
        for (const auto& [r, v] : fm.c[x]) m.c[c.offset + x].emplace_back(static_cast<int>(to.offset + static_cast<std::size_t>(r)), Int(sf * sh) * v);
    }
    m.normalize();
    out.f.push_back(std::move(m));
  }
  (void)X;
  return out;
}

// ---------------------------------------------------------------------------
// Assembly.

struct AssemblyReport {
  ChainComplex source;
  ChainComplex target;
  ChainMap map;
  Homology source_homology;
  Homology target_homology;
  std::vector<bool> iso_in_degree;  // degrees 0..N-2, from the cone
  bool quasi_iso = false;           // degrees [0, N-2]
  bool truncation_stable = false;
};

/// hocolim over the F-orbits of E, mapped to E(G/G) along the projections.
inline AssemblyReport assembly_map(const ChainFunctor& E, const OrbitCategory& oc, const Family& F, int N) {
  if (N < 2) throw InvalidInput("assembly needs truncation at least 2");
  SubCategory sub = full_subcategory_family(oc, F);
  ChainFunctor D = restrict_functor(E, sub);
  const int terminal = oc.object_of_class(oc.group.subgroup_class_of(oc.group.whole()));
  AssemblyReport r;
  r.source = hocolim_trunc(D, N);
  r.target = E.at(terminal);
  std::vector<ChainMap> comps;
  for (int o : sub.objects) comps.push_back(E.of(oc.cat.hom(o, terminal).at(0)));
  r.map = hocolim_augmentation(D, N, r.source, comps, r.target);
  r.source_homology = homology(r.source);
  r.target_homology = homology(r.target);
  ChainComplex cone = mapping_cone(r.map, r.source, r.target);
  Homology hc = homology(cone);
  for (int k = 0; k <= N - 2; ++k) r.iso_in_degree.push_back(homology_at(hc, k).is_zero() && homology_at(hc, k + 1).is_zero());
  r.quasi_iso = quasi_iso_in_range(r.map, r.source, r.target, 0, N - 2);
  r.truncation_stable = truncation_stable(D, N);
  return r;
}

// ---------------------------------------------------------------------------
// Theorem verifiers.

struct TheoremOneReport {
  Homology source;  // E^G(X^F)
  Homology target;  // E^G(X)
  int lo = 0, hi = 0;
  bool quasi_iso = false;
  bool counit_natural = false;
  bool verdict() const { return quasi_iso && counit_natural; }
};

/// E^G(X^F) → E^G(X) induced by the counit is a quasi-isomorphism in
/// degrees [0, N-2] whenever E vanishes on F.
inline TheoremOneReport verify_theorem_one(const ChainFunctor& E, const Family& F, const OrbitPresheaf& X, int N) {
  const OrbitCategory& oc = *X.orb;
  if (!F.is_subgroup_closed) throw NotAFamily("the subgroup set is not closed under subconjugation");
  if (!vanishes_on(E, oc, F)) throw EDoesNotVanish("E has nonzero homology on an orbit of the family");
  if (N < 2) throw InvalidInput("theorem check needs truncation at least 2");
  KanExtension XF = presheaf_XF(X, F, N);
  TheoremOneReport r;
  r.lo = 0;
  r.hi = N - 2;
  r.counit_natural = is_natural(XF.value.chains, X.chains, XF.counit);
  CoendMap cm = hocoend_pairing_map(oc.cat, E, XF.value.chains, X.chains, XF.counit, N);
  r.source = homology(cm.source);
  r.target = homology(cm.target);
  r.quasi_iso = quasi_iso_in_range(cm.map, cm.source, cm.target, r.lo, r.hi);
  return r;
}

enum class LocalizationMode { VanishingCoefficients, RationalRG };

struct GammaLocalizationReport {
  LocalizationMode mode = LocalizationMode::RationalRG;
  bool subdivided = false;
  bool fixed_empty = false;
  int top = 0;  // degrees compared: [0, top]
  // vanishing-coefficients mode
  Homology coend_fixed, coend_full;
  // rational-R(G) mode
  Homology cellular_fixed, cellular_full;  // unlocalized, over ℤ
  std::vector<std::size_t> localized_fixed, localized_full;
  bool coefficients_vanish = true;  // R(K)_(γ) = 0 for orbits K in F(γ)
  bool unlocalized_iso = false;
  bool localized_iso = false;
  bool verdict() const { return localized_iso && coefficients_vanish; }
};

namespace detail {

/// Block-diagonal idempotent on cellular chains C_k.
inline RatMatrix cellular_projector(const CellStructure& cs, int k, std::size_t rank, const RepRing& R, const OrbitCategory& oc,
                                    const std::vector<std::size_t>& rational_class) {
  RatMatrix P(rank, rank);
  if (k < 0 || k >= static_cast<int>(cs.orbits.size())) return P;
  for (const auto& c : cs.orbits[static_cast<std::size_t>(k)]) {
    RatMatrix E = R.idempotent_action(oc.subgroup[static_cast<std::size_t>(c.object)], rational_class);
    for (std::size_t i = 0; i < E.rows(); ++i)
      for (std::size_t j = 0; j < E.cols(); ++j) P(c.offset + i, c.offset + j) = E(i, j);
  }
  return P;
}

inline RatMatrix dense_rational(const SparseMatrix& m) { return to_rational(m.to_dense()); }

/// dim H_k(P·C) = rank P_k - rank(d_k P_k) - rank(d_{k+1} P_{k+1}).
inline std::vector<std::size_t> localized_betti(const ChainComplex& C, const std::vector<RatMatrix>& P, int top) {
  std::vector<std::size_t> out;
  auto dP = [&](int k) -> std::size_t {
    if (k < 1 || k > C.top()) return 0;
    return rank(dense_rational(C.d[static_cast<std::size_t>(k)]) * P[static_cast<std::size_t>(k)]);
  };
  for (int k = 0; k <= top; ++k) {
    std::size_t pk = k <= C.top() ? rank(P[static_cast<std::size_t>(k)]) : 0;
    out.push_back(pk - dP(k) - dP(k + 1));
  }
  return out;
}

}  // namespace detail

/// Compares X^γ → X after localizing at (γ). In vanishing mode E must vanish
/// on F(γ); in rational mode E = R(−) and the comparison runs on the γ-factor
/// of R(G) ⊗ ℚ.
inline GammaLocalizationReport verify_gamma_localization(const GSimplicialComplex& X0, std::size_t gamma, LocalizationMode mode,
                                                         const RepRing* R, const ChainFunctor* E_in, const OrbitPtr& orb) {
  const OrbitCategory& oc = *orb;
  const PermGroup& G = X0.group;
  GammaLocalizationReport r;
  r.mode = mode;
  GSimplicialComplex X = ensure_regular(X0);
  r.subdivided = !is_regular(X0);
  GSimplicialComplex Xg = gamma_fixed_subcomplex(X, gamma);
  r.fixed_empty = Xg.cx.empty();
  r.top = std::max(X.dim(), 0);
  std::vector<int> incl(static_cast<std::size_t>(X.cx.vertices()));
  std::iota(incl.begin(), incl.end(), 0);
  Family Fg = family_of_gamma(G, gamma);
  if (mode == LocalizationMode::VanishingCoefficients) {
    if (!E_in) throw InvalidInput("vanishing mode needs a coefficient system");
    if (!vanishes_on(*E_in, oc, Fg)) throw EDoesNotVanish("E has nonzero homology on an orbit of F(gamma)");
    const int N = r.top + 2;
    OrbitPresheaf A = tilde_Y(Xg, orb, E_in->ring), B = tilde_Y(X, orb, E_in->ring);
    CoendMap cm = hocoend_pairing_map(oc.cat, *E_in, A.chains, B.chains, tilde_Y_map(A, B, incl), N);
    r.coend_fixed = homology(cm.source);
    r.coend_full = homology(cm.target);
    r.localized_iso = quasi_iso_in_range(cm.map, cm.source, cm.target, 0, r.top);
    r.unlocalized_iso = r.localized_iso;
    return r;
  }
  if (!R) throw InvalidInput("rational mode needs the representation ring");
  if (R->group().elements() != G.elements()) throw InvalidInput("representation ring belongs to a different group");
  ChainFunctor M = repring_coefficients(orb, *R);
  CellularComplex A = bredon_cellular(Xg, M, oc), B = bredon_cellular(X, M, oc);
  ChainMap f = cellular_map(Xg, A, X, B, incl, M, oc);
  if (!is_chain_map(f, A.complex, B.complex)) throw StructureMismatch("cellular inclusion is not a chain map");
  r.cellular_fixed = homology(A.complex);
  r.cellular_full = homology(B.complex);
  r.unlocalized_iso = quasi_iso_in_range(f, A.complex, B.complex, 0, r.top);

  auto rc = rational_class_decomposition(G);
  const auto& cls = rc.classes[rc.of_class[gamma]];
  std::vector<RatMatrix> PA, PB;
  for (int k = 0; k <= r.top + 1; ++k) {
    PA.push_back(detail::cellular_projector(A.cells, k, A.complex.rank(k), *R, oc, cls));
    PB.push_back(detail::cellular_projector(B.cells, k, B.complex.rank(k), *R, oc, cls));
  }
  r.localized_fixed = detail::localized_betti(A.complex, PA, r.top);
  r.localized_full = detail::localized_betti(B.complex, PB, r.top);
  // the cone of the localized map is P·Cone(f)
  ChainComplex cone = mapping_cone(f, A.complex, B.complex);
  std::vector<RatMatrix> PC;
  for (int k = 0; k <= r.top + 2; ++k) {
    const std::size_t a = A.complex.rank(k - 1), b = B.complex.rank(k);
    RatMatrix P(a + b, a + b);
    if (k - 1 >= 0 && k - 1 < static_cast<int>(PA.size()))
      for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < a; ++j) P(i, j) = PA[static_cast<std::size_t>(k - 1)](i, j);
    if (k < static_cast<int>(PB.size()))
      for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < b; ++j) P(a + i, a + j) = PB[static_cast<std::size_t>(k)](i, j);
    PC.push_back(P);
  }
  auto cb = detail::localized_betti(cone, PC, r.top + 1);
  r.localized_iso = std::all_of(cb.begin(), cb.end(), [](std::size_t v) { return v == 0; });
  for (std::size_t o = 0; o < oc.num_objects(); ++o)
    if (Fg.contains(static_cast<std::size_t>(oc.subgroup_class[o])) && !R->module_vanishes_localized(oc.subgroup[o], gamma).vanishes)
      r.coefficients_vanish = false;
  return r;
}

// ---------------------------------------------------------------------------
// Standard examples.

/// ℤ/2 acting on the square p-a-q-b by swapping a and b (fixing p, q).
inline GSimplicialComplex reflection_circle() {
  // vertices p = 0, a = 1, q = 2, b = 3
  return make_gcomplex(PermGroup::cyclic(2), 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {{0, 3, 2, 1}});
}

/// Suspension of the reflection circle: the reflection of S² fixing a great circle.
inline GSimplicialComplex reflection_sphere() {
  // poles n = 4, s = 5
  std::vector<std::vector<int>> tris;
  for (auto e : std::vector<std::vector<int>>{{0, 1}, {1, 2}, {2, 3}, {0, 3}}) {
    tris.push_back({e[0], e[1], 4});
    tris.push_back({e[0], e[1], 5});
  }
  return make_gcomplex(PermGroup::cyclic(2), 6, tris, {{0, 3, 2, 1, 4, 5}});
}

/// S₃ permuting the vertices of a triangle boundary (not regular).
inline GSimplicialComplex s3_triangle() {
  return make_gcomplex(PermGroup::symmetric(3), 3, {{0, 1}, {1, 2}, {0, 2}}, {{1, 0, 2}, {1, 2, 0}});
}

/// S₃ permuting three vertices of the boundary of a 3-simplex, fixing the fourth.
inline GSimplicialComplex s3_tetrahedron_boundary() {
  const PermGroup S3 = PermGroup::symmetric(3);
  std::vector<Perm> gens;
  for (const auto& g : S3.generators()) gens.push_back({g[0], g[1], g[2], 3});
  return make_gcomplex(S3, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, gens);
}

/// The free G-set of size |G| as a 0-complex.
inline GSimplicialComplex free_orbit(const PermGroup& G) {
  std::vector<std::vector<int>> pts;
  for (int i = 0; i < static_cast<int>(G.order()); ++i) pts.push_back({i});
  std::vector<Perm> gens;
  for (const auto& g : G.generators()) {
    Perm p(G.order());
    for (int x = 0; x < static_cast<int>(G.order()); ++x) p[static_cast<std::size_t>(x)] = G.mul(G.index_of(g), x);
    gens.push_back(p);
  }
  return make_gcomplex(G, static_cast<int>(G.order()), pts, gens);
}

}  // namespace eqloc
