#pragma once

// Explicit finite categories, the orbit category GOrb and the derived
// constructions used by the bar models: opposite, products, full and comma
// subcategories, twisted arrows, skeleta and the slice-equivalence check.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "eqloc/core.hpp"
#include "eqloc/fingroup.hpp"

namespace eqloc {

struct Arrow {
  int src = 0;
  int dst = 0;
};

/// A finite category with a total composition table. Morphisms are ids; the
/// table is stored per middle object so lookups stay local.
class FinCategory {
public:
  using ComposeFn = std::function<int(int g, int f)>;  // returns g∘f

  FinCategory() = default;

  /// Builds the composition table from `compose` and, when `check` is set,
  /// verifies unit and associativity laws exhaustively.
  FinCategory(std::vector<std::string> labels, std::vector<Arrow> arrows, std::vector<int> identities,
              const ComposeFn& compose, bool check = true)
      : labels_(std::move(labels)), arrows_(std::move(arrows)), identities_(std::move(identities)) {
    index();
    const std::size_t n = labels_.size();
    table_.resize(n);
    for (std::size_t b = 0; b < n; ++b) {
      const auto& in = in_[b];
      const auto& out = out_[b];
      table_[b].resize(in.size() * out.size());
      for (std::size_t i = 0; i < in.size(); ++i)
        for (std::size_t j = 0; j < out.size(); ++j) {
          int c = compose(out[j], in[i]);
          if (c < 0 || static_cast<std::size_t>(c) >= arrows_.size() || src(c) != src(in[i]) || dst(c) != dst(out[j]))
            throw StructureMismatch("composite has wrong endpoints");
          table_[b][i * out.size() + j] = c;
        }
    }
    if (check) check_laws();
  }

  std::size_t num_objects() const { return labels_.size(); }
  std::size_t num_morphisms() const { return arrows_.size(); }
  const std::string& label(int obj) const { return labels_[static_cast<std::size_t>(obj)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int src(int f) const { return arrows_[static_cast<std::size_t>(f)].src; }
  int dst(int f) const { return arrows_[static_cast<std::size_t>(f)].dst; }
  int identity(int obj) const { return identities_[static_cast<std::size_t>(obj)]; }
  bool is_identity(int f) const { return identity(src(f)) == f; }
  const std::vector<int>& hom(int a, int b) const { return homs_[static_cast<std::size_t>(a) * num_objects() + static_cast<std::size_t>(b)]; }
  const std::vector<int>& morphisms_into(int b) const { return in_[static_cast<std::size_t>(b)]; }
  const std::vector<int>& morphisms_out_of(int a) const { return out_[static_cast<std::size_t>(a)]; }

  /// g∘f for f: a→b, g: b→c.
  int compose(int g, int f) const {
    const int b = dst(f);
    if (src(g) != b) throw InvalidInput("morphisms are not composable");
    const auto ub = static_cast<std::size_t>(b);
    return table_[ub][static_cast<std::size_t>(pos_in_[static_cast<std::size_t>(f)]) * out_[ub].size() +
                      static_cast<std::size_t>(pos_out_[static_cast<std::size_t>(g)])];
  }

  bool is_isomorphism(int f) const {
    for (int g : hom(dst(f), src(f)))
      if (compose(g, f) == identity(src(f)) && compose(f, g) == identity(dst(f))) return true;
    return false;
  }

  void check_laws() const {
    for (int f = 0; f < static_cast<int>(num_morphisms()); ++f) {
      if (compose(identity(dst(f)), f) != f || compose(f, identity(src(f))) != f)
        throw StructureMismatch("unit law fails");
    }
    for (std::size_t b = 0; b < num_objects(); ++b)
      for (int f : in_[b])
        for (int g : out_[b])
          for (int h : out_[static_cast<std::size_t>(dst(g))])
            if (compose(h, compose(g, f)) != compose(compose(h, g), f)) throw StructureMismatch("associativity fails");
  }

  FinCategory op() const {
    std::vector<Arrow> arrows;
    for (const auto& a : arrows_) arrows.push_back({a.dst, a.src});
    return FinCategory(labels_, arrows, identities_, [this](int g, int f) { return compose(f, g); }, false);
  }

private:
  void index() {
    const std::size_t n = labels_.size();
    homs_.assign(n * n, {});
    in_.assign(n, {});
    out_.assign(n, {});
    pos_in_.assign(arrows_.size(), 0);
    pos_out_.assign(arrows_.size(), 0);
    for (std::size_t f = 0; f < arrows_.size(); ++f) {
      const auto& a = arrows_[f];
      if (a.src < 0 || a.dst < 0 || static_cast<std::size_t>(a.src) >= n || static_cast<std::size_t>(a.dst) >= n)
        throw InvalidInput("arrow endpoint out of range");
      homs_[static_cast<std::size_t>(a.src) * n + static_cast<std::size_t>(a.dst)].push_back(static_cast<int>(f));
      pos_in_[f] = static_cast<int>(in_[static_cast<std::size_t>(a.dst)].size());
      in_[static_cast<std::size_t>(a.dst)].push_back(static_cast<int>(f));
      pos_out_[f] = static_cast<int>(out_[static_cast<std::size_t>(a.src)].size());
      out_[static_cast<std::size_t>(a.src)].push_back(static_cast<int>(f));
    }
    if (identities_.size() != n) throw InvalidInput("one identity per object required");
    for (std::size_t o = 0; o < n; ++o) {
      int id = identities_[o];
      if (id < 0 || static_cast<std::size_t>(id) >= arrows_.size() || src(id) != static_cast<int>(o) || dst(id) != static_cast<int>(o))
        throw InvalidInput("identity has wrong endpoints");
    }
  }

  std::vector<std::string> labels_;
  std::vector<Arrow> arrows_;
  std::vector<int> identities_;
  std::vector<std::vector<int>> homs_;
  std::vector<std::vector<int>> in_, out_;
  std::vector<int> pos_in_, pos_out_;
  std::vector<std::vector<int>> table_;
};

/// A functor between finite categories given by object and morphism tables.
struct FunctorData {
  const FinCategory* source = nullptr;
  const FinCategory* target = nullptr;
  std::vector<int> object_map;
  std::vector<int> morphism_map;

  int operator()(int f) const { return morphism_map[static_cast<std::size_t>(f)]; }
  int object(int o) const { return object_map[static_cast<std::size_t>(o)]; }
};

/// Exhaustive check of endpoints, identities and composition.
inline bool is_functor(const FunctorData& F) {
  const auto& C = *F.source;
  const auto& D = *F.target;
  if (F.object_map.size() != C.num_objects() || F.morphism_map.size() != C.num_morphisms()) return false;
  for (int f = 0; f < static_cast<int>(C.num_morphisms()); ++f) {
    int g = F(f);
    if (g < 0 || static_cast<std::size_t>(g) >= D.num_morphisms()) return false;
    if (D.src(g) != F.object(C.src(f)) || D.dst(g) != F.object(C.dst(f))) return false;
  }
  for (int o = 0; o < static_cast<int>(C.num_objects()); ++o)
    if (F(C.identity(o)) != D.identity(F.object(o))) return false;
  for (int b = 0; b < static_cast<int>(C.num_objects()); ++b)
    for (int f : C.morphisms_into(b))
      for (int g : C.morphisms_out_of(b))
        if (F(C.compose(g, f)) != D.compose(F(g), F(f))) return false;
  return true;
}

/// C × D with objects (c, d) at c·|D| + d and morphisms (f, g) at f·|Mor D| + g.
inline FinCategory product(const FinCategory& C, const FinCategory& D) {
  const std::size_t nd = D.num_objects(), md = D.num_morphisms();
  std::vector<std::string> labels;
  for (const auto& a : C.labels())
    for (const auto& b : D.labels()) labels.push_back("(" + a + "," + b + ")");
  std::vector<Arrow> arrows;
  for (int f = 0; f < static_cast<int>(C.num_morphisms()); ++f)
    for (int g = 0; g < static_cast<int>(md); ++g)
      arrows.push_back({static_cast<int>(static_cast<std::size_t>(C.src(f)) * nd + static_cast<std::size_t>(D.src(g))),
                        static_cast<int>(static_cast<std::size_t>(C.dst(f)) * nd + static_cast<std::size_t>(D.dst(g)))});
  std::vector<int> ids;
  for (int a = 0; a < static_cast<int>(C.num_objects()); ++a)
    for (int b = 0; b < static_cast<int>(nd); ++b)
      ids.push_back(static_cast<int>(static_cast<std::size_t>(C.identity(a)) * md + static_cast<std::size_t>(D.identity(b))));
  auto compose = [&](int y, int x) {
    auto ux = static_cast<std::size_t>(x), uy = static_cast<std::size_t>(y);
    int f = C.compose(static_cast<int>(uy / md), static_cast<int>(ux / md));
    int g = D.compose(static_cast<int>(uy % md), static_cast<int>(ux % md));
    return static_cast<int>(static_cast<std::size_t>(f) * md + static_cast<std::size_t>(g));
  };
  return FinCategory(labels, arrows, ids, compose, false);
}

/// A full subcategory with its inclusion; `objects` lists parent object ids.
struct SubCategory {
  FinCategory cat;
  std::vector<int> objects;    // sub object -> parent object
  std::vector<int> morphisms;  // sub morphism -> parent morphism
};

inline SubCategory full_subcategory(const FinCategory& C, std::vector<int> objects) {
  std::sort(objects.begin(), objects.end());
  objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
  std::vector<int> local(C.num_objects(), -1);
  for (std::size_t i = 0; i < objects.size(); ++i) local[static_cast<std::size_t>(objects[i])] = static_cast<int>(i);
  std::vector<std::string> labels;
  for (int o : objects) labels.push_back(C.label(o));
  std::vector<int> morphs;
  std::vector<int> local_m(C.num_morphisms(), -1);
  std::vector<Arrow> arrows;
  for (int a : objects)
    for (int b : objects)
      for (int f : C.hom(a, b)) {
        local_m[static_cast<std::size_t>(f)] = static_cast<int>(morphs.size());
        morphs.push_back(f);
        arrows.push_back({local[static_cast<std::size_t>(a)], local[static_cast<std::size_t>(b)]});
      }
  std::vector<int> ids;
  for (int o : objects) ids.push_back(local_m[static_cast<std::size_t>(C.identity(o))]);
  FinCategory cat(labels, arrows, ids,
                  [&](int g, int f) { return local_m[static_cast<std::size_t>(C.compose(morphs[static_cast<std::size_t>(g)], morphs[static_cast<std::size_t>(f)]))]; },
                  false);
  return {std::move(cat), std::move(objects), std::move(morphs)};
}

inline FunctorData inclusion(const SubCategory& S, const FinCategory& parent) {
  return {&S.cat, &parent, S.objects, S.morphisms};
}

/// Skeleton: the full subcategory on the least object of each iso class.
struct Skeleton {
  SubCategory sub;
  std::vector<int> class_of;  // parent object -> skeleton object
};

inline Skeleton skeleton(const FinCategory& C) {
  const std::size_t n = C.num_objects();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (int a = 0; a < static_cast<int>(n); ++a)
    for (int b = a + 1; b < static_cast<int>(n); ++b) {
      if (find(a) == find(b)) continue;
      for (int f : C.hom(a, b))
        if (C.is_isomorphism(f)) {
          int ra = find(a), rb = find(b);
          parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
          break;
        }
    }
  std::vector<int> reps;
  for (int o = 0; o < static_cast<int>(n); ++o)
    if (find(o) == o) reps.push_back(o);
  Skeleton s{full_subcategory(C, reps), std::vector<int>(n)};
  for (int o = 0; o < static_cast<int>(n); ++o)
    s.class_of[static_cast<std::size_t>(o)] = static_cast<int>(std::lower_bound(reps.begin(), reps.end(), find(o)) - reps.begin());
  return s;
}

/// Tw(C): objects are morphisms f: i→j; a morphism f ⇒ f' (f': i'→j') is a
/// pair (u: i'→i, v: j→j') with f' = v∘f∘u.
struct TwistedArrow {
  FinCategory cat;
  std::vector<int> object_arrow;              // Tw object -> morphism of C
  std::vector<std::pair<int, int>> pairs;     // Tw morphism -> (u, v)
  FinCategory base_op_times_base;             // C^op × C
};

inline TwistedArrow twisted_arrow_category(const FinCategory& C) {
  TwistedArrow tw;
  const int m = static_cast<int>(C.num_morphisms());
  std::vector<std::string> labels;
  for (int f = 0; f < m; ++f) {
    tw.object_arrow.push_back(f);
    labels.push_back(C.label(C.src(f)) + "->" + C.label(C.dst(f)) + "#" + std::to_string(f));
  }
  std::vector<Arrow> arrows;
  std::map<std::tuple<int, int, int, int>, int> lookup;  // (src obj, dst obj, u, v)
  std::vector<int> ids(static_cast<std::size_t>(m), -1);
  for (int f = 0; f < m; ++f)
    for (int f2 = 0; f2 < m; ++f2)
      for (int u : C.hom(C.src(f2), C.src(f)))
        for (int v : C.hom(C.dst(f), C.dst(f2))) {
          if (C.compose(v, C.compose(f, u)) != f2) continue;
          int id = static_cast<int>(arrows.size());
          arrows.push_back({f, f2});
          tw.pairs.emplace_back(u, v);
          lookup.emplace(std::make_tuple(f, f2, u, v), id);
          if (f == f2 && C.is_identity(u) && C.is_identity(v)) ids[static_cast<std::size_t>(f)] = id;
        }
  auto compose = [&](int y, int x) {
    // x = (u1, v1): f → f', y = (u2, v2): f' → f''; composite (u1∘u2, v2∘v1)
    auto [u1, v1] = tw.pairs[static_cast<std::size_t>(x)];
    auto [u2, v2] = tw.pairs[static_cast<std::size_t>(y)];
    return lookup.at(std::make_tuple(arrows[static_cast<std::size_t>(x)].src, arrows[static_cast<std::size_t>(y)].dst,
                                     C.compose(u1, u2), C.compose(v2, v1)));
  };
  tw.cat = FinCategory(labels, arrows, ids, compose, true);
  tw.base_op_times_base = product(C.op(), C);
  return tw;
}

/// π: Tw(C) → C^op × C, (f: i→j) ↦ (i, j).
inline FunctorData twisted_projection(const TwistedArrow& tw, const FinCategory& C) {
  FunctorData p{&tw.cat, &tw.base_op_times_base, {}, {}};
  const std::size_t n = C.num_objects(), m = C.num_morphisms();
  for (int f : tw.object_arrow)
    p.object_map.push_back(static_cast<int>(static_cast<std::size_t>(C.src(f)) * n + static_cast<std::size_t>(C.dst(f))));
  for (const auto& [u, v] : tw.pairs) p.morphism_map.push_back(static_cast<int>(static_cast<std::size_t>(u) * m + static_cast<std::size_t>(v)));
  return p;
}

enum class Variance { Covariant, Contravariant };

/// Comma category of a functor ι: A → C over an object S of C.
/// Covariant: objects (T, f: ιT → S). Contravariant: objects (T, f: S → ιT).
/// Morphisms are u: T → T' in A making the triangle commute.
struct CommaCategory {
  FinCategory cat;
  std::vector<std::pair<int, int>> objects;  // (T in A, f in C)
  std::vector<int> morphisms;                // comma morphism -> morphism of A
};

inline CommaCategory comma_over(const FunctorData& iota, int S, Variance variance) {
  const FinCategory& A = *iota.source;
  const FinCategory& C = *iota.target;
  CommaCategory out;
  std::vector<std::string> labels;
  for (int t = 0; t < static_cast<int>(A.num_objects()); ++t) {
    const auto& fs = variance == Variance::Covariant ? C.hom(iota.object(t), S) : C.hom(S, iota.object(t));
    for (int f : fs) {
      out.objects.emplace_back(t, f);
      labels.push_back(A.label(t) + "#" + std::to_string(f));
    }
  }
  std::vector<Arrow> arrows;
  std::map<std::tuple<int, int, int>, int> lookup;
  std::vector<int> ids(out.objects.size(), -1);
  for (std::size_t a = 0; a < out.objects.size(); ++a)
    for (std::size_t b = 0; b < out.objects.size(); ++b) {
      auto [t, f] = out.objects[a];
      auto [t2, f2] = out.objects[b];
      for (int u : A.hom(t, t2)) {
        bool ok = variance == Variance::Covariant ? C.compose(f2, iota(u)) == f : C.compose(iota(u), f) == f2;
        if (!ok) continue;
        int id = static_cast<int>(arrows.size());
        arrows.push_back({static_cast<int>(a), static_cast<int>(b)});
        out.morphisms.push_back(u);
        lookup.emplace(std::make_tuple(static_cast<int>(a), static_cast<int>(b), u), id);
        if (a == b && A.is_identity(u)) ids[a] = id;
      }
    }
  auto compose = [&](int g, int f) {
    return lookup.at(std::make_tuple(arrows[static_cast<std::size_t>(f)].src, arrows[static_cast<std::size_t>(g)].dst,
                                     A.compose(out.morphisms[static_cast<std::size_t>(g)], out.morphisms[static_cast<std::size_t>(f)])));
  };
  out.cat = FinCategory(labels, arrows, ids, compose, true);
  return out;
}

/// Left cosets gB (by minimal representative) with g^-1 A g ⊆ B.
inline std::vector<int> hom_cosets(const PermGroup& G, const Subgroup& A, const Subgroup& B) {
  std::vector<int> reps;
  for (int g = 0; g < static_cast<int>(G.order()); ++g) {
    int r = G.coset_rep(g, B);
    if (r != g) continue;  // only visit each coset once, at its minimal element
    const int gi = G.inv(g);
    bool ok = std::all_of(A.members().begin(), A.members().end(), [&](int a) { return B.contains(G.mul(G.mul(gi, a), g)); });
    if (ok) reps.push_back(g);
  }
  return reps;
}

/// GOrb: objects G/H for subgroup class representatives H (ascending order);
/// a morphism G/H → G/K with payload g sends eH to gK.
struct OrbitCategory {
  PermGroup group;
  FinCategory cat;
  std::vector<int> subgroup_class;  // object -> lattice class index
  std::vector<Subgroup> subgroup;   // object -> representative
  std::vector<int> payload;         // morphism -> minimal coset representative

  std::size_t num_objects() const { return cat.num_objects(); }
  int object_of_class(int cls) const {
    auto it = std::find(subgroup_class.begin(), subgroup_class.end(), cls);
    return it == subgroup_class.end() ? -1 : static_cast<int>(it - subgroup_class.begin());
  }
  /// The morphism G/H → G/K whose payload coset contains g.
  int morphism(int src, int dst, int g) const {
    int r = group.coset_rep(g, subgroup[static_cast<std::size_t>(dst)]);
    for (int f : cat.hom(src, dst))
      if (payload[static_cast<std::size_t>(f)] == r) return f;
    throw InvalidInput("element does not define an equivariant map");
  }
};

inline OrbitCategory build_orbit_category(const PermGroup& G, std::size_t bound = kDefaultGroupBound) {
  const auto& lat = G.subgroup_lattice(bound);
  OrbitCategory oc{G, {}, {}, {}, {}};
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < lat.size(); ++c) {
    oc.subgroup_class.push_back(static_cast<int>(c));
    oc.subgroup.push_back(lat.classes[c].representative);
    labels.push_back("G/" + lat.classes[c].label);
  }
  const int n = static_cast<int>(lat.size());
  std::vector<Arrow> arrows;
  std::map<std::tuple<int, int, int>, int> lookup;
  std::vector<int> ids(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int g : hom_cosets(G, oc.subgroup[static_cast<std::size_t>(a)], oc.subgroup[static_cast<std::size_t>(b)])) {
        int id = static_cast<int>(arrows.size());
        arrows.push_back({a, b});
        oc.payload.push_back(g);
        lookup.emplace(std::make_tuple(a, b, g), id);
        if (a == b && g == G.identity()) ids[static_cast<std::size_t>(a)] = id;
      }
  auto compose = [&](int g, int f) {
    // eH ↦ aK ↦ abL
    int a = oc.payload[static_cast<std::size_t>(f)], b = oc.payload[static_cast<std::size_t>(g)];
    int dst = arrows[static_cast<std::size_t>(g)].dst;
    int r = G.coset_rep(G.mul(a, b), oc.subgroup[static_cast<std::size_t>(dst)]);
    return lookup.at(std::make_tuple(arrows[static_cast<std::size_t>(f)].src, dst, r));
  };
  oc.cat = FinCategory(labels, arrows, ids, compose, true);
  return oc;
}

/// Objects of GOrb whose subgroup class lies in F.
inline std::vector<int> family_objects(const OrbitCategory& oc, const Family& F) {
  std::vector<int> objs;
  for (int o = 0; o < static_cast<int>(oc.num_objects()); ++o)
    if (F.contains(static_cast<std::size_t>(oc.subgroup_class[static_cast<std::size_t>(o)]))) objs.push_back(o);
  return objs;
}

/// G_F Orb as a full subcategory of GOrb.
inline SubCategory full_subcategory_family(const OrbitCategory& oc, const Family& F) {
  return full_subcategory(oc.cat, family_objects(oc, F));
}

struct SliceEquivalenceReport {
  std::size_t source_objects = 0;
  std::size_t target_objects = 0;
  bool functor_ok = false;
  bool bijective_on_iso_classes = false;
  bool fully_faithful = false;
  bool equivalence() const { return functor_ok && bijective_on_iso_classes && fully_faithful; }
};

/// Checks that induction H_{F∩H}Orb → G_F Orb/(G/H), U ↦ (G ×_H U → G/H), is
/// an equivalence. H is replaced by its class representative.
inline SliceEquivalenceReport slice_equivalence_check(const OrbitCategory& gorb, const Subgroup& Hin, const Family& F) {
  const PermGroup& G = gorb.group;
  SliceEquivalenceReport rep;
  const int h_obj = gorb.object_of_class(G.subgroup_class_of(Hin));
  const Subgroup& H = gorb.subgroup[static_cast<std::size_t>(h_obj)];

  PermGroup Hg = PermGroup::from_subgroup(G, H, "H");
  std::vector<int> to_parent(Hg.order());
  for (int e = 0; e < static_cast<int>(Hg.order()); ++e) to_parent[static_cast<std::size_t>(e)] = G.index_of(Hg.element(e));
  OrbitCategory horb = build_orbit_category(Hg, std::max(Hg.order(), kDefaultGroupBound));

  auto lift = [&](const Subgroup& L) {
    std::vector<int> m;
    for (int x : L.members()) m.push_back(to_parent[static_cast<std::size_t>(x)]);
    return Subgroup(m, G.order());
  };

  // source: HOrb restricted to subgroups whose G-class lies in F
  std::vector<int> src_objs;
  for (int o = 0; o < static_cast<int>(horb.num_objects()); ++o)
    if (F.contains(static_cast<std::size_t>(G.subgroup_class_of(lift(horb.subgroup[static_cast<std::size_t>(o)]))))) src_objs.push_back(o);
  SubCategory src = full_subcategory(horb.cat, src_objs);

  SubCategory gf = full_subcategory_family(gorb, F);
  FunctorData iota = inclusion(gf, gorb.cat);
  CommaCategory slice = comma_over(iota, h_obj, Variance::Covariant);
  rep.source_objects = src.cat.num_objects();
  rep.target_objects = slice.cat.num_objects();

  // object L ↦ (K_L, payload x_L) where L = x_L^-1 K_L x_L
  FunctorData ind{&src.cat, &slice.cat, {}, {}};
  std::vector<int> xs;
  for (int o : src.objects) {
    Subgroup L = lift(horb.subgroup[static_cast<std::size_t>(o)]);
    int cls = G.subgroup_class_of(L);
    int k_obj = gorb.object_of_class(cls);
    int x = G.conjugator_to_rep(L);
    xs.push_back(x);
    int f = gorb.morphism(k_obj, h_obj, x);
    int target = -1;
    for (std::size_t t = 0; t < slice.objects.size(); ++t) {
      auto [a, g] = slice.objects[t];
      if (gf.objects[static_cast<std::size_t>(a)] == k_obj && g == f) target = static_cast<int>(t);
    }
    if (target < 0) return rep;
    ind.object_map.push_back(target);
  }
  // morphism payload h ↦ x_L h x_{L'}^-1
  for (int m = 0; m < static_cast<int>(src.cat.num_morphisms()); ++m) {
    int a = src.cat.src(m), b = src.cat.dst(m);
    int h = to_parent[static_cast<std::size_t>(horb.payload[static_cast<std::size_t>(src.morphisms[static_cast<std::size_t>(m)])])];
    int g = G.mul(G.mul(xs[static_cast<std::size_t>(a)], h), G.inv(xs[static_cast<std::size_t>(b)]));
    int sa = ind.object(a), sb = ind.object(b);
    int ka = slice.objects[static_cast<std::size_t>(sa)].first, kb = slice.objects[static_cast<std::size_t>(sb)].first;
    int gm = gorb.morphism(gf.objects[static_cast<std::size_t>(ka)], gf.objects[static_cast<std::size_t>(kb)], g);
    int found = -1;
    for (int c : slice.cat.hom(sa, sb))
      if (gf.morphisms[static_cast<std::size_t>(slice.morphisms[static_cast<std::size_t>(c)])] == gm) found = c;
    if (found < 0) return rep;
    ind.morphism_map.push_back(found);
  }
  rep.functor_ok = is_functor(ind);
  if (!rep.functor_ok) return rep;

  Skeleton ssk = skeleton(src.cat), tsk = skeleton(slice.cat);
  std::vector<int> hit(tsk.sub.cat.num_objects(), -1);
  bool injective = true;
  for (int o = 0; o < static_cast<int>(src.cat.num_objects()); ++o) {
    int t = tsk.class_of[static_cast<std::size_t>(ind.object(o))];
    int s = ssk.class_of[static_cast<std::size_t>(o)];
    if (hit[static_cast<std::size_t>(t)] >= 0 && hit[static_cast<std::size_t>(t)] != s) injective = false;
    hit[static_cast<std::size_t>(t)] = s;
  }
  rep.bijective_on_iso_classes = injective && std::all_of(hit.begin(), hit.end(), [](int v) { return v >= 0; });

  bool ff = true;
  for (int a = 0; a < static_cast<int>(src.cat.num_objects()) && ff; ++a)
    for (int b = 0; b < static_cast<int>(src.cat.num_objects()) && ff; ++b) {
      std::vector<int> images;
      for (int m : src.cat.hom(a, b)) images.push_back(ind(m));
      std::sort(images.begin(), images.end());
      std::vector<int> target = slice.cat.hom(ind.object(a), ind.object(b));
      std::sort(target.begin(), target.end());
      ff = images == target;
    }
  rep.fully_faithful = ff;
  return rep;
}

}  // namespace eqloc
