#pragma once

// Finite permutation groups: element enumeration, conjugacy classes of
// elements and subgroups, normalizers, Weyl groups and families of subgroups.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "eqloc/core.hpp"

namespace eqloc {

/// A permutation of {0..n-1} by its image list: p[i] is the image of i.
using Perm = std::vector<int>;

inline Perm perm_identity(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

/// Composition p∘q (apply q first).
inline Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i])];
  return r;
}

inline Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

inline bool is_permutation(const Perm& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

/// Sorted cycle lengths > 1, e.g. {2,2} for a double transposition.
inline std::vector<int> cycle_type(const Perm& p) {
  std::vector<int> lens;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    if (len > 1) lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

/// A subgroup as a sorted set of element ids of its parent group.
class Subgroup {
public:
  Subgroup() = default;
  Subgroup(std::vector<int> members, std::size_t parent_order) : members_(std::move(members)), mask_(parent_order, false) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (int m : members_) mask_[static_cast<std::size_t>(m)] = true;
  }

  const std::vector<int>& members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool contains(int element) const { return mask_[static_cast<std::size_t>(element)]; }
  bool is_subset_of(const Subgroup& other) const {
    return std::all_of(members_.begin(), members_.end(), [&](int m) { return other.contains(m); });
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members_ < b.members_;
  }

private:
  std::vector<int> members_;
  std::vector<bool> mask_;
};

struct ElementClass {
  int representative = 0;    // minimal element id in the class
  std::vector<int> members;  // sorted element ids
  std::string label;
};

struct SubgroupClass {
  Subgroup representative;          // lexicographically least conjugate
  std::vector<Subgroup> conjugates; // full conjugation orbit, sorted
  bool cyclic = false;
  std::string label;
};

class PermGroup;

/// All subgroups of a group up to conjugacy, with the subconjugacy relation.
struct SubgroupLattice {
  std::vector<SubgroupClass> classes;
  // leq[a][b]: some conjugate of class a lies in the representative of class b
  std::vector<std::vector<bool>> leq;

  std::size_t size() const { return classes.size(); }
};

namespace detail {

struct GroupData {
  std::size_t degree = 0;
  std::vector<Perm> generators;
  std::string name;
  std::vector<Perm> elements;           // lexicographically sorted
  std::map<Perm, int> index;
  std::vector<int> mul;                 // mul[a*n+b] = a∘b
  std::vector<int> inv;
  std::vector<int> order_of;
  std::vector<ElementClass> classes;
  std::vector<int> class_of;
  std::size_t exponent = 1;

  mutable std::once_flag lattice_once;
  mutable std::shared_ptr<const SubgroupLattice> lattice;
};

}  // namespace detail

/// A finite group given by permutation generators. Cheap to copy; all copies
/// share the immutable element tables and the lazily built subgroup lattice.
class PermGroup {
public:
  /// Hard cap on the number of elements enumerated at construction.
  static constexpr std::size_t kMaxElements = 5000;

  PermGroup(std::size_t degree, std::vector<Perm> generators, std::string name = {})
      : data_(std::make_shared<detail::GroupData>()) {
    if (degree == 0) throw InvalidInput("group degree must be positive");
    for (const auto& g : generators)
      if (!is_permutation(g, degree)) throw InvalidInput("generator is not a permutation of 0..degree-1");
    data_->degree = degree;
    data_->generators = std::move(generators);
    data_->name = std::move(name);
    enumerate();
    build_tables();
    build_classes();
  }

  static PermGroup cyclic(int n) {
    Perm g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = (i + 1) % n;
    return PermGroup(static_cast<std::size_t>(n), n > 1 ? std::vector<Perm>{g} : std::vector<Perm>{}, "Z" + std::to_string(n));
  }
  static PermGroup symmetric(int n) {
    std::vector<Perm> gens;
    if (n > 1) {
      Perm t = perm_identity(static_cast<std::size_t>(n));
      std::swap(t[0], t[1]);
      gens.push_back(t);
    }
    if (n > 2) {
      Perm c(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = (i + 1) % n;
      gens.push_back(c);
    }
    return PermGroup(static_cast<std::size_t>(std::max(n, 1)), gens, "S" + std::to_string(n));
  }
  static PermGroup alternating(int n) {
    std::vector<Perm> gens;
    for (int i = 2; i < n; ++i) {
      Perm c = perm_identity(static_cast<std::size_t>(n));
      c[0] = 1;
      c[1] = i;
      c[static_cast<std::size_t>(i)] = 0;
      gens.push_back(c);
    }
    return PermGroup(static_cast<std::size_t>(std::max(n, 1)), gens, "A" + std::to_string(n));
  }
  /// Symmetries of the n-gon, order 2n.
  static PermGroup dihedral(int n) {
    Perm r(static_cast<std::size_t>(n)), s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      r[static_cast<std::size_t>(i)] = (i + 1) % n;
      s[static_cast<std::size_t>(i)] = (n - i) % n;
    }
    return PermGroup(static_cast<std::size_t>(n), {r, s}, "D" + std::to_string(2 * n));
  }
  /// Quaternion group acting regularly on 8 points.
  static PermGroup quaternion() {
    Perm i = {1, 2, 3, 0, 5, 6, 7, 4};
    Perm j = {4, 7, 6, 5, 2, 1, 0, 3};
    return PermGroup(8, {i, j}, "Q8");
  }
  /// Z/2 x Z/2 acting on 4 points.
  static PermGroup klein_four() { return PermGroup(4, {{1, 0, 3, 2}, {2, 3, 0, 1}}, "V4"); }
  static PermGroup trivial() { return PermGroup(1, {}, "1"); }

  /// The subgroup H as a group in its own right (same degree).
  static PermGroup from_subgroup(const PermGroup& parent, const Subgroup& h, std::string name = {}) {
    std::vector<Perm> gens = parent.generating_set(h);
    return PermGroup(parent.degree(), gens, std::move(name));
  }

  std::size_t degree() const { return data_->degree; }
  std::size_t order() const { return data_->elements.size(); }
  const std::string& name() const { return data_->name; }
  const std::vector<Perm>& generators() const { return data_->generators; }
  const std::vector<Perm>& elements() const { return data_->elements; }
  const Perm& element(int id) const { return data_->elements[static_cast<std::size_t>(id)]; }
  std::size_t exponent() const { return data_->exponent; }

  int identity() const { return 0; }
  int index_of(const Perm& p) const {
    auto it = data_->index.find(p);
    return it == data_->index.end() ? -1 : it->second;
  }
  int mul(int a, int b) const { return data_->mul[static_cast<std::size_t>(a) * order() + static_cast<std::size_t>(b)]; }
  int inv(int a) const { return data_->inv[static_cast<std::size_t>(a)]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  int element_order(int a) const { return data_->order_of[static_cast<std::size_t>(a)]; }
  int power(int a, long long k) const {
    long long n = element_order(a);
    k %= n;
    if (k < 0) k += n;
    int r = identity();
    for (long long i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }
  /// Image of point x under element g.
  int act(int g, int x) const { return element(g)[static_cast<std::size_t>(x)]; }

  const std::vector<ElementClass>& conjugacy_classes() const { return data_->classes; }
  int class_of(int element) const { return data_->class_of[static_cast<std::size_t>(element)]; }

  Subgroup whole() const {
    std::vector<int> all(order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(all, order());
  }
  Subgroup trivial_subgroup() const { return Subgroup({0}, order()); }

  /// Subgroup generated by the given element ids.
  Subgroup generate(const std::vector<int>& gens) const {
    std::vector<bool> in(order(), false);
    std::vector<int> members{identity()};
    in[0] = true;
    for (std::size_t k = 0; k < members.size(); ++k)
      for (int g : gens) {
        int y = mul(members[k], g);
        if (!in[static_cast<std::size_t>(y)]) {
          in[static_cast<std::size_t>(y)] = true;
          members.push_back(y);
        }
      }
    return Subgroup(members, order());
  }

  Subgroup subgroup_from_perms(const std::vector<Perm>& gens) const {
    std::vector<int> ids;
    for (const auto& p : gens) {
      int id = index_of(p);
      if (id < 0) throw NotSubgroup("permutation is not an element of the group");
      ids.push_back(id);
    }
    return generate(ids);
  }

  /// Checks closure under products and inverses.
  bool is_subgroup(const std::vector<int>& members) const {
    Subgroup s(members, order());
    if (!s.contains(identity())) return false;
    for (int a : s.members()) {
      if (!s.contains(inv(a))) return false;
      for (int b : s.members())
        if (!s.contains(mul(a, b))) return false;
    }
    return true;
  }

  Subgroup conjugate(const Subgroup& h, int g) const {
    std::vector<int> m;
    m.reserve(h.order());
    for (int x : h.members()) m.push_back(conj(g, x));
    return Subgroup(m, order());
  }

  Subgroup normalizer(const Subgroup& h) const {
    std::vector<int> n;
    for (int g = 0; g < static_cast<int>(order()); ++g)
      if (conjugate(h, g) == h) n.push_back(g);
    return Subgroup(n, order());
  }

  /// Minimal element id of the left coset gH.
  int coset_rep(int g, const Subgroup& h) const {
    int best = -1;
    for (int x : h.members()) {
      int y = mul(g, x);
      if (best < 0 || y < best) best = y;
    }
    return best;
  }

  /// A small generating set of H (greedy, in element order).
  std::vector<Perm> generating_set(const Subgroup& h) const {
    std::vector<int> gens;
    Subgroup cur = trivial_subgroup();
    for (int x : h.members())
      if (!cur.contains(x)) {
        gens.push_back(x);
        cur = generate(gens);
      }
    std::vector<Perm> out;
    for (int g : gens) out.push_back(element(g));
    return out;
  }

  /// Subgroup classes; throws GroupTooLarge when |G| exceeds the bound.
  const SubgroupLattice& subgroup_lattice(std::size_t bound = kDefaultGroupBound) const;

  /// Index of the subgroup class containing H.
  int subgroup_class_of(const Subgroup& h) const;

  /// g with g^-1 K g = H, where K is the class representative of H.
  int conjugator_to_rep(const Subgroup& h) const;

private:
  void enumerate() {
    auto& d = *data_;
    Perm id = perm_identity(d.degree);
    std::set<Perm> seen{id};
    std::vector<Perm> frontier{id};
    while (!frontier.empty()) {
      std::vector<Perm> next;
      for (const auto& x : frontier)
        for (const auto& g : d.generators) {
          Perm y = perm_compose(g, x);
          if (seen.insert(y).second) {
            if (seen.size() > kMaxElements) throw GroupTooLarge("more than " + std::to_string(kMaxElements) + " elements");
            next.push_back(std::move(y));
          }
        }
      frontier = std::move(next);
    }
    d.elements.assign(seen.begin(), seen.end());
    for (std::size_t i = 0; i < d.elements.size(); ++i) d.index.emplace(d.elements[i], static_cast<int>(i));
  }

  void build_tables() {
    auto& d = *data_;
    const std::size_t n = d.elements.size();
    d.mul.resize(n * n);
    d.inv.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) d.mul[a * n + b] = d.index.at(perm_compose(d.elements[a], d.elements[b]));
      d.inv[a] = d.index.at(perm_inverse(d.elements[a]));
    }
    d.order_of.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      int k = 1;
      int x = static_cast<int>(a);
      while (x != 0) {
        x = d.mul[static_cast<std::size_t>(x) * n + a];
        ++k;
      }
      d.order_of[a] = a == 0 ? 1 : k;
    }
    std::size_t e = 1;
    for (int o : d.order_of) e = std::lcm(e, static_cast<std::size_t>(o));
    d.exponent = e;
  }

  void build_classes() {
    auto& d = *data_;
    const int n = static_cast<int>(d.elements.size());
    d.class_of.assign(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x) {
      if (d.class_of[static_cast<std::size_t>(x)] >= 0) continue;
      ElementClass c;
      c.representative = x;
      std::set<int> orbit;
      for (int g = 0; g < n; ++g) orbit.insert(conj(g, x));
      c.members.assign(orbit.begin(), orbit.end());
      for (int m : c.members) d.class_of[static_cast<std::size_t>(m)] = static_cast<int>(d.classes.size());
      d.classes.push_back(std::move(c));
    }
    // labels from cycle types, disambiguated by position
    std::map<std::string, int> counts;
    std::vector<std::string> base;
    for (const auto& c : d.classes) {
      auto ct = cycle_type(d.elements[static_cast<std::size_t>(c.representative)]);
      std::string s;
      if (ct.empty()) {
        s = "identity";
      } else {
        s = "(";
        for (std::size_t i = 0; i < ct.size(); ++i) s += (i ? "," : "") + std::to_string(ct[i]);
        s += ")";
      }
      base.push_back(s);
      ++counts[s];
    }
    std::map<std::string, int> seen;
    for (std::size_t i = 0; i < d.classes.size(); ++i) {
      const std::string& s = base[i];
      d.classes[i].label = counts[s] > 1 ? s + "#" + std::to_string(++seen[s]) : s;
    }
  }

  std::shared_ptr<detail::GroupData> data_;
};

namespace detail {

inline std::vector<int> canonical_conjugate_key(const PermGroup& g, const Subgroup& h) {
  std::vector<int> best;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    Subgroup c = g.conjugate(h, x);
    if (best.empty() || c.members() < best) best = c.members();
  }
  return best;
}

inline bool is_cyclic(const PermGroup& g, const Subgroup& h) {
  return std::any_of(h.members().begin(), h.members().end(),
                     [&](int x) { return static_cast<std::size_t>(g.element_order(x)) == h.order(); });
}

inline std::shared_ptr<const SubgroupLattice> build_lattice(const PermGroup& g) {
  const int n = static_cast<int>(g.order());
  std::map<std::vector<int>, int> seen;
  std::vector<Subgroup> reps;
  std::vector<Subgroup> queue;
  auto add = [&](const Subgroup& h) {
    auto key = canonical_conjugate_key(g, h);
    if (seen.count(key)) return;
    seen.emplace(key, static_cast<int>(reps.size()));
    Subgroup rep(key, g.order());
    reps.push_back(rep);
    queue.push_back(rep);
  };
  add(g.trivial_subgroup());
  // cyclic extension: every subgroup is <K, x> for a proper subgroup K, and
  // conjugating lets K range over class representatives only
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Subgroup h = queue[qi];
    std::vector<int> gens = h.members();
    for (int x = 0; x < n; ++x) {
      if (h.contains(x)) continue;
      std::vector<int> ext = gens;
      ext.push_back(x);
      add(g.generate(ext));
    }
  }
  auto lat = std::make_shared<SubgroupLattice>();
  std::vector<std::size_t> order(reps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return reps[a] < reps[b]; });
  for (std::size_t idx : order) {
    SubgroupClass c;
    c.representative = reps[idx];
    std::set<std::vector<int>> conj;
    for (int x = 0; x < n; ++x) conj.insert(g.conjugate(reps[idx], x).members());
    for (const auto& m : conj) c.conjugates.emplace_back(m, g.order());
    c.cyclic = is_cyclic(g, c.representative);
    lat->classes.push_back(std::move(c));
  }
  const std::size_t k = lat->classes.size();
  lat->leq.assign(k, std::vector<bool>(k, false));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      if (lat->classes[a].representative.order() > lat->classes[b].representative.order() ||
          lat->classes[b].representative.order() % lat->classes[a].representative.order() != 0)
        continue;
      for (const auto& c : lat->classes[a].conjugates)
        if (c.is_subset_of(lat->classes[b].representative)) {
          lat->leq[a][b] = true;
          break;
        }
    }
  // labels
  std::map<std::string, int> counts;
  std::vector<std::string> base;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& c = lat->classes[i];
    std::string s;
    if (c.representative.order() == 1)
      s = "1";
    else if (c.representative.order() == g.order())
      s = "G";
    else
      s = (c.cyclic ? "C" : "H") + std::to_string(c.representative.order());
    base.push_back(s);
    ++counts[s];
  }
  std::map<std::string, int> seen_labels;
  for (std::size_t i = 0; i < k; ++i) {
    const std::string& s = base[i];
    lat->classes[i].label = counts[s] > 1 ? s + "#" + std::to_string(++seen_labels[s]) : s;
  }
  return lat;
}

}  // namespace detail

inline const SubgroupLattice& PermGroup::subgroup_lattice(std::size_t bound) const {
  if (order() > bound)
    throw GroupTooLarge("|G| = " + std::to_string(order()) + " exceeds bound " + std::to_string(bound));
  std::call_once(data_->lattice_once, [&] { data_->lattice = detail::build_lattice(*this); });
  return *data_->lattice;
}

inline int PermGroup::subgroup_class_of(const Subgroup& h) const {
  const auto& lat = subgroup_lattice(std::max(order(), kDefaultGroupBound));
  for (std::size_t i = 0; i < lat.classes.size(); ++i) {
    const auto& c = lat.classes[i];
    if (c.representative.order() != h.order()) continue;
    for (const auto& s : c.conjugates)
      if (s == h) return static_cast<int>(i);
  }
  throw NotSubgroup("subgroup not found in lattice");
}

inline int PermGroup::conjugator_to_rep(const Subgroup& h) const {
  const auto& rep = subgroup_lattice(std::max(order(), kDefaultGroupBound))
                        .classes[static_cast<std::size_t>(subgroup_class_of(h))]
                        .representative;
  for (int g = 0; g < static_cast<int>(order()); ++g)
    if (conjugate(rep, inv(g)) == h) return g;  // g^-1 rep g = h
  throw StructureMismatch("no conjugator to class representative");
}

/// Conjugacy classes of elements, identity first, ordered by representative.
inline std::vector<ElementClass> conjugacy_classes(const PermGroup& g) { return g.conjugacy_classes(); }

/// Subgroup classes sorted by order then lexicographically.
inline std::vector<SubgroupClass> subgroup_classes(const PermGroup& g, std::size_t bound = kDefaultGroupBound) {
  return g.subgroup_lattice(bound).classes;
}

/// W_G(H) = N_G(H)/H as a permutation group on the cosets of H in N_G(H).
struct WeylGroup {
  PermGroup group;
  Subgroup normalizer;
  std::vector<int> coset_reps;  // minimal representative of each coset (point i)
  std::vector<int> section;     // W element id -> element of N_G(H)

  /// Element of W induced by n in N_G(H).
  int element_of(const PermGroup& g, const Subgroup& h, int n) const {
    Perm p(coset_reps.size());
    for (std::size_t i = 0; i < coset_reps.size(); ++i) {
      int y = g.coset_rep(g.mul(n, coset_reps[i]), h);
      p[i] = static_cast<int>(std::find(coset_reps.begin(), coset_reps.end(), y) - coset_reps.begin());
    }
    return group.index_of(p);
  }
};

inline WeylGroup weyl_group(const PermGroup& g, const Subgroup& h) {
  if (!g.is_subgroup(h.members())) throw NotSubgroup("H is not a subgroup of G");
  Subgroup n = g.normalizer(h);
  std::vector<int> reps;
  for (int x : n.members()) {
    int r = g.coset_rep(x, h);
    if (std::find(reps.begin(), reps.end(), r) == reps.end()) reps.push_back(r);
  }
  std::sort(reps.begin(), reps.end());
  auto perm_of = [&](int x) {
    Perm p(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
      int y = g.coset_rep(g.mul(x, reps[i]), h);
      p[i] = static_cast<int>(std::lower_bound(reps.begin(), reps.end(), y) - reps.begin());
    }
    return p;
  };
  std::vector<Perm> gens;
  for (const auto& p : g.generating_set(n)) {
    Perm q = perm_of(g.index_of(p));
    if (q != perm_identity(reps.size())) gens.push_back(q);
  }
  PermGroup w(reps.size(), gens, "W");
  WeylGroup out{w, n, reps, {}};
  // section: w maps the coset H (point 0) to the coset of its representative
  out.section.resize(w.order());
  for (int e = 0; e < static_cast<int>(w.order()); ++e) out.section[static_cast<std::size_t>(e)] = reps[static_cast<std::size_t>(w.act(e, 0))];
  return out;
}

/// Extend generator images to a homomorphism G → Sym(n); rejects non-homomorphisms.
inline std::vector<Perm> action_homomorphism(const PermGroup& G, int n, const std::vector<Perm>& images) {
  const auto& gens = G.generators();
  if (images.size() != gens.size()) throw InvalidInput("action needs one image per group generator");
  for (const auto& p : images)
    if (!is_permutation(p, static_cast<std::size_t>(n))) throw InvalidInput("action image is not a permutation of the carrier");
  std::vector<int> gid;
  for (const auto& s : gens) gid.push_back(G.index_of(s));
  std::vector<Perm> rho(G.order());
  std::vector<bool> seen(G.order(), false);
  rho[0] = perm_identity(static_cast<std::size_t>(n));
  seen[0] = true;
  std::vector<int> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    int x = queue[q];
    for (std::size_t i = 0; i < gid.size(); ++i) {
      int y = G.mul(x, gid[i]);
      Perm py = perm_compose(rho[static_cast<std::size_t>(x)], images[i]);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        rho[static_cast<std::size_t>(y)] = py;
        queue.push_back(y);
      } else if (rho[static_cast<std::size_t>(y)] != py) {
        throw InvalidInput("action images do not define a homomorphism");
      }
    }
  }
  return rho;
}

/// A set of subgroup classes, stored by class index.
struct Family {
  std::vector<bool> members;
  bool is_subgroup_closed = false;

  bool contains(std::size_t cls) const { return members[cls]; }
  std::size_t size() const { return static_cast<std::size_t>(std::count(members.begin(), members.end(), true)); }
  bool empty() const { return size() == 0; }
};

inline bool is_family(const PermGroup& g, const std::vector<bool>& classes) {
  const auto& lat = g.subgroup_lattice(std::max(g.order(), kDefaultGroupBound));
  for (std::size_t b = 0; b < lat.size(); ++b) {
    if (!classes[b]) continue;
    for (std::size_t a = 0; a < lat.size(); ++a)
      if (lat.leq[a][b] && !classes[a]) return false;
  }
  return true;
}

inline Family make_family(const PermGroup& g, std::vector<bool> classes) {
  Family f;
  f.is_subgroup_closed = is_family(g, classes);
  f.members = std::move(classes);
  return f;
}

inline Family all_subgroups(const PermGroup& g) {
  return make_family(g, std::vector<bool>(g.subgroup_lattice(std::max(g.order(), kDefaultGroupBound)).size(), true));
}
inline Family empty_family(const PermGroup& g) {
  return make_family(g, std::vector<bool>(g.subgroup_lattice(std::max(g.order(), kDefaultGroupBound)).size(), false));
}

/// F⊥ = All \ F (conjugation invariant, not subgroup closed in general).
inline Family complement(const PermGroup& g, const Family& f) {
  std::vector<bool> c(f.members.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = !f.members[i];
  return make_family(g, c);
}

/// F(γ): the subgroup classes whose members avoid the element class γ.
inline Family family_of_gamma(const PermGroup& g, std::size_t gamma) {
  const auto& lat = g.subgroup_lattice(std::max(g.order(), kDefaultGroupBound));
  std::vector<bool> m(lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const auto& rep = lat.classes[i].representative.members();
    m[i] = std::none_of(rep.begin(), rep.end(), [&](int x) { return static_cast<std::size_t>(g.class_of(x)) == gamma; });
  }
  return make_family(g, m);
}

}  // namespace eqloc
