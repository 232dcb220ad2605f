#pragma once

// JSON input formats (groups, complexes, coarse spaces, coefficient systems,
// family and class specifications) and JSON serialization of results.

#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqloc/bredon.hpp"
#include "eqloc/coarse.hpp"
#include "eqloc/repring.hpp"

namespace eqloc::io {

using json = nlohmann::json;

/// Reads and parses a JSON file; errors carry the path and parser position.
inline json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

namespace detail {

[[noreturn]] inline void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

inline const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

inline std::vector<int> int_list(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], where + "/" + std::to_string(i)));
  return out;
}

inline std::vector<std::vector<int>> int_lists(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of arrays");
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(int_list(j[i], where + "/" + std::to_string(i)));
  return out;
}

inline Rational as_rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return Rational(j.get<std::string>());
    } catch (const std::exception&) {
      fail(where, "bad rational \"" + j.get<std::string>() + "\"");
    }
  }
  fail(where, "expected an integer or a rational string");
}

}  // namespace detail

/// Built-in groups by name: Zn, Sn, An, Dn (order 2n), Q8, V4, 1.
inline std::optional<PermGroup> builtin_group(const std::string& name) {
  if (name == "Q8") return PermGroup::quaternion();
  if (name == "V4" || name == "Z2xZ2") return PermGroup::klein_four();
  if (name == "1" || name == "trivial") return PermGroup::trivial();
  if (name.size() >= 2 && std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    const int n = std::stoi(name.substr(1));
    if (n < 1 || n > 12) return std::nullopt;
    switch (name[0]) {
      case 'Z':
      case 'C':
        return PermGroup::cyclic(n);
      case 'S':
        return PermGroup::symmetric(n);
      case 'A':
        if (n >= 3) return PermGroup::alternating(n);
        break;
      case 'D':
        if (n >= 3) return PermGroup::dihedral(n);
        break;
      default:
        break;
    }
  }
  return std::nullopt;
}

struct GroupInput {
  PermGroup group;
  std::optional<CharacterTable> table;  // from an optional "character_table" block
};

/// {"degree": n, "generators": [[images...]...], "name": s, "character_table": {...}}.
/// The table block is {"conductor": m, "classes": [[perm]...], "irreducibles": [[[coeffs]...]...]}
/// with each value given by its coefficients on 1, ζ_m, ζ_m², ...
inline GroupInput parse_group(const json& j, const std::string& where) {
  const int degree = detail::as_int(detail::field(j, "degree", where), where + "/degree");
  auto gens = detail::int_lists(detail::field(j, "generators", where), where + "/generators");
  if (degree < 1) detail::fail(where + "/degree", "degree must be positive");
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!is_permutation(gens[i], static_cast<std::size_t>(degree)))
      detail::fail(where + "/generators/" + std::to_string(i), "not a permutation of 0.." + std::to_string(degree - 1));
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : std::string("G");
  GroupInput out{PermGroup(static_cast<std::size_t>(degree), gens, name), std::nullopt};
  if (j.contains("character_table")) {
    const std::string w = where + "/character_table";
    const json& t = j["character_table"];
    const int conductor = detail::as_int(detail::field(t, "conductor", w), w + "/conductor");
    auto cls = detail::int_lists(detail::field(t, "classes", w), w + "/classes");
    std::vector<int> reps;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (!is_permutation(cls[i], static_cast<std::size_t>(degree))) detail::fail(w + "/classes/" + std::to_string(i), "not a permutation");
      int id = out.group.index_of(cls[i]);
      if (id < 0) detail::fail(w + "/classes/" + std::to_string(i), "not an element of the group");
      reps.push_back(id);
    }
    const json& irr = detail::field(t, "irreducibles", w);
    if (!irr.is_array()) detail::fail(w + "/irreducibles", "expected an array");
    std::vector<std::vector<std::vector<Rational>>> rows;
    for (std::size_t a = 0; a < irr.size(); ++a) {
      std::vector<std::vector<Rational>> row;
      for (std::size_t b = 0; b < irr[a].size(); ++b) {
        const std::string wb = w + "/irreducibles/" + std::to_string(a) + "/" + std::to_string(b);
        std::vector<Rational> coeffs;
        if (irr[a][b].is_array())
          for (const auto& c : irr[a][b]) coeffs.push_back(detail::as_rational(c, wb));
        else
          coeffs.push_back(detail::as_rational(irr[a][b], wb));
        row.push_back(coeffs);
      }
      rows.push_back(row);
    }
    out.table = supplied_character_table(out.group, conductor, reps, rows);
  }
  return out;
}

/// A group reference: a built-in name or a path (relative to base).
inline GroupInput load_group(const std::string& ref, const std::filesystem::path& base = {}) {
  std::filesystem::path p = base / ref;
  if (std::filesystem::exists(p)) return parse_group(read_json(p), p.string());
  if (auto g = builtin_group(ref)) return GroupInput{*g, std::nullopt};
  throw ParseError(ref + ": neither a group file nor a built-in group name");
}

/// {"vertices": n, "simplices": [[v...]...], "action": [[images]...]} (one image per generator).
inline GSimplicialComplex parse_complex(const json& j, const PermGroup& G, const std::string& where) {
  const int n = detail::as_int(detail::field(j, "vertices", where), where + "/vertices");
  auto simplices = detail::int_lists(detail::field(j, "simplices", where), where + "/simplices");
  std::vector<Perm> images;
  if (j.contains("action")) images = detail::int_lists(j["action"], where + "/action");
  else images.assign(G.generators().size(), perm_identity(static_cast<std::size_t>(n)));
  if (images.size() != G.generators().size())
    detail::fail(where + "/action", "expected one vertex permutation per group generator (" + std::to_string(G.generators().size()) + ")");
  try {
    return make_gcomplex(G, n, simplices, images);
  } catch (const InvalidInput& e) {
    detail::fail(where, e.what());
  }
}

/// {"carrier": n, "coarse_generators": [[[a,b]...]...], "bornology_generators": [[x...]...], "action": optional}.
inline GBornCoarseSpace parse_space(const json& j, const PermGroup& G, const std::string& where) {
  const int n = detail::as_int(detail::field(j, "carrier", where), where + "/carrier");
  std::vector<Entourage> cg;
  if (j.contains("coarse_generators")) {
    const json& a = j["coarse_generators"];
    if (!a.is_array()) detail::fail(where + "/coarse_generators", "expected an array");
    for (std::size_t i = 0; i < a.size(); ++i) {
      Entourage U;
      for (const auto& pr : detail::int_lists(a[i], where + "/coarse_generators/" + std::to_string(i))) {
        if (pr.size() != 2) detail::fail(where + "/coarse_generators/" + std::to_string(i), "pairs must have two entries");
        U.emplace_back(pr[0], pr[1]);
      }
      cg.push_back(U);
    }
  }
  std::vector<PointSet> bg;
  if (j.contains("bornology_generators")) bg = detail::int_lists(j["bornology_generators"], where + "/bornology_generators");
  try {
    BornCoarseSpace X(n, cg, bg);
    if (!j.contains("action")) return trivial_gspace(G, X);
    return make_gspace(G, X, detail::int_lists(j["action"], where + "/action"));
  } catch (const InvalidInput& e) {
    detail::fail(where, e.what());
  }
}

/// A conjugacy class: an index, a class label such as "(2)", or "identity"/"transpositions".
inline std::size_t parse_class(const PermGroup& G, const json& j, const std::string& where) {
  const auto& cls = G.conjugacy_classes();
  if (j.is_number_integer()) {
    const long long k = j.get<long long>();
    if (k < 0 || k >= static_cast<long long>(cls.size())) detail::fail(where, "class index out of range");
    return static_cast<std::size_t>(k);
  }
  if (!j.is_string()) detail::fail(where, "expected a class index or label");
  std::string s = j.get<std::string>();
  if (s == "transpositions") s = "(2)";
  if (s == "e") s = "identity";
  for (std::size_t k = 0; k < cls.size(); ++k)
    if (cls[k].label == s) return k;
  detail::fail(where, "unknown class \"" + s + "\"");
}

/// A subgroup class by lattice label ("1", "C3", "G", ...) or index.
inline std::size_t parse_subgroup_class(const PermGroup& G, const json& j, const std::string& where) {
  const auto& lat = G.subgroup_lattice();
  if (j.is_number_integer()) {
    const long long k = j.get<long long>();
    if (k < 0 || k >= static_cast<long long>(lat.size())) detail::fail(where, "subgroup class index out of range");
    return static_cast<std::size_t>(k);
  }
  if (!j.is_string()) detail::fail(where, "expected a subgroup label or index");
  const std::string s = j.get<std::string>();
  for (std::size_t k = 0; k < lat.size(); ++k)
    if (lat.classes[k].label == s) return k;
  detail::fail(where, "unknown subgroup \"" + s + "\"");
}

/// "all", "empty", "trivial", "gamma:<class>" or a list of subgroup labels.
/// A list is taken as given; verifiers reject it if it is not subgroup closed.
inline Family parse_family(const PermGroup& G, const json& j, const std::string& where) {
  const std::size_t n = G.subgroup_lattice().size();
  if (j.is_array()) {
    std::vector<bool> m(n, false);
    for (std::size_t i = 0; i < j.size(); ++i) m[parse_subgroup_class(G, j[i], where + "/" + std::to_string(i))] = true;
    return make_family(G, m);
  }
  if (!j.is_string()) detail::fail(where, "expected a family specification");
  const std::string s = j.get<std::string>();
  if (s == "all") return all_subgroups(G);
  if (s == "empty") return empty_family(G);
  if (s == "trivial") {
    std::vector<bool> m(n, false);
    m[static_cast<std::size_t>(G.subgroup_class_of(G.trivial_subgroup()))] = true;
    return make_family(G, m);
  }
  if (s.rfind("gamma:", 0) == 0) {
    const std::string c = s.substr(6);
    json cj = !c.empty() && std::all_of(c.begin(), c.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ? json(std::stoll(c)) : json(c);
    return family_of_gamma(G, parse_class(G, cj, where));
  }
  detail::fail(where, "unknown family \"" + s + "\"");
}

/// Coefficient system from a tag ("constant:Z", "constant:Q", "repring:R",
/// "zero-on-family:<family>") or an explicit object
/// {"objects": [{"ranks": [...], "differentials": [matrix...]}...],
///  "morphisms": {"<id>": [matrix per degree]...}} over the orbit category.
inline ChainFunctor parse_coefficients(const json& j, const OrbitPtr& orb, const RepRing* R, const std::string& where, Ring ring = Ring::ZZ) {
  const PermGroup& G = orb->group;
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "constant:Z") return constant_coefficients(orb, Ring::ZZ);
    if (s == "constant:Q") return constant_coefficients(orb, Ring::QQ);
    if (s == "repring:R") {
      if (!R) detail::fail(where, "repring coefficients need the representation ring");
      return repring_coefficients(orb, *R);
    }
    if (s.rfind("zero-on-family:", 0) == 0) {
      const std::string f = s.substr(15);
      json fj = f;
      if (!f.empty() && f.front() == '[') {
        try {
          fj = json::parse(f);
        } catch (const json::parse_error&) {
          detail::fail(where, "bad family list");
        }
      }
      return zero_on_family(orb, parse_family(G, fj, where), ring);
    }
    detail::fail(where, "unknown coefficient tag \"" + s + "\"");
  }
  const OrbitCategory& oc = *orb;
  const json& objs = detail::field(j, "objects", where);
  if (!objs.is_array() || objs.size() != oc.num_objects())
    detail::fail(where + "/objects", "expected one entry per orbit object (" + std::to_string(oc.num_objects()) + ")");
  auto matrix = [&](const json& m, std::size_t rows, std::size_t cols, const std::string& w) {
    IntMatrix M(rows, cols);
    if (!m.is_array() || m.size() != rows) detail::fail(w, "expected " + std::to_string(rows) + " rows");
    for (std::size_t r = 0; r < rows; ++r) {
      if (!m[r].is_array() || m[r].size() != cols) detail::fail(w + "/" + std::to_string(r), "expected " + std::to_string(cols) + " columns");
      for (std::size_t c = 0; c < cols; ++c) M(r, c) = Int(detail::as_int(m[r][c], w));
    }
    return SparseMatrix::from_dense(M);
  };
  ChainFunctor E;
  E.source = std::make_shared<const FinCategory>(oc.cat);
  E.ring = j.value("ring", std::string("ZZ")) == "QQ" ? Ring::QQ : ring;
  for (std::size_t o = 0; o < objs.size(); ++o) {
    const std::string w = where + "/objects/" + std::to_string(o);
    auto ranks = detail::int_list(detail::field(objs[o], "ranks", w), w + "/ranks");
    ChainComplex C(E.ring, std::vector<std::size_t>(ranks.begin(), ranks.end()));
    if (objs[o].contains("differentials")) {
      const json& ds = objs[o]["differentials"];
      for (std::size_t k = 0; k < ds.size() && k + 1 < ranks.size(); ++k)
        C.d[k + 1] = matrix(ds[k], C.rank(static_cast<int>(k)), C.rank(static_cast<int>(k + 1)), w + "/differentials/" + std::to_string(k));
    }
    if (!C.d_squared_zero()) detail::fail(w, "differentials do not square to zero");
    E.value.push_back(std::move(C));
  }
  const json& ms = detail::field(j, "morphisms", where);
  for (int m = 0; m < static_cast<int>(oc.cat.num_morphisms()); ++m) {
    const ChainComplex& A = E.at(oc.cat.src(m));
    const ChainComplex& B = E.at(oc.cat.dst(m));
    const std::string key = std::to_string(m);
    if (!ms.contains(key)) {
      if (!oc.cat.is_identity(m)) detail::fail(where + "/morphisms", "missing orbit morphism " + key);
      E.map.push_back(identity_map(A));
      continue;
    }
    ChainMap f;
    for (int k = 0; k <= A.top(); ++k) f.f.push_back(matrix(ms[key].at(static_cast<std::size_t>(k)), B.rank(k), A.rank(k), where + "/morphisms/" + key));
    E.map.push_back(std::move(f));
  }
  if (!E.check()) detail::fail(where, "coefficient system is not a functor on the orbit category");
  return E;
}

// ---------------------------------------------------------------------------
// Serialization.

inline std::string int_str(const Int& v) { return v.str(); }

inline json to_json(const HomologyGroup& h) {
  json t = json::array();
  for (const auto& d : h.torsion) t.push_back(int_str(d));
  return json{{"rank", h.free}, {"torsion", t}};
}

/// Per-degree homology, degrees 0..top.
inline json to_json(const Homology& h, int top, Ring ring) {
  json out = json::array();
  for (int k = 0; k <= top; ++k) {
    HomologyGroup g = homology_at(h, k);
    json e = to_json(g);
    e["degree"] = k;
    e["group"] = g.pretty(ring);
    out.push_back(e);
  }
  return out;
}

inline json to_json(const CharacterTable& T) {
  json classes = json::array();
  const PermGroup& G = T.group;
  for (std::size_t k = 0; k < T.num_classes(); ++k)
    classes.push_back({{"label", G.conjugacy_classes()[k].label}, {"size", T.class_sizes[k]}, {"representative", G.element(T.class_reps[k])}});
  json rows = json::array();
  for (std::size_t i = 0; i < T.size(); ++i) {
    json vals = json::array();
    for (const auto& v : T.chi[i]) vals.push_back(v.str());
    rows.push_back({{"name", T.names[i]}, {"degree", int_str(T.degrees[i])}, {"values", vals}});
  }
  return json{{"group", G.name()}, {"order", G.order()}, {"conductor", T.field->conductor()}, {"classes", classes}, {"irreducibles", rows}};
}

inline json to_json(const RElement& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(int_str(x));
  return out;
}

/// Orbit category dump: objects, hom-set sizes and a hash of the composition table.
inline json to_json(const OrbitCategory& oc) {
  const auto& lat = oc.group.subgroup_lattice();
  json objs = json::array();
  for (std::size_t o = 0; o < oc.num_objects(); ++o)
    objs.push_back({{"label", oc.cat.label(static_cast<int>(o))}, {"subgroup", lat.classes[static_cast<std::size_t>(oc.subgroup_class[o])].label},
                    {"subgroup_order", oc.subgroup[o].order()}});
  json homs = json::array();
  for (int a = 0; a < static_cast<int>(oc.num_objects()); ++a) {
    json row = json::array();
    for (int b = 0; b < static_cast<int>(oc.num_objects()); ++b) row.push_back(oc.cat.hom(a, b).size());
    homs.push_back(row);
  }
  // FNV-1a over (f, g, g∘f) for all composable pairs
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  for (int f = 0; f < static_cast<int>(oc.cat.num_morphisms()); ++f)
    for (int g : oc.cat.morphisms_out_of(oc.cat.dst(f))) {
      mix(static_cast<std::uint64_t>(f));
      mix(static_cast<std::uint64_t>(g));
      mix(static_cast<std::uint64_t>(oc.cat.compose(g, f)));
    }
  std::ostringstream hex;
  hex << std::hex << h;
  return json{{"group", oc.group.name()}, {"objects", objs}, {"hom_sizes", homs}, {"morphisms", oc.cat.num_morphisms()}, {"composition_hash", hex.str()}};
}

}  // namespace eqloc::io
