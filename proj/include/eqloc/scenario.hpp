#pragma once

// Scenario runner: one JSON scenario in, one deterministic JSON report out.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <atomic>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "eqloc/io.hpp"

namespace eqloc::io {

struct RunOptions {
  std::optional<int> truncate;  // overrides the default N
  std::optional<Ring> ring;     // overrides the ring of plain homology and constant tags
};

enum class Status { Pass = 0, Fail = 1, TheoremViolation = 2, Error = 3 };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::TheoremViolation:
      return "theorem-violation";
    default:
      return "error";
  }
}

struct Report {
  json body;
  Status status = Status::Pass;
  double seconds = 0;  // kept out of the JSON so reports are reproducible
};

namespace detail {

struct Checks {
  json list = json::array();
  Status status = Status::Pass;

  void add(const std::string& name, bool passed, bool theorem = false) {
    list.push_back({{"name", name}, {"passed", passed}});
    if (!passed) status = std::max(status, theorem ? Status::TheoremViolation : Status::Fail);
  }
};

inline std::string file_ref(const json& s, const char* key) {
  const json& v = field(s, key, std::string("scenario"));
  if (!v.is_string()) fail(std::string("scenario/") + key, "expected a file name");
  return v.get<std::string>();
}

inline GSimplicialComplex load_complex(const json& s, const PermGroup& G, const std::filesystem::path& base) {
  const json& c = field(s, "complex", "scenario");
  if (c.is_object()) return parse_complex(c, G, "scenario/complex");
  std::filesystem::path p = base / file_ref(s, "complex");
  return parse_complex(read_json(p), G, p.string());
}

inline GroupInput scenario_group(const json& s, const std::filesystem::path& base) {
  if (!s.contains("group")) return GroupInput{PermGroup::trivial(), std::nullopt};
  const json& g = s["group"];
  if (g.is_object()) return parse_group(g, "scenario/group");
  return load_group(file_ref(s, "group"), base);
}

inline std::unique_ptr<RepRing> make_repring(const GroupInput& gi) {
  return gi.table ? std::make_unique<RepRing>(gi.group, *gi.table) : std::make_unique<RepRing>(gi.group);
}

inline json class_json(const PermGroup& G, std::size_t c) { return {{"index", c}, {"label", G.conjugacy_classes()[c].label}}; }

inline json run_chartab(const json& s, const std::filesystem::path& base, Checks& checks) {
  GroupInput gi = scenario_group(s, base);
  CharacterTable T = gi.table ? *gi.table : character_table(gi.group);
  checks.add("row-orthogonality", T.row_orthogonal());
  checks.add("column-orthogonality", T.column_orthogonal());
  json r = to_json(T);
  json deg = json::array();
  for (const auto& d : T.degrees) deg.push_back(d.convert_to<long long>());
  r["degrees"] = deg;
  return r;
}

inline json run_segal(const json& s, const std::filesystem::path& base, Checks& checks) {
  GroupInput gi = scenario_group(s, base);
  const PermGroup& G = gi.group;
  auto R = make_repring(gi);
  const std::size_t gamma = parse_class(G, field(s, "gamma", "scenario"), "scenario/gamma");
  const std::size_t hc = parse_subgroup_class(G, field(s, "subgroup", "scenario"), "scenario/subgroup");
  const Subgroup& H = G.subgroup_lattice().classes[hc].representative;
  const bool in_family = family_of_gamma(G, gamma).contains(hc);
  SegalResult res = R->segal_element(H, gamma);
  json r{{"gamma", class_json(G, gamma)}, {"subgroup", G.subgroup_lattice().classes[hc].label}, {"in_family", in_family}, {"found", res.found}};
  if (res.found) {
    r["witness"] = R->format(res.eta);
    r["eta"] = to_json(res.eta);
    r["value"] = res.value;
  } else {
    r["witness"] = nullptr;
    r["outcome"] = "NoSuchElement";
  }
  checks.add("existence-matches-family", res.found == in_family, res.theorem_violation);
  return r;
}

inline int truncation(const RunOptions& opt, const json& s, int fallback) {
  if (opt.truncate) return *opt.truncate;
  if (s.contains("truncate")) return as_int(s["truncate"], "scenario/truncate");
  return fallback;
}

inline json run_theorem1(const json& s, const std::filesystem::path& base, const RunOptions& opt, Checks& checks) {
  GroupInput gi = scenario_group(s, base);
  const PermGroup& G = gi.group;
  GSimplicialComplex X0 = load_complex(s, G, base);
  GSimplicialComplex X = ensure_regular(X0);
  Family F = parse_family(G, field(s, "family", "scenario"), "scenario/family");
  auto orb = make_orbit_category(G);
  std::unique_ptr<RepRing> R;
  const json& cj = field(s, "coefficients", "scenario");
  if (cj.is_string() && cj.get<std::string>() == "repring:R") R = make_repring(gi);
  ChainFunctor E = parse_coefficients(cj, orb, R.get(), "scenario/coefficients", opt.ring.value_or(Ring::ZZ));
  const int N = truncation(opt, s, X.dim() + 2);
  OrbitPresheaf Y = tilde_Y(X, orb, E.ring);
  TheoremOneReport rep = verify_theorem_one(E, F, Y, N);
  checks.add("counit-natural", rep.counit_natural, true);
  checks.add("quasi-isomorphism", rep.quasi_iso, true);
  return json{{"subdivided", !is_regular(X0)},
              {"dimension", X.dim()},
              {"truncate", N},
              {"degrees", {rep.lo, rep.hi}},
              {"source", to_json(rep.source, rep.hi, E.ring)},
              {"target", to_json(rep.target, rep.hi, E.ring)},
              {"verdict", rep.verdict()}};
}

inline json run_gamma(const json& s, const std::filesystem::path& base, const RunOptions& opt, Checks& checks) {
  GroupInput gi = scenario_group(s, base);
  const PermGroup& G = gi.group;
  GSimplicialComplex X = load_complex(s, G, base);
  const std::size_t gamma = parse_class(G, field(s, "gamma", "scenario"), "scenario/gamma");
  const std::string mode = s.value("mode", std::string("rational-R(G)"));
  auto orb = make_orbit_category(G);
  GammaLocalizationReport rep;
  if (mode == "rational-R(G)") {
    auto R = make_repring(gi);
    rep = verify_gamma_localization(X, gamma, LocalizationMode::RationalRG, R.get(), nullptr, orb);
  } else if (mode == "vanishing-coefficients") {
    ChainFunctor E = parse_coefficients(field(s, "coefficients", "scenario"), orb, nullptr, "scenario/coefficients", opt.ring.value_or(Ring::ZZ));
    rep = verify_gamma_localization(X, gamma, LocalizationMode::VanishingCoefficients, nullptr, &E, orb);
  } else {
    fail("scenario/mode", "unknown mode \"" + mode + "\"");
  }
  json r{{"gamma", class_json(G, gamma)}, {"mode", mode}, {"subdivided", rep.subdivided}, {"fixed_empty", rep.fixed_empty},
         {"degrees", {0, rep.top}}, {"unlocalized_iso", rep.unlocalized_iso}, {"localized_iso", rep.localized_iso}};
  if (rep.mode == LocalizationMode::RationalRG) {
    r["cellular_fixed"] = to_json(rep.cellular_fixed, rep.top, Ring::ZZ);
    r["cellular_full"] = to_json(rep.cellular_full, rep.top, Ring::ZZ);
    r["localized_fixed"] = rep.localized_fixed;
    r["localized_full"] = rep.localized_full;
    r["coefficients_vanish"] = rep.coefficients_vanish;
    checks.add("coefficients-vanish-on-F(gamma)", rep.coefficients_vanish);
  } else {
    r["coend_fixed"] = to_json(rep.coend_fixed, rep.top, Ring::ZZ);
    r["coend_full"] = to_json(rep.coend_full, rep.top, Ring::ZZ);
  }
  checks.add("localized-isomorphism", rep.localized_iso);
  r["verdict"] = rep.verdict();
  return r;
}

inline json run_assembly(const json& s, const std::filesystem::path& base, const RunOptions& opt, Checks& checks) {
  GroupInput gi = scenario_group(s, base);
  const PermGroup& G = gi.group;
  Family F = parse_family(G, field(s, "family", "scenario"), "scenario/family");
  auto orb = make_orbit_category(G);
  std::unique_ptr<RepRing> R;
  const json cj = s.value("coefficients", json("constant:Z"));
  if (cj.is_string() && cj.get<std::string>() == "repring:R") R = make_repring(gi);
  ChainFunctor E = parse_coefficients(cj, orb, R.get(), "scenario/coefficients", opt.ring.value_or(Ring::ZZ));
  const int N = truncation(opt, s, 5);
  AssemblyReport rep = assembly_map(E, *orb, F, N);
  checks.add("truncation-stable", rep.truncation_stable);
  return json{{"truncate", N},
              {"degrees", {0, N - 2}},
              {"source", to_json(rep.source_homology, N - 2, E.ring)},
              {"target", to_json(rep.target_homology, N - 2, E.ring)},
              {"iso_in_degree", rep.iso_in_degree},
              {"quasi_iso", rep.quasi_iso}};
}

inline json entry_json(const CoarseBatteryEntry& e) {
  return json{{"description", e.description}, {"g_coarse", e.g_coarse},           {"evaluation", e.evaluation_ok},
              {"pullback", e.pullback_ok},    {"functorial", e.functorial_ok},    {"fixed_points", e.fixed_point_ok},
              {"failure", e.failure}};
}

inline json run_coarse(const json& s, const std::filesystem::path& base, Checks& checks, std::optional<std::uint64_t> seed) {
  GroupInput gi = scenario_group(s, base);
  const PermGroup& G = gi.group;
  std::vector<GBornCoarseSpace> spaces;
  if (s.contains("space")) {
    const json& v = s["space"];
    if (v.is_object()) spaces.push_back(parse_space(v, G, "scenario/space"));
    else {
      std::filesystem::path p = base / file_ref(s, "space");
      spaces.push_back(parse_space(read_json(p), G, p.string()));
    }
  }
  if (s.contains("random")) {
    const json& r = s["random"];
    const int count = as_int(field(r, "count", "scenario/random"), "scenario/random/count");
    std::mt19937_64 rng(seed.value_or(r.value("seed", 1ULL)));
    const int max_points = r.value("max_points", 16);
    for (int i = 0; i < count; ++i) spaces.push_back(random_gspace(G, rng, max_points));
  }
  if (spaces.empty()) fail("scenario", "coarse-axioms needs \"space\" or \"random\"");
  json entries = json::array();
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    CoarseBatteryEntry e = coarse_battery_entry(spaces[i]);
    checks.add("space-" + std::to_string(i), e.ok());
    entries.push_back(entry_json(e));
  }
  return json{{"spaces", entries}};
}

inline json run_homology(const json& s, const std::filesystem::path& base, const RunOptions& opt, Checks& checks) {
  GroupInput gi = scenario_group(s, base);
  const PermGroup& G = gi.group;
  GSimplicialComplex X0 = load_complex(s, G, base);
  const Ring ring = opt.ring.value_or(s.value("ring", std::string("zz")) == "qq" ? Ring::QQ : Ring::ZZ);
  if (!s.contains("coefficients")) {
    const int top = std::max(X0.dim(), 0);
    return json{{"kind", "simplicial"}, {"homology", to_json(homology(X0.cx.chains(ring)), top, ring)}};
  }
  GSimplicialComplex X = ensure_regular(X0);
  auto orb = make_orbit_category(G);
  std::unique_ptr<RepRing> R;
  const json& cj = s["coefficients"];
  if (cj.is_string() && cj.get<std::string>() == "repring:R") R = make_repring(gi);
  ChainFunctor M = parse_coefficients(cj, orb, R.get(), "scenario/coefficients", ring);
  const int top = std::max(X.dim(), 0);
  Homology cell = homology(bredon_cellular(X, M, *orb).complex);
  json r{{"kind", "bredon"}, {"subdivided", !is_regular(X0)}, {"cellular", to_json(cell, top, M.ring)}};
  if (s.value("coend", true)) {
    const int N = truncation(opt, s, top + 2);
    Homology co = homology(coend_EG(M, tilde_Y(X, orb, M.ring), N));
    r["coend"] = to_json(co, top, M.ring);
    checks.add("coend-matches-cellular", homology_agrees(co, cell, 0, top));
  }
  return r;
}

}  // namespace detail

/// Runs one scenario. Relative file references resolve against `base`.
inline Report run_scenario(const json& s, const std::filesystem::path& base, const RunOptions& opt = {},
                           std::optional<std::uint64_t> seed = std::nullopt) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.body["scenario"] = s;
  detail::Checks checks;
  try {
    if (!s.is_object()) throw ParseError("scenario: expected an object");
    const std::string task = s.value("task", std::string());
    json result;
    if (task == "chartab") result = detail::run_chartab(s, base, checks);
    else if (task == "segal-element") result = detail::run_segal(s, base, checks);
    else if (task == "theorem1") result = detail::run_theorem1(s, base, opt, checks);
    else if (task == "gamma-localization") result = detail::run_gamma(s, base, opt, checks);
    else if (task == "assembly") result = detail::run_assembly(s, base, opt, checks);
    else if (task == "coarse-axioms") result = detail::run_coarse(s, base, checks, seed);
    else if (task == "homology") result = detail::run_homology(s, base, opt, checks);
    else throw ParseError("scenario/task: unknown task \"" + task + "\"");
    // optional expectations: each key must equal the same key of the result
    if (s.contains("expect")) {
      const json& ex = s["expect"];
      if (!ex.is_object()) throw ParseError("scenario/expect: expected an object");
      for (auto it = ex.begin(); it != ex.end(); ++it) checks.add("expect:" + it.key(), result.contains(it.key()) && result[it.key()] == it.value());
    }
    rep.body["result"] = result;
    rep.body["checks"] = checks.list;
    rep.status = checks.status;
  } catch (const Error& e) {
    rep.body["error"] = e.what();
    rep.status = Status::Error;
  } catch (const json::exception& e) {
    rep.body["error"] = std::string("ParseError: ") + e.what();
    rep.status = Status::Error;
  }
  rep.body["status"] = status_name(rep.status);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

/// A scenario file holds one scenario, an array, or {"scenarios": [...]}.
inline std::vector<json> scenarios_of(const json& j) {
  if (j.is_array()) return std::vector<json>(j.begin(), j.end());
  if (j.is_object() && j.contains("scenarios") && j["scenarios"].is_array()) return std::vector<json>(j["scenarios"].begin(), j["scenarios"].end());
  return {j};
}

/// Runs independent scenarios on up to `jobs` threads; results keep input order.
inline std::vector<Report> run_batch(const std::vector<json>& items, const std::filesystem::path& base, const RunOptions& opt, int jobs,
                                     std::optional<std::uint64_t> seed = std::nullopt) {
  std::vector<Report> out(items.size());
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) out[i] = run_scenario(items[i], base, opt, seed);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

inline Status worst(const std::vector<Report>& reports) {
  Status s = Status::Pass;
  for (const auto& r : reports) s = std::max(s, r.status);
  return s;
}

/// Human-readable rendering; homology as invariant factors d1|d2|... per degree.
inline std::string render_text(const Report& r) {
  std::ostringstream os;
  const json& b = r.body;
  const json& sc = b["scenario"];
  os << "task: " << (sc.is_object() ? sc.value("task", std::string("?")) : std::string("?")) << "\n";
  if (b.contains("error")) {
    os << "error: " << b["error"].get<std::string>() << "\n";
  } else {
    const json& res = b["result"];
    for (auto it = res.begin(); it != res.end(); ++it) {
      const json& v = it.value();
      if (v.is_array() && !v.empty() && v[0].is_object() && v[0].contains("rank")) {
        os << it.key() << ":\n";
        for (const auto& d : v) os << "  H" << d["degree"].get<int>() << "  " << d["group"].get<std::string>() << "\n";
      } else if (it.key() == "irreducibles") {
        os << "irreducibles:\n";
        for (const auto& row : v) {
          os << "  " << row["name"].get<std::string>() << ":";
          for (const auto& x : row["values"]) os << " " << x.get<std::string>();
          os << "\n";
        }
      } else if (it.key() == "spaces") {
        for (const auto& e : v) os << "  " << e["description"].get<std::string>() << (e["failure"].get<std::string>().empty() ? "  ok" : "  " + e["failure"].get<std::string>()) << "\n";
      } else {
        os << it.key() << ": " << v.dump() << "\n";
      }
    }
    for (const auto& c : b["checks"]) os << (c["passed"].get<bool>() ? "  PASS " : "  FAIL ") << c["name"].get<std::string>() << "\n";
  }
  os << "status: " << b["status"].get<std::string>() << "\n";
  std::ostringstream t;
  t.precision(3);
  t << std::fixed << r.seconds;
  os << "time: " << t.str() << " s\n";
  return os.str();
}

}  // namespace eqloc::io
