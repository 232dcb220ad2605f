// Command-line front end: scenario batches and single computations.

#include <CLI11.hpp>

#include <iostream>

#include "eqloc/scenario.hpp"

using namespace eqloc;
using namespace eqloc::io;

namespace {

struct Common {
  std::string out = "text";
  std::string ring;
  int truncate = 0;
  int jobs = 1;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

RunOptions options_of(const Common& c) {
  RunOptions o;
  if (c.truncate > 0) o.truncate = c.truncate;
  if (c.ring == "zz") o.ring = Ring::ZZ;
  if (c.ring == "qq") o.ring = Ring::QQ;
  return o;
}

// numeric strings become indices, anything else stays a label
json label_or_index(const std::string& s) {
  if (!s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) return json(std::stoll(s));
  return json(s);
}

int emit(const std::vector<Report>& reports, const Common& c) {
  if (c.out == "json") {
    if (reports.size() == 1)
      std::cout << reports[0].body.dump(2) << "\n";
    else {
      json all = json::array();
      for (const auto& r : reports) all.push_back(r.body);
      std::cout << json{{"reports", all}, {"status", status_name(worst(reports))}}.dump(2) << "\n";
    }
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i) std::cout << "\n";
      std::cout << render_text(reports[i]);
    }
  }
  for (const auto& r : reports)
    if (r.status == Status::Error) std::cerr << "eqloc: " << r.body["error"].get<std::string>() << "\n";
  return static_cast<int>(worst(reports));
}

int run_one(const json& scenario, const Common& c) {
  std::optional<std::uint64_t> seed;
  if (c.seed_set) seed = c.seed;
  return emit({run_scenario(scenario, std::filesystem::current_path(), options_of(c), seed)}, c);
}

void add_common(CLI::App* app, Common& c, bool batch = false) {
  app->add_option("--out", c.out, "Output format")->check(CLI::IsMember({"json", "text"}));
  app->add_option("--ring", c.ring, "Coefficient ring for homology and constant coefficients")->check(CLI::IsMember({"zz", "qq"}));
  app->add_option("--truncate", c.truncate, "Bar-construction truncation N")->check(CLI::Range(2, 64));
  if (batch) app->add_option("--jobs", c.jobs, "Scenarios run in parallel")->check(CLI::Range(1, 256));
  app->add_option("--seed", c.seed, "Seed for random stress spaces")->each([&](const std::string&) { c.seed_set = true; });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eqloc: equivariant localization engine"};
  app.require_subcommand(1);
  Common c;

  std::vector<std::string> files;
  auto* verify = app.add_subcommand("verify", "Run scenario files");
  verify->add_option("scenarios", files, "Scenario JSON files")->required()->check(CLI::ExistingFile);
  add_common(verify, c, true);

  std::string group, complex, coefficients, gamma, subgroup, space;
  int random_count = 0;

  auto* hom = app.add_subcommand("homology", "Simplicial or Bredon homology of a G-complex");
  hom->add_option("--group", group, "Group file or built-in name (Z2, S3, ...)");
  hom->add_option("--complex", complex, "Complex file")->required();
  hom->add_option("--coefficients", coefficients, "constant:Z | constant:Q | repring:R | zero-on-family:<family> | file");
  add_common(hom, c);

  auto* chartab = app.add_subcommand("chartab", "Character table");
  chartab->add_option("--group", group, "Group file or built-in name")->required();
  add_common(chartab, c);

  auto* segal = app.add_subcommand("segal-element", "Segal element for (H, gamma)");
  segal->add_option("--group", group, "Group file or built-in name")->required();
  segal->add_option("--gamma", gamma, "Conjugacy class index or label")->required();
  segal->add_option("--subgroup", subgroup, "Subgroup class label or index")->required();
  add_common(segal, c);

  auto* orbitcat = app.add_subcommand("orbitcat", "Dump the orbit category");
  orbitcat->add_option("--group", group, "Group file or built-in name")->required();
  add_common(orbitcat, c);

  auto* coarse = app.add_subcommand("coarse-check", "Coarse lemma battery on a G-space");
  coarse->add_option("--group", group, "Group file or built-in name")->required();
  coarse->add_option("--space", space, "Space file");
  coarse->add_option("--random", random_count, "Number of random spaces")->check(CLI::Range(1, 10000));
  add_common(coarse, c);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      std::vector<Report> reports;
      std::optional<std::uint64_t> seed;
      if (c.seed_set) seed = c.seed;
      for (const auto& f : files) {
        std::filesystem::path p(f);
        auto batch = scenarios_of(read_json(p));
        auto part = run_batch(batch, p.parent_path(), options_of(c), c.jobs, seed);
        reports.insert(reports.end(), part.begin(), part.end());
      }
      return emit(reports, c);
    }
    if (*orbitcat) {
      GroupInput gi = load_group(group, std::filesystem::current_path());
      OrbitCategory oc = build_orbit_category(gi.group);
      json j = to_json(oc);
      if (c.out == "json") {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "orbit category of " << gi.group.name() << ": " << oc.num_objects() << " objects, " << oc.cat.num_morphisms() << " morphisms\n";
        for (std::size_t o = 0; o < oc.num_objects(); ++o) {
          std::cout << "  G/" << j["objects"][o]["subgroup"].get<std::string>() << "  hom sizes:";
          for (const auto& n : j["hom_sizes"][o]) std::cout << " " << n.get<std::size_t>();
          std::cout << "\n";
        }
        std::cout << "composition hash: " << j["composition_hash"].get<std::string>() << "\n";
      }
      return 0;
    }
    json s;
    if (!group.empty()) s["group"] = group;
    if (*hom) {
      s["task"] = "homology";
      s["complex"] = complex;
      if (!coefficients.empty()) {
        if (std::filesystem::exists(coefficients)) s["coefficients"] = read_json(coefficients);
        else s["coefficients"] = coefficients;
      }
    } else if (*chartab) {
      s["task"] = "chartab";
    } else if (*segal) {
      s["task"] = "segal-element";
      s["gamma"] = label_or_index(gamma);
      s["subgroup"] = label_or_index(subgroup);
    } else if (*coarse) {
      s["task"] = "coarse-axioms";
      if (!space.empty()) s["space"] = space;
      if (random_count > 0) s["random"] = {{"count", random_count}};
    }
    return run_one(s, c);
  } catch (const Error& e) {
    std::cerr << "eqloc: " << e.what() << "\n";
    return static_cast<int>(Status::Error);
  } catch (const json::exception& e) {
    std::cerr << "eqloc: ParseError: " << e.what() << "\n";
    return static_cast<int>(Status::Error);
  }
}
