#include <gtest/gtest.h>

#include "eqloc/scenario.hpp"

using namespace eqloc;
using namespace eqloc::io;

namespace {

const std::filesystem::path kData = EQLOC_DATA_DIR;
const std::filesystem::path kScenarios = kData / "scenarios";

std::string parse_error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

Report run(const json& s) { return run_scenario(s, kScenarios); }

}  // namespace

TEST(Io, ErrorsCarryTheirLocation) {
  const PermGroup Z2 = PermGroup::cyclic(2);
  auto msg = parse_error_of([&] { parse_complex(json{{"vertices", 2}, {"simplices", {{0, 5}}}}, Z2, "cx"); });
  EXPECT_NE(msg.find("cx"), std::string::npos) << msg;
  msg = parse_error_of([&] { parse_family(Z2, json("sometimes"), "scenario/family"); });
  EXPECT_NE(msg.find("scenario/family"), std::string::npos) << msg;
  msg = parse_error_of([&] { parse_class(Z2, json(7), "gamma"); });
  EXPECT_NE(msg.find("gamma"), std::string::npos) << msg;
  msg = parse_error_of([&] { read_json(kData / "no_such_file.json"); });
  EXPECT_NE(msg.find("no_such_file.json"), std::string::npos) << msg;
  EXPECT_THROW(parse_group(json{{"degree", 3}, {"generators", {{0, 0, 1}}}}, "group"), ParseError);
}

TEST(Io, BuiltinGroupsMatchFiles) {
  EXPECT_EQ(load_group("S3").group.order(), 6u);
  EXPECT_EQ(load_group("Q8").group.order(), 8u);
  EXPECT_EQ(load_group("s3.json", kData).group.order(), 6u);
  EXPECT_EQ(load_group("z4.json", kData).group.order(), 4u);
  EXPECT_THROW(load_group("NotAGroup"), Error);
}

TEST(Io, ClassAliases) {
  const PermGroup S3 = PermGroup::symmetric(3);
  const std::size_t t = parse_class(S3, json("transpositions"), "g");
  EXPECT_EQ(S3.element_order(S3.conjugacy_classes()[t].members.front()), 2);
  EXPECT_EQ(S3.conjugacy_classes()[t].members.size(), 3u);
  const std::size_t e = parse_class(S3, json("e"), "g");
  EXPECT_EQ(S3.conjugacy_classes()[e].members.size(), 1u);
  EXPECT_EQ(parse_class(S3, json(t), "g"), t);
}

TEST(Io, FamilySpecs) {
  const PermGroup S3 = PermGroup::symmetric(3);
  const auto& lat = S3.subgroup_lattice();
  auto count = [](const Family& F) { return std::count(F.members.begin(), F.members.end(), true); };
  EXPECT_EQ(count(parse_family(S3, json("all"), "f")), static_cast<long>(lat.size()));
  EXPECT_EQ(count(parse_family(S3, json("empty"), "f")), 0);
  EXPECT_EQ(count(parse_family(S3, json("trivial"), "f")), 1);
  // subgroups missing the transpositions: 1 and C3
  Family F = parse_family(S3, json("gamma:transpositions"), "f");
  std::set<std::string> labels;
  for (std::size_t k = 0; k < lat.size(); ++k)
    if (F.contains(k)) labels.insert(lat.classes[k].label);
  EXPECT_EQ(labels, (std::set<std::string>{"1", "C3"}));
  EXPECT_TRUE(F.is_subgroup_closed);
  Family L = parse_family(S3, json{"C2"}, "f");
  EXPECT_FALSE(L.is_subgroup_closed);
}

TEST(Io, ExplicitCoefficientsMatchTags) {
  const PermGroup Z2 = PermGroup::cyclic(2);
  auto orb = make_orbit_category(Z2);
  const OrbitCategory& oc = *orb;
  // constant Z spelled out morphism by morphism
  json objects = json::array(), morphisms = json::object(), sign = json::object();
  for (std::size_t o = 0; o < oc.num_objects(); ++o) objects.push_back({{"ranks", {1}}});
  for (int m = 0; m < static_cast<int>(oc.cat.num_morphisms()); ++m) {
    morphisms[std::to_string(m)] = json::array({json::array({json::array({1})})});
    // automorphisms of G/1 act by -1: not a functor, since the projection absorbs them
    const bool flips = oc.cat.src(m) == oc.cat.dst(m) && !oc.cat.is_identity(m);
    sign[std::to_string(m)] = json::array({json::array({json::array({flips ? -1 : 1})})});
  }
  ChainFunctor E = parse_coefficients(json{{"objects", objects}, {"morphisms", morphisms}}, orb, nullptr, "coefficients");
  auto X = reflection_circle();
  auto a = homology(bredon_cellular(X, E, oc).complex);
  auto b = homology(bredon_cellular(X, constant_coefficients(orb, Ring::ZZ), oc).complex);
  EXPECT_TRUE(homology_agrees(a, b, 0, 1));
  auto msg = parse_error_of([&] { parse_coefficients(json{{"objects", objects}, {"morphisms", sign}}, orb, nullptr, "coefficients"); });
  EXPECT_NE(msg.find("not a functor"), std::string::npos) << msg;
  EXPECT_THROW(parse_coefficients(json("constant:W"), orb, nullptr, "c"), ParseError);
  EXPECT_THROW(parse_coefficients(json("repring:R"), orb, nullptr, "c"), ParseError);
}

TEST(Scenario, CharacterTableOfS3) {
  auto r = run({{"task", "chartab"}, {"group", "S3"}});
  EXPECT_EQ(r.status, Status::Pass);
  EXPECT_EQ(r.body["result"]["degrees"], json({1, 1, 2}));
}

TEST(Scenario, SegalElementOfS3) {
  auto r = run({{"task", "segal-element"}, {"group", "S3"}, {"gamma", "transpositions"}, {"subgroup", "C3"}});
  EXPECT_EQ(r.status, Status::Pass);
  EXPECT_EQ(r.body["result"]["witness"], "[triv]-[sign]");
  auto none = run({{"task", "segal-element"}, {"group", "S3"}, {"gamma", "transpositions"}, {"subgroup", "C2"}});
  EXPECT_EQ(none.status, Status::Pass);
  EXPECT_EQ(none.body["result"]["outcome"], "NoSuchElement");
}

TEST(Scenario, GammaLocalizationOfReflectionCircle) {
  auto r = run({{"task", "gamma-localization"}, {"group", "../z2.json"}, {"complex", "../reflection_circle.json"}, {"gamma", 1}});
  EXPECT_EQ(r.status, Status::Pass);
  EXPECT_EQ(r.body["result"]["verdict"], true);
  EXPECT_EQ(r.body["result"]["unlocalized_iso"], false);
}

TEST(Scenario, FailedExpectationsAndErrors) {
  auto r = run({{"task", "chartab"}, {"group", "S3"}, {"expect", {{"degrees", {1, 2}}}}});
  EXPECT_EQ(r.status, Status::Fail);
  auto bad = run({{"task", "levitate"}, {"group", "S3"}});
  EXPECT_EQ(bad.status, Status::Error);
  EXPECT_NE(bad.body["error"].get<std::string>().find("scenario/task"), std::string::npos);
  auto not_vanishing = run({{"task", "theorem1"}, {"group", "../z2.json"}, {"complex", "../reflection_circle.json"},
                            {"family", "trivial"}, {"coefficients", "constant:Z"}});
  EXPECT_EQ(not_vanishing.status, Status::Error);
}

TEST(Scenario, ShippedScenariosPass) {
  for (const auto& entry : std::filesystem::directory_iterator(kScenarios)) {
    auto items = scenarios_of(read_json(entry.path()));
    for (const auto& r : run_batch(items, kScenarios, {}, 2, std::nullopt))
      EXPECT_EQ(r.status, Status::Pass) << entry.path().filename() << ": " << r.body.dump();
  }
}

TEST(Scenario, ReportsIndependentOfJobCount) {
  auto items = scenarios_of(read_json(kScenarios / "theorem1_battery.json"));
  auto one = run_batch(items, kScenarios, {}, 1, 99);
  auto four = run_batch(items, kScenarios, {}, 4, 99);
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t i = 0; i < one.size(); ++i) EXPECT_EQ(one[i].body.dump(), four[i].body.dump());
}

TEST(Scenario, TextRenderingShowsGroups) {
  auto r = run({{"task", "assembly"}, {"group", "../z2.json"}, {"family", "trivial"}, {"coefficients", "constant:Z"}, {"truncate", 6}});
  ASSERT_EQ(r.status, Status::Pass) << r.body.dump();
  const std::string text = render_text(r);
  EXPECT_NE(text.find("  H1  Z/2\n"), std::string::npos) << text;
  EXPECT_NE(text.find("  H2  0\n"), std::string::npos) << text;
  EXPECT_NE(text.find("status: pass"), std::string::npos);
}
