#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "llab/errors.hpp"
#include "llab/io.hpp"
#include "llab/verify.hpp"

using namespace llab;

namespace {

std::string temp_file(const std::string& name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << body;
  return p.string();
}

}  // namespace

TEST(Io, ParseGroup) {
  auto G = parse_group(Json::parse(R"({"degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]})"));
  EXPECT_EQ(G.order(), 6u);
  EXPECT_THROW(parse_group(Json::parse(R"({"degree": 3})")), InputError);
  EXPECT_THROW(parse_group(Json::parse(R"({"degree": 0, "generators": []})")), InputError);
  EXPECT_THROW(parse_group(Json::parse(R"({"degree": 3, "generators": [[0, 0, 1]]})")), InputError);
  EXPECT_THROW(parse_group(Json::parse(R"({"degree": 3, "generators": [[0, 1]]})")), InputError);
  EXPECT_THROW(parse_group(Json::parse(R"({"degree": 3, "generators": [[0, -1, 2]]})")), InputError);
  EXPECT_THROW(parse_group(Json::parse(R"([1, 2])")), InputError);
}

TEST(Io, ShippedExamples) {
  const std::map<std::string, std::size_t> order = {{"s3", 6},  {"s4", 24}, {"s5", 120}, {"a4", 12},
                                                    {"a5", 60}, {"a6", 360}, {"c6", 6},  {"d8", 8}};
  for (const auto& name : example_names()) {
    ASSERT_TRUE(order.count(name)) << name;
    EXPECT_EQ(load_group(name)->order(), order.at(name));
  }
  EXPECT_EQ(load_group("S4.json")->order(), 24u);
}

TEST(Io, LoadFromPath) {
  auto good = temp_file("llab_c3.json", R"({"degree": 3, "generators": [[1, 2, 0]]})");
  EXPECT_EQ(load_group(good)->order(), 3u);
  auto bad = temp_file("llab_bad.json", R"({"degree": 3, "generators": [[1, 2, 0]])");
  EXPECT_THROW(load_group(bad), InputError);
  EXPECT_THROW(load_group("no_such_group"), InputError);
}

TEST(Io, ParseDelta) {
  auto gs = group_setting(load_group("s4"), 2);
  ClassSets cs = class_sets(*gs.F);
  EXPECT_EQ(parse_delta("c", *gs.F), mask_list_sorted(cs.c));
  EXPECT_EQ(parse_delta("s", *gs.F), mask_list_sorted(cs.s));
  EXPECT_EQ(parse_delta("top", *gs.F), std::vector<SubMask>{gs.S->all()});
  EXPECT_EQ(parse_delta("c+q", *gs.F), mask_list_sorted(cs.q));
  EXPECT_EQ(parse_delta("all", *gs.F).size(), gs.F->subgroups().size());
  for (const auto& name : example_names()) {
    auto g = group_setting(load_group(name), 2);
    auto cr = class_sets(*g.F).cr;
    if (is_f_closed(*g.F, cr))
      EXPECT_EQ(parse_delta("cr", *g.F), mask_list_sorted(cr));
    else
      EXPECT_THROW(parse_delta("cr", *g.F), InputError);
  }
  EXPECT_THROW(parse_delta("bogus", *gs.F), InputError);
  EXPECT_THROW(parse_delta("", *gs.F), InputError);
}

TEST(Io, ClassificationJson) {
  auto gs = group_setting(load_group("s4"), 2);
  Json j = classification_json(*gs.F);
  EXPECT_EQ(j["p"], 2);
  EXPECT_EQ(j["sylow_order"], 8);
  EXPECT_EQ(j["subgroups"].size(), 10u);
  EXPECT_EQ(j["cr"].size(), 2u);
  EXPECT_EQ(j["o_p"]["order"], 4);
  for (const auto& row : j["subgroups"]) {
    if (row["centric"].get<bool>()) EXPECT_TRUE(row["quasicentric"].get<bool>());
    if (row["quasicentric"].get<bool>()) EXPECT_TRUE(row["subcentric"].get<bool>());
  }
  // deterministic output
  EXPECT_EQ(j.dump(), classification_json(*gs.F).dump());
  EXPECT_NE(classification_text(*gs.F).find("cr: 2"), std::string::npos);
}

TEST(Io, VerifySuiteSmall) {
  VerifyOptions opt;
  opt.axiom_len = 3;
  SuiteReport r = run_verify_suite(load_group("s3"), 3, opt);
  EXPECT_TRUE(r.passed()) << suite_text(r);
  EXPECT_EQ(r.results.size(), verify_tags().size());
  Json j = suite_json(r);
  EXPECT_TRUE(j.is_object() || j.is_array());
  opt.only = {"2.9"};
  r = run_verify_suite(load_group("c6"), 2, opt);
  ASSERT_EQ(r.results.size(), 1u);
  EXPECT_TRUE(r.passed());
}
