#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "fcip/app.hpp"
#include "fcip/error.hpp"
#include "fcip/io.hpp"

using namespace fcip;
using io::Json;

namespace {

const Dataset& training() {
  static const Dataset ds = load_dataset(data_directory() / "training.csv", DatasetRole::training);
  return ds;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "fcip_test_io" / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("dump is indented and newline terminated, key order kept") {
  Json j;
  j["z"] = 1;
  j["a"] = 2;
  CHECK(io::dump(j) == "{\n  \"z\": 1,\n  \"a\": 2\n}\n");
  CHECK_THROWS_AS(io::parse_json("{nope", "x"), ParseError);
  CHECK_THROWS_WITH_AS(io::require_number(Json{{"k", "s"}}, "k"), "k: must be a number", InputError);
  CHECK_THROWS_WITH_AS(io::require(Json::object(), "k"), "k: required", InputError);
}

TEST_CASE("every model kind survives a JSON round trip") {
  app::FitOptions opt;
  opt.epochs = 40;
  opt.population = 16;
  opt.generations = 5;
  const Drivers probe{35, 700, 9, 2014};
  for (auto kind : {app::ModelKind::regression, app::ModelKind::mlp, app::ModelKind::cbr, app::ModelKind::fuzzy}) {
    CAPTURE(app::kind_name(kind));
    const auto m = app::fit_model(kind, training(), nullptr, opt, "m");
    const auto text = io::dump(app::to_json(m));
    const auto back = app::model_from_json(io::parse_json(text), "m");
    CHECK(back.kind() == kind);
    CHECK(back.predict(probe) == m.predict(probe));
    CHECK(back.last_year() == m.last_year());
    CHECK(io::dump(app::to_json(back)) == text);
  }
}

TEST_CASE("rule bases are written with label names") {
  fuzzy::RuleBase base;
  base.inputs = {fuzzy::uniform_partition("area_ha", 0, 10, 3, "v.1_a.")};
  base.output = fuzzy::uniform_partition("cost_le", 0, 100, 3, "c.");
  base.rules = {{{2}, 1, 0.9}};
  const auto j = io::to_json(base);
  CHECK(j["rules"][0]["if"][0] == "v.1_a.3");
  CHECK(j["rules"][0]["then"] == "c.2");
  CHECK(io::rule_listing(base) == "1. IF area_ha is v.1_a.3 THEN cost_le is c.2\n");
  auto bad = j;
  bad["rules"][0]["then"] = "c.9";
  CHECK_THROWS_AS(io::rule_base_from_json(bad), InputError);
}

TEST_CASE("survey directories") {
  const auto dir = scratch("surveys");
  std::ofstream(dir / "b.json") << R"({"expert":"B","likert":{"P1":4,"P2":2}})";
  std::ofstream(dir / "a.json") << R"({"expert":"A","likert":{"P1":5,"P2":3}})";
  const auto surveys = io::load_surveys(dir);
  REQUIRE(surveys.size() == 2);
  CHECK(surveys[0].expert == "A");
  const auto resp = io::likert_responses(surveys);
  CHECK(resp[0].parameter_id == "P1");
  CHECK(resp[0].scores == std::vector<int>{5, 4});
  std::ofstream(dir / "c.json") << R"({"expert":"C","likert":{"P1":6}})";
  CHECK_THROWS_AS(io::load_surveys(dir), InputError);
  CHECK_THROWS_AS(io::load_surveys(dir / "missing"), InputError);
}

TEST_CASE("bundled surveys") {
  const auto delphi = io::load_surveys(data_directory() / "surveys" / "delphi");
  CHECK(delphi.size() == 15);
  const auto fahp = io::pairwise_matrices(io::load_surveys(data_directory() / "surveys" / "fahp"));
  CHECK(fahp.size() == 4);
  CHECK(fahp[0].criteria() == std::vector<std::string>{"C", "M", "E"});
}

TEST_CASE("text tables right-align numbers") {
  io::TextTable t({"id", "value"});
  t.row({"a", "1.5"}).row({"bb", "12.25"});
  CHECK(t.render() == "id  value\n---------\na     1.5\nbb  12.25\n");
  CHECK(io::fixed(2.0 / 3, 3) == "0.667");
}

TEST_CASE("run manifests carry the output digest") {
  CHECK(app::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  const app::RunManifest m{"fit regression", {"t.csv"}, 3, {{"transform", "sqrt"}}, app::toolkit_version(), "d"};
  const auto j = m.to_json();
  CHECK(j["command"] == "fit regression");
  CHECK(j["seed"] == 3);
  CHECK(j["output_digest"] == "d");
}
