#include "doctest.h"
#include "fcip/app.hpp"
#include "fcip/error.hpp"

using namespace fcip;
using app::Json;

namespace {

const app::Service& service() {
  static const app::Service s = [] {
    const auto train = load_dataset(data_directory() / "training.csv", DatasetRole::training);
    app::ModelRegistry reg;
    reg.add(app::fit_model(app::ModelKind::regression, train, nullptr, {}, "regression"));
    reg.add(app::fit_model(app::ModelKind::cbr, train, nullptr, {}, "cbr"));
    return app::Service(std::move(reg));
  }();
  return s;
}

Json body(double year = 2014) {
  return Json{{"model", "regression"}, {"area_ha", 19.6}, {"length_m", 453}, {"valves", 6}, {"year", year}};
}

std::string message_of(const Json& b) {
  try {
    app::parse_predict_request(b);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("request validation names the field") {
  auto b = body();
  b["area_ha"] = 0;
  CHECK(message_of(b) == "area_ha: must be > 0");
  b = body();
  b["valves"] = 0.5;
  CHECK(message_of(b) == "valves: must be >= 1");
  b = body(2014.5);
  CHECK(message_of(b) == "year: must be a whole year in 1990..2100");
  b = body();
  b.erase("length_m");
  CHECK(message_of(b) == "length_m: required");
  b = body();
  b["toggles"] = Json::array({"area", "colour"});
  CHECK(message_of(b) == "toggles[1]: unknown driver 'colour'");
  b = body();
  b["scenarios"] = 0;
  CHECK(message_of(b).rfind("scenarios:", 0) == 0);
  b = body();
  b["seed"] = -1;
  CHECK(message_of(b).rfind("seed:", 0) == 0);
  b = body();
  b["inflation_rate"] = -100;
  CHECK(message_of(b) == "inflation_rate: must be > -100");
  CHECK(message_of(body()).empty());
}

TEST_CASE("prediction inside the training years is the raw model output") {
  const auto& reg = service().registry();
  const auto out = service().predict(body(2014));
  CHECK(out["model"] == "regression");
  CHECK(out["cost_le"].get<double>() == reg.get("regression").predict({19.6, 453, 6, 2014}));
  CHECK(out["cost_per_hectare"].get<double>() == doctest::Approx(out["cost_le"].get<double>() / 19.6));
  CHECK_FALSE(out.contains("inflation"));
  CHECK_FALSE(out.contains("scenarios"));
}

TEST_CASE("later years are priced at the last year and inflated") {
  auto b = body(2018);
  b["inflation_rate"] = 10;
  const auto out = service().predict(b);
  const double at_last = service().registry().get("regression").predict({19.6, 453, 6, 2015});
  CHECK(out["cost_le"].get<double>() == doctest::Approx(at_last * 1.331));
  CHECK(out["inflation"]["base_year"] == 2015);
  CHECK(out["inflation"]["years"].get<double>() == 3);
}

TEST_CASE("scenarios are seeded") {
  auto b = body();
  b["toggles"] = Json::array({"length"});
  const auto a = service().predict(b);
  CHECK(a["scenarios"]["count"] == 30);
  CHECK(a == service().predict(b));
  b["seed"] = 5;
  CHECK(a["scenarios"]["values"] != service().predict(b)["scenarios"]["values"]);
}

TEST_CASE("model selection") {
  auto b = body();
  b.erase("model");
  CHECK_THROWS_WITH_AS(service().predict(b), doctest::Contains("model"), InputError);
  b["model"] = "nope";
  CHECK_THROWS_AS(service().predict(b), InputError);
  app::ModelRegistry reg;
  const auto train = load_dataset(data_directory() / "training.csv", DatasetRole::training);
  reg.add(app::fit_model(app::ModelKind::cbr, train, nullptr, {}, "x"));
  CHECK_THROWS_AS(reg.add(app::fit_model(app::ModelKind::cbr, train, nullptr, {}, "x")), InputError);
  CHECK(&reg.only() == &reg.get("x"));
}

TEST_CASE("case retrieval returns ranked cases") {
  const auto out = service().cbr_retrieve(
      Json{{"area_ha", 19.6}, {"length_m", 453}, {"valves", 6}, {"year", 2014}, {"k", 3}});
  CHECK(out["model"] == "cbr");
  REQUIRE(out["cases"].size() == 3);
  CHECK(out["cases"][0]["rank"] == 1);
  CHECK(out["cases"][0]["cs"].get<double>() >= out["cases"][1]["cs"].get<double>());
  CHECK(out["cost_le"] == out["cases"][0]["cost_le"]);
  CHECK_THROWS_AS(service().cbr_retrieve(
                      Json{{"model", "regression"}, {"area_ha", 19.6}, {"length_m", 453}, {"valves", 6}, {"year", 2014}}),
                  InputError);
}

TEST_CASE("routing and status codes") {
  const auto& s = service();
  const auto ok = app::handle(s, "POST", "/predict", io::dump(body()));
  CHECK(ok.status == 200);
  CHECK(ok.body == io::dump(s.predict(body())));
  CHECK(app::handle(s, "GET", "/models", "").status == 200);
  CHECK(app::handle(s, "GET", "/predict", "").status == 405);
  CHECK(app::handle(s, "GET", "/nowhere", "").status == 404);
  CHECK(app::handle(s, "POST", "/predict", "{bad").status == 400);
  auto tiny = body(1990);
  tiny["area_ha"] = 0.01;
  tiny["length_m"] = 1;
  tiny["valves"] = 1;
  const auto domain = app::handle(s, "POST", "/predict", io::dump(tiny));
  CHECK(domain.status == 422);
  CHECK(io::parse_json(domain.body).contains("error"));
  const auto models = io::parse_json(app::handle(s, "GET", "/models", "").body);
  REQUIRE(models.size() == 2);
  CHECK(models[0]["name"] == "regression");
  CHECK(models[1]["transformation"] == "none");
}
