#include <cmath>

#include "doctest.h"
#include "fcip/error.hpp"
#include "fcip/models.hpp"

using namespace fcip;
using namespace fcip::models;

namespace {

const Dataset& training() {
  static const Dataset ds = load_dataset(data_directory() / "training.csv", DatasetRole::training);
  return ds;
}

}  // namespace

TEST_CASE("response transformations invert") {
  for (auto t : kAllTransforms) {
    CHECK(parse_transform(transform_name(t)) == t);
    CHECK(inverse_transform(t, forward_transform(t, 250000.0)) == doctest::Approx(250000.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(parse_transform("cube"), InputError);
}

TEST_CASE("mape denominators") {
  const double pred[] = {110, 90};
  const double act[] = {100, 100};
  CHECK(mape(pred, act, MapeBase::actual) == doctest::Approx(10));
  CHECK(mape(pred, act) == doctest::Approx(50 * (10.0 / 110 + 10.0 / 90)));
  CHECK(adjust_inflation(100, 10, 2) == doctest::Approx(121));
  CHECK(adjust_inflation(100, 10, 0) == 100);
}

TEST_CASE("regression fit on the training data") {
  const auto m = fit_parametric(training(), Transform::sqrt);
  CHECK(m.metrics.r2 == doctest::Approx(0.8632).epsilon(5e-4));
  CHECK(m.cases == 111);
  CHECK(m.last_year == 2015);
  const auto p = predict_all(m, training());
  CHECK(p.size() == 111);
  CHECK(p[0] == predict_cost(m, training()[0].drivers()));
  const auto d = diagnostics(m, training());
  CHECK(d.cooks.size() == 111);
  for (std::size_t i = 0; i < kDriverCount; ++i) CHECK(d.tolerance[i] == doctest::Approx(1 / d.vif[i]));
  const double resid[] = {1, -1, 1, -1};
  CHECK(durbin_watson(resid) == doctest::Approx(3.0));
}

TEST_CASE("hand-built network evaluates the reference value") {
  MlpModel m;
  m.hidden = 1;
  m.w1 = Eigen::MatrixXd::Zero(1, 4);
  m.w1(0, 0) = 0.8;
  m.b1 = Eigen::VectorXd::Constant(1, -0.1);
  m.w2 = Eigen::VectorXd::Constant(1, 1.5);
  m.b2 = 0.2;
  CHECK(m.forward({0.5, 0.9, 0.1, 0.3}) == doctest::Approx(0.6369689186773864).epsilon(1e-14));
  CHECK(m.parameter_count() == 7);
  auto theta = m.parameters();
  theta(0) = 0.4;
  m.set_parameters(theta);
  CHECK(m.parameters() == theta);
}

TEST_CASE("network gradient matches finite differences and training is seeded") {
  MlpConfig cfg;
  cfg.max_epochs = 50;
  const auto init = mlp_init(training(), cfg);
  const auto sample = mlp_sample(init, training());
  CHECK(gradient_check(init, sample) < 1e-6);
  const auto a = mlp_train(training(), cfg);
  const auto b = mlp_train(training(), cfg);
  CHECK(a.parameters() == b.parameters());
  cfg.seed = 1;
  CHECK(mlp_train(training(), cfg).parameters() != a.parameters());
  CHECK(mlp_predict(a, training()[0].drivers()) > 0);
  const Scaler s{10, 20};
  CHECK(s.unscale(s.scale(13)) == doctest::Approx(13));
}

TEST_CASE("case similarity") {
  CHECK(attribute_similarity(20, 25) == doctest::Approx(0.8));
  CHECK(attribute_similarity(25, 20) == doctest::Approx(0.8));
  const double as[] = {1, 0.5, 0.5, 1};
  const double w[] = {0.2, 0.2, 0.2, 0.4};
  CHECK(case_similarity(as, w) == doctest::Approx(0.8));

  const auto base = parse_dataset(
      "id,area_ha,length_m,valves,year,cost_le\nA,20,400,5,2012,100\nB,40,800,10,2014,200\nC,21,420,5,2012,110\n",
      DatasetRole::training);
  const CbrModel model(base);
  const auto r = cbr_predict(model, {20.5, 410, 5, 2012}, 3);
  REQUIRE(r.ranked.size() == 3);
  CHECK(r.ranked[2].id == "B");
  CHECK(r.cost_le == r.ranked[0].cost_le);
  const auto sims = similarities(model, {20, 400, 5, 2012});
  CHECK(sims[0] == doctest::Approx(1.0));
  CHECK_THROWS_AS(validate(CbrConfig{{0.5, -0.1, 0.3, 0.3}}), InputError);
  CHECK_THROWS_AS(validate(CbrConfig{{0, 0, 0, 0}}), InputError);
  const auto grown = model.retain({"D", 30, 600, 7, 2013, 150});
  CHECK(grown.base().size() == 4);
}

TEST_CASE("sensitivity scenarios stay in band and repeat by seed") {
  const CostPredictor f = [](const Drivers& d) { return 1000 * d.area_ha + d.length_m; };
  const auto bounds = DriverBounds::of(training());
  const Drivers base{40, 900, 10, 2013};
  ScenarioOptions opt;
  opt.toggles = {Driver::length, Driver::area};
  const auto a = sensitivity_scenarios(f, base, opt, bounds);
  CHECK(a.values.size() == 30);
  CHECK(a.toggles == std::vector<Driver>{Driver::area, Driver::length});
  for (const auto& x : a.inputs) {
    CHECK(x.area_ha >= 30);
    CHECK(x.area_ha <= 50);
    CHECK(x.valves == 10);
  }
  const auto b = sensitivity_scenarios(f, base, opt, bounds);
  CHECK(a.values == b.values);
  opt.count = 0;
  CHECK_THROWS_AS(sensitivity_scenarios(f, base, opt, bounds), InputError);
}
