#include <algorithm>
#include <cmath>

#include "fcip/app.hpp"
#include "fcip/error.hpp"

namespace fcip::app {

namespace {

int max_year(const Dataset& ds) {
  int y = 0;
  for (const auto& c : ds) y = std::max(y, c.year);
  return y;
}

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};

double r_squared(std::span<const double> predicted, std::span<const double> actual) {
  double mean = 0;
  for (double y : actual) mean += y;
  mean /= static_cast<double>(actual.size());
  double sse = 0, sst = 0;
  for (std::size_t i = 0; i < actual.size(); ++i) {
    sse += (actual[i] - predicted[i]) * (actual[i] - predicted[i]);
    sst += (actual[i] - mean) * (actual[i] - mean);
  }
  return sst > 0 ? 1.0 - sse / sst : 0.0;
}

std::vector<double> predict_dataset(const CostModel& m, const Dataset& ds) {
  std::vector<double> out;
  out.reserve(ds.size());
  for (const auto& c : ds) out.push_back(m.predict(c.drivers()));
  return out;
}

// Leave-one-out MAPE of top-1 retrieval over the case base itself.
double cbr_loo_mape(const models::CbrModel& model) {
  const auto& base = model.base();
  std::vector<double> predicted, actual;
  for (std::size_t i = 0; i < base.size(); ++i) {
    const auto sims = models::similarities(model, base[i].drivers());
    std::size_t best = i == 0 ? 1 : 0;
    for (std::size_t j = 0; j < sims.size(); ++j) {
      if (j != i && sims[j] > sims[best]) best = j;
    }
    predicted.push_back(base[best].cost_le);
    actual.push_back(base[i].cost_le);
  }
  return models::mape(predicted, actual);
}

}  // namespace

std::string_view kind_name(ModelKind k) {
  switch (k) {
    case ModelKind::regression: return "regression";
    case ModelKind::mlp: return "mlp";
    case ModelKind::cbr: return "cbr";
    case ModelKind::fuzzy: return "fuzzy";
  }
  return "?";
}

ModelKind parse_kind(std::string_view name) {
  for (auto k : {ModelKind::regression, ModelKind::mlp, ModelKind::cbr, ModelKind::fuzzy}) {
    if (kind_name(k) == name) return k;
  }
  throw InputError("unknown model kind '" + std::string(name) + "'");
}

CostModel::CostModel(std::string name, ModelImpl impl, Json metrics, std::uint64_t seed)
    : name_(std::move(name)), impl_(std::move(impl)), metrics_(std::move(metrics)), seed_(seed) {
  std::visit(Overloaded{
                 [&](const models::FittedCostModel& m) {
                   last_year_ = m.last_year;
                   bounds_ = m.bounds;
                 },
                 [&](const models::MlpModel& m) {
                   last_year_ = m.last_year;
                   for (Driver d : kAllDrivers) {
                     const auto i = static_cast<std::size_t>(d);
                     bounds_.lo[i] = m.inputs[i].lo;
                     bounds_.hi[i] = m.inputs[i].hi;
                   }
                 },
                 [&](const models::CbrModel& m) {
                   last_year_ = max_year(m.base());
                   bounds_ = DriverBounds::of(m.base());
                 },
                 [&](const FuzzyCostModel& m) {
                   last_year_ = m.last_year;
                   bounds_ = m.bounds;
                 },
             },
             impl_);
}

ModelKind CostModel::kind() const noexcept { return static_cast<ModelKind>(impl_.index()); }

std::string CostModel::transformation() const {
  if (auto* r = std::get_if<models::FittedCostModel>(&impl_)) return std::string(models::transform_name(r->transform));
  if (auto* m = std::get_if<models::MlpModel>(&impl_)) return std::string(models::transform_name(m->target));
  return "none";
}

double CostModel::predict(const Drivers& d) const {
  return std::visit(Overloaded{
                        [&](const models::FittedCostModel& m) { return models::predict_cost(m, d); },
                        [&](const models::MlpModel& m) { return models::mlp_predict(m, d); },
                        [&](const models::CbrModel& m) { return models::cbr_predict(m, d).cost_le; },
                        [&](const FuzzyCostModel& m) {
                          const auto x = fuzzy::inputs_of(d);
                          return fuzzy::predict(m.base, x, m.defuzzifier);
                        },
                    },
                    impl_);
}

Json to_json(const CostModel& m) {
  Json j;
  j["kind"] = kind_name(m.kind());
  std::visit(Overloaded{
                 [&](const models::FittedCostModel& r) {
                   const auto body = io::to_json(r);
                   for (const auto& [k, v] : body.items()) j[k] = v;
                 },
                 [&](const models::MlpModel& n) {
                   const auto body = io::to_json(n);
                   for (const auto& [k, v] : body.items()) j[k] = v;
                 },
                 [&](const models::CbrModel& c) {
                   j["transformation"] = "none";
                   j["attribute_weights"] = io::to_json(c.config())["weights"];
                   j["case_base"] = io::to_json(c.base());
                 },
                 [&](const FuzzyCostModel& f) {
                   j["transformation"] = "none";
                   j["defuzzifier"] = fuzzy::defuzzifier_name(f.defuzzifier);
                   j["last_year"] = f.last_year;
                   j["bounds"] = io::to_json(f.bounds);
                   j["rule_base"] = io::to_json(f.base);
                 },
             },
             m.impl());
  j["metrics"] = m.metrics();
  j["seed"] = m.seed();
  return j;
}

CostModel model_from_json(const Json& j, std::string name) {
  const auto kind = parse_kind(io::require_string(j, "kind"));
  Json metrics = j.contains("metrics") ? j["metrics"] : Json::object();
  std::uint64_t seed = 0;
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw InputError("seed: must be a non-negative integer");
    seed = j["seed"].get<std::uint64_t>();
  }
  switch (kind) {
    case ModelKind::regression:
      return CostModel(std::move(name), io::regression_from_json(j), std::move(metrics), seed);
    case ModelKind::mlp:
      return CostModel(std::move(name), io::mlp_from_json(j), std::move(metrics), seed);
    case ModelKind::cbr: {
      models::CbrConfig config = io::cbr_config_from_json(Json{{"weights", io::require(j, "attribute_weights")}});
      auto base = io::dataset_from_json(io::require(j, "case_base"), DatasetRole::training);
      return CostModel(std::move(name), models::CbrModel(std::move(base), config), std::move(metrics), seed);
    }
    case ModelKind::fuzzy: {
      FuzzyCostModel f;
      const auto d = io::require_string(j, "defuzzifier");
      if (d == "wam") {
        f.defuzzifier = fuzzy::Defuzzifier::wam;
      } else if (d == "cog") {
        f.defuzzifier = fuzzy::Defuzzifier::cog;
      } else {
        throw InputError("defuzzifier: unknown '" + d + "'");
      }
      f.last_year = static_cast<int>(io::require_number(j, "last_year"));
      f.bounds = io::bounds_from_json(io::require(j, "bounds"));
      f.base = io::rule_base_from_json(io::require(j, "rule_base"));
      return CostModel(std::move(name), std::move(f), std::move(metrics), seed);
    }
  }
  throw InputError("unknown model kind");
}

CostModel load_model(const std::filesystem::path& path) {
  try {
    return model_from_json(io::load_json(path), path.stem().string());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

CostModel fit_model(ModelKind kind, const Dataset& train, const Dataset* valid, const FitOptions& options,
                    std::string name) {
  Json metrics;
  const auto actual = train.costs();
  auto add_validation = [&](const CostModel& m) {
    if (!valid) return;
    const auto p = predict_dataset(m, *valid);
    const auto y = valid->costs();
    metrics["mape_valid"] = models::mape(p, y);
    metrics["mape_valid_actual"] = models::mape(p, y, models::MapeBase::actual);
  };
  switch (kind) {
    case ModelKind::regression: {
      auto fit = models::fit_parametric(train, options.transform);
      const auto diag = models::diagnostics(fit, train);
      metrics["r"] = fit.metrics.r;
      metrics["r2"] = fit.metrics.r2;
      metrics["adj_r2"] = fit.metrics.adj_r2;
      metrics["f"] = fit.metrics.f;
      metrics["mape_train"] = fit.metrics.mape;
      metrics["mape_train_actual"] = fit.metrics.mape_actual;
      CostModel probe(name, fit);
      add_validation(probe);
      metrics["diagnostics"] = {{"durbin_watson", diag.durbin_watson},
                                {"max_cooks", diag.max_cooks},
                                {"vif", std::vector<double>(diag.vif.begin(), diag.vif.end())},
                                {"tolerance", std::vector<double>(diag.tolerance.begin(), diag.tolerance.end())}};
      return CostModel(std::move(name), std::move(fit), std::move(metrics), options.seed);
    }
    case ModelKind::mlp: {
      models::MlpConfig config;
      config.hidden = options.hidden;
      config.target = options.transform;
      config.seed = options.seed;
      config.max_epochs = options.epochs;
      auto net = models::mlp_train(train, config);
      CostModel probe(name, net);
      const auto p = predict_dataset(probe, train);
      metrics["r2"] = r_squared(p, actual);
      metrics["mape_train"] = models::mape(p, actual);
      metrics["mape_train_actual"] = models::mape(p, actual, models::MapeBase::actual);
      metrics["epochs"] = net.epochs;
      metrics["loss"] = net.loss;
      add_validation(probe);
      return CostModel(std::move(name), std::move(net), std::move(metrics), options.seed);
    }
    case ModelKind::cbr: {
      models::CbrModel model(train, options.cbr);
      metrics["cases"] = train.size();
      metrics["mape_loo"] = cbr_loo_mape(model);
      CostModel probe(name, model);
      add_validation(probe);
      return CostModel(std::move(name), std::move(model), std::move(metrics), options.seed);
    }
    case ModelKind::fuzzy: {
      const auto partitions = fuzzy::partitions_for(train, options.labels, 1001, options.shape);
      const auto wm = fuzzy::generate_rules_wm(train, partitions);
      const auto grid = fuzzy::candidate_grid(train, partitions);
      fuzzy::GaConfig ga;
      ga.seed = options.seed;
      ga.wm_hint = wm.size();
      if (options.population) ga.population = *options.population;
      if (options.generations) ga.generations = *options.generations;
      fuzzy::FitnessOptions fo;
      fo.defuzzifier = options.defuzzifier;
      auto result = fuzzy::ga_select_rules(grid, train, ga, fo);
      const auto tr = fuzzy::fitness(result.base, train, fo);
      metrics["rules"] = result.base.size();
      metrics["candidates"] = grid.size();
      metrics["wm_rules"] = wm.size();
      metrics["labels"] = options.labels;
      metrics["partition"] = fuzzy::shape_name(options.shape);
      metrics["fitness"] = tr.fitness;
      metrics["mape_train"] = tr.mape;
      metrics["uncovered_train"] = tr.uncovered;
      if (valid) {
        const auto va = fuzzy::fitness(result.base, *valid, fo);
        metrics["mape_valid"] = va.mape;
        metrics["uncovered_valid"] = va.uncovered;
      }
      FuzzyCostModel f{std::move(result.base), options.defuzzifier, max_year(train), DriverBounds::of(train)};
      return CostModel(std::move(name), std::move(f), std::move(metrics), options.seed);
    }
  }
  throw InputError("unknown model kind");
}

void ModelRegistry::add(CostModel model) {
  for (const auto& m : models_) {
    if (m.name() == model.name()) throw InputError("duplicate model name '" + model.name() + "'");
  }
  models_.push_back(std::move(model));
}

const CostModel& ModelRegistry::get(const std::string& name) const {
  for (const auto& m : models_) {
    if (m.name() == name) return m;
  }
  throw InputError("model: unknown '" + name + "'");
}

const CostModel& ModelRegistry::only() const {
  if (models_.size() != 1) throw InputError("model: required when " + std::to_string(models_.size()) + " models are loaded");
  return models_.front();
}

const CostModel* ModelRegistry::first_of(ModelKind kind) const {
  for (const auto& m : models_) {
    if (m.kind() == kind) return &m;
  }
  return nullptr;
}

}  // namespace fcip::app
