#include <algorithm>
#include <cmath>
#include <limits>

#include "fcip/app.hpp"
#include "fcip/error.hpp"

namespace fcip::app {

namespace {

Drivers parse_drivers(const Json& body) {
  Drivers d;
  d.area_ha = io::require_number(body, "area_ha");
  d.length_m = io::require_number(body, "length_m");
  d.valves = io::require_number(body, "valves");
  d.year = io::require_number(body, "year");
  if (!(d.area_ha > 0)) throw InputError("area_ha: must be > 0");
  if (!(d.length_m > 0)) throw InputError("length_m: must be > 0");
  if (!(d.valves >= 1)) throw InputError("valves: must be >= 1");
  if (d.year < 1990 || d.year > 2100 || d.year != std::floor(d.year)) {
    throw InputError("year: must be a whole year in 1990..2100");
  }
  return d;
}

std::optional<std::string> optional_model(const Json& body) {
  if (!body.contains("model") || body["model"].is_null()) return std::nullopt;
  return io::require_string(body, "model");
}

std::uint64_t count_field(const Json& body, const std::string& field, std::uint64_t lo, std::uint64_t hi) {
  const auto& v = body[field];
  if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
    throw InputError(field + ": must be a non-negative integer");
  }
  const auto n = v.get<std::uint64_t>();
  if (n < lo || n > hi) {
    throw InputError(field + ": must be in " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  return n;
}

Json error_body(const std::string& message) { return Json{{"error", message}}; }

}  // namespace

PredictRequest parse_predict_request(const Json& body) {
  if (!body.is_object()) throw InputError("body: expected a JSON object");
  PredictRequest r;
  r.model = optional_model(body);
  r.drivers = parse_drivers(body);
  if (body.contains("inflation_rate") && !body["inflation_rate"].is_null()) {
    const double rate = io::require_number(body, "inflation_rate");
    if (!(rate > -100)) throw InputError("inflation_rate: must be > -100");
    r.inflation_rate = rate;
  }
  if (body.contains("toggles") && !body["toggles"].is_null()) {
    const auto& t = body["toggles"];
    if (!t.is_array()) throw InputError("toggles: must be an array of driver names");
    for (std::size_t i = 0; i < t.size(); ++i) {
      const auto field = "toggles[" + std::to_string(i) + "]";
      if (!t[i].is_string()) throw InputError(field + ": must be a string");
      const auto d = parse_driver(t[i].get<std::string>());
      if (!d) throw InputError(field + ": unknown driver '" + t[i].get<std::string>() + "'");
      if (std::find(r.toggles.begin(), r.toggles.end(), *d) == r.toggles.end()) r.toggles.push_back(*d);
    }
  }
  if (body.contains("scenarios") && !body["scenarios"].is_null()) {
    r.scenarios = static_cast<std::size_t>(count_field(body, "scenarios", 1, 100000));
  }
  if (body.contains("seed") && !body["seed"].is_null()) {
    r.seed = count_field(body, "seed", 0, std::numeric_limits<std::uint64_t>::max());
  }
  return r;
}

RetrieveRequest parse_retrieve_request(const Json& body) {
  if (!body.is_object()) throw InputError("body: expected a JSON object");
  RetrieveRequest r;
  r.model = optional_model(body);
  r.drivers = parse_drivers(body);
  if (body.contains("k") && !body["k"].is_null()) r.k = static_cast<std::size_t>(count_field(body, "k", 1, 100000));
  return r;
}

Service::Service(ModelRegistry registry) : registry_(std::move(registry)) {}

Json Service::predict(const PredictRequest& request) const {
  const auto& model = request.model ? registry_.get(*request.model) : registry_.only();
  const int last = model.last_year();
  const double rate = request.inflation_rate.value_or(0.0);
  // Beyond the last training year the model is evaluated at that year and the
  // result carried forward by compound inflation.
  auto estimate = [&](Drivers d) {
    double years = 0;
    if (last > 0 && d.year > last) {
      years = d.year - last;
      d.year = last;
    }
    return models::adjust_inflation(model.predict(d), rate, years);
  };

  const double cost = estimate(request.drivers);
  Json out;
  out["model"] = model.name();
  out["cost_le"] = cost;
  out["cost_per_hectare"] = cost / request.drivers.area_ha;
  if (last > 0 && request.drivers.year > last) {
    out["inflation"] = {{"rate_percent", rate}, {"base_year", last}, {"years", request.drivers.year - last}};
  }
  if (!request.toggles.empty() || request.scenarios) {
    models::ScenarioOptions options;
    options.toggles = request.toggles;
    options.count = request.scenarios.value_or(30);
    options.seed = request.seed;
    auto set = models::sensitivity_scenarios(estimate, request.drivers, options, model.bounds());
    Json s = io::to_json(set);
    s.erase("band");
    out["scenarios"] = s;
  }
  return out;
}

Json Service::cbr_retrieve(const Json& body) const {
  const auto request = parse_retrieve_request(body);
  const CostModel* model = request.model ? &registry_.get(*request.model) : registry_.first_of(ModelKind::cbr);
  if (!model) throw InputError("model: no cbr model loaded");
  const auto* cbr = std::get_if<models::CbrModel>(&model->impl());
  if (!cbr) throw InputError("model: '" + model->name() + "' is not a cbr model");
  const auto result = models::cbr_predict(*cbr, request.drivers, request.k);
  Json cases = Json::array();
  for (std::size_t i = 0; i < result.ranked.size(); ++i) {
    const auto& c = result.ranked[i];
    Json as;
    for (Driver d : kAllDrivers) as[std::string(driver_key(d))] = c.as[static_cast<std::size_t>(d)];
    cases.push_back({{"rank", i + 1}, {"id", c.id}, {"cs", c.cs}, {"cost_le", c.cost_le}, {"as", as}});
  }
  return Json{{"model", model->name()}, {"cost_le", result.cost_le}, {"cases", cases}};
}

Json Service::models() const {
  Json out = Json::array();
  for (const auto& m : registry_.models()) {
    out.push_back({{"name", m.name()},
                   {"kind", kind_name(m.kind())},
                   {"transformation", m.transformation()},
                   {"last_year", m.last_year()},
                   {"metrics", m.metrics()}});
  }
  return out;
}

HttpResponse handle(const Service& service, std::string_view method, std::string_view path, const std::string& body) {
  try {
    if (path == "/models") {
      if (method != "GET") return {405, io::dump(error_body("method not allowed"))};
      return {200, io::dump(service.models())};
    }
    if (path == "/predict" || path == "/cbr/retrieve") {
      if (method != "POST") return {405, io::dump(error_body("method not allowed"))};
      const auto j = io::parse_json(body, "body");
      return {200, io::dump(path == "/predict" ? service.predict(j) : service.cbr_retrieve(j))};
    }
    return {404, io::dump(error_body("no route for " + std::string(path)))};
  } catch (const InputError& e) {
    return {400, io::dump(error_body(e.what()))};
  } catch (const DomainError& e) {
    return {422, io::dump(error_body(e.what()))};
  } catch (const std::exception& e) {
    return {500, io::dump(error_body(e.what()))};
  }
}

}  // namespace fcip::app
