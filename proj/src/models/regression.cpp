#include <algorithm>
#include <cmath>

#include "fcip/error.hpp"
#include "fcip/models.hpp"
#include "fcip/screening.hpp"

namespace fcip::models {

std::string_view transform_name(Transform t) {
  switch (t) {
    case Transform::none: return "none";
    case Transform::sqrt: return "sqrt";
    case Transform::reciprocal: return "reciprocal";
    case Transform::semilog: return "semilog";
    case Transform::power: return "power";
  }
  return "?";
}

Transform parse_transform(std::string_view name) {
  for (Transform t : kAllTransforms) {
    if (name == transform_name(t)) return t;
  }
  if (name == "linear") return Transform::none;
  if (name == "quadratic") return Transform::sqrt;
  if (name == "log") return Transform::semilog;
  throw InputError("unknown transformation '" + std::string(name) + "'");
}

double forward_transform(Transform t, double cost) {
  if (!(cost > 0) && t != Transform::none) throw InputError("cost must be positive");
  switch (t) {
    case Transform::none: return cost;
    case Transform::sqrt: return std::sqrt(cost);
    case Transform::reciprocal: return 1.0 / cost;
    case Transform::semilog: return std::log(cost);
    case Transform::power: return cost * cost;
  }
  return cost;
}

double inverse_transform(Transform t, double z) {
  double y = 0;
  switch (t) {
    case Transform::none: y = z; break;
    case Transform::sqrt:
      if (z < 0) throw DomainError("out-of-range prediction");
      y = z * z;
      break;
    case Transform::reciprocal:
      if (z <= 0) throw DomainError("out-of-range prediction");
      y = 1.0 / z;
      break;
    case Transform::semilog: y = std::exp(z); break;
    case Transform::power:
      if (z < 0) throw DomainError("out-of-range prediction");
      y = std::sqrt(z);
      break;
  }
  if (!std::isfinite(y) || y <= 0) throw DomainError("out-of-range prediction");
  return y;
}

double mape(std::span<const double> predicted, std::span<const double> actual, MapeBase base) {
  if (predicted.size() != actual.size()) throw InputError("prediction and actual series differ in length");
  if (predicted.empty()) throw InputError("MAPE of an empty series");
  double sum = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    const double denom = base == MapeBase::predicted ? predicted[i] : actual[i];
    if (denom == 0) throw DomainError("zero denominator in MAPE");
    sum += std::fabs(actual[i] - predicted[i]) / std::fabs(denom);
  }
  return 100.0 * sum / static_cast<double>(predicted.size());
}

double FittedCostModel::linear(const Drivers& d) const {
  double z = intercept;
  for (Driver drv : kAllDrivers) z += coefficients[static_cast<std::size_t>(drv)] * d[drv];
  return z;
}

namespace {

Eigen::VectorXd transformed_costs(const Dataset& ds, Transform t) {
  Eigen::VectorXd y(static_cast<Eigen::Index>(ds.size()));
  for (std::size_t i = 0; i < ds.size(); ++i) y(static_cast<Eigen::Index>(i)) = forward_transform(t, ds[i].cost_le);
  return y;
}

int max_year(const Dataset& ds) {
  int y = ds[0].year;
  for (const auto& c : ds) y = std::max(y, c.year);
  return y;
}

}  // namespace

FittedCostModel fit_parametric(const Dataset& train, Transform transform) {
  if (train.size() < kDriverCount + 2) throw InputError("regression needs at least six training cases");
  const auto design = screening::DesignData::from_dataset(train);
  const auto fit = screening::ols_fit(design.x, transformed_costs(train, transform), design.names);

  FittedCostModel m;
  m.transform = transform;
  m.intercept = fit.coefficients(0);
  for (std::size_t j = 0; j < kDriverCount; ++j) m.coefficients[j] = fit.coefficients(static_cast<Eigen::Index>(j + 1));
  m.metrics.r = fit.r;
  m.metrics.r2 = fit.r2;
  m.metrics.adj_r2 = fit.adj_r2;
  m.metrics.f = fit.f;
  m.last_year = max_year(train);
  m.bounds = DriverBounds::of(train);
  m.cases = train.size();

  const auto predicted = predict_all(m, train);
  const auto actual = train.costs();
  m.metrics.mape = mape(predicted, actual, MapeBase::predicted);
  m.metrics.mape_actual = mape(predicted, actual, MapeBase::actual);
  return m;
}

double predict_cost(const FittedCostModel& model, const Drivers& d) {
  for (Driver drv : kAllDrivers) {
    if (!std::isfinite(d[drv])) throw InputError(std::string(driver_key(drv)) + " is not finite");
  }
  if (!(d.area_ha > 0)) throw InputError("area_ha must be positive");
  if (!(d.length_m > 0)) throw InputError("length_m must be positive");
  if (!(d.valves > 0)) throw InputError("valves must be positive");
  return inverse_transform(model.transform, model.linear(d));
}

std::vector<double> predict_all(const FittedCostModel& model, const Dataset& ds) {
  std::vector<double> out;
  out.reserve(ds.size());
  for (const auto& c : ds) out.push_back(predict_cost(model, c.drivers()));
  return out;
}

std::vector<double> variance_inflation(const Eigen::MatrixXd& x) {
  const auto p = x.cols();
  std::vector<double> out;
  for (Eigen::Index j = 0; j < p; ++j) {
    if (p == 1) {
      out.push_back(1.0);
      continue;
    }
    Eigen::MatrixXd others(x.rows(), p - 1);
    Eigen::Index c = 0;
    for (Eigen::Index k = 0; k < p; ++k) {
      if (k != j) others.col(c++) = x.col(k);
    }
    const auto fit = screening::ols_fit(others, x.col(j));
    out.push_back(1.0 / std::max(1.0 - fit.r2, 1e-300));
  }
  return out;
}

double durbin_watson(std::span<const double> e) {
  double num = 0, den = 0;
  for (std::size_t t = 0; t < e.size(); ++t) {
    den += e[t] * e[t];
    if (t > 0) num += (e[t] - e[t - 1]) * (e[t] - e[t - 1]);
  }
  if (den == 0) return 2.0;
  return num / den;
}

RegressionDiagnostics diagnostics(const FittedCostModel& model, const Dataset& train) {
  const auto design = screening::DesignData::from_dataset(train);
  const auto fit = screening::ols_fit(design.x, transformed_costs(train, model.transform), design.names);
  RegressionDiagnostics d;
  const double pp = static_cast<double>(fit.p + 1);
  const double s2 = fit.sse / static_cast<double>(fit.n - fit.p - 1);
  for (Eigen::Index i = 0; i < fit.residuals.size(); ++i) {
    const double h = fit.leverage(i);
    const double e = fit.residuals(i);
    const double cook = s2 > 0 && h < 1 ? (e * e / (pp * s2)) * h / ((1 - h) * (1 - h)) : 0.0;
    d.cooks.push_back(cook);
  }
  d.max_cooks = d.cooks.empty() ? 0 : *std::max_element(d.cooks.begin(), d.cooks.end());
  const auto vif = variance_inflation(design.x);
  for (std::size_t j = 0; j < kDriverCount; ++j) {
    d.vif[j] = vif[j];
    d.tolerance[j] = 1.0 / vif[j];
  }
  const std::vector<double> e(fit.residuals.data(), fit.residuals.data() + fit.residuals.size());
  d.durbin_watson = durbin_watson(e);
  return d;
}

double adjust_inflation(double cost, double rate_percent, double years) {
  if (years < 0) throw InputError("inflation horizon must be non-negative");
  if (!(rate_percent > -100)) throw InputError("inflation rate must exceed -100%");
  return cost * std::pow(1.0 + rate_percent / 100.0, years);
}

}  // namespace fcip::models
