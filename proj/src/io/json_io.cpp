#include <cmath>
#include <fstream>
#include <sstream>

#include "fcip/error.hpp"
#include "fcip/io.hpp"

namespace fcip::io {

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
}

Json load_json(const std::filesystem::path& path) { return parse_json(read_text_file(path), path.string()); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  if (!out) throw Error("write failed: " + path.string());
}

const Json& require(const Json& j, const std::string& field) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(field);
  if (it == j.end() || it->is_null()) throw InputError(field + ": required");
  return *it;
}

double require_number(const Json& j, const std::string& field) {
  const auto& v = require(j, field);
  if (!v.is_number()) throw InputError(field + ": must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw InputError(field + ": must be finite");
  return x;
}

std::string require_string(const Json& j, const std::string& field) {
  const auto& v = require(j, field);
  if (!v.is_string()) throw InputError(field + ": must be a string");
  return v.get<std::string>();
}

namespace {

std::vector<double> number_array(const Json& j, const std::string& field) {
  const auto& v = require(j, field);
  if (!v.is_array()) throw InputError(field + ": must be an array");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) throw InputError(field + ": must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

template <std::size_t N>
std::array<double, N> fixed_array(const Json& j, const std::string& field) {
  const auto v = number_array(j, field);
  if (v.size() != N) throw InputError(field + ": expected " + std::to_string(N) + " values");
  std::array<double, N> out{};
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

Json drivers_array(const std::array<double, kDriverCount>& v) { return Json(std::vector<double>(v.begin(), v.end())); }

Json scaler_json(const models::Scaler& s) { return Json{{"lo", s.lo}, {"hi", s.hi}}; }
models::Scaler scaler_from(const Json& j) { return {require_number(j, "lo"), require_number(j, "hi")}; }

Json vector_json(const Eigen::VectorXd& v) { return Json(std::vector<double>(v.data(), v.data() + v.size())); }

}  // namespace

// ---- core values -------------------------------------------------------------

Json to_json(const Drivers& d) {
  Json j;
  for (Driver v : kAllDrivers) j[std::string(driver_key(v))] = d[v];
  return j;
}

Json to_json(const DriverBounds& b) {
  Json j;
  for (Driver d : kAllDrivers) j[std::string(driver_key(d))] = {b.lower(d), b.upper(d)};
  return j;
}

DriverBounds bounds_from_json(const Json& j) {
  DriverBounds b;
  for (Driver d : kAllDrivers) {
    const auto v = fixed_array<2>(j, std::string(driver_key(d)));
    b.lo[static_cast<std::size_t>(d)] = v[0];
    b.hi[static_cast<std::size_t>(d)] = v[1];
  }
  return b;
}

Json to_json(const mcdm::Tfn& t) { return Json::array({t.l, t.m, t.u}); }

mcdm::Tfn tfn_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw InputError("fuzzy number must be [l, m, u]");
  for (const auto& x : j) {
    if (!x.is_number()) throw InputError("fuzzy number must hold numbers");
  }
  return mcdm::make_tfn(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

Json to_json(const mcdm::FuzzyPairwiseMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.size(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(row);
  }
  return Json{{"criteria", m.criteria()}, {"entries", rows}};
}

mcdm::FuzzyPairwiseMatrix pairwise_from_json(const Json& j) {
  const auto& names = require(j, "criteria");
  const auto& entries = require(j, "entries");
  if (!names.is_array() || !entries.is_array()) throw InputError("pairwise: criteria and entries must be arrays");
  std::vector<std::string> criteria;
  for (const auto& n : names) {
    if (!n.is_string()) throw InputError("pairwise.criteria: must hold strings");
    criteria.push_back(n.get<std::string>());
  }
  if (entries.size() != criteria.size()) throw InputError("pairwise.entries: expected one row per criterion");
  std::vector<mcdm::Tfn> cells;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& row = entries[i];
    if (!row.is_array() || row.size() != criteria.size()) {
      throw InputError("pairwise.entries[" + std::to_string(i) + "]: expected " + std::to_string(criteria.size()) +
                       " cells");
    }
    for (const auto& cell : row) cells.push_back(tfn_from_json(cell));
  }
  return mcdm::FuzzyPairwiseMatrix(std::move(criteria), std::move(cells));
}

Json to_json(const mcdm::WeightVector& w) {
  Json j = Json::array();
  for (std::size_t i = 0; i < w.names.size(); ++i) {
    j.push_back({{"criterion", w.names[i]}, {"raw", w.raw[i]}, {"normalized", w.normalized[i]}});
  }
  return j;
}

Json to_json(const screening::SelectionTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"action", s.action == screening::StepAction::enter ? "enter" : "remove"},
                     {"variable", s.variable},
                     {"r", s.r},
                     {"r2", s.r2},
                     {"adj_r2", s.adj_r2},
                     {"p_value", s.p_value}});
  }
  return Json{{"method", screening::method_name(t.method)}, {"steps", steps}, {"selected", t.selected}};
}

Json to_json(const screening::AdequacyReport& a, const std::vector<std::string>& names) {
  Json msa;
  for (std::size_t i = 0; i < a.msa.size() && i < names.size(); ++i) msa[names[i]] = a.msa[i];
  return Json{{"n", a.n},
              {"determinant", a.determinant},
              {"determinant_ok", a.determinant_ok},
              {"kmo", a.kmo},
              {"msa", msa},
              {"bartlett", {{"statistic", a.bartlett}, {"df", a.bartlett_df}, {"p_value", a.bartlett_p}}}};
}

Json to_json(const screening::FactorSolution& f, const std::vector<std::string>& names) {
  Json loadings;
  for (Eigen::Index i = 0; i < f.loadings.rows(); ++i) {
    std::vector<double> row(static_cast<std::size_t>(f.loadings.cols()));
    for (Eigen::Index k = 0; k < f.loadings.cols(); ++k) row[static_cast<std::size_t>(k)] = f.loadings(i, k);
    loadings[names.at(static_cast<std::size_t>(i))] = row;
  }
  return Json{{"eigenvalues", vector_json(f.eigenvalues)},
              {"retained", f.retained()},
              {"percent_variance", vector_json(f.percent_variance)},
              {"communalities", vector_json(f.communalities)},
              {"loadings", loadings}};
}

Json to_json(const screening::CorrelationMatrix& c) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < c.r.rows(); ++i) {
    std::vector<double> row(static_cast<std::size_t>(c.r.cols()));
    for (Eigen::Index k = 0; k < c.r.cols(); ++k) row[static_cast<std::size_t>(k)] = c.r(i, k);
    rows.push_back(row);
  }
  return Json{{"method", screening::method_name(c.method)}, {"names", c.names}, {"r", rows}};
}

// ---- models ------------------------------------------------------------------

Json to_json(const models::FittedCostModel& m) {
  return Json{{"transformation", models::transform_name(m.transform)},
              {"intercept", m.intercept},
              {"coefficients", drivers_array(m.coefficients)},
              {"last_year", m.last_year},
              {"cases", m.cases},
              {"bounds", to_json(m.bounds)},
              {"fit",
               {{"r", m.metrics.r},
                {"r2", m.metrics.r2},
                {"adj_r2", m.metrics.adj_r2},
                {"f", m.metrics.f},
                {"mape", m.metrics.mape},
                {"mape_actual", m.metrics.mape_actual}}}};
}

models::FittedCostModel regression_from_json(const Json& j) {
  models::FittedCostModel m;
  m.transform = models::parse_transform(require_string(j, "transformation"));
  m.intercept = require_number(j, "intercept");
  m.coefficients = fixed_array<kDriverCount>(j, "coefficients");
  m.last_year = static_cast<int>(require_number(j, "last_year"));
  m.cases = static_cast<std::size_t>(require_number(j, "cases"));
  m.bounds = bounds_from_json(require(j, "bounds"));
  const auto& fit = require(j, "fit");
  m.metrics.r = require_number(fit, "r");
  m.metrics.r2 = require_number(fit, "r2");
  m.metrics.adj_r2 = require_number(fit, "adj_r2");
  m.metrics.f = require_number(fit, "f");
  m.metrics.mape = require_number(fit, "mape");
  m.metrics.mape_actual = require_number(fit, "mape_actual");
  return m;
}

Json to_json(const models::MlpModel& m) {
  Json w1 = Json::array();
  for (Eigen::Index h = 0; h < m.w1.rows(); ++h) {
    std::vector<double> row(static_cast<std::size_t>(m.w1.cols()));
    for (Eigen::Index k = 0; k < m.w1.cols(); ++k) row[static_cast<std::size_t>(k)] = m.w1(h, k);
    w1.push_back(row);
  }
  Json inputs = Json::array();
  for (const auto& s : m.inputs) inputs.push_back(scaler_json(s));
  return Json{{"transformation", models::transform_name(m.target)},
              {"hidden", m.hidden},
              {"activation", m.activation == models::Activation::tanh ? "tanh" : "linear"},
              {"weights", {{"w1", w1}, {"b1", vector_json(m.b1)}, {"w2", vector_json(m.w2)}, {"b2", m.b2}}},
              {"input_scaling", inputs},
              {"output_scaling", scaler_json(m.output)},
              {"epochs", m.epochs},
              {"loss", m.loss},
              {"last_year", m.last_year},
              {"mape_train", m.mape_train}};
}

models::MlpModel mlp_from_json(const Json& j) {
  models::MlpModel m;
  m.target = models::parse_transform(require_string(j, "transformation"));
  m.hidden = static_cast<std::size_t>(require_number(j, "hidden"));
  if (m.hidden == 0) throw InputError("hidden: must be >= 1");
  const auto act = require_string(j, "activation");
  if (act == "tanh") {
    m.activation = models::Activation::tanh;
  } else if (act == "linear") {
    m.activation = models::Activation::linear;
  } else {
    throw InputError("activation: unknown '" + act + "'");
  }
  const auto& w = require(j, "weights");
  const auto& w1 = require(w, "w1");
  if (!w1.is_array() || w1.size() != m.hidden) throw InputError("weights.w1: expected one row per hidden unit");
  m.w1.resize(static_cast<Eigen::Index>(m.hidden), kDriverCount);
  for (std::size_t h = 0; h < m.hidden; ++h) {
    if (!w1[h].is_array() || w1[h].size() != kDriverCount) throw InputError("weights.w1: rows need 4 values");
    for (std::size_t k = 0; k < kDriverCount; ++k) {
      m.w1(static_cast<Eigen::Index>(h), static_cast<Eigen::Index>(k)) = w1[h][k].get<double>();
    }
  }
  const auto b1 = number_array(w, "b1");
  const auto w2 = number_array(w, "w2");
  if (b1.size() != m.hidden || w2.size() != m.hidden) throw InputError("weights: b1 and w2 need one value per unit");
  m.b1 = Eigen::Map<const Eigen::VectorXd>(b1.data(), static_cast<Eigen::Index>(b1.size()));
  m.w2 = Eigen::Map<const Eigen::VectorXd>(w2.data(), static_cast<Eigen::Index>(w2.size()));
  m.b2 = require_number(w, "b2");
  const auto& inputs = require(j, "input_scaling");
  if (!inputs.is_array() || inputs.size() != kDriverCount) throw InputError("input_scaling: expected 4 entries");
  for (std::size_t k = 0; k < kDriverCount; ++k) m.inputs[k] = scaler_from(inputs[k]);
  m.output = scaler_from(require(j, "output_scaling"));
  m.epochs = static_cast<int>(require_number(j, "epochs"));
  m.loss = require_number(j, "loss");
  m.last_year = static_cast<int>(require_number(j, "last_year"));
  m.mape_train = require_number(j, "mape_train");
  return m;
}

Json to_json(const models::CbrConfig& c) { return Json{{"weights", drivers_array(c.weights)}}; }

models::CbrConfig cbr_config_from_json(const Json& j) {
  models::CbrConfig c;
  c.weights = fixed_array<kDriverCount>(j, "weights");
  models::validate(c);
  return c;
}

Json to_json(const Dataset& ds) {
  Json rows = Json::array();
  for (const auto& c : ds) {
    rows.push_back({{"id", c.id},
                    {"area_ha", c.area_ha},
                    {"length_m", c.length_m},
                    {"valves", c.valves},
                    {"year", c.year},
                    {"cost_le", c.cost_le}});
  }
  return rows;
}

Dataset dataset_from_json(const Json& j, DatasetRole role) {
  if (!j.is_array()) throw InputError("case base must be an array");
  std::vector<ProjectCase> cases;
  for (const auto& r : j) {
    ProjectCase c;
    c.id = require_string(r, "id");
    c.area_ha = require_number(r, "area_ha");
    c.length_m = require_number(r, "length_m");
    c.valves = static_cast<int>(require_number(r, "valves"));
    c.year = static_cast<int>(require_number(r, "year"));
    c.cost_le = require_number(r, "cost_le");
    validate_case(c);
    cases.push_back(std::move(c));
  }
  return Dataset(std::move(cases), role);
}

Json to_json(const models::ScenarioSet& s) {
  Json toggles = Json::array();
  for (Driver d : s.toggles) toggles.push_back(driver_key(d));
  return Json{{"count", s.values.size()},
              {"seed", s.seed},
              {"band", s.band},
              {"toggles", toggles},
              {"values", s.values},
              {"mean", s.mean},
              {"sd", s.sd}};
}

// ---- fuzzy -------------------------------------------------------------------

Json to_json(const fuzzy::MembershipFunction& mf) {
  std::vector<double> p;
  switch (mf.shape) {
    case fuzzy::Shape::triangular: p = {mf.p[0], mf.p[1], mf.p[2]}; break;
    case fuzzy::Shape::trapezoidal: p = {mf.p[0], mf.p[1], mf.p[2], mf.p[3]}; break;
    case fuzzy::Shape::gaussian: p = {mf.p[0], mf.p[1]}; break;
  }
  return Json{{"shape", fuzzy::shape_name(mf.shape)}, {"params", p}};
}

fuzzy::MembershipFunction mf_from_json(const Json& j) {
  const auto shape = require_string(j, "shape");
  const auto p = number_array(j, "params");
  auto need = [&](std::size_t n) {
    if (p.size() != n) throw InputError(shape + ": expected " + std::to_string(n) + " parameters");
  };
  fuzzy::MembershipFunction mf;
  if (shape == "triangular") {
    need(3);
    mf = fuzzy::MembershipFunction::triangular(p[0], p[1], p[2]);
  } else if (shape == "trapezoidal") {
    need(4);
    mf = fuzzy::MembershipFunction::trapezoidal(p[0], p[1], p[2], p[3]);
  } else if (shape == "gaussian") {
    need(2);
    mf = fuzzy::MembershipFunction::gaussian(p[0], p[1]);
  } else {
    throw InputError("shape: unknown '" + shape + "'");
  }
  fuzzy::validate(mf);
  return mf;
}

Json to_json(const fuzzy::Partition& p) {
  Json sets = Json::array();
  for (std::size_t k = 0; k < p.size(); ++k) {
    Json s = to_json(p.sets[k]);
    s["label"] = p.labels[k];
    sets.push_back(s);
  }
  return Json{{"name", p.name},
              {"universe", {p.universe.lo, p.universe.hi}},
              {"resolution", p.universe.resolution},
              {"sets", sets}};
}

fuzzy::Partition partition_from_json(const Json& j) {
  fuzzy::Partition p;
  p.name = require_string(j, "name");
  const auto u = fixed_array<2>(j, "universe");
  p.universe = {u[0], u[1], static_cast<std::size_t>(require_number(j, "resolution"))};
  fuzzy::validate(p.universe);
  const auto& sets = require(j, "sets");
  if (!sets.is_array() || sets.empty()) throw InputError(p.name + ".sets: must be a non-empty array");
  for (const auto& s : sets) {
    p.labels.push_back(require_string(s, "label"));
    p.sets.push_back(mf_from_json(s));
  }
  p.finalize();
  return p;
}

namespace {

std::size_t label_index(const fuzzy::Partition& p, const std::string& label) {
  for (std::size_t k = 0; k < p.labels.size(); ++k) {
    if (p.labels[k] == label) return k;
  }
  throw InputError(p.name + ": unknown label '" + label + "'");
}

}  // namespace

Json to_json(const fuzzy::RuleBase& base) {
  Json inputs = Json::array();
  for (const auto& p : base.inputs) inputs.push_back(to_json(p));
  Json rules = Json::array();
  for (const auto& r : base.rules) {
    Json when = Json::array();
    for (std::size_t v = 0; v < r.antecedent.size(); ++v) when.push_back(base.inputs[v].labels[r.antecedent[v]]);
    rules.push_back({{"if", when}, {"then", base.output.labels[r.consequent]}, {"degree", r.degree}});
  }
  return Json{{"inputs", inputs}, {"output", to_json(base.output)}, {"rules", rules}};
}

fuzzy::RuleBase rule_base_from_json(const Json& j) {
  fuzzy::RuleBase base;
  const auto& inputs = require(j, "inputs");
  if (!inputs.is_array()) throw InputError("inputs: must be an array");
  for (const auto& p : inputs) base.inputs.push_back(partition_from_json(p));
  base.output = partition_from_json(require(j, "output"));
  const auto& rules = require(j, "rules");
  if (!rules.is_array()) throw InputError("rules: must be an array");
  for (const auto& r : rules) {
    const auto& when = require(r, "if");
    if (!when.is_array() || when.size() != base.inputs.size()) {
      throw InputError("rules: each antecedent needs one label per input");
    }
    fuzzy::FuzzyRule rule;
    for (std::size_t v = 0; v < when.size(); ++v) {
      if (!when[v].is_string()) throw InputError("rules: labels must be strings");
      rule.antecedent.push_back(label_index(base.inputs[v], when[v].get<std::string>()));
    }
    rule.consequent = label_index(base.output, require_string(r, "then"));
    rule.degree = r.contains("degree") ? require_number(r, "degree") : 1.0;
    base.rules.push_back(std::move(rule));
  }
  fuzzy::validate(base);
  return base;
}

std::string rule_listing(const fuzzy::RuleBase& base) {
  std::ostringstream out;
  for (std::size_t i = 0; i < base.rules.size(); ++i) {
    const auto& r = base.rules[i];
    out << (i + 1) << ". IF ";
    for (std::size_t v = 0; v < r.antecedent.size(); ++v) {
      if (v) out << " and ";
      out << base.inputs[v].name << " is " << base.inputs[v].labels[r.antecedent[v]];
    }
    out << " THEN " << base.output.name << " is " << base.output.labels[r.consequent] << "\n";
  }
  return out.str();
}

}  // namespace fcip::io
