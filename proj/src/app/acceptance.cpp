#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "fcip/app.hpp"
#include "fcip/error.hpp"
#include "fcip/fuzzy.hpp"
#include "fcip/mcdm.hpp"
#include "fcip/models.hpp"
#include "fcip/screening.hpp"

namespace fcip::app {

namespace {

std::string format(const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  return buf;
}

class Checker {
 public:
  explicit Checker(CriterionResult& r) : r_(r) { r_.pass = true; }

  bool expect(bool ok, const std::string& line) {
    r_.details.push_back((ok ? "ok    " : "FAIL  ") + line);
    r_.pass = r_.pass && ok;
    return ok;
  }
  void note(const std::string& line) { r_.details.push_back("info  " + line); }

  /// |value - target| <= tol, reported with the numbers.
  bool within(const std::string& what, double value, double target, double tol) {
    return expect(std::abs(value - target) <= tol,
                  format("%s = %.4f (target %.4f +/- %g)", what.c_str(), value, target, tol));
  }

 private:
  CriterionResult& r_;
};

using Row = std::map<std::string, std::string>;

std::vector<Row> read_table(const std::filesystem::path& path) {
  std::istringstream in(read_text_file(path));
  std::string line;
  std::vector<std::string> header;
  std::vector<Row> rows;
  auto split_line = [](const std::string& s) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ls(s);
    while (std::getline(ls, cell, ',')) out.push_back(cell);
    return out;
  };
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split_line(line);
    if (header.empty()) {
      header = std::move(cells);
      continue;
    }
    if (cells.size() != header.size()) throw ParseError(path.string() + ": ragged row");
    Row r;
    for (std::size_t i = 0; i < header.size(); ++i) r[header[i]] = cells[i];
    rows.push_back(std::move(r));
  }
  return rows;
}

double num(const Row& r, const std::string& key) { return std::stod(r.at(key)); }

struct Data {
  Dataset train;
  Dataset valid;
};

Data bundled(const AcceptanceOptions& o) {
  return {load_dataset(o.data_dir / "training.csv", DatasetRole::training),
          load_dataset(o.data_dir / "validation.csv", DatasetRole::validation)};
}

// ---- 1: sqrt-response regression -------------------------------------------------

void quadratic_model(Checker& c, const AcceptanceOptions& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto d = bundled(o);
  const auto fit = models::fit_parametric(d.train, models::Transform::sqrt);
  const auto pred = models::predict_all(fit, d.valid);
  const double valid = models::mape(pred, d.valid.costs());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.within("training R^2", fit.metrics.r2, 0.863, 0.02);
  c.within("training MAPE %", fit.metrics.mape, 9.13, 1.0);
  c.within("validation MAPE %", valid, 7.82, 1.5);
  c.expect(secs < 1.0, format("load + fit + validate in %.3f s (limit 1 s)", secs));
}

// ---- 2: all transformations ----------------------------------------------------

void transformations(Checker& c, const AcceptanceOptions& o) {
  const auto d = bundled(o);
  struct Printed {
    models::Transform t;
    double r2;
    double mape;
  };
  const Printed table[] = {{models::Transform::none, 0.857, 9.13},
                           {models::Transform::sqrt, 0.863, 9.13},
                           {models::Transform::reciprocal, 0.803, 11.20},
                           {models::Transform::semilog, 0.857, 9.30},
                           {models::Transform::power, 0.814, 11.79}};
  for (const auto& p : table) {
    const auto fit = models::fit_parametric(d.train, p.t);
    const std::string name(models::transform_name(p.t));
    c.within(name + " R^2", fit.metrics.r2, p.r2, 0.03);
    c.within(name + " MAPE % (actual-cost denominator)", fit.metrics.mape_actual, p.mape, 1.5);
    c.note(format("%s MAPE %% with prediction denominator = %.4f", name.c_str(), fit.metrics.mape));
  }
}

// ---- 3: regression diagnostics ---------------------------------------------------

void diagnostics(Checker& c, const AcceptanceOptions& o) {
  const auto d = bundled(o);
  const auto fit = models::fit_parametric(d.train, models::Transform::sqrt);
  const auto diag = models::diagnostics(fit, d.train);
  c.within("Durbin-Watson", diag.durbin_watson, 2.224, 0.15);
  c.expect(diag.max_cooks < 1.0, format("max Cook's distance %.4f < 1", diag.max_cooks));
  c.within("max Cook's distance", diag.max_cooks, 0.249, 0.08);
  const double printed[] = {0.576, 0.567, 0.607, 0.977};
  for (Driver v : kAllDrivers) {
    const auto i = static_cast<std::size_t>(v);
    c.within("tolerance " + std::string(driver_symbol(v)), diag.tolerance[i], printed[i], 0.05);
  }
}

// ---- 4: stepwise selection -------------------------------------------------------

void stepwise(Checker& c, const AcceptanceOptions& o) {
  const auto d = bundled(o);
  const auto design = screening::DesignData::from_dataset(d.train);
  const auto trace = screening::select_variables(design);
  const std::vector<std::string> order{"P3", "P14", "P6", "P1"};
  const double r[] = {0.85, 0.89, 0.92, 0.93};
  std::vector<std::string> entered;
  for (const auto& s : trace.steps) {
    if (s.action == screening::StepAction::enter) entered.push_back(s.variable);
  }
  std::string got;
  for (const auto& v : entered) got += (got.empty() ? "" : ", ") + v;
  c.expect(entered == order && trace.selected == order, "entry order " + got + " (target P3, P14, P6, P1)");
  for (std::size_t i = 0; i < trace.steps.size() && i < 4; ++i) {
    c.within("cumulative R after " + trace.steps[i].variable, trace.steps[i].r, r[i], 0.02);
  }
  const auto cost = d.train.costs();
  const auto length = d.train.column(Driver::length);
  c.within("r(cost, P3)", screening::correlate(cost, length), 0.85, 0.02);
}

// ---- 5: Fuzzy Delphi -------------------------------------------------------------

void fuzzy_delphi(Checker& c, const AcceptanceOptions& o) {
  const auto rows = read_table(o.data_dir / "reference" / "fdm_table.csv");
  std::vector<mcdm::ScoredParameter> scored;
  std::set<std::string> printed_select;
  double worst = 0;
  std::string worst_id;
  for (const auto& r : rows) {
    const auto w = mcdm::make_tfn(num(r, "l"), num(r, "m"), num(r, "u"));
    const double s = mcdm::defuzzify_centroid(w);
    const double gap = std::abs(s - num(r, "crisp"));
    if (gap > worst) {
      worst = gap;
      worst_id = r.at("id");
    }
    scored.push_back({r.at("id"), s});
    if (r.at("result") == "select") printed_select.insert(r.at("id"));
  }
  c.expect(rows.size() == 35, format("%zu rows read", rows.size()));
  c.expect(worst <= 0.01, format("largest |centroid - printed crisp| = %.4f at %s (limit 0.01)", worst, worst_id.c_str()));
  const std::vector<std::string> exclusions{"P22"};
  const auto screen = mcdm::fdm_screen(scored, 0.6, exclusions);
  const std::set<std::string> retained(screen.retained.begin(), screen.retained.end());
  std::string got;
  for (const auto& id : screen.retained) got += (got.empty() ? "" : " ") + id;
  c.expect(retained == printed_select, "alpha 0.6 with P22 excluded retains {" + got + "}");
}

// ---- 6: Fuzzy AHP ----------------------------------------------------------------

void fuzzy_ahp(Checker& c, const AcceptanceOptions& o) {
  const auto doc = io::survey_from_json(io::load_json(o.data_dir / "reference" / "fahp_aggregate.json"), "aggregate");
  const auto& m = *doc.pairwise;
  const auto ext = mcdm::synthetic_extents(m);
  const mcdm::Tfn printed[] = {{0.29, 0.69, 1.46}, {0.10, 0.19, 0.53}, {0.06, 0.11, 0.22}};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& s = ext[i].value;
    const double gap = std::max({std::abs(s.l - printed[i].l), std::abs(s.m - printed[i].m), std::abs(s.u - printed[i].u)});
    c.expect(gap <= 0.02, format("S_%s = (%.3f, %.3f, %.3f), largest gap %.4f (limit 0.02)", ext[i].criterion.c_str(),
                                 s.l, s.m, s.u, gap));
  }
  struct Degree {
    std::size_t b, a;
    double printed;
  };
  const Degree degrees[] = {{0, 1, 1.00}, {0, 2, 1.00}, {1, 2, 1.00}, {1, 0, 0.33}, {2, 0, 0.00}};
  for (const auto& g : degrees) {
    c.within("V(S_" + ext[g.b].criterion + " >= S_" + ext[g.a].criterion + ")",
             mcdm::degree_of_possibility(ext[g.b], ext[g.a]), g.printed, 0.01);
  }
  c.note(format("V(S_E >= S_M) = %.4f (printed 0.00; does not affect any weight)",
                mcdm::degree_of_possibility(ext[2], ext[1])));
  const auto w = mcdm::fahp_weights(ext);
  const double raw[] = {1.00, 0.33, 0.00};
  const double norm[] = {0.75, 0.25, 0.00};
  for (std::size_t i = 0; i < 3; ++i) {
    c.within("raw weight " + w.names[i], w.raw[i], raw[i], 0.01);
    c.within("normalized weight " + w.names[i], w.normalized[i], norm[i], 0.01);
  }
  const auto cons = mcdm::consistency(m);
  c.expect(cons.cr <= 0.1, format("CR = %.4f <= 0.1 (lambda_max %.4f)", cons.cr, cons.lambda_max));

  // The four bundled expert matrices aggregate back to the printed one.
  const auto surveys = io::load_surveys(o.data_dir / "surveys" / "fahp");
  const auto agg = mcdm::fahp_aggregate(io::pairwise_matrices(surveys));
  double gap = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < 3; ++k) {
      gap = std::max({gap, std::abs(agg(i, k).l - m(i, k).l), std::abs(agg(i, k).m - m(i, k).m),
                      std::abs(agg(i, k).u - m(i, k).u)});
    }
  }
  c.note(format("geometric mean of %zu expert matrices vs printed aggregate: largest gap %.4f", surveys.size(), gap));
}

// ---- 7: CBR ----------------------------------------------------------------------

void cbr(Checker& c, const AcceptanceOptions& o) {
  const auto base = load_dataset(o.data_dir / "similarity_case_base.csv", DatasetRole::training);
  const models::CbrModel fig(base);
  const Drivers query{24, 779, 4, 2014};
  const auto result = models::cbr_predict(fig, query, base.size());
  const auto rows = read_table(o.data_dir / "reference" / "similarity_table.csv");
  const char* as_keys[] = {"as_area", "as_length", "as_valves", "as_year"};
  double worst = 0;
  std::string worst_at;
  std::size_t matched = 0;
  for (const auto& r : rows) {
    auto it = std::find_if(result.ranked.begin(), result.ranked.end(), [&](const auto& x) { return x.id == r.at("id"); });
    if (it == result.ranked.end()) continue;
    ++matched;
    for (std::size_t k = 0; k < kDriverCount; ++k) {
      const double gap = std::abs(it->as[k] - num(r, as_keys[k]));
      if (gap > worst) {
        worst = gap;
        worst_at = r.at("id") + " " + as_keys[k];
      }
    }
    const double gap = std::abs(it->cs - num(r, "cs"));
    if (gap > worst) {
      worst = gap;
      worst_at = r.at("id") + " cs";
    }
  }
  c.expect(matched == rows.size() && matched == 18, format("%zu of %zu printed rows retrieved", matched, rows.size()));
  c.expect(worst <= 0.005, format("largest AS/CS gap %.4f at %s (limit 0.005)", worst, worst_at.c_str()));
  c.within("top case similarity", result.ranked.front().cs, 0.93, 0.005);

  const auto d = bundled(o);
  const models::CbrModel model(d.train);
  auto run = [&] {
    std::vector<double> p;
    for (const auto& v : d.valid) p.push_back(models::cbr_predict(model, v.drivers()).cost_le);
    return p;
  };
  const auto first = run();
  const auto second = run();
  c.expect(first == second, "repeated validation retrieval is identical");
  c.within("validation MAPE % against the 111-case base", models::mape(first, d.valid.costs()), 17.3, 3.0);
  const auto fitted = fit_model(ModelKind::cbr, d.train, nullptr, {}, "cbr");
  c.note(format("leave-one-out MAPE %% on the training base = %.4f", fitted.metrics()["mape_loo"].get<double>()));
}

// ---- 8: MLP ----------------------------------------------------------------------

void mlp(Checker& c, const AcceptanceOptions& o) {
  const auto d = bundled(o);
  models::MlpConfig config;
  config.seed = o.seed;
  const auto init = models::mlp_init(d.train, config);
  const double g0 = models::gradient_check(init, models::mlp_sample(init, d.train));
  const auto net = models::mlp_train(d.train, config);
  std::vector<double> pred;
  for (const auto& x : d.train) pred.push_back(models::mlp_predict(net, x.drivers()));
  const double train_mape = models::mape(pred, d.train.costs());
  const double g1 = models::gradient_check(net, models::mlp_sample(net, d.train));
  c.expect(train_mape <= 12.0, format("training MAPE %.4f%% <= 12%% (seed %llu, %d epochs)", train_mape,
                                      static_cast<unsigned long long>(o.seed), net.epochs));
  c.expect(g0 < 1e-4, format("gradient check at initialization: max relative error %.3g < 1e-4", g0));
  c.expect(g1 < 1e-4, format("gradient check after training: max relative error %.3g < 1e-4", g1));
  const auto again = models::mlp_train(d.train, config);
  const auto a = net.parameters(), b = again.parameters();
  const bool same = a.size() == b.size() && std::equal(a.data(), a.data() + a.size(), b.data()) && net.loss == again.loss;
  c.expect(same, "retraining with the same seed gives bit-identical weights");
  std::vector<double> vp;
  for (const auto& x : d.valid) vp.push_back(models::mlp_predict(net, x.drivers()));
  c.note(format("validation MAPE %% = %.4f", models::mape(vp, d.valid.costs())));
}

// ---- 9: genetic-fuzzy ------------------------------------------------------------

void genetic_fuzzy(Checker& c, const AcceptanceOptions& o) {
  const auto d = bundled(o);
  const auto ps = fuzzy::partitions_for(d.train, 7, 1001, fuzzy::PartitionShape::gaussian);
  const auto wm = fuzzy::generate_rules_wm(d.train, ps);
  const auto grid = fuzzy::candidate_grid(d.train, ps);
  fuzzy::GaConfig ga;
  ga.seed = o.seed;
  ga.wm_hint = wm.size();
  const auto result = fuzzy::ga_select_rules(grid, d.train, ga);
  const auto valid = fuzzy::fitness(result.base, d.valid);
  c.note(format("%zu candidates over 7 gaussian labels, %zu Wang-Mendel rules", grid.size(), wm.size()));
  c.expect(result.base.size() <= 100, format("GA selected %zu rules (limit 100)", result.base.size()));
  c.expect(valid.mape <= 20.0, format("validation MAPE %.4f%% <= 20%% (%zu uncovered cases)", valid.mape,
                                      valid.uncovered));

  // Ten-rule pool: GA against exhaustive enumeration of every non-empty subset.
  std::vector<std::uint8_t> first10(wm.size(), 0);
  for (std::size_t i = 0; i < 10 && i < wm.size(); ++i) first10[i] = 1;
  const auto pool = wm.subset(first10);
  const fuzzy::SubsetEvaluator eval(pool, d.train);
  double best = 0;
  std::vector<std::uint8_t> mask(pool.size());
  for (unsigned bits = 1; bits < (1u << pool.size()); ++bits) {
    for (std::size_t i = 0; i < pool.size(); ++i) mask[i] = (bits >> i) & 1u;
    best = std::max(best, eval.evaluate(mask).fitness);
  }
  fuzzy::GaConfig small;
  small.seed = o.seed;
  const auto ga10 = fuzzy::ga_select_rules(pool, d.train, small);
  c.expect(pool.size() == 10 && ga10.best.fitness == best,
           format("10-rule pool: GA fitness %.10f, exhaustive optimum over 1023 subsets %.10f", ga10.best.fitness, best));

  const auto head = d.train.head(80);
  const auto wm6 = fuzzy::generate_rules_wm(head, fuzzy::partitions_for(head, 6));
  c.within("Wang-Mendel rules, 6 labels, first 80 cases", static_cast<double>(wm6.size()), 63, 10);
}

// ---- 10: property suites ---------------------------------------------------------

void properties(Checker& c, const AcceptanceOptions& o) {
  std::mt19937_64 gen(o.seed);

  // Factor analysis on random correlated data.
  double eig_gap = 0, comm_gap = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const Eigen::Index n = 80, p = 6;
    Eigen::MatrixXd x(n, p);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double f1 = models::uniform(gen, -1, 1), f2 = models::uniform(gen, -1, 1);
      for (Eigen::Index j = 0; j < p; ++j) {
        x(i, j) = (j < 3 ? f1 : f2) * (0.5 + 0.1 * static_cast<double>(j)) + models::uniform(gen, -0.6, 0.6);
      }
    }
    std::vector<std::string> names;
    for (Eigen::Index j = 0; j < p; ++j) names.push_back("v" + std::to_string(j));
    const auto cm = screening::correlation_matrix(x, names);
    const auto full = screening::pca(cm.r);
    eig_gap = std::max(eig_gap, std::abs(full.eigenvalues.sum() - static_cast<double>(p)));
    const auto kept = screening::truncate(full, std::max<std::size_t>(2, screening::retain_components(
                                                                             std::span<const double>(full.eigenvalues.data(), full.eigenvalues.size()),
                                                                             screening::RetentionRule::kaiser)));
    const auto rotated = screening::varimax(kept.loadings);
    const Eigen::VectorXd before = kept.loadings.rowwise().squaredNorm();
    const Eigen::VectorXd after = rotated.rowwise().squaredNorm();
    comm_gap = std::max(comm_gap, (before - after).cwiseAbs().maxCoeff());
  }
  c.expect(eig_gap <= 1e-9, format("PCA eigenvalue sum = p, largest gap %.3g over 25 matrices", eig_gap));
  c.expect(comm_gap <= 1e-9, format("varimax keeps communalities, largest gap %.3g", comm_gap));

  bool kmo_exact = true;
  for (int trial = 0; trial < 25; ++trial) {
    Eigen::MatrixXd x(30, 2);
    for (Eigen::Index i = 0; i < 30; ++i) {
      x(i, 0) = models::uniform01(gen);
      x(i, 1) = x(i, 0) * models::uniform(gen, -1, 1) + models::uniform01(gen);
    }
    kmo_exact = kmo_exact && screening::adequacy(x).kmo == 0.5;
  }
  c.expect(kmo_exact, "two-variable KMO is exactly 0.5 on 25 random data sets");
  const auto ident = screening::adequacy_from_correlation(Eigen::MatrixXd::Identity(5, 5), 50);
  c.expect(ident.bartlett == 0.0, format("Bartlett statistic on the identity = %g", std::abs(ident.bartlett)));

  // Fuzzy algebra.
  double unity_gap = 0;
  for (std::size_t labels = 2; labels <= 9; ++labels) {
    const double lo = models::uniform(gen, -100, 100), hi = lo + models::uniform(gen, 1, 500);
    const auto part = fuzzy::uniform_partition("x", lo, hi, labels, "a");
    for (int k = 0; k < 500; ++k) {
      const double v = models::uniform(gen, lo, hi);
      double sum = 0;
      for (const auto& mf : part.sets) sum += mf(v);
      unity_gap = std::max(unity_gap, std::abs(sum - 1));
    }
  }
  c.expect(unity_gap <= 1e-9, format("triangular partitions sum to 1, largest gap %.3g", unity_gap));

  double inv_gap = 0;
  bool cuts = true;
  for (int trial = 0; trial < 50; ++trial) {
    double a[4];
    for (double& v : a) v = models::uniform(gen, 0, 10);
    std::sort(a, a + 4);
    const auto mf = trial % 2 ? fuzzy::MembershipFunction::trapezoidal(a[0], a[1], a[2], a[3])
                              : fuzzy::MembershipFunction::triangular(a[0], a[1], a[3]);
    const auto set = fuzzy::FuzzySet::sample(mf, {0, 10, 1001});
    const auto twice = fuzzy::complement(fuzzy::complement(set));
    for (std::size_t i = 0; i < set.mu.size(); ++i) inv_gap = std::max(inv_gap, std::abs(twice.mu[i] - set.mu[i]));
    const auto ls = fuzzy::level_sets(mf);
    const auto zero = fuzzy::alpha_cut(mf, 0.0), one = fuzzy::alpha_cut(mf, 1.0);
    cuts = cuts && zero && ls.support && *zero == *ls.support && one && ls.core && *one == *ls.core;
  }
  c.expect(inv_gap <= 0x1p-52, format("complement is an involution, largest gap %.3g", inv_gap));
  c.expect(cuts, "alpha-cut at 0 is the support and at 1 the core on 50 random sets");

  // Sensitivity scenarios on the sqrt regression.
  const auto d = bundled(o);
  const auto fit = models::fit_parametric(d.train, models::Transform::sqrt);
  const models::CostPredictor predict = [&](const Drivers& x) { return models::predict_cost(fit, x); };
  const auto bounds = DriverBounds::of(d.train);
  const Drivers base{19.6, 453, 6, 2014};
  models::ScenarioOptions none;
  none.seed = o.seed;
  const auto flat = models::sensitivity_scenarios(predict, base, none, bounds);
  const bool all_base = std::all_of(flat.values.begin(), flat.values.end(), [&](double v) { return v == flat.base; });
  c.expect(flat.sd == 0 && all_base && flat.values.size() == 30, format("no toggles: 30 scenarios equal to the base, sd %g", flat.sd));

  models::ScenarioOptions all;
  all.toggles.assign(kAllDrivers.begin(), kAllDrivers.end());
  all.seed = o.seed;
  const auto spread = models::sensitivity_scenarios(predict, base, all, bounds);
  bool inside = true;
  for (const auto& x : spread.inputs) {
    for (Driver v : kAllDrivers) {
      double lo = std::max(bounds.lower(v), base[v] * (1 - all.band));
      double hi = std::min(bounds.upper(v), base[v] * (1 + all.band));
      if (v == Driver::year) {
        lo = std::floor(lo);
        hi = std::ceil(hi);
      }
      inside = inside && x[v] >= lo && x[v] <= hi;
    }
  }
  c.expect(inside, "every toggled driver stays inside the band and the training bounds");
  models::ScenarioOptions length_only;
  length_only.toggles = {Driver::length};
  length_only.seed = o.seed;
  const Drivers case11{19.6, 453, 6, 2020};
  const auto one = models::sensitivity_scenarios(predict, case11, length_only, bounds);
  const auto two = models::sensitivity_scenarios(predict, case11, length_only, bounds);
  bool fixed = true, banded = true;
  for (const auto& x : one.inputs) {
    fixed = fixed && x.area_ha == case11.area_ha && x.valves == case11.valves && x.year == case11.year;
    banded = banded && x.length_m >= std::max(339.75, bounds.lower(Driver::length)) &&
             x.length_m <= std::min(566.25, bounds.upper(Driver::length));
  }
  c.expect(fixed, "untoggled drivers are identical across scenarios");
  c.expect(banded, "length toggled on (19.6, 453, 6, 2020) stays in [339.75, 566.25]");
  c.expect(one.values == two.values && one.mean == two.mean && one.sd == two.sd,
           format("same seed reproduces the scenarios bit-exactly (mean %.2f, sd %.2f)", one.mean, one.sd));
}

struct Entry {
  const char* title;
  void (*run)(Checker&, const AcceptanceOptions&);
};

const Entry kCriteria[kCriterionCount] = {
    {"sqrt-response regression: R^2, training and validation MAPE", quadratic_model},
    {"five response transformations: R^2 and MAPE", transformations},
    {"regression diagnostics: Durbin-Watson, Cook's distance, tolerances", diagnostics},
    {"stepwise selection order and cumulative R", stepwise},
    {"Fuzzy Delphi centroids and alpha screening", fuzzy_delphi},
    {"Fuzzy AHP extents, possibility degrees, weights, CR", fuzzy_ahp},
    {"CBR similarities and validation MAPE", cbr},
    {"MLP 4-5-1: MAPE, gradient check, reproducibility", mlp},
    {"genetic-fuzzy rule selection and Wang-Mendel rule count", genetic_fuzzy},
    {"property suites: factor analysis, fuzzy algebra, sensitivity", properties},
};

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  if (id < 1 || id > kCriterionCount) throw InputError("no criterion " + std::to_string(id));
  const auto& entry = kCriteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = entry.title;
  const auto t0 = std::chrono::steady_clock::now();
  Checker c(r);
  try {
    entry.run(c, options);
  } catch (const std::exception& e) {
    c.expect(false, std::string("error: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, options));
  return out;
}

}  // namespace fcip::app
