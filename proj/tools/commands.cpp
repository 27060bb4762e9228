#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>

#include "commands.hpp"
#include "fcip/app.hpp"
#include "fcip/error.hpp"
#include "fcip/io.hpp"
#include "fcip/mcdm.hpp"
#include "fcip/screening.hpp"

namespace fcip::cli {

using app::Json;
using io::fixed;

int& exit_status() {
  static int status = 0;
  return status;
}

namespace {

std::string default_data(const char* file) { return (data_directory() / file).string(); }

/// Writes report.json and manifest.json under `out`, or screen-<name>/ when
/// no directory was given. Returns the directory used.
std::filesystem::path emit(const std::string& out, const std::string& command, const std::vector<std::string>& inputs,
                           std::uint64_t seed, std::vector<std::pair<std::string, std::string>> overrides,
                           const Json& report) {
  const std::filesystem::path dir = out.empty() ? "screen-" + command.substr(command.find(' ') + 1) : out;
  const auto text = io::dump(report);
  io::write_text(dir / "report.json", text);
  app::RunManifest m{command, inputs, seed, std::move(overrides), app::toolkit_version(), app::sha256_hex(text)};
  io::write_text(dir / "manifest.json", io::dump(m.to_json()));
  return dir;
}

screening::DesignData load_design(const std::string& path) {
  const auto text = read_text_file(path);
  const auto eol = text.find_first_of("\r\n");
  auto header = text.substr(0, eol);
  if (header.rfind("\xEF\xBB\xBF", 0) == 0) header.erase(0, 3);
  if (header == kDatasetHeader) return screening::DesignData::from_dataset(parse_dataset(text, DatasetRole::combined));
  return screening::DesignData::from_extended(parse_extended_dataset(text));
}

// ---- screen ------------------------------------------------------------------

struct ScreenArgs {
  std::string surveys = default_data("surveys/delphi");
  std::string fahp_surveys = default_data("surveys/fahp");
  std::string data = default_data("training.csv");
  std::string out;
  double threshold = 3.0;
  double alpha = 0.6;
  std::vector<std::string> exclude;
  double p_enter = 0.05;
  double p_remove = 0.10;
  int mode = 2;
  std::string method = "pearson";
  std::string rule = "kaiser";
  double eigen_threshold = 1.0;
  bool no_rotate = false;
};

void screen_likert(const ScreenArgs& a) {
  const auto responses = io::likert_responses(io::load_surveys(a.surveys));
  std::vector<mcdm::ScoredParameter> scored;
  io::TextTable table({"id", "n", "mean", "se", "result"});
  Json rows = Json::array();
  for (const auto& r : responses) scored.push_back({r.parameter_id, mcdm::mean_score(r)});
  const auto kept = mcdm::screen_by_mean(scored, a.threshold);
  for (std::size_t i = 0; i < responses.size(); ++i) {
    const auto& r = responses[i];
    const double se = r.scores.size() >= 2 ? mcdm::standard_error(r) : 0.0;
    const bool keep = std::find(kept.begin(), kept.end(), r.parameter_id) != kept.end();
    table.row({r.parameter_id, std::to_string(r.scores.size()), fixed(scored[i].value, 3), fixed(se, 3),
               keep ? "retain" : "drop"});
    rows.push_back({{"id", r.parameter_id}, {"n", r.scores.size()}, {"mean", scored[i].value}, {"se", se}, {"retained", keep}});
  }
  std::cout << table.render();
  emit(a.out, "screen likert", {a.surveys}, 0, {{"threshold", fixed(a.threshold, 3)}},
       Json{{"threshold", a.threshold}, {"parameters", rows}, {"retained", kept}});
}

void screen_fdm(const ScreenArgs& a) {
  const auto responses = io::likert_responses(io::load_surveys(a.surveys));
  const auto scale = mcdm::FuzzyLikertScale::standard();
  std::vector<mcdm::ScoredParameter> crisp;
  std::vector<mcdm::Tfn> aggregated;
  for (const auto& r : responses) {
    std::vector<mcdm::Tfn> opinions;
    for (int s : r.scores) opinions.push_back(scale(s));
    aggregated.push_back(mcdm::fdm_aggregate(opinions));
    crisp.push_back({r.parameter_id, mcdm::defuzzify_centroid(aggregated.back())});
  }
  const auto result = mcdm::fdm_screen(crisp, a.alpha, a.exclude);
  io::TextTable table({"id", "L", "M", "U", "crisp", "result"});
  Json rows = Json::array();
  for (std::size_t i = 0; i < crisp.size(); ++i) {
    const auto& w = aggregated[i];
    const bool keep = std::find(result.retained.begin(), result.retained.end(), crisp[i].id) != result.retained.end();
    table.row({crisp[i].id, fixed(w.l, 2), fixed(w.m, 2), fixed(w.u, 2), fixed(crisp[i].value, 2), keep ? "select" : "delete"});
    rows.push_back({{"id", crisp[i].id}, {"tfn", io::to_json(w)}, {"crisp", crisp[i].value}, {"selected", keep}});
  }
  std::cout << table.render();
  std::string excluded;
  for (const auto& e : a.exclude) excluded += (excluded.empty() ? "" : ",") + e;
  emit(a.out, "screen fdm", {a.surveys}, 0, {{"alpha", fixed(a.alpha, 3)}, {"exclude", excluded}},
       Json{{"alpha", a.alpha}, {"exclusions", a.exclude}, {"parameters", rows}, {"retained", result.retained},
            {"deleted", result.deleted}});
}

void screen_fahp(const ScreenArgs& a) {
  const auto surveys = io::load_surveys(a.fahp_surveys);
  const auto matrices = io::pairwise_matrices(surveys);
  if (matrices.empty()) throw InputError("no pairwise matrices in " + a.fahp_surveys);
  const auto agg = mcdm::fahp_aggregate(matrices);
  const auto ext = mcdm::synthetic_extents(agg);
  const auto w = mcdm::fahp_weights(ext);
  const auto cons = mcdm::consistency(agg);
  io::TextTable table({"criterion", "S.l", "S.m", "S.u", "raw", "weight"});
  Json extents = Json::array(), degrees = Json::array();
  for (std::size_t i = 0; i < ext.size(); ++i) {
    const auto& s = ext[i].value;
    table.row({ext[i].criterion, fixed(s.l, 3), fixed(s.m, 3), fixed(s.u, 3), fixed(w.raw[i], 3), fixed(w.normalized[i], 3)});
    extents.push_back({{"criterion", ext[i].criterion}, {"extent", io::to_json(s)}});
    for (std::size_t k = 0; k < ext.size(); ++k) {
      if (k == i) continue;
      degrees.push_back({{"b", ext[i].criterion}, {"a", ext[k].criterion},
                         {"v", mcdm::degree_of_possibility(ext[i], ext[k])}});
    }
  }
  std::cout << table.render();
  std::printf("CR = %.4f (lambda_max %.4f, %s)\n", cons.cr, cons.lambda_max, cons.cr <= 0.1 ? "acceptable" : "inconsistent");
  Json report{{"experts", surveys.size()},
              {"aggregate", io::to_json(agg)},
              {"extents", extents},
              {"possibility", degrees},
              {"weights", io::to_json(w)},
              {"consistency", {{"lambda_max", cons.lambda_max}, {"ci", cons.ci}, {"cr", cons.cr}}}};
  const auto dir = emit(a.out, "screen fahp", {a.fahp_surveys}, 0, {}, report);
  io::write_text(dir / "weights.json", io::dump(io::to_json(w)));
}

void print_trace(const screening::SelectionTrace& t) {
  io::TextTable table({"step", "action", "variable", "R", "R2", "adj R2", "p"});
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    table.row({std::to_string(i + 1), s.action == screening::StepAction::enter ? "enter" : "remove", s.variable,
               fixed(s.r, 4), fixed(s.r2, 4), fixed(s.adj_r2, 4), fixed(s.p_value, 4)});
  }
  std::cout << table.render();
  std::string sel;
  for (const auto& v : t.selected) sel += (sel.empty() ? "" : ", ") + v;
  std::cout << "selected: {" << sel << "}\n";
}

void screen_selection(const ScreenArgs& a, screening::SelectionMethod method) {
  const auto design = load_design(a.data);
  screening::SelectionOptions opt{method, a.p_enter, a.p_remove};
  if (!(opt.p_enter <= opt.p_remove)) throw InputError("--p-enter must not exceed --p-remove");
  const auto trace = screening::select_variables(design, opt);
  print_trace(trace);
  const std::string name(screening::method_name(method));
  emit(a.out, "screen " + name, {a.data}, 0, {{"p_enter", fixed(a.p_enter, 4)}, {"p_remove", fixed(a.p_remove, 4)}},
       io::to_json(trace));
}

void screen_hybrid(const ScreenArgs& a) {
  if (a.mode != 1 && a.mode != 2) throw InputError("--mode must be 1 or 2");
  const auto design = load_design(a.data);
  const auto result = screening::hybrid_select(design, a.mode, {screening::SelectionMethod::stepwise, a.p_enter, a.p_remove});
  std::vector<std::string> kept;
  for (auto i : result.filter.retained) kept.push_back(design.names[i]);
  std::string k;
  for (const auto& v : kept) k += (k.empty() ? "" : ", ") + v;
  std::cout << "after correlation filter: {" << k << "}\n";
  print_trace(result.trace);
  emit(a.out, "screen hybrid", {a.data}, 0, {{"mode", std::to_string(a.mode)}},
       Json{{"mode", a.mode},
            {"filter", {{"retained", kept}, {"dropped_collinear", result.filter.dropped_collinear},
                        {"dropped_weak", result.filter.dropped_weak}}},
            {"trace", io::to_json(result.trace)},
            {"selected", result.selected}});
}

screening::CorrelationMethod parse_method(const std::string& m) {
  if (m == "pearson") return screening::CorrelationMethod::pearson;
  if (m == "spearman") return screening::CorrelationMethod::spearman;
  throw InputError("--method must be pearson or spearman");
}

void screen_correlation(const ScreenArgs& a) {
  const auto design = load_design(a.data);
  Eigen::MatrixXd all(design.x.rows(), design.x.cols() + 1);
  all << design.x, design.y;
  auto names = design.names;
  names.push_back(design.response);
  const auto cm = screening::correlation_matrix(all, names, parse_method(a.method));
  std::vector<std::string> header{""};
  header.insert(header.end(), names.begin(), names.end());
  io::TextTable table(header);
  for (Eigen::Index i = 0; i < cm.r.rows(); ++i) {
    std::vector<std::string> row{names[static_cast<std::size_t>(i)]};
    for (Eigen::Index k = 0; k < cm.r.cols(); ++k) row.push_back(fixed(cm.r(i, k), 3));
    table.row(row);
  }
  std::cout << table.render();
  emit(a.out, "screen correlation", {a.data}, 0, {{"method", a.method}}, io::to_json(cm));
}

void screen_efa(const ScreenArgs& a) {
  const auto design = load_design(a.data);
  const auto adequacy = screening::adequacy(design.x);
  const auto cm = screening::correlation_matrix(design.x, design.names);
  const auto full = screening::pca(cm.r);
  screening::RetentionRule rule;
  if (a.rule == "kaiser") {
    rule = screening::RetentionRule::kaiser;
  } else if (a.rule == "jolliffe") {
    rule = screening::RetentionRule::jolliffe;
  } else if (a.rule == "threshold") {
    rule = screening::RetentionRule::threshold;
  } else {
    throw InputError("--rule must be kaiser, jolliffe or threshold");
  }
  const std::span<const double> eig(full.eigenvalues.data(), static_cast<std::size_t>(full.eigenvalues.size()));
  const auto keep = std::max<std::size_t>(1, screening::retain_components(eig, rule, a.eigen_threshold));
  auto solution = screening::truncate(full, keep);
  if (!a.no_rotate && keep >= 2) solution.loadings = screening::varimax(solution.loadings);
  std::printf("n = %zu, determinant = %.6g%s, KMO = %.4f, Bartlett chi2 = %.4f (df %.0f, p = %.4g)\n", adequacy.n,
              adequacy.determinant, adequacy.determinant_ok ? "" : " (below 1e-5)", adequacy.kmo, adequacy.bartlett,
              adequacy.bartlett_df, adequacy.bartlett_p);
  std::vector<std::string> header{"variable", "MSA", "communality"};
  for (std::size_t k = 0; k < keep; ++k) header.push_back("F" + std::to_string(k + 1));
  io::TextTable table(header);
  for (std::size_t i = 0; i < design.names.size(); ++i) {
    std::vector<std::string> row{design.names[i], fixed(adequacy.msa[i], 3),
                                 fixed(solution.communalities(static_cast<Eigen::Index>(i)), 3)};
    for (std::size_t k = 0; k < keep; ++k) {
      row.push_back(fixed(solution.loadings(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)), 3));
    }
    table.row(row);
  }
  std::cout << table.render();
  emit(a.out, "screen efa", {a.data}, 0,
       {{"rule", a.rule}, {"threshold", fixed(a.eigen_threshold, 3)}, {"rotate", a.no_rotate ? "none" : "varimax"}},
       Json{{"adequacy", io::to_json(adequacy, design.names)},
            {"rotation", a.no_rotate || keep < 2 ? "none" : "varimax"},
            {"solution", io::to_json(solution, design.names)}});
}

// ---- fit ---------------------------------------------------------------------

struct FitArgs {
  std::string train = default_data("training.csv");
  std::string valid = default_data("validation.csv");
  bool no_valid = false;
  std::string out;
  std::string transform = "sqrt";
  std::uint64_t seed = 0;
  std::size_t hidden = 5;
  int epochs = 5000;
  std::vector<double> weights{0.2, 0.2, 0.2, 0.4};
  std::size_t labels = 7;
  std::string mf = "gaussian";
  std::string defuzzifier = "wam";
  std::optional<std::size_t> population;
  std::optional<std::size_t> generations;
};

void fit(app::ModelKind kind, const FitArgs& a) {
  const auto train = load_dataset(a.train, DatasetRole::training);
  std::optional<Dataset> valid;
  if (!a.no_valid) valid = load_dataset(a.valid, DatasetRole::validation);
  app::FitOptions o;
  o.transform = models::parse_transform(a.transform);
  o.seed = a.seed;
  o.hidden = a.hidden;
  o.epochs = a.epochs;
  if (a.weights.size() != kDriverCount) throw InputError("--weights needs four values");
  std::copy(a.weights.begin(), a.weights.end(), o.cbr.weights.begin());
  models::validate(o.cbr);
  o.labels = a.labels;
  o.shape = fuzzy::parse_partition_shape(a.mf);
  if (a.defuzzifier == "cog") {
    o.defuzzifier = fuzzy::Defuzzifier::cog;
  } else if (a.defuzzifier != "wam") {
    throw InputError("--defuzzifier must be wam or cog");
  }
  o.population = a.population;
  o.generations = a.generations;

  const std::filesystem::path out = a.out.empty() ? std::filesystem::path(std::string(app::kind_name(kind)) + ".json")
                                                  : std::filesystem::path(a.out);
  const auto model = app::fit_model(kind, train, valid ? &*valid : nullptr, o, out.stem().string());
  const auto text = io::dump(app::to_json(model));
  io::write_text(out, text);
  if (kind == app::ModelKind::fuzzy) {
    const auto& f = std::get<app::FuzzyCostModel>(model.impl());
    auto listing = out;
    listing.replace_extension(".rules.txt");
    io::write_text(listing, io::rule_listing(f.base));
  }
  std::vector<std::pair<std::string, std::string>> overrides;
  switch (kind) {
    case app::ModelKind::regression: overrides = {{"transform", a.transform}}; break;
    case app::ModelKind::mlp:
      overrides = {{"transform", a.transform}, {"hidden", std::to_string(a.hidden)}, {"epochs", std::to_string(a.epochs)}};
      break;
    case app::ModelKind::cbr: {
      std::string w;
      for (double v : a.weights) w += (w.empty() ? "" : ",") + fixed(v, 4);
      overrides = {{"weights", w}};
      break;
    }
    case app::ModelKind::fuzzy:
      overrides = {{"labels", std::to_string(a.labels)}, {"mf", a.mf}, {"defuzzifier", a.defuzzifier}};
      if (a.population) overrides.emplace_back("population", std::to_string(*a.population));
      if (a.generations) overrides.emplace_back("generations", std::to_string(*a.generations));
      break;
  }
  std::vector<std::string> inputs{a.train};
  if (valid) inputs.push_back(a.valid);
  const app::RunManifest manifest{"fit " + std::string(app::kind_name(kind)), inputs, a.seed, overrides,
                                  app::toolkit_version(), app::sha256_hex(text)};
  auto manifest_path = out;
  manifest_path.replace_extension(".manifest.json");
  io::write_text(manifest_path, io::dump(manifest.to_json()));
  std::cout << io::dump(Json{{"model", out.string()}, {"digest", manifest.output_digest}, {"metrics", model.metrics()}});
}

}  // namespace

void add_screen(CLI::App& app) {
  auto* screen = app.add_subcommand("screen", "Cost-driver screening from surveys or data");
  screen->require_subcommand(1);
  auto a = std::make_shared<ScreenArgs>();
  auto out = [a](CLI::App* s) { s->add_option("--out", a->out, "Directory for report.json and manifest.json (default screen-<name>)"); };

  auto* likert = screen->add_subcommand("likert", "Mean score and standard error of Likert surveys");
  likert->add_option("--surveys", a->surveys, "Directory of survey JSON files")->capture_default_str();
  likert->add_option("--threshold", a->threshold, "Minimum mean score")->capture_default_str();
  out(likert);
  likert->callback([a] { screen_likert(*a); });

  auto* fdm = screen->add_subcommand("fdm", "Fuzzy Delphi screening of Likert surveys");
  fdm->add_option("--surveys", a->surveys, "Directory of survey JSON files")->capture_default_str();
  fdm->add_option("--alpha", a->alpha, "Crisp-value threshold")->capture_default_str();
  fdm->add_option("--exclude", a->exclude, "Parameters deleted regardless of score");
  out(fdm);
  fdm->callback([a] { screen_fdm(*a); });

  auto* fahp = screen->add_subcommand("fahp", "Fuzzy AHP criteria weights from pairwise surveys");
  fahp->add_option("--surveys", a->fahp_surveys, "Directory of survey JSON files")->capture_default_str();
  out(fahp);
  fahp->callback([a] { screen_fahp(*a); });

  const std::pair<const char*, screening::SelectionMethod> methods[] = {
      {"forward", screening::SelectionMethod::forward},
      {"backward", screening::SelectionMethod::backward},
      {"stepwise", screening::SelectionMethod::stepwise}};
  for (const auto& [name, method] : methods) {
    auto* s = screen->add_subcommand(name, std::string(name) + " regression selection");
    s->add_option("--data", a->data, "Key-driver or extended CSV")->capture_default_str();
    s->add_option("--p-enter", a->p_enter, "Entry p-value")->capture_default_str();
    s->add_option("--p-remove", a->p_remove, "Removal p-value")->capture_default_str();
    out(s);
    s->callback([a, m = method] { screen_selection(*a, m); });
  }

  auto* hybrid = screen->add_subcommand("hybrid", "Correlation filter followed by stepwise selection");
  hybrid->add_option("--data", a->data, "Key-driver or extended CSV")->capture_default_str();
  hybrid->add_option("--mode", a->mode, "1: drop weakly correlated variables too; 2: collinearity only")
      ->capture_default_str();
  hybrid->add_option("--p-enter", a->p_enter, "Entry p-value")->capture_default_str();
  hybrid->add_option("--p-remove", a->p_remove, "Removal p-value")->capture_default_str();
  out(hybrid);
  hybrid->callback([a] { screen_hybrid(*a); });

  auto* corr = screen->add_subcommand("correlation", "Correlation matrix of drivers and cost");
  corr->add_option("--data", a->data, "Key-driver or extended CSV")->capture_default_str();
  corr->add_option("--method", a->method, "pearson or spearman")->capture_default_str();
  out(corr);
  corr->callback([a] { screen_correlation(*a); });

  auto* efa = screen->add_subcommand("efa", "Sampling adequacy, principal components and varimax");
  efa->add_option("--data", a->data, "Key-driver or extended CSV")->capture_default_str();
  efa->add_option("--rule", a->rule, "kaiser, jolliffe or threshold")->capture_default_str();
  efa->add_option("--threshold", a->eigen_threshold, "Eigenvalue cut for --rule threshold")->capture_default_str();
  efa->add_flag("--no-rotate", a->no_rotate, "Report unrotated loadings");
  out(efa);
  efa->callback([a] { screen_efa(*a); });
}

void add_fit(CLI::App& app) {
  auto* fit_cmd = app.add_subcommand("fit", "Fit a cost model and write it as JSON");
  fit_cmd->require_subcommand(1);
  auto a = std::make_shared<FitArgs>();
  auto common = [a](CLI::App* s) {
    s->add_option("--train", a->train, "Training CSV")->capture_default_str();
    s->add_option("--valid", a->valid, "Validation CSV")->capture_default_str();
    s->add_flag("--no-valid", a->no_valid, "Skip validation metrics");
    s->add_option("--out", a->out, "Model file (default <kind>.json)");
    s->add_option("--seed", a->seed, "Random seed")->capture_default_str();
  };
  for (auto kind : {app::ModelKind::regression, app::ModelKind::mlp, app::ModelKind::cbr, app::ModelKind::fuzzy}) {
    auto* s = fit_cmd->add_subcommand(std::string(app::kind_name(kind)));
    common(s);
    switch (kind) {
      case app::ModelKind::regression:
        s->description("Least squares with a response transformation");
        s->add_option("--transform", a->transform, "none, sqrt, reciprocal, semilog or power")->capture_default_str();
        break;
      case app::ModelKind::mlp:
        s->description("4-H-1 tanh network trained by conjugate gradient");
        s->add_option("--transform", a->transform, "Target transformation")->capture_default_str();
        s->add_option("--hidden", a->hidden, "Hidden units")->capture_default_str();
        s->add_option("--epochs", a->epochs, "Epoch cap")->capture_default_str();
        break;
      case app::ModelKind::cbr:
        s->description("Case base with weighted ratio similarity");
        s->add_option("--weights", a->weights, "Attribute weights for area, length, valves, year")
            ->expected(4)
            ->delimiter(',');
        break;
      case app::ModelKind::fuzzy:
        s->description("Mamdani rule base selected by a genetic algorithm");
        s->add_option("--labels", a->labels, "Fuzzy sets per variable")->capture_default_str();
        s->add_option("--mf", a->mf, "gaussian or triangular")->capture_default_str();
        s->add_option("--defuzzifier", a->defuzzifier, "wam or cog")->capture_default_str();
        s->add_option("--population", a->population, "GA population size");
        s->add_option("--generations", a->generations, "GA generations");
        break;
    }
    s->callback([a, kind] { fit(kind, *a); });
  }
}

void add_predict(CLI::App& app) {
  struct Args {
    std::string model;
    double area = 0, length = 0, valves = 0, year = 0;
    std::optional<double> inflation;
    std::vector<std::string> toggles;
    std::optional<std::size_t> scenarios;
    std::uint64_t seed = 0;
  };
  auto a = std::make_shared<Args>();
  auto* s = app.add_subcommand("predict", "Estimate the cost of one project");
  s->add_option("--model", a->model, "Model JSON file")->required();
  s->add_option("--area-ha", a->area, "Command area (ha)")->required();
  s->add_option("--length-m", a->length, "Total pipeline length (m)")->required();
  s->add_option("--valves", a->valves, "Irrigation valves")->required();
  s->add_option("--year", a->year, "Construction year")->required();
  s->add_option("--inflation-rate", a->inflation, "Yearly inflation (%) beyond the last training year");
  s->add_option("--toggle", a->toggles, "Driver varied in scenarios (area, length, valves, year)");
  s->add_option("--scenarios", a->scenarios, "Scenario count (30 when toggles are given)");
  s->add_option("--seed", a->seed, "Scenario seed")->capture_default_str();
  s->callback([a] {
    app::ModelRegistry registry;
    registry.add(app::load_model(a->model));
    const app::Service service(std::move(registry));
    Json body{{"model", service.registry().models().front().name()},
              {"area_ha", a->area},
              {"length_m", a->length},
              {"valves", a->valves},
              {"year", a->year}};
    if (a->inflation) body["inflation_rate"] = *a->inflation;
    if (!a->toggles.empty()) body["toggles"] = a->toggles;
    if (a->scenarios) body["scenarios"] = *a->scenarios;
    body["seed"] = a->seed;
    std::cout << io::dump(service.predict(body));
  });
}

void add_bench(CLI::App& app) {
  struct Args {
    std::string data = data_directory().string();
    std::vector<int> only;
    bool verbose = false;
    std::uint64_t seed = 0;
  };
  auto a = std::make_shared<Args>();
  auto* s = app.add_subcommand("bench", "Run the acceptance suite on the bundled data");
  s->add_option("--data", a->data, "Data directory")->capture_default_str();
  s->add_option("--criterion", a->only, "Run only these criteria");
  s->add_option("--seed", a->seed, "Seed for stochastic criteria")->capture_default_str();
  s->add_flag("--verbose", a->verbose, "Show every check");
  s->callback([a] {
    app::AcceptanceOptions opt{a->data, a->seed};
    std::vector<app::CriterionResult> results;
    if (a->only.empty()) {
      results = app::run_acceptance(opt);
    } else {
      for (int id : a->only) results.push_back(app::run_criterion(id, opt));
    }
    io::TextTable table({"#", "result", "seconds", "criterion"});
    int failed = 0;
    for (const auto& r : results) {
      table.row({std::to_string(r.id), r.pass ? "PASS" : "FAIL", fixed(r.seconds, 2), r.title});
      failed += r.pass ? 0 : 1;
    }
    std::cout << table.render();
    for (const auto& r : results) {
      if (r.pass && !a->verbose) continue;
      std::cout << "\n[" << r.id << "] " << r.title << "\n";
      for (const auto& line : r.details) std::cout << "  " << line << "\n";
    }
    std::cout << "\n" << (results.size() - failed) << " of " << results.size() << " criteria pass\n";
    if (failed) exit_status() = 1;
  });
}

}  // namespace fcip::cli
