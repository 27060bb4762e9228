#pragma once

// Application layer shared by the command-line tool and the HTTP server:
// persisted cost models, the prediction service, run manifests and the
// acceptance suite.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fcip/data.hpp"
#include "fcip/fuzzy.hpp"
#include "fcip/io.hpp"
#include "fcip/models.hpp"

namespace fcip::app {

using io::Json;

// ---- cost models -------------------------------------------------------------

enum class ModelKind { regression, mlp, cbr, fuzzy };

std::string_view kind_name(ModelKind k);
ModelKind parse_kind(std::string_view name);

/// Mamdani rule base used as a cost model.
struct FuzzyCostModel {
  fuzzy::RuleBase base;
  fuzzy::Defuzzifier defuzzifier = fuzzy::Defuzzifier::wam;
  int last_year = 0;
  DriverBounds bounds;
};

using ModelImpl = std::variant<models::FittedCostModel, models::MlpModel, models::CbrModel, FuzzyCostModel>;

class CostModel {
 public:
  CostModel(std::string name, ModelImpl impl, Json metrics = Json::object(), std::uint64_t seed = 0);

  const std::string& name() const noexcept { return name_; }
  ModelKind kind() const noexcept;
  /// Response transformation, "none" for models without one.
  std::string transformation() const;
  /// Raw model output in LE at the given drivers (no inflation).
  double predict(const Drivers& d) const;
  int last_year() const noexcept { return last_year_; }
  const DriverBounds& bounds() const noexcept { return bounds_; }
  const Json& metrics() const noexcept { return metrics_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const ModelImpl& impl() const noexcept { return impl_; }

 private:
  std::string name_;
  ModelImpl impl_;
  Json metrics_;
  std::uint64_t seed_;
  int last_year_ = 0;
  DriverBounds bounds_;
};

Json to_json(const CostModel& m);
CostModel model_from_json(const Json& j, std::string name);
/// The model's name is the file stem.
CostModel load_model(const std::filesystem::path& path);

struct FitOptions {
  models::Transform transform = models::Transform::sqrt;
  std::uint64_t seed = 0;
  std::size_t hidden = 5;
  int epochs = 5000;
  models::CbrConfig cbr;
  std::size_t labels = 7;
  fuzzy::PartitionShape shape = fuzzy::PartitionShape::gaussian;
  fuzzy::Defuzzifier defuzzifier = fuzzy::Defuzzifier::wam;
  std::optional<std::size_t> population;
  std::optional<std::size_t> generations;
};

/// Fit on `train`; validation metrics are added when `valid` is given.
CostModel fit_model(ModelKind kind, const Dataset& train, const Dataset* valid, const FitOptions& options,
                    std::string name);

class ModelRegistry {
 public:
  void add(CostModel model);
  /// Throws InputError("model: unknown '...'").
  const CostModel& get(const std::string& name) const;
  /// The model a request without a "model" field refers to: the only one loaded.
  const CostModel& only() const;
  const CostModel* first_of(ModelKind kind) const;
  const std::vector<CostModel>& models() const noexcept { return models_; }
  bool empty() const noexcept { return models_.empty(); }

 private:
  std::vector<CostModel> models_;
};

// ---- prediction service ------------------------------------------------------

struct PredictRequest {
  std::optional<std::string> model;
  Drivers drivers;
  std::optional<double> inflation_rate;  // percent per year
  std::vector<Driver> toggles;
  std::optional<std::size_t> scenarios;
  std::uint64_t seed = 0;
};

/// Field-level validation; InputError messages start with the field name.
PredictRequest parse_predict_request(const Json& body);

struct RetrieveRequest {
  std::optional<std::string> model;
  Drivers drivers;
  std::size_t k = 1;
};

RetrieveRequest parse_retrieve_request(const Json& body);

class Service {
 public:
  explicit Service(ModelRegistry registry);

  Json predict(const PredictRequest& request) const;
  Json predict(const Json& body) const { return predict(parse_predict_request(body)); }
  Json cbr_retrieve(const Json& body) const;
  Json models() const;

  const ModelRegistry& registry() const noexcept { return registry_; }

 private:
  ModelRegistry registry_;
};

struct HttpResponse {
  int status = 200;
  std::string body;
};

/// Routes one request; errors become JSON bodies with 400 (input), 404, 422
/// (domain) or 500.
HttpResponse handle(const Service& service, std::string_view method, std::string_view path,
                    const std::string& body);

// ---- run manifest ------------------------------------------------------------

std::string sha256_hex(std::string_view bytes);
std::string toolkit_version();

struct RunManifest {
  std::string command;
  std::vector<std::string> inputs;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> overrides;
  std::string version = toolkit_version();
  std::string output_digest;

  Json to_json() const;
};

// ---- acceptance --------------------------------------------------------------

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> details;
  double seconds = 0;
};

struct AcceptanceOptions {
  std::filesystem::path data_dir = data_directory();
  std::uint64_t seed = 0;
};

inline constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

}  // namespace fcip::app
