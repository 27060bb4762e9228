#pragma once

// Parametric cost models over the four key drivers: transformed regression,
// a small tanh MLP, case-based reasoning, and scenario sensitivity.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "fcip/data.hpp"

namespace fcip::models {

/// Response transformation applied before the least-squares fit.
enum class Transform { none, sqrt, reciprocal, semilog, power };

inline constexpr std::array<Transform, 5> kAllTransforms{Transform::none, Transform::sqrt, Transform::reciprocal,
                                                         Transform::semilog, Transform::power};

std::string_view transform_name(Transform t);
Transform parse_transform(std::string_view name);

double forward_transform(Transform t, double cost);
/// Back to LE. Throws DomainError("out-of-range prediction") when the value
/// has no preimage (negative under sqrt, non-positive under reciprocal...).
double inverse_transform(Transform t, double z);

/// Which series divides the absolute error.
enum class MapeBase { predicted, actual };

/// Mean of |actual - predicted| / base x 100. The default base is the prediction.
double mape(std::span<const double> predicted, std::span<const double> actual, MapeBase base = MapeBase::predicted);

struct FitMetrics {
  double r = 0;
  double r2 = 0;
  double adj_r2 = 0;
  double f = 0;
  double mape = 0;         // divided by prediction
  double mape_actual = 0;  // divided by observed cost
};

struct FittedCostModel {
  Transform transform = Transform::sqrt;
  double intercept = 0;
  std::array<double, kDriverCount> coefficients{};
  FitMetrics metrics;
  int last_year = 0;  // latest construction year in the training data
  DriverBounds bounds;
  std::size_t cases = 0;

  /// Linear predictor in transformed space.
  double linear(const Drivers& d) const;
};

FittedCostModel fit_parametric(const Dataset& train, Transform transform);
double predict_cost(const FittedCostModel& model, const Drivers& d);
std::vector<double> predict_all(const FittedCostModel& model, const Dataset& ds);

struct RegressionDiagnostics {
  std::vector<double> cooks;
  double max_cooks = 0;
  std::array<double, kDriverCount> vif{};
  std::array<double, kDriverCount> tolerance{};
  double durbin_watson = 0;
};

RegressionDiagnostics diagnostics(const FittedCostModel& model, const Dataset& train);

/// VIF of each column of `x` against the others.
std::vector<double> variance_inflation(const Eigen::MatrixXd& x);
double durbin_watson(std::span<const double> residuals);

double adjust_inflation(double cost, double rate_percent, double years);

// ---- random numbers ------------------------------------------------------------

/// Portable uniform draw in [0, 1) from the top 53 bits of the generator.
double uniform01(std::mt19937_64& gen);
double uniform(std::mt19937_64& gen, double lo, double hi);

// ---- MLP -----------------------------------------------------------------------

enum class Activation { tanh, linear };

struct MlpConfig {
  std::size_t hidden = 5;
  Transform target = Transform::sqrt;
  std::uint64_t seed = 0;
  int max_epochs = 5000;
  double tolerance = 1e-8;  // on normalized MSE
  Activation activation = Activation::tanh;
};

/// Min-max scaling of one variable to [-1, 1].
struct Scaler {
  double lo = 0;
  double hi = 1;

  double scale(double v) const;
  double unscale(double s) const;
};

struct MlpModel {
  std::size_t hidden = 5;
  Transform target = Transform::sqrt;
  Activation activation = Activation::tanh;
  std::uint64_t seed = 0;
  Eigen::MatrixXd w1;  // hidden x 4
  Eigen::VectorXd b1;  // hidden
  Eigen::VectorXd w2;  // hidden
  double b2 = 0;
  std::array<Scaler, kDriverCount> inputs{};
  Scaler output;  // in transformed space
  int epochs = 0;
  double loss = 0;
  int last_year = 0;
  double mape_train = 0;

  std::size_t parameter_count() const { return hidden * (kDriverCount + 2) + 1; }
  Eigen::VectorXd parameters() const;
  void set_parameters(const Eigen::VectorXd& theta);
  /// Network output in normalized target space.
  double forward(const std::array<double, kDriverCount>& scaled) const;
};

/// Random initial weights in [-0.5, 0.5] and scalers fitted to `train`.
MlpModel mlp_init(const Dataset& train, const MlpConfig& config);
MlpModel mlp_train(const Dataset& train, const MlpConfig& config = {});
double mlp_predict(const MlpModel& model, const Drivers& d);

/// Scaled inputs and targets of a sample, as used by the loss.
struct MlpSample {
  std::vector<std::array<double, kDriverCount>> x;
  std::vector<double> t;
};

MlpSample mlp_sample(const MlpModel& model, const Dataset& ds);

/// Mean squared error in normalized space and its analytic gradient.
double mlp_loss(const MlpModel& model, const MlpSample& s);
Eigen::VectorXd mlp_gradient(const MlpModel& model, const MlpSample& s);

using GradientFn = std::function<Eigen::VectorXd(const MlpModel&, const MlpSample&)>;

/// Largest relative gap between `gradient` and central differences (h = 1e-5).
double gradient_check(const MlpModel& model, const MlpSample& sample, const GradientFn& gradient = mlp_gradient);

// ---- CBR -----------------------------------------------------------------------

struct CbrConfig {
  std::array<double, kDriverCount> weights{0.2, 0.2, 0.2, 0.4};
};

void validate(const CbrConfig& c);

/// Case base with per-driver columns laid out for similarity scans.
class CbrModel {
 public:
  CbrModel(Dataset base, CbrConfig config = {});

  const Dataset& base() const noexcept { return base_; }
  const CbrConfig& config() const noexcept { return config_; }
  const std::vector<double>& column(Driver d) const { return columns_[static_cast<std::size_t>(d)]; }

  /// Retain step: a new model whose base also holds `solved`.
  CbrModel retain(const ProjectCase& solved) const;

 private:
  Dataset base_;
  CbrConfig config_;
  std::array<std::vector<double>, kDriverCount> columns_;
};

double attribute_similarity(double a, double b);
double case_similarity(std::span<const double> as, std::span<const double> weights);

struct RetrievedCase {
  std::size_t index = 0;
  std::string id;
  std::array<double, kDriverCount> as{};
  double cs = 0;
  double cost_le = 0;
};

struct CbrResult {
  double cost_le = 0;  // cost of the most similar case
  std::vector<RetrievedCase> ranked;
};

CbrResult cbr_predict(const CbrModel& model, const Drivers& query, std::size_t k = 1);
/// Similarity of `query` to every case of the base, in base order.
std::vector<double> similarities(const CbrModel& model, const Drivers& query);

// ---- sensitivity ---------------------------------------------------------------

using CostPredictor = std::function<double(const Drivers&)>;

struct ScenarioOptions {
  std::vector<Driver> toggles;
  std::size_t count = 30;
  double band = 0.25;
  std::uint64_t seed = 0;
};

struct ScenarioSet {
  double base = 0;
  std::vector<Drivers> inputs;
  std::vector<double> values;
  double mean = 0;
  double sd = 0;  // sample standard deviation
  std::uint64_t seed = 0;
  std::vector<Driver> toggles;
  double band = 0;
};

ScenarioSet sensitivity_scenarios(const CostPredictor& model, const Drivers& base, const ScenarioOptions& options,
                                  const DriverBounds& bounds);

struct Importance {
  Driver driver = Driver::area;
  double score = 0;
};

/// One-at-a-time perturbation of each driver by `band` x its training range
/// (clamped to that range), averaged over the training cases, normalized to sum 1.
std::vector<Importance> importance_ranking(const CostPredictor& model, const Dataset& train, double band = 0.25);

}  // namespace fcip::models
