#pragma once

// Data-driven driver screening: correlation filters, least squares with
// forward/backward/stepwise selection, and exploratory factor analysis.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fcip/data.hpp"

namespace fcip::screening {

// ---- special functions -------------------------------------------------------

double log_gamma(double x);
/// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);
/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);
/// Regularized incomplete beta I_x(a, b).
double beta_inc(double a, double b, double x);

double chi_square_sf(double x, double df);
/// Upper tail of the F(d1, d2) distribution.
double f_sf(double f, double d1, double d2);

// ---- correlation -------------------------------------------------------------

enum class CorrelationMethod { pearson, spearman };

std::string_view method_name(CorrelationMethod m);

double correlate(std::span<const double> x, std::span<const double> y,
                 CorrelationMethod method = CorrelationMethod::pearson);

/// Average ranks (1-based), ties sharing the mean of their positions.
std::vector<double> average_ranks(std::span<const double> x);

struct CorrelationMatrix {
  std::vector<std::string> names;
  Eigen::MatrixXd r;
  CorrelationMethod method = CorrelationMethod::pearson;
};

/// Independent variables as named columns plus a dependent series.
struct DesignData {
  std::vector<std::string> names;
  Eigen::MatrixXd x;  // rows = cases, one column per name
  Eigen::VectorXd y;
  std::string response = "cost_le";

  std::size_t rows() const { return static_cast<std::size_t>(x.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(x.cols()); }

  /// P1, P3, P6, P14 columns of a key-driver dataset.
  static DesignData from_dataset(const Dataset& ds);
  /// Complete-case rows of the extended schema, over the columns present.
  static DesignData from_extended(const ExtendedDataset& ds);

  DesignData subset(std::span<const std::size_t> columns) const;
};

CorrelationMatrix correlation_matrix(const Eigen::MatrixXd& columns, std::vector<std::string> names,
                                     CorrelationMethod method = CorrelationMethod::pearson);

struct FilterRule {
  double hi = 0.8;
  double lo = 0.3;
  bool apply_lo = true;
};

struct FilterResult {
  std::vector<std::size_t> retained;  // column indices in schema order
  std::vector<std::string> dropped_collinear;
  std::vector<std::string> dropped_weak;
};

FilterResult correlation_filter(const DesignData& data, const FilterRule& rule = {});

// ---- least squares -----------------------------------------------------------

struct OlsFit {
  Eigen::VectorXd coefficients;  // intercept first
  Eigen::VectorXd fitted;
  Eigen::VectorXd residuals;
  double r = 0;
  double r2 = 0;
  double adj_r2 = 0;
  double f = 0;
  double f_p = 0;
  double sse = 0;
  double sst = 0;
  std::size_t n = 0;
  std::size_t p = 0;  // predictors, excluding intercept
  Eigen::MatrixXd xtx_inv;  // (X'X)^-1 including the intercept column
  Eigen::VectorXd leverage;
  std::vector<double> t;    // per coefficient
  std::vector<double> t_p;
};

/// Intercept added internally. `names` label columns in rank-deficiency errors.
OlsFit ols_fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, std::span<const std::string> names = {});

// ---- selection ---------------------------------------------------------------

enum class SelectionMethod { forward, backward, stepwise };

std::string_view method_name(SelectionMethod m);

enum class StepAction { enter, remove };

struct SelectionStep {
  StepAction action = StepAction::enter;
  std::string variable;
  double r = 0;
  double r2 = 0;
  double adj_r2 = 0;
  double p_value = 0;  // partial-F p of the variable entered/removed
};

struct SelectionTrace {
  SelectionMethod method = SelectionMethod::stepwise;
  std::vector<SelectionStep> steps;
  std::vector<std::string> selected;  // final model, entry order
};

struct SelectionOptions {
  SelectionMethod method = SelectionMethod::stepwise;
  double p_enter = 0.05;
  double p_remove = 0.10;
};

SelectionTrace select_variables(const DesignData& data, const SelectionOptions& options = {});

struct HybridResult {
  FilterResult filter;
  SelectionTrace trace;
  std::vector<std::string> selected;
};

/// mode 1: hi+lo correlation filter then stepwise; mode 2: hi rule only.
HybridResult hybrid_select(const DesignData& data, int mode, const SelectionOptions& options = {});

// ---- factor analysis ---------------------------------------------------------

struct AdequacyReport {
  double determinant = 0;
  bool determinant_ok = false;  // > 1e-5 heuristic, reported only
  double kmo = 0;
  std::vector<double> msa;
  double bartlett = 0;
  double bartlett_df = 0;
  double bartlett_p = 1;
  std::size_t n = 0;
};

/// Data matrix: rows = cases, columns = variables.
AdequacyReport adequacy(const Eigen::MatrixXd& data);
AdequacyReport adequacy_from_correlation(const Eigen::MatrixXd& r, std::size_t n);

struct FactorSolution {
  Eigen::VectorXd eigenvalues;  // descending, all components
  Eigen::MatrixXd vectors;      // unit eigenvectors, matching columns
  Eigen::MatrixXd loadings;     // variables x retained
  Eigen::VectorXd communalities;
  Eigen::VectorXd percent_variance;  // per retained component

  std::size_t retained() const { return static_cast<std::size_t>(loadings.cols()); }
};

/// Symmetric eigen-decomposition by cyclic Jacobi, descending order.
void jacobi_eigen(const Eigen::MatrixXd& a, Eigen::VectorXd& values, Eigen::MatrixXd& vectors);

/// Full principal-component solution; call `truncate` to keep fewer.
FactorSolution pca(const Eigen::MatrixXd& correlation);
FactorSolution truncate(const FactorSolution& full, std::size_t keep);

enum class RetentionRule { kaiser, jolliffe, threshold };

std::size_t retain_components(std::span<const double> eigenvalues, RetentionRule rule, double t = 1.0);

/// Kaiser-normalized varimax. Single-column input is returned unchanged.
Eigen::MatrixXd varimax(const Eigen::MatrixXd& loadings, double tol = 1e-9, int max_sweeps = 1000);

/// Raw varimax criterion of (row-normalized) loadings.
double varimax_criterion(const Eigen::MatrixXd& loadings);

}  // namespace fcip::screening
