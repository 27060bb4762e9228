#pragma once

// Expert-survey aggregation: Likert statistics, Fuzzy Delphi screening and
// Fuzzy AHP weighting by extent analysis.

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace fcip::mcdm {

/// Triangular fuzzy number (l, m, u) with l <= m <= u.
struct Tfn {
  double l = 0;
  double m = 0;
  double u = 0;

  bool valid() const noexcept { return l <= m && m <= u; }
  friend bool operator==(const Tfn&, const Tfn&) = default;
};

/// Throws InputError unless l <= m <= u and all components are finite.
Tfn make_tfn(double l, double m, double u);

Tfn operator+(const Tfn& a, const Tfn& b);
Tfn operator*(const Tfn& a, const Tfn& b);
/// Fuzzy inverse (1/u, 1/m, 1/l); requires l > 0.
Tfn inverse(const Tfn& a);

struct LikertResponses {
  std::string parameter_id;
  std::vector<int> scores;  // each in 1..5
};

void validate(const LikertResponses& r);

double mean_score(const LikertResponses& r);
/// Sample standard deviation over sqrt(n). Needs n >= 2.
double standard_error(const LikertResponses& r);

struct ScoredParameter {
  std::string id;
  double value = 0;
};

/// Ids with value >= threshold, input order kept.
std::vector<std::string> screen_by_mean(std::span<const ScoredParameter> scored, double threshold = 3.0);

/// Five linguistic terms, indexed by Likert score 1..5.
struct FuzzyLikertScale {
  std::array<Tfn, 5> terms;

  /// Extremely unimportant .. extremely important on [0, 1].
  static FuzzyLikertScale standard();
  const Tfn& operator()(int score) const;
};

void validate(const FuzzyLikertScale& scale);

/// min of l, geometric mean of m, max of u.
Tfn fdm_aggregate(std::span<const Tfn> opinions);

double defuzzify_centroid(const Tfn& w);

struct ScreenResult {
  std::vector<std::string> retained;
  std::vector<std::string> deleted;
};

/// Retain iff crisp value >= alpha and the id is not in `exclusions`.
ScreenResult fdm_screen(std::span<const ScoredParameter> crisp, double alpha = 0.6,
                        std::span<const std::string> exclusions = {});

/// Square matrix of fuzzy judgements over named criteria, row-major.
class FuzzyPairwiseMatrix {
 public:
  FuzzyPairwiseMatrix(std::vector<std::string> criteria, std::vector<Tfn> cells);

  /// Fill the lower triangle with fuzzy reciprocals of the upper one.
  static FuzzyPairwiseMatrix from_upper(std::vector<std::string> criteria,
                                        const std::vector<std::vector<Tfn>>& upper_rows);

  std::size_t size() const noexcept { return criteria_.size(); }
  const std::vector<std::string>& criteria() const noexcept { return criteria_; }
  const Tfn& operator()(std::size_t i, std::size_t j) const { return cells_[i * size() + j]; }
  const std::vector<Tfn>& cells() const noexcept { return cells_; }

 private:
  std::vector<std::string> criteria_;
  std::vector<Tfn> cells_;
};

/// Componentwise geometric mean across experts.
FuzzyPairwiseMatrix fahp_aggregate(std::span<const FuzzyPairwiseMatrix> matrices);

struct SyntheticExtent {
  std::string criterion;
  Tfn value;
};

std::vector<SyntheticExtent> synthetic_extents(const FuzzyPairwiseMatrix& m);

/// V(sb >= sa) by Chang's extent analysis.
double degree_of_possibility(const Tfn& sb, const Tfn& sa);
double degree_of_possibility(const SyntheticExtent& sb, const SyntheticExtent& sa);

struct WeightVector {
  std::vector<std::string> names;
  std::vector<double> raw;         // min over j != i of V(S_i >= S_j)
  std::vector<double> normalized;  // raw / sum(raw)
};

WeightVector fahp_weights(std::span<const SyntheticExtent> extents);

/// Saaty random index for n <= 9; 0 for n <= 2.
double random_index(std::size_t n);

/// Crisp matrix used for the consistency test: centroid of the diagonal and
/// upper triangle, reciprocals below.
Eigen::MatrixXd crisp_matrix(const FuzzyPairwiseMatrix& m);

struct Consistency {
  double lambda_max = 0;
  double ci = 0;
  double cr = 0;
};

/// Power-iteration principal eigenvalue of a positive matrix.
double principal_eigenvalue(const Eigen::MatrixXd& a);

Consistency consistency(const Eigen::MatrixXd& crisp);
Consistency consistency(const FuzzyPairwiseMatrix& m);
double consistency_ratio(const FuzzyPairwiseMatrix& m);

struct Priority {
  std::string parameter;
  std::string criterion;
  double criterion_weight = 0;
  double local_weight = 0;
  double value = 0;
};

/// criterion weight x within-criterion weight, sorted descending (stable).
/// `parameters[i]` holds the parameter weights of criterion i, whose
/// normalized entries are used.
std::vector<Priority> final_priorities(const WeightVector& criteria, std::span<const WeightVector> parameters);

}  // namespace fcip::mcdm
