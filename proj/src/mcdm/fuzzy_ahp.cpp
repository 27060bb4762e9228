#include <algorithm>
#include <cmath>
#include <numeric>

#include "fcip/error.hpp"
#include "fcip/mcdm.hpp"

namespace fcip::mcdm {

FuzzyPairwiseMatrix::FuzzyPairwiseMatrix(std::vector<std::string> criteria, std::vector<Tfn> cells)
    : criteria_(std::move(criteria)), cells_(std::move(cells)) {
  const auto n = criteria_.size();
  if (n < 2) throw InputError("pairwise matrix needs at least two criteria");
  if (cells_.size() != n * n) throw InputError("pairwise matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Tfn& t = cells_[i * n + j];
      if (!t.valid() || t.l <= 0) {
        throw InputError("pairwise entry (" + criteria_[i] + ", " + criteria_[j] + ") is not a positive l<=m<=u triple");
      }
    }
    if (cells_[i * n + i] != Tfn{1, 1, 1}) throw InputError("pairwise diagonal must be (1,1,1)");
  }
}

FuzzyPairwiseMatrix FuzzyPairwiseMatrix::from_upper(std::vector<std::string> criteria,
                                                    const std::vector<std::vector<Tfn>>& upper_rows) {
  const auto n = criteria.size();
  if (upper_rows.size() + 1 != n) throw InputError("upper triangle has the wrong number of rows");
  std::vector<Tfn> cells(n * n, Tfn{1, 1, 1});
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (upper_rows[i].size() != n - i - 1) throw InputError("upper triangle row has the wrong length");
    for (std::size_t j = i + 1; j < n; ++j) {
      const Tfn& t = upper_rows[i][j - i - 1];
      cells[i * n + j] = t;
      cells[j * n + i] = inverse(t);
    }
  }
  return FuzzyPairwiseMatrix(std::move(criteria), std::move(cells));
}

FuzzyPairwiseMatrix fahp_aggregate(std::span<const FuzzyPairwiseMatrix> matrices) {
  if (matrices.empty()) throw InputError("no pairwise matrices to aggregate");
  const auto& first = matrices.front();
  if (matrices.size() == 1) return first;
  const auto n = first.size();
  for (const auto& m : matrices) {
    if (m.size() != n || m.criteria() != first.criteria()) {
      throw InputError("pairwise matrices differ in dimension or criteria order");
    }
  }
  const double k = static_cast<double>(matrices.size());
  std::vector<Tfn> cells(n * n);
  for (std::size_t c = 0; c < n * n; ++c) {
    double sl = 0, sm = 0, su = 0;
    for (const auto& m : matrices) {
      sl += std::log(m.cells()[c].l);
      sm += std::log(m.cells()[c].m);
      su += std::log(m.cells()[c].u);
    }
    cells[c] = {std::exp(sl / k), std::exp(sm / k), std::exp(su / k)};
    if (c % (n + 1) == 0) cells[c] = {1, 1, 1};
  }
  return FuzzyPairwiseMatrix(first.criteria(), std::move(cells));
}

std::vector<SyntheticExtent> synthetic_extents(const FuzzyPairwiseMatrix& m) {
  const auto n = m.size();
  std::vector<Tfn> rows(n, Tfn{0, 0, 0});
  Tfn total{0, 0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i] = rows[i] + m(i, j);
    total = total + rows[i];
  }
  if (total.l <= 0 || total.m <= 0 || total.u <= 0) throw DomainError("zero grand sum in extent analysis");
  const Tfn inv = inverse(total);
  std::vector<SyntheticExtent> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back({m.criteria()[i], rows[i] * inv});
  return out;
}

double degree_of_possibility(const Tfn& sb, const Tfn& sa) {
  if (sb.m >= sa.m) return 1.0;
  if (sa.l >= sb.u) return 0.0;
  const double v = (sa.l - sb.u) / ((sb.m - sb.u) - (sa.m - sa.l));
  return std::clamp(v, 0.0, 1.0);
}

double degree_of_possibility(const SyntheticExtent& sb, const SyntheticExtent& sa) {
  return degree_of_possibility(sb.value, sa.value);
}

WeightVector fahp_weights(std::span<const SyntheticExtent> extents) {
  if (extents.size() < 2) throw InputError("weights need at least two extents");
  WeightVector w;
  for (std::size_t i = 0; i < extents.size(); ++i) {
    double lowest = 1.0;
    for (std::size_t j = 0; j < extents.size(); ++j) {
      if (j != i) lowest = std::min(lowest, degree_of_possibility(extents[i], extents[j]));
    }
    w.names.push_back(extents[i].criterion);
    w.raw.push_back(lowest);
  }
  const double sum = std::accumulate(w.raw.begin(), w.raw.end(), 0.0);
  if (sum <= 0) throw DomainError("degenerate comparison");
  for (double r : w.raw) w.normalized.push_back(r / sum);
  return w;
}

double random_index(std::size_t n) {
  static constexpr double kRi[] = {0, 0, 0, 0.58, 0.90, 1.12, 1.24, 1.32, 1.41, 1.45};
  if (n >= std::size(kRi)) throw InputError("random index tabulated only up to 9 criteria");
  return kRi[n];
}

Eigen::MatrixXd crisp_matrix(const FuzzyPairwiseMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Ones(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      a(i, j) = defuzzify_centroid(m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
      a(j, i) = 1.0 / a(i, j);
    }
  }
  return a;
}

double principal_eigenvalue(const Eigen::MatrixXd& a) {
  const auto n = a.rows();
  if (n == 0 || a.cols() != n) throw InputError("eigenvalue needs a square matrix");
  if ((a.array() <= 0).any()) throw InputError("power iteration needs a positive matrix");
  Eigen::VectorXd v = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  for (int iter = 0; iter < 10000; ++iter) {
    Eigen::VectorXd next = a * v;
    const double s = next.sum();
    next /= s;
    const double change = (next - v).cwiseAbs().maxCoeff();
    v = std::move(next);
    if (change < 1e-14) {
      // Rayleigh-style estimate: mean of (Av)_i / v_i.
      return ((a * v).array() / v.array()).mean();
    }
  }
  throw NumericalError("eigenvalue iteration did not converge");
}

Consistency consistency(const Eigen::MatrixXd& crisp) {
  const auto n = static_cast<std::size_t>(crisp.rows());
  Consistency c;
  c.lambda_max = principal_eigenvalue(crisp);
  if (n <= 2) return c;
  c.ci = (c.lambda_max - static_cast<double>(n)) / static_cast<double>(n - 1);
  c.cr = c.ci / random_index(n);
  return c;
}

Consistency consistency(const FuzzyPairwiseMatrix& m) { return consistency(crisp_matrix(m)); }

double consistency_ratio(const FuzzyPairwiseMatrix& m) { return consistency(m).cr; }

std::vector<Priority> final_priorities(const WeightVector& criteria, std::span<const WeightVector> parameters) {
  if (parameters.size() != criteria.names.size()) {
    throw InputError("one parameter weight vector is needed per criterion");
  }
  std::vector<Priority> out;
  for (std::size_t c = 0; c < parameters.size(); ++c) {
    const auto& local = parameters[c];
    if (local.normalized.size() != local.names.size()) throw InputError("parameter weights and names differ in length");
    for (std::size_t p = 0; p < local.names.size(); ++p) {
      for (const auto& seen : out) {
        if (seen.parameter == local.names[p]) {
          throw InputError("parameter '" + seen.parameter + "' listed under two criteria");
        }
      }
      const double cw = criteria.normalized[c];
      out.push_back({local.names[p], criteria.names[c], cw, local.normalized[p], cw * local.normalized[p]});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Priority& a, const Priority& b) { return a.value > b.value; });
  return out;
}

}  // namespace fcip::mcdm
