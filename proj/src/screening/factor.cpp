#include <algorithm>
#include <cmath>
#include <numeric>

#include "fcip/error.hpp"
#include "fcip/screening.hpp"

namespace fcip::screening {

AdequacyReport adequacy_from_correlation(const Eigen::MatrixXd& r, std::size_t n) {
  const auto p = r.rows();
  if (p < 2 || r.cols() != p) throw InputError("adequacy needs a square correlation matrix of two or more variables");
  if (n <= static_cast<std::size_t>(p)) throw InputError("adequacy needs more cases than variables");
  AdequacyReport rep;
  rep.n = n;
  const Eigen::FullPivLU<Eigen::MatrixXd> lu(r);
  rep.determinant = lu.determinant();
  rep.determinant_ok = rep.determinant > 1e-5;
  const double dp = static_cast<double>(p);
  rep.bartlett_df = dp * (dp - 1) / 2;
  if (!lu.isInvertible() || rep.determinant <= 0) throw DomainError("singular correlation matrix");

  const Eigen::MatrixXd inv = lu.inverse();
  const Eigen::VectorXd s = inv.diagonal().cwiseInverse().cwiseSqrt();  // S^{1/2}
  Eigen::MatrixXd anti = s.asDiagonal() * inv * s.asDiagonal();
  double r2_all = 0, q2_all = 0;
  rep.msa.resize(static_cast<std::size_t>(p));
  for (Eigen::Index i = 0; i < p; ++i) {
    double r2 = 0, q2 = 0;
    for (Eigen::Index j = 0; j < p; ++j) {
      if (i == j) continue;
      // With two variables there is nothing to partial out: q equals r.
      const double q = p == 2 ? r(i, j) : -anti(i, j);
      r2 += r(i, j) * r(i, j);
      q2 += q * q;
    }
    rep.msa[static_cast<std::size_t>(i)] = (r2 + q2) > 0 ? r2 / (r2 + q2) : 0.0;
    r2_all += r2;
    q2_all += q2;
  }
  rep.kmo = (r2_all + q2_all) > 0 ? r2_all / (r2_all + q2_all) : 0.0;

  const double stat = -(static_cast<double>(n) - 1 - (2 * dp + 5) / 6) * std::log(rep.determinant);
  rep.bartlett = std::max(stat, 0.0);
  rep.bartlett_p = chi_square_sf(rep.bartlett, rep.bartlett_df);
  return rep;
}

AdequacyReport adequacy(const Eigen::MatrixXd& data) {
  std::vector<std::string> names;
  for (Eigen::Index j = 0; j < data.cols(); ++j) names.push_back("v" + std::to_string(j + 1));
  const auto cm = correlation_matrix(data, std::move(names));
  return adequacy_from_correlation(cm.r, static_cast<std::size_t>(data.rows()));
}

void jacobi_eigen(const Eigen::MatrixXd& input, Eigen::VectorXd& values, Eigen::MatrixXd& vectors) {
  const auto n = input.rows();
  if (input.cols() != n) throw InputError("eigen-decomposition needs a square matrix");
  Eigen::MatrixXd a = input;
  vectors = Eigen::MatrixXd::Identity(n, n);
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  bool converged = n <= 1;
  for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
    double off = 0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    if (std::sqrt(off) < 1e-15 * scale) {
      converged = true;
      break;
    }
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == 0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = vectors(k, p), vkq = vectors(k, q);
          vectors(k, p) = c * vkp - s * vkq;
          vectors(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged) throw NumericalError("Jacobi iteration did not converge");

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) { return a(x, x) > a(y, y); });
  values.resize(n);
  Eigen::MatrixXd sorted(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto src = order[static_cast<std::size_t>(k)];
    values(k) = a(src, src);
    Eigen::VectorXd v = vectors.col(src);
    Eigen::Index big = 0;
    v.cwiseAbs().maxCoeff(&big);
    if (v(big) < 0) v = -v;  // deterministic sign
    sorted.col(k) = v;
  }
  vectors = std::move(sorted);
}

FactorSolution pca(const Eigen::MatrixXd& corr) {
  const auto p = corr.rows();
  if (p == 0 || corr.cols() != p) throw InputError("pca needs a square matrix");
  if ((corr - corr.transpose()).cwiseAbs().maxCoeff() > 1e-10) throw InputError("correlation matrix is not symmetric");
  if ((corr.diagonal().array() - 1.0).abs().maxCoeff() > 1e-10) throw InputError("correlation matrix needs a unit diagonal");
  FactorSolution sol;
  jacobi_eigen(corr, sol.eigenvalues, sol.vectors);
  if (sol.eigenvalues(p - 1) < -1e-8) throw InputError("correlation matrix is not positive semidefinite");
  const Eigen::VectorXd root = sol.eigenvalues.cwiseMax(0.0).cwiseSqrt();
  sol.loadings = sol.vectors * root.asDiagonal();
  sol.communalities = sol.loadings.rowwise().squaredNorm();
  sol.percent_variance = sol.eigenvalues * (100.0 / static_cast<double>(p));
  return sol;
}

FactorSolution truncate(const FactorSolution& full, std::size_t keep) {
  const auto k = static_cast<Eigen::Index>(std::min<std::size_t>(keep, full.loadings.cols()));
  FactorSolution out = full;
  out.loadings = full.loadings.leftCols(k);
  out.communalities = out.loadings.rowwise().squaredNorm();
  out.percent_variance = full.percent_variance.head(k);
  return out;
}

std::size_t retain_components(std::span<const double> eigenvalues, RetentionRule rule, double t) {
  const double cut = rule == RetentionRule::kaiser ? 1.0 : rule == RetentionRule::jolliffe ? 0.7 : t;
  return static_cast<std::size_t>(std::count_if(eigenvalues.begin(), eigenvalues.end(), [&](double v) { return v > cut; }));
}

double varimax_criterion(const Eigen::MatrixXd& l) {
  const double p = static_cast<double>(l.rows());
  double v = 0;
  for (Eigen::Index j = 0; j < l.cols(); ++j) {
    const Eigen::ArrayXd sq = l.col(j).array().square();
    v += (p * sq.square().sum() - sq.sum() * sq.sum()) / (p * p);
  }
  return v;
}

Eigen::MatrixXd varimax(const Eigen::MatrixXd& loadings, double tol, int max_sweeps) {
  const auto p = loadings.rows();
  const auto m = loadings.cols();
  if (m < 2) return loadings;
  const Eigen::VectorXd h = loadings.rowwise().norm();
  Eigen::MatrixXd x = loadings;
  for (Eigen::Index i = 0; i < p; ++i) {
    if (h(i) > 0) x.row(i) /= h(i);
  }
  const double dp = static_cast<double>(p);
  double crit = varimax_criterion(x);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    for (Eigen::Index j = 0; j < m - 1; ++j) {
      for (Eigen::Index k = j + 1; k < m; ++k) {
        double a = 0, b = 0, c = 0, d = 0;
        for (Eigen::Index i = 0; i < p; ++i) {
          const double u = x(i, j) * x(i, j) - x(i, k) * x(i, k);
          const double v = 2 * x(i, j) * x(i, k);
          a += u;
          b += v;
          c += u * u - v * v;
          d += 2 * u * v;
        }
        const double num = d - 2 * a * b / dp;
        const double den = c - (a * a - b * b) / dp;
        const double phi = 0.25 * std::atan2(num, den);
        if (phi == 0) continue;
        const double cs = std::cos(phi), sn = std::sin(phi);
        for (Eigen::Index i = 0; i < p; ++i) {
          const double xj = x(i, j), xk = x(i, k);
          x(i, j) = cs * xj + sn * xk;
          x(i, k) = -sn * xj + cs * xk;
        }
      }
    }
    const double next = varimax_criterion(x);
    const bool done = std::fabs(next - crit) < tol;
    crit = next;
    if (done) break;
  }
  for (Eigen::Index i = 0; i < p; ++i) {
    if (h(i) > 0) x.row(i) *= h(i);
  }
  return x;
}

}  // namespace fcip::screening
