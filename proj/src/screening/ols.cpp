#include <cmath>
#include <limits>

#include "fcip/error.hpp"
#include "fcip/screening.hpp"

namespace fcip::screening {

namespace {

std::string column_label(std::span<const std::string> names, Eigen::Index j) {
  if (static_cast<std::size_t>(j) < names.size()) return names[static_cast<std::size_t>(j)];
  return "column " + std::to_string(j);
}

// Gram-Schmidt on centered, unit-norm columns; reports the first column that
// lies (numerically) in the span of the constant and the earlier columns.
void check_rank(const Eigen::MatrixXd& xc, std::span<const std::string> names) {
  std::vector<Eigen::VectorXd> basis;
  for (Eigen::Index j = 0; j < xc.cols(); ++j) {
    Eigen::VectorXd v = xc.col(j);
    const double norm0 = v.norm();
    if (norm0 == 0 || !std::isfinite(norm0)) {
      throw InputError("rank-deficient design: '" + column_label(names, j) + "' is constant");
    }
    v /= norm0;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) v -= b.dot(v) * b;
    }
    const double rest = v.norm();
    if (rest < 1e-10) {
      throw InputError("rank-deficient design: '" + column_label(names, j) + "' is collinear with earlier columns");
    }
    basis.push_back(v / rest);
  }
}

}  // namespace

OlsFit ols_fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, std::span<const std::string> names) {
  const auto n = x.rows();
  const auto p = x.cols();
  if (y.size() != n) throw InputError("response length differs from predictor rows");
  if (n <= p + 1) throw InputError("least squares needs more cases than predictors plus one");
  if (!x.allFinite() || !y.allFinite()) throw InputError("non-finite value in regression data");

  const Eigen::RowVectorXd means = x.colwise().mean();
  const Eigen::MatrixXd xc = x.rowwise() - means;
  const double ybar = y.mean();
  const Eigen::VectorXd yc = y.array() - ybar;
  check_rank(xc, names);

  OlsFit fit;
  fit.n = static_cast<std::size_t>(n);
  fit.p = static_cast<std::size_t>(p);
  fit.coefficients.resize(p + 1);
  Eigen::MatrixXd c_inv(p, p);  // (Xc'Xc)^-1
  if (p > 0) {
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(xc);
    const Eigen::VectorXd b = qr.solve(yc);
    fit.coefficients.tail(p) = b;
    fit.coefficients(0) = ybar - means.dot(b);
    const Eigen::MatrixXd r = qr.matrixQR().topRows(p).triangularView<Eigen::Upper>();
    const Eigen::MatrixXd r_inv = r.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(p, p));
    c_inv = r_inv * r_inv.transpose();
  } else {
    fit.coefficients(0) = ybar;
  }

  fit.fitted = Eigen::VectorXd::Constant(n, fit.coefficients(0));
  if (p > 0) fit.fitted += x * fit.coefficients.tail(p);
  fit.residuals = y - fit.fitted;
  fit.sse = fit.residuals.squaredNorm();
  fit.sst = yc.squaredNorm();
  const double dfe = static_cast<double>(n - p - 1);
  fit.r2 = fit.sst > 0 ? 1.0 - fit.sse / fit.sst : 1.0;
  if (fit.r2 < 0) fit.r2 = 0;
  fit.r = std::sqrt(fit.r2);
  fit.adj_r2 = 1.0 - (1.0 - fit.r2) * static_cast<double>(n - 1) / dfe;
  if (p > 0) {
    const double ssr = fit.sst - fit.sse;
    if (fit.sse > 0) {
      fit.f = (ssr / static_cast<double>(p)) / (fit.sse / dfe);
      fit.f_p = f_sf(fit.f, static_cast<double>(p), dfe);
    } else {
      fit.f = std::numeric_limits<double>::infinity();
      fit.f_p = 0;
    }
  }

  // Inverse of the intercept-augmented cross-product from the centered block.
  fit.xtx_inv.resize(p + 1, p + 1);
  fit.xtx_inv(0, 0) = 1.0 / static_cast<double>(n);
  if (p > 0) {
    const Eigen::VectorXd cm = c_inv * means.transpose();
    fit.xtx_inv(0, 0) += means.dot(cm);
    fit.xtx_inv.block(1, 0, p, 1) = -cm;
    fit.xtx_inv.block(0, 1, 1, p) = -cm.transpose();
    fit.xtx_inv.block(1, 1, p, p) = c_inv;
  }
  fit.leverage.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double h = 1.0 / static_cast<double>(n);
    if (p > 0) h += xc.row(i) * c_inv * xc.row(i).transpose();
    fit.leverage(i) = h;
  }

  const double s2 = fit.sse / dfe;
  for (Eigen::Index j = 0; j <= p; ++j) {
    const double se = std::sqrt(s2 * fit.xtx_inv(j, j));
    const double t = se > 0 ? fit.coefficients(j) / se : std::numeric_limits<double>::infinity();
    fit.t.push_back(t);
    fit.t_p.push_back(std::isinf(t) ? 0.0 : f_sf(t * t, 1.0, dfe));
  }
  return fit;
}

}  // namespace fcip::screening
