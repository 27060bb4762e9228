#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "fcip/error.hpp"
#include "fcip/screening.hpp"

using namespace fcip;
using namespace fcip::screening;

namespace {

// Same columns as synth() in tests/oracles/derive_oracles.py.
Eigen::MatrixXd synth(int n, int p) {
  Eigen::MatrixXd x(n, p);
  for (int i = 0; i < n; ++i) {
    const double t = i;
    const double base = std::sin(0.37 * t) + 0.5 * std::cos(1.13 * t);
    for (int k = 0; k < p; ++k) {
      x(i, k) = base + 0.3 * std::sin(0.91 * t + k) * (k + 1) + 0.2 * std::cos(2.7 * t * (k + 1));
    }
  }
  return x;
}

}  // namespace

TEST_CASE("incomplete gamma and beta against reference values") {
  CHECK(gamma_q(0.5, 0.3) == doctest::Approx(0.4385780260809997).epsilon(1e-10));
  CHECK(gamma_q(2.0, 5.0) == doctest::Approx(0.04042768199451279).epsilon(1e-10));
  CHECK(gamma_q(10.0, 3.0) == doctest::Approx(0.9988975118698845).epsilon(1e-10));
  CHECK(gamma_q(3.5, 12.0) == doctest::Approx(0.001139351178947464).epsilon(1e-10));
  CHECK(gamma_p(2.0, 5.0) + gamma_q(2.0, 5.0) == doctest::Approx(1.0));
  CHECK(beta_inc(0.5, 0.5, 0.2) == doctest::Approx(0.2951672353008665).epsilon(1e-10));
  CHECK(beta_inc(2.0, 3.0, 0.4) == doctest::Approx(0.5247999999999999).epsilon(1e-10));
  CHECK(beta_inc(10.0, 1.5, 0.9) == doctest::Approx(0.5401970065018546).epsilon(1e-10));
  CHECK(beta_inc(55.0, 0.5, 0.97) == doctest::Approx(0.06780570542332941).epsilon(1e-10));
  CHECK(f_sf(4.0, 1, 100) == doctest::Approx(0.048212178731134016).epsilon(1e-10));
  CHECK(f_sf(2.5, 3, 20) == doctest::Approx(0.0888437519376892).epsilon(1e-10));
  CHECK(chi_square_sf(10.0, 6) == doctest::Approx(0.12465201948308108).epsilon(1e-10));
  CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)));
}

TEST_CASE("pearson and spearman") {
  const double x[] = {1, 2, 3, 4, 5};
  const double y[] = {1, 4, 9, 16, 25};
  CHECK(correlate(x, y, CorrelationMethod::spearman) == doctest::Approx(1.0));
  CHECK(correlate(x, y) == doctest::Approx(0.9811049102515929));
  const double tied[] = {10, 20, 20, 30};
  const auto ranks = average_ranks(tied);
  CHECK(ranks == std::vector<double>{1, 2.5, 2.5, 4});
}

TEST_CASE("sampling adequacy on synthetic data") {
  const auto a = adequacy(synth(40, 4));
  CHECK(a.determinant == doctest::Approx(0.004888199666714673).epsilon(1e-9));
  CHECK(a.kmo == doctest::Approx(0.3671988975864248).epsilon(1e-9));
  const double msa[] = {0.38778252295853877, 0.37170855625017757, 0.40972166346205324, 0.2886466555459128};
  for (int i = 0; i < 4; ++i) CHECK(a.msa[i] == doctest::Approx(msa[i]).epsilon(1e-9));
  CHECK(a.bartlett == doctest::Approx(195.9876328869787).epsilon(1e-9));
  CHECK(a.bartlett_df == 6);
  CHECK(a.bartlett_p == doctest::Approx(1.3553663905340076e-39).epsilon(1e-6));
  CHECK(a.n == 40);
}

TEST_CASE("principal components of a fixed correlation matrix") {
  Eigen::Matrix4d m;
  m << 1.0, 0.6, 0.3, 0.1, 0.6, 1.0, 0.5, 0.2, 0.3, 0.5, 1.0, 0.4, 0.1, 0.2, 0.4, 1.0;
  const auto full = pca(m);
  const double expect[] = {2.0901416967986366, 1.0152244493892193, 0.5484162307431526, 0.34621762306899256};
  for (int i = 0; i < 4; ++i) CHECK(full.eigenvalues(i) == doctest::Approx(expect[i]).epsilon(1e-10));
  const std::span<const double> eig(full.eigenvalues.data(), 4);
  CHECK(retain_components(eig, RetentionRule::kaiser) == 2);
  CHECK(retain_components(eig, RetentionRule::jolliffe) == 2);
  CHECK(retain_components(eig, RetentionRule::threshold, 0.5) == 3);

  const auto two = truncate(full, 2);
  const auto rotated = varimax(two.loadings);
  for (int i = 0; i < 4; ++i) {
    CHECK(rotated.row(i).squaredNorm() == doctest::Approx(two.communalities(i)).epsilon(1e-12));
  }
  CHECK(varimax_criterion(rotated) >= varimax_criterion(two.loadings) - 1e-12);
}

TEST_CASE("stepwise selection enters the strongest driver first") {
  const int n = 60;
  DesignData d;
  d.names = {"A", "B", "C"};
  d.x.resize(n, 3);
  d.y.resize(n);
  for (int i = 0; i < n; ++i) {
    const double t = i;
    d.x(i, 0) = std::sin(0.7 * t);
    d.x(i, 1) = std::cos(1.3 * t);
    d.x(i, 2) = std::sin(2.9 * t + 1);
    d.y(i) = 3 * d.x(i, 0) + 1.0 * d.x(i, 1) + 0.05 * std::cos(5.1 * t);
  }
  const auto fwd = select_variables(d, {SelectionMethod::forward});
  REQUIRE(fwd.selected.size() >= 2);
  CHECK(fwd.selected[0] == "A");
  CHECK(fwd.selected[1] == "B");
  CHECK(fwd.steps[0].r2 < fwd.steps[1].r2);
  const auto back = select_variables(d, {SelectionMethod::backward});
  CHECK(std::find(back.selected.begin(), back.selected.end(), "A") != back.selected.end());
  CHECK_THROWS_AS(select_variables(d, {SelectionMethod::stepwise, 0.2, 0.1}), InputError);
}

TEST_CASE("ordinary least squares recovers an exact plane") {
  Eigen::MatrixXd x(6, 2);
  Eigen::VectorXd y(6);
  for (int i = 0; i < 6; ++i) {
    x(i, 0) = i;
    x(i, 1) = (i * i) % 5;
    y(i) = 2 + 3 * x(i, 0) - x(i, 1);
  }
  const auto fit = ols_fit(x, y);
  CHECK(fit.coefficients(0) == doctest::Approx(2));
  CHECK(fit.coefficients(1) == doctest::Approx(3));
  CHECK(fit.coefficients(2) == doctest::Approx(-1));
}
