#include <algorithm>
#include <cmath>
#include <limits>

#include "fcip/error.hpp"
#include "fcip/models.hpp"

namespace fcip::models {

double uniform01(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

double uniform(std::mt19937_64& gen, double lo, double hi) { return lo + (hi - lo) * uniform01(gen); }

double Scaler::scale(double v) const {
  if (hi == lo) return 0.0;
  return 2.0 * (v - lo) / (hi - lo) - 1.0;
}

double Scaler::unscale(double s) const {
  if (hi == lo) return lo;
  return lo + (s + 1.0) * 0.5 * (hi - lo);
}

Eigen::VectorXd MlpModel::parameters() const {
  Eigen::VectorXd theta(static_cast<Eigen::Index>(parameter_count()));
  Eigen::Index k = 0;
  for (Eigen::Index h = 0; h < w1.rows(); ++h)
    for (Eigen::Index j = 0; j < w1.cols(); ++j) theta(k++) = w1(h, j);
  for (Eigen::Index h = 0; h < b1.size(); ++h) theta(k++) = b1(h);
  for (Eigen::Index h = 0; h < w2.size(); ++h) theta(k++) = w2(h);
  theta(k) = b2;
  return theta;
}

void MlpModel::set_parameters(const Eigen::VectorXd& theta) {
  if (static_cast<std::size_t>(theta.size()) != parameter_count()) throw InputError("parameter vector has the wrong size");
  const auto hh = static_cast<Eigen::Index>(hidden);
  w1.resize(hh, static_cast<Eigen::Index>(kDriverCount));
  b1.resize(hh);
  w2.resize(hh);
  Eigen::Index k = 0;
  for (Eigen::Index h = 0; h < hh; ++h)
    for (Eigen::Index j = 0; j < w1.cols(); ++j) w1(h, j) = theta(k++);
  for (Eigen::Index h = 0; h < hh; ++h) b1(h) = theta(k++);
  for (Eigen::Index h = 0; h < hh; ++h) w2(h) = theta(k++);
  b2 = theta(k);
}

namespace {

double activate(Activation a, double x) { return a == Activation::tanh ? std::tanh(x) : x; }

// Derivative expressed through the activation output.
double activate_slope(Activation a, double z) { return a == Activation::tanh ? 1.0 - z * z : 1.0; }

}  // namespace

double MlpModel::forward(const std::array<double, kDriverCount>& x) const {
  double out = b2;
  for (Eigen::Index h = 0; h < w1.rows(); ++h) {
    double a = b1(h);
    for (std::size_t j = 0; j < kDriverCount; ++j) a += w1(h, static_cast<Eigen::Index>(j)) * x[j];
    out += w2(h) * activate(activation, a);
  }
  return out;
}

MlpModel mlp_init(const Dataset& train, const MlpConfig& config) {
  if (config.hidden < 1) throw InputError("hidden layer needs at least one unit");
  if (config.max_epochs < 0) throw InputError("epoch cap must be non-negative");
  MlpModel m;
  m.hidden = config.hidden;
  m.target = config.target;
  m.activation = config.activation;
  m.seed = config.seed;
  const auto bounds = DriverBounds::of(train);
  for (std::size_t j = 0; j < kDriverCount; ++j) m.inputs[j] = {bounds.lo[j], bounds.hi[j]};
  double tlo = std::numeric_limits<double>::infinity();
  double thi = -tlo;
  for (const auto& c : train) {
    const double t = forward_transform(config.target, c.cost_le);
    tlo = std::min(tlo, t);
    thi = std::max(thi, t);
    m.last_year = std::max(m.last_year, c.year);
  }
  m.output = {tlo, thi};

  std::mt19937_64 gen(config.seed);
  Eigen::VectorXd theta(static_cast<Eigen::Index>(m.parameter_count()));
  for (Eigen::Index k = 0; k < theta.size(); ++k) theta(k) = uniform(gen, -0.5, 0.5);
  m.set_parameters(theta);
  return m;
}

MlpSample mlp_sample(const MlpModel& model, const Dataset& ds) {
  MlpSample s;
  for (const auto& c : ds) {
    const auto v = c.drivers().values();
    std::array<double, kDriverCount> x{};
    for (std::size_t j = 0; j < kDriverCount; ++j) x[j] = model.inputs[j].scale(v[j]);
    s.x.push_back(x);
    s.t.push_back(model.output.scale(forward_transform(model.target, c.cost_le)));
  }
  return s;
}

double mlp_loss(const MlpModel& model, const MlpSample& s) {
  double sum = 0;
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    const double e = model.forward(s.x[i]) - s.t[i];
    sum += e * e;
  }
  return sum / static_cast<double>(s.x.size());
}

Eigen::VectorXd mlp_gradient(const MlpModel& model, const MlpSample& s) {
  const auto hh = static_cast<Eigen::Index>(model.hidden);
  Eigen::MatrixXd gw1 = Eigen::MatrixXd::Zero(hh, static_cast<Eigen::Index>(kDriverCount));
  Eigen::VectorXd gb1 = Eigen::VectorXd::Zero(hh);
  Eigen::VectorXd gw2 = Eigen::VectorXd::Zero(hh);
  double gb2 = 0;
  Eigen::VectorXd z(hh);
  const double scale = 2.0 / static_cast<double>(s.x.size());
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    const auto& x = s.x[i];
    double out = model.b2;
    for (Eigen::Index h = 0; h < hh; ++h) {
      double a = model.b1(h);
      for (std::size_t j = 0; j < kDriverCount; ++j) a += model.w1(h, static_cast<Eigen::Index>(j)) * x[j];
      z(h) = activate(model.activation, a);
      out += model.w2(h) * z(h);
    }
    const double d = scale * (out - s.t[i]);
    gb2 += d;
    for (Eigen::Index h = 0; h < hh; ++h) {
      gw2(h) += d * z(h);
      const double da = d * model.w2(h) * activate_slope(model.activation, z(h));
      gb1(h) += da;
      for (std::size_t j = 0; j < kDriverCount; ++j) gw1(h, static_cast<Eigen::Index>(j)) += da * x[j];
    }
  }
  MlpModel packed = model;
  packed.w1 = gw1;
  packed.b1 = gb1;
  packed.w2 = gw2;
  packed.b2 = gb2;
  return packed.parameters();
}

double gradient_check(const MlpModel& model, const MlpSample& sample, const GradientFn& gradient) {
  if (sample.x.empty()) throw InputError("gradient check needs at least one case");
  constexpr double h = 1e-5;
  const Eigen::VectorXd analytic = gradient(model, sample);
  Eigen::VectorXd theta = model.parameters();
  if (analytic.size() != theta.size()) throw InputError("gradient has the wrong size");
  MlpModel probe = model;
  double worst = 0;
  for (Eigen::Index k = 0; k < theta.size(); ++k) {
    const double keep = theta(k);
    theta(k) = keep + h;
    probe.set_parameters(theta);
    const double up = mlp_loss(probe, sample);
    theta(k) = keep - h;
    probe.set_parameters(theta);
    const double down = mlp_loss(probe, sample);
    theta(k) = keep;
    const double numeric = (up - down) / (2 * h);
    const double denom = std::max(std::fabs(analytic(k)) + std::fabs(numeric), 1e-7);
    worst = std::max(worst, std::fabs(analytic(k) - numeric) / denom);
  }
  return worst;
}

MlpModel mlp_train(const Dataset& train, const MlpConfig& config) {
  MlpModel m = mlp_init(train, config);
  const MlpSample s = mlp_sample(m, train);

  // Polak-Ribiere conjugate gradient with Armijo backtracking.
  Eigen::VectorXd theta = m.parameters();
  double loss = mlp_loss(m, s);
  Eigen::VectorXd g = mlp_gradient(m, s);
  Eigen::VectorXd dir = -g;
  double step = 1.0;
  bool restarted = false;
  int epoch = 0;
  for (; epoch < config.max_epochs && loss > config.tolerance; ++epoch) {
    double slope = g.dot(dir);
    if (slope >= 0) {
      dir = -g;
      slope = -g.squaredNorm();
    }
    if (slope == 0) break;
    double alpha = step;
    MlpModel trial = m;
    double trial_loss = 0;
    bool accepted = false;
    while (alpha > 1e-20) {
      trial.set_parameters(theta + alpha * dir);
      trial_loss = mlp_loss(trial, s);
      if (std::isfinite(trial_loss) && trial_loss <= loss + 1e-4 * alpha * slope) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) {
      if (restarted) break;  // no descent even along the gradient
      restarted = true;
      dir = -g;
      continue;
    }
    restarted = false;
    theta += alpha * dir;
    m = trial;
    loss = trial_loss;
    const Eigen::VectorXd g_new = mlp_gradient(m, s);
    const double beta = std::max(0.0, g_new.dot(g_new - g) / std::max(g.squaredNorm(), 1e-300));
    dir = -g_new + beta * dir;
    g = g_new;
    step = std::min(alpha * 2.0, 1e6);
  }
  if (!std::isfinite(loss)) throw NumericalError("training diverged");
  m.epochs = epoch;
  m.loss = loss;

  std::vector<double> predicted;
  for (const auto& c : train) predicted.push_back(mlp_predict(m, c.drivers()));
  m.mape_train = mape(predicted, train.costs());
  return m;
}

double mlp_predict(const MlpModel& model, const Drivers& d) {
  const auto v = d.values();
  std::array<double, kDriverCount> x{};
  for (std::size_t j = 0; j < kDriverCount; ++j) x[j] = model.inputs[j].scale(v[j]);
  return inverse_transform(model.target, model.output.unscale(model.forward(x)));
}

}  // namespace fcip::models
