#include <algorithm>
#include <cmath>
#include <limits>

#include "fcip/error.hpp"
#include "fcip/fuzzy.hpp"

namespace fcip::fuzzy {

std::string_view shape_name(Shape s) {
  switch (s) {
    case Shape::triangular: return "triangular";
    case Shape::trapezoidal: return "trapezoidal";
    case Shape::gaussian: return "gaussian";
  }
  return "?";
}

MembershipFunction MembershipFunction::triangular(double a1, double a2, double a3) {
  MembershipFunction mf{Shape::triangular, {a1, a2, a3, 0}};
  validate(mf);
  return mf;
}

MembershipFunction MembershipFunction::trapezoidal(double a1, double a2, double a3, double a4) {
  MembershipFunction mf{Shape::trapezoidal, {a1, a2, a3, a4}};
  validate(mf);
  return mf;
}

MembershipFunction MembershipFunction::gaussian(double center, double width) {
  MembershipFunction mf{Shape::gaussian, {center, width, 0, 0}};
  validate(mf);
  return mf;
}

void validate(const MembershipFunction& mf) {
  const auto& p = mf.p;
  for (double v : p) {
    if (!std::isfinite(v)) throw InputError("membership parameters must be finite");
  }
  switch (mf.shape) {
    case Shape::triangular:
      if (!(p[0] <= p[1] && p[1] <= p[2])) throw InputError("triangular set needs a1 <= a2 <= a3");
      break;
    case Shape::trapezoidal:
      if (!(p[0] <= p[1] && p[1] <= p[2] && p[2] <= p[3])) throw InputError("trapezoidal set needs a1 <= a2 <= a3 <= a4");
      break;
    case Shape::gaussian:
      if (!(p[1] > 0)) throw InputError("gaussian width must be positive");
      break;
  }
}

double MembershipFunction::operator()(double x) const {
  const auto& a = p;
  switch (shape) {
    case Shape::triangular:
      if (x < a[0] || x > a[2]) return 0.0;
      if (x == a[1]) return 1.0;
      if (x < a[1]) return (x - a[0]) / (a[1] - a[0]);
      return (a[2] - x) / (a[2] - a[1]);
    case Shape::trapezoidal:
      if (x < a[0] || x > a[3]) return 0.0;
      if (x >= a[1] && x <= a[2]) return 1.0;
      if (x < a[1]) return (x - a[0]) / (a[1] - a[0]);
      return (a[3] - x) / (a[3] - a[2]);
    case Shape::gaussian: {
      const double z = (x - a[0]) / a[1];
      return std::exp(-0.5 * z * z);
    }
  }
  return 0.0;
}

double MembershipFunction::peak() const {
  switch (shape) {
    case Shape::triangular: return p[1];
    case Shape::trapezoidal: return 0.5 * (p[1] + p[2]);
    case Shape::gaussian: return p[0];
  }
  return 0.0;
}

double membership(const MembershipFunction& mf, double x) { return mf(x); }

double Universe::clamp(double x) const { return std::clamp(x, lo, hi); }

void validate(const Universe& u) {
  if (!(u.lo < u.hi)) throw InputError("universe needs lo < hi");
  if (u.resolution < 2) throw InputError("universe needs at least two sample points");
}

FuzzySet FuzzySet::sample(const MembershipFunction& mf, const Universe& u) {
  validate(u);
  FuzzySet s{u, std::vector<double>(u.resolution)};
  for (std::size_t i = 0; i < u.resolution; ++i) s.mu[i] = mf(u.at(i));
  return s;
}

FuzzySet FuzzySet::zero(const Universe& u) {
  validate(u);
  return {u, std::vector<double>(u.resolution, 0.0)};
}

double FuzzySet::max() const { return mu.empty() ? 0.0 : *std::max_element(mu.begin(), mu.end()); }

LevelSets level_sets(const MembershipFunction& mf) {
  const auto& a = mf.p;
  LevelSets out;
  switch (mf.shape) {
    case Shape::triangular:
      out.support = Interval{a[0], a[2]};
      out.core = Interval{a[1], a[1]};
      if (a[0] < a[1]) out.crossovers.push_back(0.5 * (a[0] + a[1]));
      if (a[1] < a[2]) out.crossovers.push_back(0.5 * (a[1] + a[2]));
      break;
    case Shape::trapezoidal:
      out.support = Interval{a[0], a[3]};
      out.core = Interval{a[1], a[2]};
      if (a[0] < a[1]) out.crossovers.push_back(0.5 * (a[0] + a[1]));
      if (a[2] < a[3]) out.crossovers.push_back(0.5 * (a[2] + a[3]));
      break;
    case Shape::gaussian: {
      const double inf = std::numeric_limits<double>::infinity();
      const double half = a[1] * std::sqrt(2.0 * std::log(2.0));
      out.support = Interval{-inf, inf};
      out.core = Interval{a[0], a[0]};
      out.crossovers = {a[0] - half, a[0] + half};
      break;
    }
  }
  return out;
}

LevelSets level_sets(const FuzzySet& set) {
  LevelSets out;
  const auto& mu = set.mu;
  const auto& u = set.universe;
  std::optional<std::size_t> first, last, cfirst, clast;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] > 0) {
      if (!first) first = i;
      last = i;
    }
    if (mu[i] >= 1.0 - 1e-12) {
      if (!cfirst) cfirst = i;
      clast = i;
    }
  }
  if (first) out.support = Interval{u.at(*first), u.at(*last)};
  if (cfirst) out.core = Interval{u.at(*cfirst), u.at(*clast)};
  for (std::size_t i = 0; i + 1 < mu.size(); ++i) {
    const double d0 = mu[i] - 0.5;
    const double d1 = mu[i + 1] - 0.5;
    if (d0 == 0) {
      out.crossovers.push_back(u.at(i));
    } else if ((d0 < 0) != (d1 < 0) && d1 != 0) {
      const double t = d0 / (d0 - d1);
      out.crossovers.push_back(u.at(i) + t * u.step());
    }
  }
  if (!mu.empty() && mu.back() == 0.5) out.crossovers.push_back(u.hi);
  return out;
}

FuzzySet combine(const FuzzySet& a, const FuzzySet& b, kernels::SetOp op) {
  if (!(a.universe == b.universe) || a.mu.size() != b.mu.size()) throw InputError("fuzzy sets over different universes");
  FuzzySet out{a.universe, std::vector<double>(a.mu.size())};
  kernels::combine(a.mu, b.mu, out.mu, op);
  return out;
}

FuzzySet complement(const FuzzySet& a) {
  FuzzySet out = a;
  for (double& m : out.mu) m = 1.0 - m;
  return out;
}

std::optional<Interval> alpha_cut(const MembershipFunction& mf, double alpha) {
  if (!(alpha >= 0)) throw InputError("alpha must be non-negative");
  if (alpha > 1) return std::nullopt;
  if (alpha == 0) return level_sets(mf).support;
  if (alpha == 1) return level_sets(mf).core;  // a0 + (a1 - a0) need not round to a1
  const auto& a = mf.p;
  switch (mf.shape) {
    case Shape::triangular: return Interval{a[0] + alpha * (a[1] - a[0]), a[2] - alpha * (a[2] - a[1])};
    case Shape::trapezoidal: return Interval{a[0] + alpha * (a[1] - a[0]), a[3] - alpha * (a[3] - a[2])};
    case Shape::gaussian: {
      const double half = a[1] * std::sqrt(-2.0 * std::log(alpha));
      return Interval{a[0] - half, a[0] + half};
    }
  }
  return std::nullopt;
}

std::vector<Interval> alpha_cut(const FuzzySet& set, double alpha) {
  if (!(alpha >= 0)) throw InputError("alpha must be non-negative");
  std::vector<Interval> out;
  std::optional<std::size_t> start;
  const auto keep = [&](double m) { return alpha == 0 ? m > 0 : m >= alpha; };
  for (std::size_t i = 0; i <= set.mu.size(); ++i) {
    const bool in = i < set.mu.size() && keep(set.mu[i]);
    if (in && !start) start = i;
    if (!in && start) {
      out.push_back({set.universe.at(*start), set.universe.at(i - 1)});
      start.reset();
    }
  }
  return out;
}

std::size_t Partition::best_label(double x) const {
  std::size_t best = 0;
  double best_mu = -1;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const double m = sets[k](x);
    if (m > best_mu) {
      best_mu = m;
      best = k;
    }
  }
  return best;
}

void Partition::finalize() {
  validate(universe);
  if (labels.size() != sets.size() || labels.empty()) throw InputError("partition labels and sets differ");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (labels[i] == labels[j]) throw InputError("duplicate label '" + labels[i] + "' in partition " + name);
    }
  }
  curves.clear();
  for (const auto& mf : sets) curves.push_back(FuzzySet::sample(mf, universe).mu);
}

std::string_view shape_name(PartitionShape s) { return s == PartitionShape::gaussian ? "gaussian" : "triangular"; }

PartitionShape parse_partition_shape(std::string_view name) {
  if (name == "triangular") return PartitionShape::triangular;
  if (name == "gaussian") return PartitionShape::gaussian;
  throw InputError("unknown partition shape '" + std::string(name) + "'");
}

Partition uniform_partition(std::string name, double lo, double hi, std::size_t labels,
                            const std::string& label_prefix, std::size_t resolution, PartitionShape shape) {
  if (labels < 2) throw InputError("partition needs at least two labels");
  if (!(lo < hi)) throw InputError("partition needs min < max");
  Partition p;
  p.name = std::move(name);
  p.universe = {lo, hi, resolution};
  const double step = (hi - lo) / static_cast<double>(labels - 1);
  for (std::size_t k = 0; k < labels; ++k) {
    const double peak = k + 1 == labels ? hi : lo + static_cast<double>(k) * step;
    const double left = k == 0 ? lo : lo + static_cast<double>(k - 1) * step;
    const double right = k + 1 == labels ? hi : (k + 2 == labels ? hi : lo + static_cast<double>(k + 1) * step);
    if (shape == PartitionShape::gaussian) {
      // exp(-(step/2)^2 / (2 w^2)) = 1/2
      p.sets.push_back(MembershipFunction::gaussian(peak, step / (2.0 * std::sqrt(2.0 * std::log(2.0)))));
    } else {
      p.sets.push_back(MembershipFunction::triangular(left, peak, right));
    }
    p.labels.push_back(label_prefix + std::to_string(k + 1));
  }
  p.finalize();
  return p;
}

}  // namespace fcip::fuzzy
