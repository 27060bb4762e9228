#include <algorithm>
#include <cmath>
#include <numeric>

#include "fcip/error.hpp"
#include "fcip/models.hpp"

namespace fcip::models {

ScenarioSet sensitivity_scenarios(const CostPredictor& model, const Drivers& base, const ScenarioOptions& options,
                                  const DriverBounds& bounds) {
  if (options.count < 1) throw InputError("scenario count must be at least 1");
  if (!(options.band > 0 && options.band <= 1)) throw InputError("band must lie in (0, 1]");
  std::array<bool, kDriverCount> on{};
  for (Driver d : options.toggles) on[static_cast<std::size_t>(d)] = true;

  ScenarioSet set;
  set.seed = options.seed;
  set.band = options.band;
  for (Driver d : kAllDrivers) {
    if (on[static_cast<std::size_t>(d)]) set.toggles.push_back(d);
  }
  set.base = model(base);

  std::mt19937_64 gen(options.seed);
  for (std::size_t s = 0; s < options.count; ++s) {
    Drivers x = base;
    // Draws happen in driver order regardless of how toggles were listed.
    for (Driver d : set.toggles) {
      const double v = base[d];
      double draw = uniform(gen, v * (1 - options.band), v * (1 + options.band));
      draw = std::clamp(draw, bounds.lower(d), bounds.upper(d));
      if (d == Driver::year) draw = std::round(draw);
      x[d] = draw;
    }
    set.inputs.push_back(x);
    set.values.push_back(model(x));
  }
  const double n = static_cast<double>(set.values.size());
  const auto [lo, hi] = std::minmax_element(set.values.begin(), set.values.end());
  set.mean = std::clamp(std::accumulate(set.values.begin(), set.values.end(), 0.0) / n, *lo, *hi);
  if (*lo == *hi) {
    set.sd = 0;
  } else {
    double ss = 0;
    for (double v : set.values) ss += (v - set.mean) * (v - set.mean);
    set.sd = std::sqrt(ss / (n - 1));
  }
  return set;
}

std::vector<Importance> importance_ranking(const CostPredictor& model, const Dataset& train, double band) {
  if (!(band > 0)) throw InputError("band must be positive");
  const auto bounds = DriverBounds::of(train);
  std::vector<Importance> out;
  double total = 0;
  for (Driver d : kAllDrivers) {
    const double delta = band * (bounds.upper(d) - bounds.lower(d));
    double sum = 0;
    for (const auto& c : train) {
      const Drivers x = c.drivers();
      const double y0 = model(x);
      Drivers up = x, down = x;
      up[d] = std::min(x[d] + delta, bounds.upper(d));
      down[d] = std::max(x[d] - delta, bounds.lower(d));
      sum += 0.5 * (std::fabs(model(up) - y0) + std::fabs(model(down) - y0));
    }
    const double score = sum / static_cast<double>(train.size());
    out.push_back({d, score});
    total += score;
  }
  if (total > 0) {
    for (auto& imp : out) imp.score /= total;
  }
  std::stable_sort(out.begin(), out.end(), [](const Importance& a, const Importance& b) { return a.score > b.score; });
  return out;
}

}  // namespace fcip::models
