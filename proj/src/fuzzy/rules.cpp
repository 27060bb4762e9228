#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "fcip/error.hpp"
#include "fcip/fuzzy.hpp"

namespace fcip::fuzzy {

PartitionSet partitions_for(const Dataset& ds, std::size_t labels, std::size_t resolution, PartitionShape shape) {
  const auto bounds = DriverBounds::of(ds);
  PartitionSet ps;
  std::size_t v = 1;
  for (Driver d : kAllDrivers) {
    double lo = bounds.lower(d), hi = bounds.upper(d);
    if (!(lo < hi)) hi = lo + 1;  // constant column still needs a universe
    ps.inputs.push_back(uniform_partition(std::string(driver_key(d)), lo, hi, labels,
                                          "v." + std::to_string(v++) + "_a.", resolution, shape));
  }
  const auto costs = ds.costs();
  const auto [clo, chi] = std::minmax_element(costs.begin(), costs.end());
  ps.output = uniform_partition("cost_le", *clo, *chi > *clo ? *chi : *clo + 1, labels, "c.", resolution, shape);
  return ps;
}

RuleBase generate_rules_wm(const Dataset& train, const PartitionSet& partitions) {
  if (partitions.inputs.size() != kDriverCount) throw InputError("rule induction needs one partition per driver");
  RuleBase base{partitions.inputs, partitions.output, {}};
  std::map<std::vector<std::size_t>, std::size_t> slot;  // antecedent -> rule index
  for (const auto& c : train) {
    const auto x = c.drivers().values();
    FuzzyRule rule;
    double degree = 1;
    for (std::size_t v = 0; v < kDriverCount; ++v) {
      const auto& p = partitions.inputs[v];
      const double xv = p.universe.clamp(x[v]);
      const auto k = p.best_label(xv);
      rule.antecedent.push_back(k);
      degree *= p.sets[k](xv);
    }
    const double y = partitions.output.universe.clamp(c.cost_le);
    rule.consequent = partitions.output.best_label(y);
    degree *= partitions.output.sets[rule.consequent](y);
    rule.degree = degree;
    const auto it = slot.find(rule.antecedent);
    if (it == slot.end()) {
      slot.emplace(rule.antecedent, base.rules.size());
      base.rules.push_back(std::move(rule));
    } else if (degree > base.rules[it->second].degree) {
      base.rules[it->second] = std::move(rule);  // strict: earlier case wins ties
    }
  }
  return base;
}

RuleBase candidate_grid(const Dataset& train, const PartitionSet& partitions) {
  if (partitions.inputs.size() != kDriverCount) throw InputError("rule induction needs one partition per driver");
  RuleBase base{partitions.inputs, partitions.output, {}};
  std::vector<std::size_t> dims;
  std::size_t total = 1;
  for (const auto& p : partitions.inputs) {
    dims.push_back(p.size());
    total *= p.size();
  }
  // Per case, per variable memberships in every label.
  std::vector<std::array<std::vector<double>, kDriverCount>> mu(train.size());
  std::vector<std::array<double, kDriverCount>> norm(train.size());
  for (std::size_t i = 0; i < train.size(); ++i) {
    const auto x = train[i].drivers().values();
    for (std::size_t v = 0; v < kDriverCount; ++v) {
      const auto& p = partitions.inputs[v];
      const double xv = p.universe.clamp(x[v]);
      for (const auto& mf : p.sets) mu[i][v].push_back(mf(xv));
      norm[i][v] = (xv - p.universe.lo) / (p.universe.hi - p.universe.lo);
    }
  }
  std::vector<std::size_t> idx(kDriverCount, 0);
  for (std::size_t n = 0; n < total; ++n) {
    // Decode n with the first variable most significant.
    std::size_t rest = n;
    for (std::size_t v = kDriverCount; v-- > 0;) {
      idx[v] = rest % dims[v];
      rest /= dims[v];
    }
    double wsum = 0, wy = 0;
    for (std::size_t i = 0; i < train.size(); ++i) {
      double s = 1;
      for (std::size_t v = 0; v < kDriverCount && s > 0; ++v) s = std::min(s, mu[i][v][idx[v]]);
      wsum += s;
      wy += s * train[i].cost_le;
    }
    double target = 0;
    if (wsum > 0) {
      target = wy / wsum;
    } else {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < train.size(); ++i) {
        double d2 = 0;
        for (std::size_t v = 0; v < kDriverCount; ++v) {
          const auto& p = partitions.inputs[v];
          const double peak = (p.sets[idx[v]].peak() - p.universe.lo) / (p.universe.hi - p.universe.lo);
          d2 += (peak - norm[i][v]) * (peak - norm[i][v]);
        }
        if (d2 < best) {
          best = d2;
          target = train[i].cost_le;
        }
      }
    }
    FuzzyRule rule;
    rule.antecedent = idx;
    rule.consequent = partitions.output.best_label(partitions.output.universe.clamp(target));
    rule.degree = wsum;
    base.rules.push_back(std::move(rule));
  }
  return base;
}

}  // namespace fcip::fuzzy
