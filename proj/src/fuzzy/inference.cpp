#include <algorithm>
#include <cmath>
#include <set>

#include "fcip/error.hpp"
#include "fcip/fuzzy.hpp"

namespace fcip::fuzzy {

std::string_view defuzzifier_name(Defuzzifier d) { return d == Defuzzifier::cog ? "cog" : "wam"; }

RuleBase RuleBase::subset(std::span<const std::uint8_t> mask) const {
  if (mask.size() != rules.size()) throw InputError("rule mask has the wrong length");
  RuleBase out{inputs, output, {}};
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (mask[i] != 0) out.rules.push_back(rules[i]);
  }
  return out;
}

void validate(const RuleBase& base) {
  if (base.inputs.empty()) throw InputError("rule base has no input partitions");
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t r = 0; r < base.rules.size(); ++r) {
    const auto& rule = base.rules[r];
    if (rule.antecedent.size() != base.inputs.size()) throw InputError("rule " + std::to_string(r + 1) + " has the wrong arity");
    for (std::size_t v = 0; v < rule.antecedent.size(); ++v) {
      if (rule.antecedent[v] >= base.inputs[v].size()) throw InputError("rule " + std::to_string(r + 1) + " names an unknown label");
    }
    if (rule.consequent >= base.output.size()) throw InputError("rule " + std::to_string(r + 1) + " names an unknown output label");
    if (!seen.insert(rule.antecedent).second) throw InputError("rule " + std::to_string(r + 1) + " repeats an antecedent");
  }
}

namespace {

double firing_strength(const RuleBase& base, const FuzzyRule& rule, std::span<const double> x) {
  double s = 1.0;
  for (std::size_t v = 0; v < rule.antecedent.size() && s > 0; ++v) {
    s = std::min(s, base.inputs[v].sets[rule.antecedent[v]](x[v]));
  }
  return s;
}

}  // namespace

Inference infer(const RuleBase& base, std::span<const double> inputs) {
  if (base.rules.empty()) throw InputError("no rules");
  if (inputs.size() != base.inputs.size()) throw InputError("input count does not match the rule base");
  if (base.output.curves.size() != base.output.size()) throw InputError("output partition is not sampled");
  std::vector<double> x(inputs.begin(), inputs.end());
  for (std::size_t v = 0; v < x.size(); ++v) x[v] = base.inputs[v].universe.clamp(x[v]);

  Inference out{FuzzySet::zero(base.output.universe), {}};
  for (std::size_t r = 0; r < base.rules.size(); ++r) {
    const double s = firing_strength(base, base.rules[r], x);
    if (s <= 0) continue;
    out.fired.push_back({r, s});
    kernels::clip_max_accumulate(out.aggregated.mu, base.output.curves[base.rules[r].consequent], s);
  }
  return out;
}

double defuzzify_cog(const FuzzySet& set) {
  const auto m = kernels::moments(set.mu, set.universe.lo, set.universe.step());
  if (!(m.mass > 0)) throw DomainError("no firing");
  return m.first / m.mass;
}

double defuzzify_wam(const RuleBase& base, const Inference& inference) {
  double num = 0, den = 0;
  for (const auto& f : inference.fired) {
    num += base.output.sets[base.rules[f.rule].consequent].peak() * f.strength;
    den += f.strength;
  }
  if (!(den > 0)) throw DomainError("no firing");
  return num / den;
}

double defuzzify(const RuleBase& base, const Inference& inference, Defuzzifier method) {
  return method == Defuzzifier::cog ? defuzzify_cog(inference.aggregated) : defuzzify_wam(base, inference);
}

double predict(const RuleBase& base, std::span<const double> inputs, Defuzzifier method) {
  return defuzzify(base, infer(base, inputs), method);
}

std::array<double, kDriverCount> inputs_of(const Drivers& d) { return d.values(); }

}  // namespace fcip::fuzzy
