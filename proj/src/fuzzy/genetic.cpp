#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "fcip/error.hpp"
#include "fcip/fuzzy.hpp"
#include "fcip/models.hpp"

namespace fcip::fuzzy {

double fitness_value(double mape, std::size_t rules) {
  const double denom = mape + static_cast<double>(rules);
  if (!(denom > 0)) return 1.0;  // perfect and empty cannot both hold for a non-empty base
  return 1.0 / denom;
}

FitnessReport fitness(const RuleBase& base, const Dataset& eval, const FitnessOptions& options) {
  if (base.rules.empty()) throw InputError("no rules");
  FitnessReport rep;
  rep.rules = base.size();
  double sum = 0;
  for (const auto& c : eval) {
    const auto x = inputs_of(c.drivers());
    const auto inf = infer(base, x);
    if (inf.fired.empty() || !(inf.aggregated.max() > 0)) {
      sum += options.no_fire_penalty;
      ++rep.uncovered;
      continue;
    }
    const double y = defuzzify(base, inf, options.defuzzifier);
    sum += 100.0 * std::fabs(c.cost_le - y) / y;
  }
  rep.mape = sum / static_cast<double>(eval.size());
  rep.fitness = fitness_value(rep.mape, rep.rules);
  return rep;
}

SubsetEvaluator::SubsetEvaluator(const RuleBase& candidates, const Dataset& eval, const FitnessOptions& options)
    : base_(&candidates), eval_(&eval), options_(options), candidate_count_(candidates.size()) {
  if (candidates.rules.empty()) throw InputError("no candidate rules");
  for (const auto& r : candidates.rules) peaks_.push_back(candidates.output.sets[r.consequent].peak());
  strength_.reserve(eval.size() * candidate_count_);
  for (const auto& c : eval) {
    const auto x = inputs_of(c.drivers());
    std::array<double, kDriverCount> xc{};
    for (std::size_t v = 0; v < kDriverCount; ++v) xc[v] = candidates.inputs[v].universe.clamp(x[v]);
    for (const auto& rule : candidates.rules) {
      double s = 1.0;
      for (std::size_t v = 0; v < rule.antecedent.size() && s > 0; ++v) {
        s = std::min(s, candidates.inputs[v].sets[rule.antecedent[v]](xc[v]));
      }
      strength_.push_back(s);
    }
    actual_.push_back(c.cost_le);
  }
}

FitnessReport SubsetEvaluator::evaluate(std::span<const std::uint8_t> mask) const {
  if (mask.size() != candidate_count_) throw InputError("rule mask has the wrong length");
  std::vector<std::uint32_t> on;
  for (std::size_t r = 0; r < mask.size(); ++r) {
    if (mask[r] != 0) on.push_back(static_cast<std::uint32_t>(r));
  }
  FitnessReport rep;
  rep.rules = on.size();
  if (on.empty()) {
    rep.mape = options_.no_fire_penalty;
    rep.uncovered = actual_.size();
    rep.fitness = 0;  // an empty base is never a valid answer
    return rep;
  }
  if (options_.defuzzifier == Defuzzifier::cog) return fitness(base_->subset(mask), *eval_, options_);
  double sum = 0;
  for (std::size_t i = 0; i < actual_.size(); ++i) {
    const double* s = strength_.data() + i * candidate_count_;
    double num = 0, den = 0;
    // Rule order, skipping silent rules, as in defuzzify_wam.
    for (auto r : on) {
      if (!(s[r] > 0)) continue;
      num += peaks_[r] * s[r];
      den += s[r];
    }
    if (!(den > 0)) {
      sum += options_.no_fire_penalty;
      ++rep.uncovered;
      continue;
    }
    const double y = num / den;
    sum += 100.0 * std::fabs(actual_[i] - y) / y;
  }
  rep.mape = sum / static_cast<double>(actual_.size());
  rep.fitness = fitness_value(rep.mape, rep.rules);
  return rep;
}

void validate(const GaConfig& c) {
  if (c.population < 2) throw InputError("population must be at least 2");
  if (!(c.crossover >= 0 && c.crossover <= 1)) throw InputError("crossover probability must lie in [0, 1]");
  if (c.mutation && !(*c.mutation >= 0 && *c.mutation <= 1)) throw InputError("mutation probability must lie in [0, 1]");
  if (c.tournament < 1) throw InputError("tournament size must be at least 1");
  if (c.elitism >= c.population) throw InputError("elitism must be smaller than the population");
  if (c.initial_density && !(*c.initial_density >= 0 && *c.initial_density <= 1)) {
    throw InputError("initial density must lie in [0, 1]");
  }
}

namespace {

std::size_t draw_index(std::mt19937_64& gen, std::size_t n) {
  const auto k = static_cast<std::size_t>(models::uniform01(gen) * static_cast<double>(n));
  return std::min(k, n - 1);
}

}  // namespace

GaResult ga_select_rules(const RuleBase& candidates, const Dataset& train, const GaConfig& config,
                         const FitnessOptions& options) {
  validate(config);
  const SubsetEvaluator evaluator(candidates, train, options);
  const std::size_t len = candidates.size();
  const double pm = config.mutation.value_or(1.0 / static_cast<double>(len));
  const double density = config.initial_density.value_or(
      config.wm_hint > 0 ? std::min(0.5, static_cast<double>(config.wm_hint) / static_cast<double>(len)) : 0.5);

  std::mt19937_64 gen(config.seed);
  using Chromosome = std::vector<std::uint8_t>;
  std::vector<Chromosome> pop(config.population, Chromosome(len, 0));
  for (auto& c : pop) {
    for (auto& bit : c) bit = models::uniform01(gen) < density ? 1 : 0;
  }
  std::vector<FitnessReport> score(pop.size());
  for (std::size_t i = 0; i < pop.size(); ++i) score[i] = evaluator.evaluate(pop[i]);

  GaResult result;
  auto record_best = [&] {
    std::size_t b = 0;
    for (std::size_t i = 1; i < pop.size(); ++i) {
      if (score[i].fitness > score[b].fitness) b = i;
    }
    if (result.chromosome.empty() || score[b].fitness > result.best.fitness) {
      result.chromosome = pop[b];
      result.best = score[b];
    }
    result.history.push_back(result.best.fitness);
  };
  record_best();

  auto tournament = [&] {
    std::size_t best = draw_index(gen, pop.size());
    for (std::size_t t = 1; t < config.tournament; ++t) {
      const auto k = draw_index(gen, pop.size());
      if (score[k].fitness > score[best].fitness) best = k;
    }
    return best;
  };

  for (std::size_t g = 0; g < config.generations; ++g) {
    std::vector<std::size_t> order(pop.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return score[a].fitness > score[b].fitness; });
    std::vector<Chromosome> next;
    std::vector<FitnessReport> next_score;
    for (std::size_t e = 0; e < config.elitism; ++e) {
      next.push_back(pop[order[e]]);
      next_score.push_back(score[order[e]]);
    }
    while (next.size() < pop.size()) {
      Chromosome a = pop[tournament()];
      Chromosome b = pop[tournament()];
      if (len > 1 && models::uniform01(gen) < config.crossover) {
        const std::size_t cut = 1 + draw_index(gen, len - 1);
        std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(cut), a.end(), b.begin() + static_cast<std::ptrdiff_t>(cut));
      }
      for (auto* child : {&a, &b}) {
        for (auto& bit : *child) {
          if (models::uniform01(gen) < pm) bit ^= 1;
        }
      }
      next.push_back(std::move(a));
      next_score.push_back(evaluator.evaluate(next.back()));
      if (next.size() < pop.size()) {
        next.push_back(std::move(b));
        next_score.push_back(evaluator.evaluate(next.back()));
      }
    }
    pop = std::move(next);
    score = std::move(next_score);
    record_best();
  }

  if (result.best.rules == 0) throw DomainError("empty rule base selected");
  result.base = candidates.subset(result.chromosome);
  return result;
}

}  // namespace fcip::fuzzy
