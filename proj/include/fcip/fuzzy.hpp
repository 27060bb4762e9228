#pragma once

// Fuzzy sets, Mamdani inference, Wang-Mendel rule induction and GA rule
// subset selection.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fcip/data.hpp"
#include "fcip/kernels.hpp"

namespace fcip::fuzzy {

enum class Shape { triangular, trapezoidal, gaussian };

std::string_view shape_name(Shape s);

/// Triangular (a1,a2,a3), trapezoidal (a1..a4) or gaussian (center, width).
struct MembershipFunction {
  Shape shape = Shape::triangular;
  std::array<double, 4> p{};

  static MembershipFunction triangular(double a1, double a2, double a3);
  static MembershipFunction trapezoidal(double a1, double a2, double a3, double a4);
  static MembershipFunction gaussian(double center, double width);

  double operator()(double x) const;
  /// Representative point used by weighted-average defuzzification.
  double peak() const;
};

void validate(const MembershipFunction& mf);
double membership(const MembershipFunction& mf, double x);

struct Universe {
  double lo = 0;
  double hi = 1;
  std::size_t resolution = 1001;

  double step() const { return (hi - lo) / static_cast<double>(resolution - 1); }
  double at(std::size_t i) const { return lo + static_cast<double>(i) * step(); }
  double clamp(double x) const;
  friend bool operator==(const Universe&, const Universe&) = default;
};

void validate(const Universe& u);

/// Membership curve sampled on a universe.
struct FuzzySet {
  Universe universe;
  std::vector<double> mu;

  static FuzzySet sample(const MembershipFunction& mf, const Universe& u);
  static FuzzySet zero(const Universe& u);
  double max() const;
};

struct Interval {
  double lo = 0;
  double hi = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct LevelSets {
  std::optional<Interval> support;  // open interval {mu > 0}, reported by its endpoints
  std::optional<Interval> core;     // {mu = 1}
  std::vector<double> crossovers;   // {mu = 0.5}
};

/// Exact level sets of a membership function. A gaussian's support is unbounded
/// and reported as the whole real line.
LevelSets level_sets(const MembershipFunction& mf);
/// Level sets of a sampled set, to grid resolution (crossovers interpolated).
LevelSets level_sets(const FuzzySet& set);

FuzzySet combine(const FuzzySet& a, const FuzzySet& b, kernels::SetOp op);
FuzzySet complement(const FuzzySet& a);

/// {x : mu(x) >= alpha} for alpha in (0, 1]; alpha = 0 gives the support.
std::optional<Interval> alpha_cut(const MembershipFunction& mf, double alpha);
/// Maximal runs of grid points with mu >= alpha.
std::vector<Interval> alpha_cut(const FuzzySet& set, double alpha);

/// Labeled fuzzy sets over one variable.
struct Partition {
  std::string name;
  Universe universe;
  std::vector<std::string> labels;
  std::vector<MembershipFunction> sets;
  std::vector<std::vector<double>> curves;  // sampled sets, filled by `finalize`

  std::size_t size() const noexcept { return labels.size(); }
  /// Label with the highest membership at x (first on ties).
  std::size_t best_label(double x) const;
  void finalize();
};

enum class PartitionShape { triangular, gaussian };

std::string_view shape_name(PartitionShape s);
PartitionShape parse_partition_shape(std::string_view name);

/// Equally spaced sets from lo to hi. Triangular sets form a Ruspini partition
/// with the end sets shouldered at the bounds; gaussian sets use the same
/// centers with widths chosen so neighbours cross at 0.5. `label_prefix`
/// yields labels prefix1, prefix2, ...
Partition uniform_partition(std::string name, double lo, double hi, std::size_t labels,
                            const std::string& label_prefix, std::size_t resolution = 1001,
                            PartitionShape shape = PartitionShape::triangular);

struct FuzzyRule {
  std::vector<std::size_t> antecedent;
  std::size_t consequent = 0;
  double degree = 1;  // rule degree from induction; not used by inference
  friend bool operator==(const FuzzyRule& a, const FuzzyRule& b) {
    return a.antecedent == b.antecedent && a.consequent == b.consequent;
  }
};

struct RuleBase {
  std::vector<Partition> inputs;
  Partition output;
  std::vector<FuzzyRule> rules;

  std::size_t size() const noexcept { return rules.size(); }
  /// Same partitions with only the rules whose mask entry is non-zero.
  RuleBase subset(std::span<const std::uint8_t> mask) const;
};

/// Throws InputError on bad indices or duplicate antecedents.
void validate(const RuleBase& base);

enum class Defuzzifier { wam, cog };

std::string_view defuzzifier_name(Defuzzifier d);

struct FiredRule {
  std::size_t rule = 0;
  double strength = 0;
};

struct Inference {
  FuzzySet aggregated;
  std::vector<FiredRule> fired;  // strength > 0 only, rule order
};

/// min over antecedents, min implication, max aggregation. Inputs are clamped
/// to their universes.
Inference infer(const RuleBase& base, std::span<const double> inputs);

double defuzzify_cog(const FuzzySet& set);
double defuzzify_wam(const RuleBase& base, const Inference& inference);
double defuzzify(const RuleBase& base, const Inference& inference, Defuzzifier method);

/// infer + defuzzify. Throws DomainError("no firing") when nothing fires.
double predict(const RuleBase& base, std::span<const double> inputs, Defuzzifier method = Defuzzifier::wam);

/// Partitions over the four drivers and the cost, from the dataset ranges.
struct PartitionSet {
  std::vector<Partition> inputs;
  Partition output;
};

PartitionSet partitions_for(const Dataset& ds, std::size_t labels, std::size_t resolution = 1001,
                            PartitionShape shape = PartitionShape::triangular);

RuleBase generate_rules_wm(const Dataset& train, const PartitionSet& partitions);

/// Every antecedent combination, consequent chosen as the output label best
/// matching the firing-weighted mean cost (nearest case when nothing fires).
RuleBase candidate_grid(const Dataset& train, const PartitionSet& partitions);

struct FitnessOptions {
  Defuzzifier defuzzifier = Defuzzifier::wam;
  double no_fire_penalty = 100.0;  // percentage points for a case nothing covers
};

struct FitnessReport {
  double mape = 0;
  std::size_t rules = 0;
  std::size_t uncovered = 0;
  double fitness = 0;
};

/// F = 1 / (MAPE + Nr).
double fitness_value(double mape, std::size_t rules);
FitnessReport fitness(const RuleBase& base, const Dataset& eval, const FitnessOptions& options = {});

/// Firing strengths of every candidate on every case, precomputed once so a
/// rule subset is scored without re-running inference.
class SubsetEvaluator {
 public:
  SubsetEvaluator(const RuleBase& candidates, const Dataset& eval, const FitnessOptions& options = {});

  FitnessReport evaluate(std::span<const std::uint8_t> mask) const;
  std::size_t candidates() const noexcept { return candidate_count_; }

 private:
  const RuleBase* base_;
  const Dataset* eval_;
  FitnessOptions options_;
  std::size_t candidate_count_;
  std::vector<double> peaks_;     // consequent peak per candidate
  std::vector<double> strength_;  // case-major, candidate_count_ per case
  std::vector<double> actual_;
};

struct GaConfig {
  std::size_t population = 60;
  std::size_t generations = 200;
  double crossover = 0.8;
  std::optional<double> mutation;  // default 1 / chromosome length
  std::size_t tournament = 2;
  std::size_t elitism = 1;
  std::uint64_t seed = 0;
  std::optional<double> initial_density;  // default min(0.5, wm_hint / length)
  std::size_t wm_hint = 0;                // expected useful rule count
};

void validate(const GaConfig& c);

struct GaResult {
  RuleBase base;
  std::vector<std::uint8_t> chromosome;
  FitnessReport best;
  std::vector<double> history;  // best fitness per generation, generation 0 first
};

GaResult ga_select_rules(const RuleBase& candidates, const Dataset& train, const GaConfig& config = {},
                         const FitnessOptions& options = {});

/// Drivers of a case in partition order.
std::array<double, kDriverCount> inputs_of(const Drivers& d);

}  // namespace fcip::fuzzy
