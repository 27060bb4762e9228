#include <algorithm>
#include <limits>

#include "fcip/error.hpp"
#include "fcip/screening.hpp"

namespace fcip::screening {

std::string_view method_name(SelectionMethod m) {
  switch (m) {
    case SelectionMethod::forward: return "forward";
    case SelectionMethod::backward: return "backward";
    case SelectionMethod::stepwise: return "stepwise";
  }
  return "?";
}

namespace {

struct ModelStats {
  double sse = 0;
  double r = 0;
  double r2 = 0;
  double adj_r2 = 0;
};

class Selector {
 public:
  explicit Selector(const DesignData& d) : d_(d) {}

  ModelStats fit(const std::vector<std::size_t>& cols) const {
    const DesignData s = d_.subset(cols);
    const OlsFit f = ols_fit(s.x, s.y, s.names);
    return {f.sse, f.r, f.r2, f.adj_r2};
  }

  // Partial-F p-value of adding (or keeping) one variable: `small` lacks it, `big` has it.
  double partial_p(const ModelStats& small, const ModelStats& big, std::size_t big_p) const {
    const double dfe = static_cast<double>(d_.rows()) - static_cast<double>(big_p) - 1.0;
    if (dfe <= 0) return 1.0;
    if (big.sse <= 0) return small.sse > 0 ? 0.0 : 1.0;
    const double f = (small.sse - big.sse) / (big.sse / dfe);
    return f_sf(std::max(f, 0.0), 1.0, dfe);
  }

  bool can_add(std::size_t p) const { return d_.rows() > p + 2; }

 private:
  const DesignData& d_;
};

void push(SelectionTrace& t, StepAction a, const std::string& v, const ModelStats& s, double p) {
  t.steps.push_back({a, v, s.r, s.r2, s.adj_r2, p});
}

// Best candidate to enter: smallest partial-F p, earlier column on ties.
bool try_enter(const Selector& sel, const DesignData& d, std::vector<std::size_t>& model, double p_enter,
               SelectionTrace& trace) {
  if (!sel.can_add(model.size() + 1)) return false;
  const ModelStats current = sel.fit(model);
  double best_p = std::numeric_limits<double>::infinity();
  std::size_t best = d.cols();
  ModelStats best_stats;
  for (std::size_t j = 0; j < d.cols(); ++j) {
    if (std::find(model.begin(), model.end(), j) != model.end()) continue;
    auto trial = model;
    trial.push_back(j);
    ModelStats s;
    try {
      s = sel.fit(trial);
    } catch (const InputError&) {
      continue;  // collinear with the current model
    }
    const double p = sel.partial_p(current, s, trial.size());
    if (p < best_p) {
      best_p = p;
      best = j;
      best_stats = s;
    }
  }
  if (best == d.cols() || !(best_p < p_enter)) return false;
  model.push_back(best);
  push(trace, StepAction::enter, d.names[best], best_stats, best_p);
  return true;
}

// Worst variable to drop: largest p, first in model order on ties.
bool try_remove(const Selector& sel, const DesignData& d, std::vector<std::size_t>& model, double p_remove,
                SelectionTrace& trace) {
  if (model.empty()) return false;
  const ModelStats full = sel.fit(model);
  double worst_p = -1;
  std::size_t worst = model.size();
  ModelStats worst_stats;
  for (std::size_t k = 0; k < model.size(); ++k) {
    auto reduced = model;
    reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(k));
    const ModelStats s = sel.fit(reduced);
    const double p = sel.partial_p(s, full, model.size());
    if (p > worst_p) {
      worst_p = p;
      worst = k;
      worst_stats = s;
    }
  }
  if (!(worst_p > p_remove)) return false;
  const std::string name = d.names[model[worst]];
  model.erase(model.begin() + static_cast<std::ptrdiff_t>(worst));
  push(trace, StepAction::remove, name, worst_stats, worst_p);
  return true;
}

}  // namespace

SelectionTrace select_variables(const DesignData& data, const SelectionOptions& options) {
  if (options.p_enter > options.p_remove) throw InputError("p_enter must not exceed p_remove");
  if (data.cols() == 0) throw InputError("no candidate variables");
  Selector sel(data);
  SelectionTrace trace;
  trace.method = options.method;
  std::vector<std::size_t> model;

  switch (options.method) {
    case SelectionMethod::forward:
      while (try_enter(sel, data, model, options.p_enter, trace)) {
      }
      break;
    case SelectionMethod::backward: {
      // The full model is recorded as nested entries in schema order.
      ModelStats base = sel.fit({});
      for (std::size_t j = 0; j < data.cols(); ++j) {
        model.push_back(j);
        const ModelStats s = sel.fit(model);
        push(trace, StepAction::enter, data.names[j], s, sel.partial_p(base, s, model.size()));
        base = s;
      }
      while (try_remove(sel, data, model, options.p_remove, trace)) {
      }
      break;
    }
    case SelectionMethod::stepwise: {
      const std::size_t limit = 4 * data.cols() + 4;
      for (std::size_t round = 0; round < limit; ++round) {
        if (!try_enter(sel, data, model, options.p_enter, trace)) break;
        while (try_remove(sel, data, model, options.p_remove, trace)) {
        }
      }
      break;
    }
  }
  for (auto j : model) trace.selected.push_back(data.names[j]);
  return trace;
}

HybridResult hybrid_select(const DesignData& data, int mode, const SelectionOptions& options) {
  if (mode != 1 && mode != 2) throw InputError("hybrid mode must be 1 or 2");
  HybridResult out;
  FilterRule rule;
  rule.apply_lo = mode == 1;
  out.filter = correlation_filter(data, rule);
  if (out.filter.retained.empty()) return out;
  SelectionOptions opts = options;
  opts.method = SelectionMethod::stepwise;
  out.trace = select_variables(data.subset(out.filter.retained), opts);
  out.selected = out.trace.selected;
  return out;
}

}  // namespace fcip::screening
