#include <algorithm>
#include <cmath>

#include "fcip/error.hpp"
#include "fcip/mcdm.hpp"

namespace fcip::mcdm {

Tfn make_tfn(double l, double m, double u) {
  if (!std::isfinite(l) || !std::isfinite(m) || !std::isfinite(u)) throw InputError("fuzzy number not finite");
  if (!(l <= m && m <= u)) throw InputError("fuzzy number must satisfy l <= m <= u");
  return {l, m, u};
}

Tfn operator+(const Tfn& a, const Tfn& b) { return {a.l + b.l, a.m + b.m, a.u + b.u}; }
Tfn operator*(const Tfn& a, const Tfn& b) { return {a.l * b.l, a.m * b.m, a.u * b.u}; }

Tfn inverse(const Tfn& a) {
  if (a.l <= 0) throw DomainError("fuzzy inverse of a non-positive number");
  return {1.0 / a.u, 1.0 / a.m, 1.0 / a.l};
}

FuzzyLikertScale FuzzyLikertScale::standard() {
  return {{Tfn{0, 0, 0.25}, Tfn{0, 0.25, 0.5}, Tfn{0.25, 0.5, 0.75}, Tfn{0.5, 0.75, 1}, Tfn{0.75, 1, 1}}};
}

const Tfn& FuzzyLikertScale::operator()(int score) const {
  if (score < 1 || score > 5) throw InputError("score " + std::to_string(score) + " outside 1..5");
  return terms[static_cast<std::size_t>(score - 1)];
}

void validate(const FuzzyLikertScale& scale) {
  for (const auto& t : scale.terms) {
    if (!t.valid() || t.l < 0 || t.u > 1) throw InputError("linguistic scale terms must lie in [0, 1]");
  }
}

Tfn fdm_aggregate(std::span<const Tfn> opinions) {
  if (opinions.empty()) throw InputError("no opinions to aggregate");
  double lo = opinions.front().l;
  double hi = opinions.front().u;
  double log_sum = 0;
  bool zero = false;
  for (const auto& o : opinions) {
    if (!o.valid()) throw InputError("fuzzy number must satisfy l <= m <= u");
    if (o.m < 0) throw InputError("negative middle value in opinion");
    lo = std::min(lo, o.l);
    hi = std::max(hi, o.u);
    if (o.m == 0) {
      zero = true;
    } else {
      log_sum += std::log(o.m);
    }
  }
  double mid = zero ? 0.0 : std::exp(log_sum / static_cast<double>(opinions.size()));
  // exp/log round-off must not push m past the hull.
  mid = std::clamp(mid, lo, hi);
  if (opinions.size() == 1) mid = opinions.front().m;
  return {lo, mid, hi};
}

double defuzzify_centroid(const Tfn& w) { return (w.l + w.m + w.u) / 3.0; }

ScreenResult fdm_screen(std::span<const ScoredParameter> crisp, double alpha,
                        std::span<const std::string> exclusions) {
  ScreenResult out;
  for (const auto& p : crisp) {
    const bool excluded = std::find(exclusions.begin(), exclusions.end(), p.id) != exclusions.end();
    if (p.value >= alpha && !excluded) {
      out.retained.push_back(p.id);
    } else {
      out.deleted.push_back(p.id);
    }
  }
  return out;
}

}  // namespace fcip::mcdm
