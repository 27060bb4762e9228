#include <cmath>
#include <numeric>

#include "fcip/error.hpp"
#include "fcip/mcdm.hpp"

namespace fcip::mcdm {

void validate(const LikertResponses& r) {
  if (r.scores.empty()) throw InputError("parameter '" + r.parameter_id + "': no scores");
  for (int s : r.scores) {
    if (s < 1 || s > 5) {
      throw InputError("parameter '" + r.parameter_id + "': score " + std::to_string(s) + " outside 1..5");
    }
  }
}

double mean_score(const LikertResponses& r) {
  validate(r);
  // Frequency-weighted sum over the five ratings.
  std::array<int, 5> freq{};
  for (int s : r.scores) ++freq[static_cast<std::size_t>(s - 1)];
  double total = 0;
  for (int s = 1; s <= 5; ++s) total += freq[static_cast<std::size_t>(s - 1)] * s;
  return total / static_cast<double>(r.scores.size());
}

double standard_error(const LikertResponses& r) {
  validate(r);
  const auto n = r.scores.size();
  if (n < 2) throw InputError("parameter '" + r.parameter_id + "': standard error needs two scores");
  const double mean = mean_score(r);
  double ss = 0;
  for (int s : r.scores) ss += (s - mean) * (s - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  return sd / std::sqrt(static_cast<double>(n));
}

std::vector<std::string> screen_by_mean(std::span<const ScoredParameter> scored, double threshold) {
  std::vector<std::string> out;
  for (const auto& p : scored) {
    if (p.value >= threshold) out.push_back(p.id);
  }
  return out;
}

}  // namespace fcip::mcdm
