#include <algorithm>
#include <cmath>
#include <numeric>

#include "fcip/error.hpp"
#include "fcip/kernels.hpp"
#include "fcip/models.hpp"

namespace fcip::models {

void validate(const CbrConfig& c) {
  double sum = 0;
  for (double w : c.weights) {
    if (!(w >= 0) || !std::isfinite(w)) throw InputError("attribute weights must be non-negative");
    sum += w;
  }
  if (!(sum > 0)) throw InputError("attribute weights sum to zero");
}

CbrModel::CbrModel(Dataset base, CbrConfig config) : base_(std::move(base)), config_(config) {
  validate(config_);
  for (Driver d : kAllDrivers) columns_[static_cast<std::size_t>(d)] = base_.column(d);
}

CbrModel CbrModel::retain(const ProjectCase& solved) const {
  auto cases = base_.cases();
  cases.push_back(solved);
  return CbrModel(Dataset(std::move(cases), base_.role()), config_);
}

double attribute_similarity(double a, double b) {
  if (!(a > 0) || !(b > 0)) throw InputError("attribute similarity needs positive values");
  return std::min(a, b) / std::max(a, b);
}

double case_similarity(std::span<const double> as, std::span<const double> weights) {
  if (as.size() != weights.size()) throw InputError("similarities and weights differ in length");
  double acc = 0;
  double wsum = 0;
  // Same accumulation order as the column scan, so both agree bit-for-bit.
  for (std::size_t i = 0; i < as.size(); ++i) {
    acc = acc + as[i] * weights[i];
    wsum += weights[i];
  }
  if (!(wsum > 0)) throw InputError("attribute weights sum to zero");
  return acc / wsum;
}

namespace {

void check_query(const Drivers& q) {
  for (Driver d : kAllDrivers) {
    if (!(q[d] > 0) || !std::isfinite(q[d])) throw InputError(std::string(driver_key(d)) + " must be positive");
  }
}

}  // namespace

std::vector<double> similarities(const CbrModel& model, const Drivers& query) {
  check_query(query);
  std::vector<double> acc(model.base().size(), 0.0);
  double wsum = 0;
  for (Driver d : kAllDrivers) {
    const double w = model.config().weights[static_cast<std::size_t>(d)];
    kernels::ratio_similarity_accumulate(model.column(d), query[d], w, acc);
    wsum += w;
  }
  for (double& a : acc) a /= wsum;
  return acc;
}

CbrResult cbr_predict(const CbrModel& model, const Drivers& query, std::size_t k) {
  if (k < 1) throw InputError("k must be at least 1");
  const auto cs = similarities(model, query);
  std::vector<std::size_t> order(cs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cs[a] > cs[b]; });
  CbrResult out;
  const auto take = std::min(k, order.size());
  const auto q = query.values();
  for (std::size_t r = 0; r < take; ++r) {
    const auto i = order[r];
    const auto& c = model.base()[i];
    RetrievedCase rc;
    rc.index = i;
    rc.id = c.id;
    const auto v = c.drivers().values();
    for (std::size_t j = 0; j < kDriverCount; ++j) rc.as[j] = attribute_similarity(v[j], q[j]);
    rc.cs = cs[i];
    rc.cost_le = c.cost_le;
    out.ranked.push_back(std::move(rc));
  }
  out.cost_le = out.ranked.front().cost_le;
  return out;
}

}  // namespace fcip::models
