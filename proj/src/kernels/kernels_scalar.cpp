#include <algorithm>

#include "fcip/kernels.hpp"

namespace fcip::kernels {

namespace {

void combine_scalar(const double* a, const double* b, double* out, std::size_t n, SetOp op) {
  switch (op) {
    case SetOp::union_max:
      for (std::size_t i = 0; i < n; ++i) out[i] = std::max(a[i], b[i]);
      break;
    case SetOp::union_product:
      for (std::size_t i = 0; i < n; ++i) out[i] = (a[i] + b[i]) - a[i] * b[i];
      break;
    case SetOp::intersect_min:
      for (std::size_t i = 0; i < n; ++i) out[i] = std::min(a[i], b[i]);
      break;
    case SetOp::intersect_product:
      for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
      break;
  }
}

void clip_max_scalar(double* acc, const double* curve, std::size_t n, double level) {
  for (std::size_t i = 0; i < n; ++i) acc[i] = std::max(acc[i], std::min(curve[i], level));
}

// Four interleaved partial sums, reduced pairwise, so the vector kernel can
// reproduce the same rounding.
Moments moments_scalar(const double* mu, std::size_t n, double x0, double dx) {
  if (n < 2) return {};
  double s0[4] = {0, 0, 0, 0};
  double s1[4] = {0, 0, 0, 0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (std::size_t k = 0; k < 4; ++k) {
      const double x = x0 + static_cast<double>(i + k) * dx;
      s0[k] += mu[i + k];
      s1[k] += x * mu[i + k];
    }
  }
  double t0 = (s0[0] + s0[1]) + (s0[2] + s0[3]);
  double t1 = (s1[0] + s1[1]) + (s1[2] + s1[3]);
  for (; i < n; ++i) {
    const double x = x0 + static_cast<double>(i) * dx;
    t0 += mu[i];
    t1 += x * mu[i];
  }
  const double xn = x0 + static_cast<double>(n - 1) * dx;
  t0 -= 0.5 * (mu[0] + mu[n - 1]);
  t1 -= 0.5 * (x0 * mu[0] + xn * mu[n - 1]);
  return {t0 * dx, t1 * dx};
}

void ratio_scalar(const double* column, std::size_t n, double query, double weight, double* acc) {
  for (std::size_t i = 0; i < n; ++i) {
    const double lo = std::min(column[i], query);
    const double hi = std::max(column[i], query);
    acc[i] = acc[i] + (lo / hi) * weight;
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable t{Isa::scalar, combine_scalar, clip_max_scalar, moments_scalar, ratio_scalar};
  return t;
}

}  // namespace fcip::kernels
