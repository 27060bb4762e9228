#include <immintrin.h>

#include <algorithm>

#include "fcip/kernels.hpp"

namespace fcip::kernels {

namespace {

// _mm256_max_pd/_mm256_min_pd return the second operand when either is NaN;
// operand order mirrors std::max/std::min so NaN-free inputs agree exactly.

void combine_avx2(const double* a, const double* b, double* out, std::size_t n, SetOp op) {
  std::size_t i = 0;
  switch (op) {
    case SetOp::union_max:
      for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(out + i, _mm256_max_pd(_mm256_loadu_pd(b + i), _mm256_loadu_pd(a + i)));
      }
      for (; i < n; ++i) out[i] = std::max(a[i], b[i]);
      break;
    case SetOp::union_product:
      for (; i + 4 <= n; i += 4) {
        const __m256d va = _mm256_loadu_pd(a + i);
        const __m256d vb = _mm256_loadu_pd(b + i);
        _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_add_pd(va, vb), _mm256_mul_pd(va, vb)));
      }
      for (; i < n; ++i) out[i] = (a[i] + b[i]) - a[i] * b[i];
      break;
    case SetOp::intersect_min:
      for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(out + i, _mm256_min_pd(_mm256_loadu_pd(b + i), _mm256_loadu_pd(a + i)));
      }
      for (; i < n; ++i) out[i] = std::min(a[i], b[i]);
      break;
    case SetOp::intersect_product:
      for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
      }
      for (; i < n; ++i) out[i] = a[i] * b[i];
      break;
  }
}

void clip_max_avx2(double* acc, const double* curve, std::size_t n, double level) {
  const __m256d vl = _mm256_set1_pd(level);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d clipped = _mm256_min_pd(vl, _mm256_loadu_pd(curve + i));
    _mm256_storeu_pd(acc + i, _mm256_max_pd(clipped, _mm256_loadu_pd(acc + i)));
  }
  for (; i < n; ++i) acc[i] = std::max(acc[i], std::min(curve[i], level));
}

Moments moments_avx2(const double* mu, std::size_t n, double x0, double dx) {
  if (n < 2) return {};
  __m256d s0 = _mm256_setzero_pd();
  __m256d s1 = _mm256_setzero_pd();
  const __m256d step = _mm256_set1_pd(dx);
  const __m256d vx0 = _mm256_set1_pd(x0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d idx = _mm256_set_pd(static_cast<double>(i + 3), static_cast<double>(i + 2),
                                      static_cast<double>(i + 1), static_cast<double>(i));
    const __m256d x = _mm256_add_pd(vx0, _mm256_mul_pd(idx, step));
    const __m256d m = _mm256_loadu_pd(mu + i);
    s0 = _mm256_add_pd(s0, m);
    s1 = _mm256_add_pd(s1, _mm256_mul_pd(x, m));
  }
  alignas(32) double l0[4];
  alignas(32) double l1[4];
  _mm256_store_pd(l0, s0);
  _mm256_store_pd(l1, s1);
  double t0 = (l0[0] + l0[1]) + (l0[2] + l0[3]);
  double t1 = (l1[0] + l1[1]) + (l1[2] + l1[3]);
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

void ratio_avx2(const double* column, std::size_t n, double query, double weight, double* acc) {
  const __m256d q = _mm256_set1_pd(query);
  const __m256d w = _mm256_set1_pd(weight);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d c = _mm256_loadu_pd(column + i);
    const __m256d lo = _mm256_min_pd(q, c);
    const __m256d hi = _mm256_max_pd(q, c);
    const __m256d term = _mm256_mul_pd(_mm256_div_pd(lo, hi), w);
    _mm256_storeu_pd(acc + i, _mm256_add_pd(_mm256_loadu_pd(acc + i), term));
  }
  for (; i < n; ++i) {
    const double lo = std::min(column[i], query);
    const double hi = std::max(column[i], query);
    acc[i] = acc[i] + (lo / hi) * weight;
  }
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable t{Isa::avx2, combine_avx2, clip_max_avx2, moments_avx2, ratio_avx2};
  return t;
}

}  // namespace fcip::kernels
