#pragma once

// Data-parallel inner loops shared by the fuzzy and CBR code. Every kernel has a
// scalar reference implementation; vector variants are selected once at run time
// and must match the reference bit-for-bit (except `moments`, which may reassociate).

#include <cstddef>
#include <span>
#include <string_view>

namespace fcip::kernels {

enum class Isa { scalar, avx2 };

/// Pointwise fuzzy-set operators.
enum class SetOp { union_max, union_product, intersect_min, intersect_product };

/// Trapezoid-rule integrals over a uniform grid x_i = x0 + i*dx.
struct Moments {
  double mass = 0;   // integral of mu
  double first = 0;  // integral of x*mu
};

struct KernelTable {
  Isa isa;
  void (*combine)(const double* a, const double* b, double* out, std::size_t n, SetOp op);
  void (*clip_max_accumulate)(double* acc, const double* curve, std::size_t n, double level);
  Moments (*moments)(const double* mu, std::size_t n, double x0, double dx);
  void (*ratio_similarity_accumulate)(const double* column, std::size_t n, double query, double weight,
                                      double* acc);
};

const KernelTable& scalar_table();
#if defined(FCIP_HAVE_AVX2_KERNELS)
const KernelTable& avx2_table();
#endif

bool isa_supported(Isa isa);
std::string_view isa_name(Isa isa);

/// Table chosen at first use: best supported ISA, overridable with FCIP_SIMD=scalar|avx2.
const KernelTable& active();
/// Table for a specific ISA; throws if unsupported on this CPU/build.
const KernelTable& table(Isa isa);

// Convenience wrappers over the active table.

void combine(std::span<const double> a, std::span<const double> b, std::span<double> out, SetOp op);

/// acc[i] = max(acc[i], min(curve[i], level)) -- Mamdani min-implication + max-aggregation.
void clip_max_accumulate(std::span<double> acc, std::span<const double> curve, double level);

Moments moments(std::span<const double> mu, double x0, double dx);

/// acc[i] += weight * min(column[i], query) / max(column[i], query).
void ratio_similarity_accumulate(std::span<const double> column, double query, double weight,
                                 std::span<double> acc);

}  // namespace fcip::kernels
