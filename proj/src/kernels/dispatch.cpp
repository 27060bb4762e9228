#include <cstdlib>
#include <string>

#include "fcip/error.hpp"
#include "fcip/kernels.hpp"

namespace fcip::kernels {

namespace {

void check_sizes(std::size_t a, std::size_t b) {
  if (a != b) throw InputError("kernel operands differ in length");
}

const KernelTable& select_table() {
  if (const char* env = std::getenv("FCIP_SIMD"); env != nullptr) {
    const std::string want(env);
    if (want == "scalar") return scalar_table();
    if (want == "avx2" && isa_supported(Isa::avx2)) return table(Isa::avx2);
  }
  if (isa_supported(Isa::avx2)) return table(Isa::avx2);
  return scalar_table();
}

}  // namespace

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(FCIP_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
  }
  return false;
}

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

const KernelTable& table(Isa isa) {
  if (!isa_supported(isa)) throw Error("instruction set not supported: " + std::string(isa_name(isa)));
#if defined(FCIP_HAVE_AVX2_KERNELS)
  if (isa == Isa::avx2) return avx2_table();
#endif
  return scalar_table();
}

const KernelTable& active() {
  static const KernelTable& t = select_table();
  return t;
}

void combine(std::span<const double> a, std::span<const double> b, std::span<double> out, SetOp op) {
  check_sizes(a.size(), b.size());
  check_sizes(a.size(), out.size());
  active().combine(a.data(), b.data(), out.data(), a.size(), op);
}

void clip_max_accumulate(std::span<double> acc, std::span<const double> curve, double level) {
  check_sizes(acc.size(), curve.size());
  active().clip_max_accumulate(acc.data(), curve.data(), acc.size(), level);
}

Moments moments(std::span<const double> mu, double x0, double dx) {
  return active().moments(mu.data(), mu.size(), x0, dx);
}

void ratio_similarity_accumulate(std::span<const double> column, double query, double weight,
                                 std::span<double> acc) {
  check_sizes(column.size(), acc.size());
  active().ratio_similarity_accumulate(column.data(), column.size(), query, weight, acc.data());
}

}  // namespace fcip::kernels
