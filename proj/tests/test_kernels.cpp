#include <random>

#include "doctest.h"
#include "fcip/kernels.hpp"

using namespace fcip::kernels;

namespace {
std::vector<double> random_mu(std::mt19937_64& gen, std::size_t n) {
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<double> v(n);
  for (auto& x : v) x = u(gen) < 0.2 ? 0.0 : u(gen);
  return v;
}
}  // namespace

TEST_CASE("vector kernels match the scalar ones bit for bit") {
  if (!isa_supported(Isa::avx2)) {
    MESSAGE("avx2 not available; only the scalar table is exercised");
    return;
  }
  const auto& s = table(Isa::scalar);
  const auto& v = table(Isa::avx2);
  std::mt19937_64 gen(7);
  for (std::size_t n : {1u, 3u, 4u, 5u, 17u, 1001u}) {
    const auto a = random_mu(gen, n), b = random_mu(gen, n);
    for (auto op : {SetOp::union_max, SetOp::union_product, SetOp::intersect_min, SetOp::intersect_product}) {
      std::vector<double> o1(n), o2(n);
      s.combine(a.data(), b.data(), o1.data(), n, op);
      v.combine(a.data(), b.data(), o2.data(), n, op);
      CHECK(o1 == o2);
    }
    auto acc1 = a, acc2 = a;
    s.clip_max_accumulate(acc1.data(), b.data(), n, 0.4);
    v.clip_max_accumulate(acc2.data(), b.data(), n, 0.4);
    CHECK(acc1 == acc2);

    const auto m1 = s.moments(a.data(), n, -3.0, 0.01);
    const auto m2 = v.moments(a.data(), n, -3.0, 0.01);
    CHECK(m1.mass == m2.mass);
    CHECK(m1.first == m2.first);

    std::vector<double> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = 1 + 100 * a[i];
    std::vector<double> r1(n, 0.1), r2(n, 0.1);
    s.ratio_similarity_accumulate(col.data(), n, 37.5, 0.4, r1.data());
    v.ratio_similarity_accumulate(col.data(), n, 37.5, 0.4, r2.data());
    CHECK(r1 == r2);
  }
}

TEST_CASE("scalar kernels") {
  const double a[] = {0.2, 0.8, 0.5};
  const double b[] = {0.6, 0.3, 0.5};
  double out[3];
  combine(a, b, out, SetOp::union_max);
  CHECK(out[0] == 0.6);
  CHECK(out[1] == 0.8);
  combine(a, b, out, SetOp::intersect_product);
  CHECK(out[2] == 0.25);
  const double mu[] = {1, 1, 1};
  const auto m = moments(mu, 0.0, 1.0);
  CHECK(m.mass == doctest::Approx(2.0));
  CHECK(m.first / m.mass == doctest::Approx(1.0));
}
