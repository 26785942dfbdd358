#include <cmath>
#include <vector>

#include "doctest.h"
#include "nucleon/random.hpp"
#include "nucleon/simd/kernels.hpp"

using namespace nucleon;
using simd::KernelTable;

namespace {

std::vector<simd::cplx> random_complex(std::size_t n, SplitMix64& rng) {
  std::vector<simd::cplx> v(n);
  for (auto& z : v) z = rng.complex_normal();
  return v;
}

double max_rel(const std::vector<simd::cplx>& a, const std::vector<simd::cplx>& b) {
  double scale = 1e-300;
  for (const auto& z : b) scale = std::max(scale, std::abs(z));
  double err = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) err = std::max(err, std::abs(a[i] - b[i]));
  return err / scale;
}

// Lengths straddle vector widths and the phase reseed interval.
const std::size_t kLengths[] = {0, 1, 3, 4, 7, 8, 9, 63, 64, 65, 127, 128, 129, 500, 1031};

} // namespace

TEST_CASE("scalar modulated sums match direct sin/cos evaluation") {
  const KernelTable& k = simd::scalar_kernels();
  SplitMix64 rng(1);
  for (std::size_t n : kLengths) {
    const auto h = random_complex(n, rng);
    const std::vector<double> xi = {-7.3, -1.0, 0.0, 0.25, 2.5, 11.0, 3.14159};
    std::vector<simd::cplx> out(xi.size());
    const double y0 = -4.2;
    const double dy = 0.013;
    k.modulated_sums(h.data(), n, y0, dy, xi.data(), xi.size(), out.data());
    std::vector<simd::cplx> ref(xi.size());
    for (std::size_t j = 0; j < xi.size(); ++j) {
      for (std::size_t m = 0; m < n; ++m) {
        const double phase = -(y0 + dy * double(m)) * xi[j];
        ref[j] += h[m] * simd::cplx(std::cos(phase), std::sin(phase));
      }
    }
    CHECK(max_rel(out, ref) < 1e-12);
  }
}

TEST_CASE("AVX2 kernels agree with the scalar reference") {
  const KernelTable* v = simd::avx2_kernels();
  if (v == nullptr) {
    MESSAGE("AVX2 kernels unavailable on this CPU or build; equivalence not exercised");
    return;
  }
  const KernelTable& s = simd::scalar_kernels();
  SplitMix64 rng(2);

  SUBCASE("modulated_sums") {
    for (std::size_t n : kLengths) {
      for (std::size_t nxi : {1u, 5u, 8u, 13u, 16u, 37u}) {
        const auto h = random_complex(n, rng);
        std::vector<double> xi(nxi);
        for (double& x : xi) x = rng.uniform(-20.0, 20.0);
        std::vector<simd::cplx> a(nxi), b(nxi);
        s.modulated_sums(h.data(), n, -3.0, 0.01, xi.data(), nxi, a.data());
        v->modulated_sums(h.data(), n, -3.0, 0.01, xi.data(), nxi, b.data());
        CHECK(max_rel(b, a) < 1e-13);
      }
    }
  }
  SUBCASE("weighted_dot") {
    for (std::size_t n : kLengths) {
      const auto a = random_complex(n, rng);
      const auto b = random_complex(n, rng);
      std::vector<double> m(n);
      for (double& x : m) x = rng.uniform(0.1, 2.0);
      const simd::cplx x = s.weighted_dot(a.data(), b.data(), m.data(), n);
      const simd::cplx y = v->weighted_dot(a.data(), b.data(), m.data(), n);
      CHECK(std::abs(x - y) <= 1e-13 * std::max(1.0, double(n)));
    }
  }
  SUBCASE("axpy") {
    for (std::size_t n : kLengths) {
      const auto x = random_complex(n, rng);
      auto y1 = random_complex(n, rng);
      auto y2 = y1;
      const simd::cplx alpha(0.7, -1.3);
      s.axpy(alpha, x.data(), y1.data(), n);
      v->axpy(alpha, x.data(), y2.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(y1[i] - y2[i]) < 1e-14);
    }
  }
  SUBCASE("power_sum") {
    for (std::size_t n : kLengths) {
      std::vector<double> a(n), m(n);
      for (double& x : a) x = std::abs(rng.normal());
      for (double& x : m) x = rng.uniform(0.1, 2.0);
      for (double p : {1.0, 2.0, 2.5, 1.5}) {
        const double x = s.power_sum(a.data(), m.data(), n, p);
        const double y = v->power_sum(a.data(), m.data(), n, p);
        CHECK(std::abs(x - y) <= 1e-13 * std::max(1.0, x));
      }
    }
  }
}

TEST_CASE("active table honours the scalar override") {
  CHECK(!simd::active_kernels().name.empty());
  CHECK(simd::scalar_kernels().name == "scalar");
}
