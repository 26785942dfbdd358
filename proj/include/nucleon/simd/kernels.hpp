#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace nucleon::simd {

using cplx = std::complex<double>;

// Inner loops shared by every module. Each backend fills one table; the
// scalar table is the reference the vector backends are tested against.
struct KernelTable {
  std::string_view name;

  // out[j] = sum_k h[k] * exp(-i * (y0 + k*dy) * xi[j]) for j < nxi.
  // Phase is advanced by rotation and re-seeded from sin/cos every
  // kReseedInterval samples.
  void (*modulated_sums)(const cplx* h, std::size_t n, double y0, double dy, const double* xi,
                         std::size_t nxi, cplx* out);

  // sum_k a[k] * b[k] * m[k] (bilinear, no conjugate).
  cplx (*weighted_dot)(const cplx* a, const cplx* b, const double* m, std::size_t n);

  // y[k] += alpha * x[k].
  void (*axpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);

  // Kahan-compensated sum_k a[k]^p * m[k] for a[k] >= 0. p == 1 and p == 2
  // are vectorised; other p go through std::pow.
  double (*power_sum)(const double* a, const double* m, std::size_t n, double p);
};

inline constexpr std::size_t kReseedInterval = 64;

const KernelTable& scalar_kernels();

/// Null when the binary was built without AVX2 or the CPU lacks AVX2+FMA.
const KernelTable* avx2_kernels();

/// Best table for this CPU. NUCLEON_SIMD=scalar forces the reference table.
const KernelTable& active_kernels();

} // namespace nucleon::simd
