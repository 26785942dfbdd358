// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include "nucleon/simd/kernels.hpp"

#include <immintrin.h>

#include <cmath>

namespace nucleon::simd {
namespace {

// Four frequencies per lane group, two groups in flight to hide the latency
// of the phase-rotation dependency chain.
void modulated_sums_avx2(const cplx* h, std::size_t n, double y0, double dy, const double* xi,
                         std::size_t nxi, cplx* out) {
  constexpr std::size_t kLanes = 8;
  std::size_t j0 = 0;
  for (; j0 + kLanes <= nxi; j0 += kLanes) {
    alignas(32) double sr_s[kLanes], si_s[kLanes];
    for (std::size_t l = 0; l < kLanes; ++l) {
      sr_s[l] = std::cos(dy * xi[j0 + l]);
      si_s[l] = -std::sin(dy * xi[j0 + l]);
    }
    const __m256d sr0 = _mm256_load_pd(sr_s), sr1 = _mm256_load_pd(sr_s + 4);
    const __m256d si0 = _mm256_load_pd(si_s), si1 = _mm256_load_pd(si_s + 4);
    __m256d ar0 = _mm256_setzero_pd(), ai0 = _mm256_setzero_pd();
    __m256d ar1 = _mm256_setzero_pd(), ai1 = _mm256_setzero_pd();

    for (std::size_t start = 0; start < n; start += kReseedInterval) {
      alignas(32) double pr_s[kLanes], pi_s[kLanes];
      const double y = y0 + static_cast<double>(start) * dy;
      for (std::size_t l = 0; l < kLanes; ++l) {
        const double angle = y * xi[j0 + l];
        pr_s[l] = std::cos(angle);
        pi_s[l] = -std::sin(angle);
      }
      __m256d pr0 = _mm256_load_pd(pr_s), pr1 = _mm256_load_pd(pr_s + 4);
      __m256d pi0 = _mm256_load_pd(pi_s), pi1 = _mm256_load_pd(pi_s + 4);
      const std::size_t stop = std::min(n, start + kReseedInterval);
      for (std::size_t k = start; k < stop; ++k) {
        const __m256d hr = _mm256_set1_pd(h[k].real());
        const __m256d hi = _mm256_set1_pd(h[k].imag());
        ar0 = _mm256_fmadd_pd(hr, pr0, ar0);
        ar0 = _mm256_fnmadd_pd(hi, pi0, ar0);
        ai0 = _mm256_fmadd_pd(hr, pi0, ai0);
        ai0 = _mm256_fmadd_pd(hi, pr0, ai0);
        ar1 = _mm256_fmadd_pd(hr, pr1, ar1);
        ar1 = _mm256_fnmadd_pd(hi, pi1, ar1);
        ai1 = _mm256_fmadd_pd(hr, pi1, ai1);
        ai1 = _mm256_fmadd_pd(hi, pr1, ai1);

        const __m256d npr0 = _mm256_fmsub_pd(pr0, sr0, _mm256_mul_pd(pi0, si0));
        pi0 = _mm256_fmadd_pd(pr0, si0, _mm256_mul_pd(pi0, sr0));
        pr0 = npr0;
        const __m256d npr1 = _mm256_fmsub_pd(pr1, sr1, _mm256_mul_pd(pi1, si1));
        pi1 = _mm256_fmadd_pd(pr1, si1, _mm256_mul_pd(pi1, sr1));
        pr1 = npr1;
      }
    }
    alignas(32) double re_s[kLanes], im_s[kLanes];
    _mm256_store_pd(re_s, ar0);
    _mm256_store_pd(re_s + 4, ar1);
    _mm256_store_pd(im_s, ai0);
    _mm256_store_pd(im_s + 4, ai1);
    for (std::size_t l = 0; l < kLanes; ++l) out[j0 + l] = {re_s[l], im_s[l]};
  }
  if (j0 < nxi) scalar_kernels().modulated_sums(h, n, y0, dy, xi + j0, nxi - j0, out + j0);
}

// (a0 a1) * (b0 b1) for two interleaved complex numbers per register.
inline __m256d complex_mul(__m256d a, __m256d b) {
  const __m256d a_re = _mm256_movedup_pd(a);
  const __m256d a_im = _mm256_permute_pd(a, 0xF);
  const __m256d b_swap = _mm256_permute_pd(b, 0x5);
  return _mm256_fmaddsub_pd(a_re, b, _mm256_mul_pd(a_im, b_swap));
}

cplx weighted_dot_avx2(const cplx* a, const cplx* b, const double* m, std::size_t n) {
  const double* ad = reinterpret_cast<const double*>(a);
  const double* bd = reinterpret_cast<const double*>(b);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d w01 = _mm256_set_pd(m[k + 1], m[k + 1], m[k], m[k]);
    const __m256d w23 = _mm256_set_pd(m[k + 3], m[k + 3], m[k + 2], m[k + 2]);
    const __m256d p01 = complex_mul(_mm256_loadu_pd(ad + 2 * k), _mm256_loadu_pd(bd + 2 * k));
    const __m256d p23 =
        complex_mul(_mm256_loadu_pd(ad + 2 * k + 4), _mm256_loadu_pd(bd + 2 * k + 4));
    acc0 = _mm256_fmadd_pd(p01, w01, acc0);
    acc1 = _mm256_fmadd_pd(p23, w23, acc1);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
  double re = lanes[0] + lanes[2];
  double im = lanes[1] + lanes[3];
  for (; k < n; ++k) {
    const double ar = a[k].real(), ai = a[k].imag();
    const double br = b[k].real(), bi = b[k].imag();
    re += (ar * br - ai * bi) * m[k];
    im += (ar * bi + ai * br) * m[k];
  }
  return {re, im};
}

void axpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  const __m256d alpha_re = _mm256_set1_pd(alpha.real());
  const __m256d alpha_im = _mm256_set1_pd(alpha.imag());
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * k);
    const __m256d x_swap = _mm256_permute_pd(xv, 0x5);
    const __m256d prod = _mm256_fmaddsub_pd(alpha_re, xv, _mm256_mul_pd(alpha_im, x_swap));
    _mm256_storeu_pd(yd + 2 * k, _mm256_add_pd(_mm256_loadu_pd(yd + 2 * k), prod));
  }
  if (k < n) scalar_kernels().axpy(alpha, x + k, y + k, n - k);
}

inline void kahan_add(double term, double& sum, double& c) {
  const double y = term - c;
  const double t = sum + y;
  c = (t - sum) - y;
  sum = t;
}

double power_sum_avx2(const double* a, const double* m, std::size_t n, double p) {
  if (p != 1.0 && p != 2.0) return scalar_kernels().power_sum(a, m, n, p);
  __m256d sum = _mm256_setzero_pd();
  __m256d comp = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d av = _mm256_loadu_pd(a + k);
    const __m256d mv = _mm256_loadu_pd(m + k);
    const __m256d term = p == 1.0 ? _mm256_mul_pd(av, mv) : _mm256_mul_pd(_mm256_mul_pd(av, av), mv);
    const __m256d y = _mm256_sub_pd(term, comp);
    const __m256d t = _mm256_add_pd(sum, y);
    comp = _mm256_sub_pd(_mm256_sub_pd(t, sum), y);
    sum = t;
  }
  alignas(32) double s[4], c[4];
  _mm256_store_pd(s, sum);
  _mm256_store_pd(c, comp);
  double total = 0.0;
  double total_c = 0.0;
  for (int l = 0; l < 4; ++l) {
    kahan_add(s[l], total, total_c);
    kahan_add(-c[l], total, total_c);
  }
  for (; k < n; ++k) kahan_add(p == 1.0 ? a[k] * m[k] : a[k] * a[k] * m[k], total, total_c);
  return total;
}

} // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{"avx2", modulated_sums_avx2, weighted_dot_avx2, axpy_avx2,
                                 power_sum_avx2};
  return table;
}

} // namespace nucleon::simd
