#include "nucleon/simd/kernels.hpp"

#include <cmath>

namespace nucleon::simd {
namespace {

void modulated_sums_scalar(const cplx* h, std::size_t n, double y0, double dy, const double* xi,
                           std::size_t nxi, cplx* out) {
  for (std::size_t j = 0; j < nxi; ++j) {
    const double w = xi[j];
    const double sr = std::cos(dy * w);
    const double si = -std::sin(dy * w);
    double acc_re = 0.0;
    double acc_im = 0.0;
    for (std::size_t start = 0; start < n; start += kReseedInterval) {
      const double angle = (y0 + static_cast<double>(start) * dy) * w;
      double pr = std::cos(angle);
      double pi = -std::sin(angle);
      const std::size_t stop = std::min(n, start + kReseedInterval);
      for (std::size_t k = start; k < stop; ++k) {
        const double hr = h[k].real();
        const double hi = h[k].imag();
        acc_re += hr * pr - hi * pi;
        acc_im += hr * pi + hi * pr;
        const double npr = pr * sr - pi * si;
        pi = pr * si + pi * sr;
        pr = npr;
      }
    }
    out[j] = {acc_re, acc_im};
  }
}

cplx weighted_dot_scalar(const cplx* a, const cplx* b, const double* m, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double ar = a[k].real(), ai = a[k].imag();
    const double br = b[k].real(), bi = b[k].imag();
    re += (ar * br - ai * bi) * m[k];
    im += (ar * bi + ai * br) * m[k];
  }
  return {re, im};
}

void axpy_scalar(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const double ar = alpha.real(), ai = alpha.imag();
  for (std::size_t k = 0; k < n; ++k) {
    const double xr = x[k].real(), xi = x[k].imag();
    y[k] = {y[k].real() + (ar * xr - ai * xi), y[k].imag() + (ar * xi + ai * xr)};
  }
}

double power_sum_scalar(const double* a, const double* m, std::size_t n, double p) {
  double sum = 0.0;
  double c = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double term;
    if (p == 1.0) {
      term = a[k] * m[k];
    } else if (p == 2.0) {
      term = a[k] * a[k] * m[k];
    } else {
      term = std::pow(a[k], p) * m[k];
    }
    const double y = term - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
  return sum;
}

} // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", modulated_sums_scalar, weighted_dot_scalar, axpy_scalar,
                                 power_sum_scalar};
  return table;
}

} // namespace nucleon::simd
