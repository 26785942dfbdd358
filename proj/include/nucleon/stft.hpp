#pragma once

#include "nucleon/grid.hpp"
#include "nucleon/lattice.hpp"
#include "nucleon/weight.hpp"

namespace nucleon {

// Short-time Fourier transform in one space dimension,
//
//   V_g f(x, xi) = int f(y) conj(g(y - x)) e^{-i y xi} dy,
//
// with no 2pi in the exponent. The Fourier transform used for Wiener amalgam
// norms follows the same convention, f^(xi) = int f(y) e^{-i y xi} dy, so
// |V_g f(x, xi)| = (2pi)^{-1} |V_{g^} f^(xi, -x)|.

/// Analysis window sampled on a 1-axis grid.
struct Window {
  enum class Shape { gaussian, custom };

  GridFunction samples;
  Shape shape = Shape::custom;
  /// gaussian only: g(y) = amplitude * pi^{-1/4} e^{-y^2/2}.
  double amplitude = 1.0;
  bool unit_normalized = false;

  /// Unit-L2 Gaussian (times amplitude) sampled on the axis. Off-grid
  /// translates are evaluated analytically.
  static Window gaussian(const Axis& axis, double amplitude = 1.0);
  /// Custom samples; off-grid translates use linear interpolation and vanish
  /// outside the sampled range. normalize rescales to unit discrete L2 norm.
  static Window custom(GridFunction samples, bool normalize = false);

  cplx at(double y) const;
  double l2_norm() const;
};

/// V_g f on a (x, xi) product grid; axis 0 is x, axis 1 is xi.
struct TFGridFunction {
  GridFunction samples;

  const Axis& x_axis() const { return samples.grid.axis(0); }
  const Axis& xi_axis() const { return samples.grid.axis(1); }
  cplx at(std::size_t ix, std::size_t ixi) const {
    return samples.values[ix + x_axis().size() * ixi];
  }
};

/// Quadrature of V_g f at every node of tf_grid (axes x, xi).
/// Throws NumericalError("aliasing") if max|xi| * dy > pi and
/// NumericalError("window_no_overlap") if the translated window never meets
/// the support grid of f.
TFGridFunction stft(const GridFunction& f, const Window& g, const TensorGrid& tf_grid);

/// Iterated (p over x, q over xi) norm of V * w; p or q may be infinite.
double tf_mixed_norm(const TFGridFunction& v, double p, double q, const SeparableWeight& w);

/// ||f||_{M^{p,q}_w} = ||V_g f * w||_{L^{p,q}} on tf_grid, 1 <= p, q < inf.
double modulation_norm(const GridFunction& f, const Window& g, double p, double q,
                       const SeparableWeight& w, const TensorGrid& tf_grid);

/// f^ sampled on freq (O(N^2) direct transform).
GridFunction fourier_transform(const GridFunction& f, const Axis& freq);

/// Window for the transformed side: analytic for Gaussians, else the DFT of g.
Window transformed_window(const Window& g, const Axis& freq);

/// (2pi)^{-1} ||f^||_{M^{q,p}_{w0}} with w0(a, b) = w(-b, a). The transform of f
/// is sampled on freq, and the M^{q,p} norm runs over tf_grid with its axes
/// exchanged (tf_grid should be symmetric about the origin).
double wiener_amalgam_norm(const GridFunction& f, const Window& g, double p, double q,
                           const SeparableWeight& w, const Axis& freq, const TensorGrid& tf_grid);

/// a_kl = V_g f(alpha k, beta l), |k| <= k_bound, |l| <= l_bound, with
/// weights w(alpha k, beta l). Throws NumericalError("truncation") when the
/// outermost ring carries |a| above 1e-10 times the largest coefficient.
LatticeCoefficients gabor_coeffs(const GridFunction& f, const Window& g, double alpha, double beta,
                                 int k_bound, int l_bound, const SeparableWeight& w);

/// seq_mixed_norm(gabor_coeffs(f)) / modulation_norm(f).
double equivalence_ratio(const GridFunction& f, const Window& g, double p, double q,
                         const SeparableWeight& w, double alpha, double beta, int k_bound,
                         int l_bound, const TensorGrid& tf_grid);

} // namespace nucleon
