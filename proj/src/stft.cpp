#include "nucleon/stft.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "nucleon/error.hpp"
#include "nucleon/mixed_norm.hpp"
#include "nucleon/parallel.hpp"
#include "nucleon/simd/kernels.hpp"

namespace nucleon {
namespace {

const double kGaussianScale = std::pow(std::numbers::pi, -0.25);

// Terms below this fraction of the largest possible integrand are dropped
// from the ends of each quadrature sum.
constexpr double kTrimRelative = 1e-18;

double max_abs_point(const Axis& a) {
  return std::max(std::abs(a.points.front()), std::abs(a.points.back()));
}

double max_spacing(const Axis& a) {
  double s = 0.0;
  for (std::size_t k = 1; k < a.size(); ++k) s = std::max(s, a.points[k] - a.points[k - 1]);
  return s;
}

void require_one_dimensional(const GridFunction& f, const char* what) {
  require(f.grid.dimension() == 1, "dimension_mismatch",
          std::string(what) + " must be sampled on a 1-axis grid");
}

void require_tf_grid(const TensorGrid& tf) {
  require(tf.dimension() == 2, "dimension_mismatch", "time-frequency grid must have axes (x, xi)");
}

// sum_k h[k] e^{-i y_k xi_j} for every xi_j.
void modulated(const simd::KernelTable& kernels, const std::vector<cplx>& h, const Axis& y_axis,
               std::size_t first, std::size_t last, const std::vector<double>& xi, cplx* out) {
  const double step = y_axis.uniform_step();
  if (first >= last) {
    std::fill(out, out + xi.size(), cplx{});
    return;
  }
  if (step > 0.0) {
    kernels.modulated_sums(h.data() + first, last - first, y_axis.points[first], step, xi.data(),
                           xi.size(), out);
    return;
  }
  for (std::size_t j = 0; j < xi.size(); ++j) {
    cplx acc{};
    for (std::size_t k = first; k < last; ++k) {
      acc += h[k] * std::polar(1.0, -y_axis.points[k] * xi[j]);
    }
    out[j] = acc;
  }
}

} // namespace

Window Window::gaussian(const Axis& axis, double amplitude) {
  require(amplitude > 0.0 && std::isfinite(amplitude), "window_zero", "window amplitude must be > 0");
  Window w;
  w.shape = Shape::gaussian;
  w.amplitude = amplitude;
  w.unit_normalized = amplitude == 1.0;
  std::vector<cplx> v(axis.size());
  for (std::size_t k = 0; k < axis.size(); ++k) {
    const double y = axis.points[k];
    v[k] = amplitude * kGaussianScale * std::exp(-y * y / 2.0);
  }
  w.samples = GridFunction(TensorGrid({axis}), std::move(v));
  return w;
}

Window Window::custom(GridFunction samples, bool normalize) {
  require_one_dimensional(samples, "window");
  Window w;
  w.shape = Shape::custom;
  w.samples = std::move(samples);
  const double norm = w.l2_norm();
  require(norm > 0.0, "window_zero", "window is identically zero");
  if (normalize) {
    for (cplx& z : w.samples.values) z /= norm;
    w.unit_normalized = true;
  }
  return w;
}

double Window::l2_norm() const {
  const auto& m = samples.grid.cell_measures();
  double s = 0.0;
  for (std::size_t k = 0; k < samples.size(); ++k) s += std::norm(samples.values[k]) * m[k];
  return std::sqrt(s);
}

cplx Window::at(double y) const {
  if (shape == Shape::gaussian) return amplitude * kGaussianScale * std::exp(-y * y / 2.0);
  const Axis& a = samples.grid.axis(0);
  if (y < a.points.front() || y > a.points.back()) return {};
  if (a.size() == 1) return samples.values[0];
  const auto it = std::upper_bound(a.points.begin(), a.points.end(), y);
  std::size_t hi = static_cast<std::size_t>(it - a.points.begin());
  if (hi >= a.size()) hi = a.size() - 1;
  const std::size_t lo = hi - 1;
  const double span = a.points[hi] - a.points[lo];
  const double t = span > 0.0 ? (y - a.points[lo]) / span : 0.0;
  return (1.0 - t) * samples.values[lo] + t * samples.values[hi];
}

TFGridFunction stft(const GridFunction& f, const Window& g, const TensorGrid& tf_grid) {
  require_one_dimensional(f, "function");
  require_tf_grid(tf_grid);
  const Axis& y_axis = f.grid.axis(0);
  const Axis& x_axis = tf_grid.axis(0);
  const Axis& xi_axis = tf_grid.axis(1);

  if (y_axis.size() > 1 && max_abs_point(xi_axis) * max_spacing(y_axis) > std::numbers::pi) {
    throw NumericalError("aliasing", "frequency range exceeds the Nyquist limit of the sample grid "
                                     "(max|xi| * dy > pi)");
  }

  const std::size_t ny = y_axis.size();
  const std::size_t nx = x_axis.size();
  const std::size_t nxi = xi_axis.size();

  double f_max = 0.0;
  for (const cplx& z : f.values) f_max = std::max(f_max, std::abs(z));
  double g_max = 0.0;
  for (const cplx& z : g.samples.values) g_max = std::max(g_max, std::abs(z));
  if (g.shape == Window::Shape::gaussian) g_max = std::max(g_max, g.amplitude * kGaussianScale);
  const double m_max = *std::max_element(y_axis.measures.begin(), y_axis.measures.end());
  const double trim = kTrimRelative * f_max * g_max * m_max;

  std::vector<double> overlap(nx, 0.0);
  std::vector<cplx> values(nx * nxi);
  const auto& kernels = simd::active_kernels();
  const std::vector<double>& xi = xi_axis.points;

  parallel_for(nx, [&](std::size_t ix) {
    const double x = x_axis.points[ix];
    std::vector<cplx> h(ny);
    std::size_t first = ny;
    std::size_t last = 0;
    for (std::size_t k = 0; k < ny; ++k) {
      const cplx gk = g.at(y_axis.points[k] - x);
      overlap[ix] = std::max(overlap[ix], std::abs(gk));
      h[k] = f.values[k] * std::conj(gk) * y_axis.measures[k];
      if (std::abs(h[k]) > trim) {
        first = std::min(first, k);
        last = k + 1;
      }
    }
    std::vector<cplx> row(nxi);
    modulated(kernels, h, y_axis, first, last, xi, row.data());
    for (std::size_t j = 0; j < nxi; ++j) values[ix + nx * j] = row[j];
  });

  if (*std::max_element(overlap.begin(), overlap.end()) <= 1e-12 * g_max) {
    throw NumericalError("window_no_overlap",
                         "translated window is essentially zero on the sample grid of f");
  }
  return TFGridFunction{GridFunction(tf_grid, std::move(values))};
}

double tf_mixed_norm(const TFGridFunction& v, double p, double q, const SeparableWeight& w) {
  const ExponentTuple pq = ExponentTuple::with_infinite({p, q});
  return mixed_norm(v.samples, pq, w);
}

double modulation_norm(const GridFunction& f, const Window& g, double p, double q,
                       const SeparableWeight& w, const TensorGrid& tf_grid) {
  require(std::isfinite(p) && std::isfinite(q) && p >= 1.0 && q >= 1.0, "exponent_range",
          "modulation norm needs 1 <= p, q < inf");
  return tf_mixed_norm(stft(f, g, tf_grid), p, q, w);
}

GridFunction fourier_transform(const GridFunction& f, const Axis& freq) {
  require_one_dimensional(f, "function");
  const Axis& y_axis = f.grid.axis(0);
  if (y_axis.size() > 1 && max_abs_point(freq) * max_spacing(y_axis) > std::numbers::pi) {
    throw NumericalError("aliasing", "transform frequencies exceed the Nyquist limit of the grid");
  }
  std::vector<cplx> h(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) h[k] = f.values[k] * y_axis.measures[k];
  std::vector<cplx> out(freq.size());
  modulated(simd::active_kernels(), h, y_axis, 0, h.size(), freq.points, out.data());
  return GridFunction(TensorGrid({freq}), std::move(out));
}

Window transformed_window(const Window& g, const Axis& freq) {
  if (g.shape == Window::Shape::gaussian) {
    return Window::gaussian(freq, g.amplitude * std::sqrt(2.0 * std::numbers::pi));
  }
  return Window::custom(fourier_transform(g.samples, freq));
}

double wiener_amalgam_norm(const GridFunction& f, const Window& g, double p, double q,
                           const SeparableWeight& w, const Axis& freq, const TensorGrid& tf_grid) {
  require_tf_grid(tf_grid);
  require(w.size() == 2, "dimension_mismatch", "time-frequency weight needs two factors");
  const GridFunction f_hat = fourier_transform(f, freq);
  const Window g_hat = transformed_window(g, freq);

  // w0(a, b) = w(-b, a): the x-factor of w0 is w's frequency factor, the
  // frequency factor of w0 is w's x-factor reflected.
  WeightFactor reflected = w.factor(0);
  if (reflected.kind == WeightFactor::Kind::custom) {
    reflected.fn = [fn = w.factor(0).fn](double t) { return fn(-t); };
  }
  const SeparableWeight w0({w.factor(1), reflected});
  const TensorGrid swapped({tf_grid.axis(1), tf_grid.axis(0)});
  return modulation_norm(f_hat, g_hat, q, p, w0, swapped) / (2.0 * std::numbers::pi);
}

LatticeCoefficients gabor_coeffs(const GridFunction& f, const Window& g, double alpha, double beta,
                                 int k_bound, int l_bound, const SeparableWeight& w) {
  require(alpha > 0.0 && beta > 0.0 && std::isfinite(alpha) && std::isfinite(beta), "lattice_step",
          "lattice steps alpha, beta must be > 0");
  require(k_bound >= 1 && l_bound >= 1, "lattice_bounds", "lattice bounds must be >= 1");
  require(w.size() == 2, "dimension_mismatch", "time-frequency weight needs two factors");
  const Axis xs = Axis::equispaced(-alpha * k_bound, alpha, static_cast<std::size_t>(2 * k_bound + 1));
  const Axis xis = Axis::equispaced(-beta * l_bound, beta, static_cast<std::size_t>(2 * l_bound + 1));
  const TensorGrid lattice({xs, xis});
  TFGridFunction v = stft(f, g, lattice);

  double largest = 0.0;
  double ring = 0.0;
  for (int l = -l_bound; l <= l_bound; ++l) {
    for (int k = -k_bound; k <= k_bound; ++k) {
      const double a = std::abs(v.at(static_cast<std::size_t>(k + k_bound),
                                     static_cast<std::size_t>(l + l_bound)));
      largest = std::max(largest, a);
      if (std::abs(k) == k_bound || std::abs(l) == l_bound) ring = std::max(ring, a);
    }
  }
  if (ring > 1e-10 * largest) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3e", ring / largest);
    throw NumericalError("truncation",
                         std::string("lattice truncation too tight: boundary ring carries relative mass ") + buf);
  }
  const WeightField weights = w.on(lattice);
  return LatticeCoefficients(alpha, beta, k_bound, l_bound, std::move(v.samples.values),
                             weights.values, w.tag());
}

double equivalence_ratio(const GridFunction& f, const Window& g, double p, double q,
                         const SeparableWeight& w, double alpha, double beta, int k_bound,
                         int l_bound, const TensorGrid& tf_grid) {
  const double continuous = modulation_norm(f, g, p, q, w, tf_grid);
  require(continuous > 0.0, "zero_function", "equivalence ratio undefined for f = 0");
  const LatticeCoefficients a = gabor_coeffs(f, g, alpha, beta, k_bound, l_bound, w);
  return seq_mixed_norm(a, p, q) / continuous;
}

} // namespace nucleon
