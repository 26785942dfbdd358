#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nucleon/grid.hpp"
#include "nucleon/nuclear.hpp"
#include "nucleon/stft.hpp"

namespace nucleon {

/// Largest Hermite index accepted by hermite_eval.
inline constexpr int kMaxHermiteIndex = 400;

/// Normalised Hermite function phi_k(x) = (2^k k! sqrt(pi))^{-1/2} H_k(x) e^{-x^2/2},
/// by the three-term recurrence with a running scale so neither the
/// polynomial part nor the Gaussian under/overflows.
double hermite_function(int k, double x);

/// phi_0 .. phi_kmax at each point; row k holds phi_k, stored k-major.
std::vector<double> hermite_table(int kmax, std::span<const double> points);

/// Tensor product prod_i phi_{k_i}(x_i) over the grid, flat order.
std::vector<double> hermite_eval(std::span<const int> k, const TensorGrid& grid);

/// lambda_k = sum_i (2 k_i + 1).
double eigenvalue(std::span<const int> k);

/// Eigenpairs of -Laplace + |x|^2 with k_i < K on every axis, enumerated by
/// nondecreasing eigenvalue and lexicographic k within ties.
class HermiteSystem {
public:
  /// Equispaced grid of the given step on [-L, L]^d with L = sqrt(2K - 1) + 6
  /// unless half_width > 0 is given.
  HermiteSystem(std::size_t d, int K, double step, double half_width = 0.0);
  /// Caller-provided grid of dimension d.
  HermiteSystem(int K, TensorGrid grid);

  std::size_t dimension() const { return d_; }
  int max_count() const { return K_; }
  std::size_t size() const { return indices_.size(); }
  const TensorGrid& grid() const { return grid_; }
  const std::vector<int>& index(std::size_t j) const { return indices_[j]; }
  double eigenvalue(std::size_t j) const { return eigenvalues_[j]; }
  const std::vector<double>& eigenvalues() const { return eigenvalues_; }

  /// phi_j sampled on the grid.
  GridFunction function(std::size_t j) const;

private:
  void enumerate();

  std::size_t d_ = 1;
  int K_ = 0;
  TensorGrid grid_;
  std::vector<std::vector<int>> indices_;
  std::vector<double> eigenvalues_;
  std::vector<std::vector<double>> axis_tables_; // per axis, hermite_table(K - 1, points)
};

/// Enumerated multi-indices with k_i < K, nondecreasing eigenvalue, lexicographic ties.
std::vector<std::vector<int>> enumerate_indices(std::size_t d, int K);

/// F applied to the oscillator spectrum.
class SpectralFunction {
public:
  enum class Kind { power, exp, table };

  /// F(lambda) = lambda^{-N}, N a positive integer.
  static SpectralFunction power(int n);
  /// F(lambda) = e^{-t lambda}, t > 0.
  static SpectralFunction exp(double t);
  /// Exact lookup of (lambda, F(lambda)) pairs.
  static SpectralFunction table(std::vector<std::pair<double, double>> entries);

  Kind kind() const { return kind_; }
  int power_order() const { return n_; }
  double rate() const { return t_; }
  const std::vector<std::pair<double, double>>& entries() const { return entries_; }

  /// Throws ValidationError("spectral_undefined") if F has no finite value at lambda.
  double operator()(double lambda) const;
  std::string tag() const;

private:
  Kind kind_ = Kind::exp;
  int n_ = 0;
  double t_ = 1.0;
  std::vector<std::pair<double, double>> entries_;
};

/// Pairs (F(lambda_j) phi_j, phi_j) for the first `truncation` enumerated
/// eigenfunctions; self-adjoint, L^2 on both sides.
NuclearRep spectral_rep(const SpectralFunction& F, const HermiteSystem& system, std::size_t truncation,
                        double r = 1.0);

struct TraceEstimate {
  double value = 0.0;      // sum over k_i < K of F(lambda_k)
  double tail_bound = 0.0; // bound on the omitted part of the series
  std::size_t terms = 0;
};

/// Spectral sum over the box k_i < K with an analytic tail bound. The power
/// form needs N > d. Tables estimate the tail from a power-law fit to their
/// last two entries and throw NumericalError("divergent_tail") when that fit
/// is not summable.
TraceEstimate trace_F(const SpectralFunction& F, std::size_t d, int K);

struct NuclearityRow {
  std::size_t j = 0;
  double lambda = 0.0;
  double norm = 0.0;      // ||phi_j||_{M^{p,q}_s}
  double dual_norm = 0.0; // ||phi_j||_{M^{p',q'}_{-s}}
  double term = 0.0;      // |F(lambda_j)|^r (norm * dual_norm)^r
  double partial_sum = 0.0;
};

struct NuclearityReport {
  std::vector<NuclearityRow> rows;
  bool monotone = true;
  double flatness = 0.0; // last term / previous term; NaN when undefined
};

/// Partial sums of |F(lambda_j)|^r ||phi_j||^r ||phi_j||_dual^r in d = 1 with
/// weight (1 + |xi|)^s; each phi_j is transformed once for both norms.
NuclearityReport nuclearity_criterion(const SpectralFunction& F, double r, double s, double p, double q,
                                      const HermiteSystem& system, const Window& g,
                                      std::size_t truncation, const TensorGrid& tf_grid);

/// Gram matrix of the first `count` sampled eigenfunctions; max |G - I|.
double gram_error(const HermiteSystem& system, std::size_t count);

/// ||(-d^2/dx^2 + x^2) phi_k - lambda_k phi_k||_2 / ||phi_k||_2 in d = 1, with a
/// fourth-order central difference of step h on [-(sqrt(2k+1)+8), sqrt(2k+1)+8].
double eigen_residual(int k, double h);

} // namespace nucleon
