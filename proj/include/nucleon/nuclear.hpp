#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "nucleon/exponents.hpp"
#include "nucleon/grid.hpp"
#include "nucleon/weight.hpp"

namespace nucleon {

/// T f = sum_n <f, h_n> g_n on one grid, with the bilinear pairing
/// <f, h> = sum_x f(x) h(x) mu(x). Factor norms are taken in the declared
/// spaces: g_n in L^Q_{w~}, h_n in L^{P'}_{w^{-1}}.
struct NuclearRep {
  TensorGrid grid;
  std::vector<std::pair<GridFunction, GridFunction>> terms; // (g_n, h_n)
  ExponentTuple out_exponents;                               // Q
  SeparableWeight out_weight;                                // w~
  ExponentTuple in_exponents;                                // P
  SeparableWeight in_weight;                                 // w
  double r = 1.0;
  bool self_adjoint = false; // k(x, y) = conj(k(y, x)) is promised by the producer

  NuclearRep() = default;
  /// L^2 spaces with unit weights on both sides.
  NuclearRep(TensorGrid grid, std::vector<std::pair<GridFunction, GridFunction>> terms,
             double r = 1.0, bool self_adjoint = false);
  NuclearRep(TensorGrid grid, std::vector<std::pair<GridFunction, GridFunction>> terms,
             ExponentTuple out_exponents, SeparableWeight out_weight, ExponentTuple in_exponents,
             SeparableWeight in_weight, double r, bool self_adjoint);

  std::size_t rank() const { return terms.size(); }
  /// Throws ValidationError on grid, weight or range violations.
  void validate() const;
};

/// Concatenation; both reps must share the grid and the declared spaces.
NuclearRep concatenate(const NuclearRep& a, const NuclearRep& b);

struct KernelAssembly {
  Eigen::MatrixXcd kernel;            // kernel(i, j) = k_N(x_i, y_j)
  std::vector<double> l1_increments;  // ||k_n - k_{n-1}||_{L^1(mu x mu)} for n = 1..N
};

/// k_N(x, y) = sum_{n <= N} g_n(x) h_n(y); N = rank() when omitted.
KernelAssembly assemble_kernel(const NuclearRep& rep, std::size_t truncation);
KernelAssembly assemble_kernel(const NuclearRep& rep);

/// Factored path: sum_n <f, h_n> g_n.
GridFunction apply_operator(const NuclearRep& rep, const GridFunction& f);
/// Quadrature path: (Tf)(x_i) = sum_j k(x_i, y_j) f(y_j) mu(y_j).
GridFunction apply_kernel(const Eigen::MatrixXcd& kernel, const GridFunction& f);

/// ( sum_n ||g_n||^r ||h_n||^r )^{1/r}, an upper bound on the r-nuclear quasi-norm.
double nuclear_bound(const NuclearRep& rep, double r);

struct TraceReport {
  cplx trace;           // sum_n <g_n, h_n>
  cplx kernel_diagonal; // sum_x k(x, x) mu(x)
};

/// Both trace evaluations; throws NumericalError("trace_mismatch") if they
/// differ by more than 1e-8 * max(1, |trace|).
TraceReport trace_from_rep(const NuclearRep& rep);

/// Nystrom matrix. Plain: M_ij = k(x_i, x_j) mu_j. Symmetric:
/// M_ij = sqrt(mu_i) k(x_i, x_j) sqrt(mu_j), similar to the plain matrix.
struct DiscretizedOperator {
  Eigen::MatrixXcd matrix;
  TensorGrid grid;
  bool symmetric = false;
  std::string provenance;
};

DiscretizedOperator discretize(const NuclearRep& rep, bool symmetric);
/// Symmetric form for self-adjoint reps, plain otherwise.
DiscretizedOperator discretize(const NuclearRep& rep);

struct Spectrum {
  std::vector<cplx> eigenvalues; // descending modulus, then real part, then imaginary part
  cplx sum;
};

/// Dense eigenvalues. Hermitian matrices use the self-adjoint solver; others the
/// general complex Schur solver. Throws NumericalError("eigen_no_convergence").
Spectrum spectrum(const DiscretizedOperator& op);

/// Nonzero spectrum of M = G H^T W through the rank-sized matrix H^T W G.
Spectrum compressed_spectrum(const NuclearRep& rep);

enum class SpectrumMethod { automatic, dense, compressed };

struct LidskiiReport {
  cplx trace;
  cplx eigensum;
  double rel_error = 0.0;
  double r = 1.0;
  bool grothendieck_hypothesis = false; // r <= 2/3; recorded, not enforced
  std::string method;
  std::size_t eigenvalue_count = 0;
};

/// Compares trace_from_rep with the eigenvalue sum of the discretized operator.
/// automatic: dense up to 1500 grid points, compressed beyond.
LidskiiReport lidskii_check(const NuclearRep& rep, SpectrumMethod method = SpectrumMethod::automatic);

/// Singular values, descending.
std::vector<double> singular_values(const DiscretizedOperator& op);

/// ( sum_i sigma_i^r )^{1/r}, r in (0, 1], over singular values above the
/// numerical-rank cutoff n * eps * sigma_max. Plain Nystrom matrices are
/// first brought to the L^2-isometric form W^{1/2} K W^{1/2}.
double schatten_quasinorm(const DiscretizedOperator& op, double r);

void sort_eigenvalues(std::vector<cplx>& values);

} // namespace nucleon
