#include "nucleon/nuclear.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "nucleon/error.hpp"
#include "nucleon/mixed_norm.hpp"
#include "nucleon/simd/kernels.hpp"

namespace nucleon {

NuclearRep::NuclearRep(TensorGrid grid_, std::vector<std::pair<GridFunction, GridFunction>> terms_,
                       double r_, bool self_adjoint_)
    : grid(std::move(grid_)), terms(std::move(terms_)), r(r_), self_adjoint(self_adjoint_) {
  const std::size_t n = grid.dimension();
  out_exponents = ExponentTuple::uniform(n, 2.0);
  in_exponents = ExponentTuple::uniform(n, 2.0);
  out_weight = SeparableWeight::constant(n);
  in_weight = SeparableWeight::constant(n);
  validate();
}

NuclearRep::NuclearRep(TensorGrid grid_, std::vector<std::pair<GridFunction, GridFunction>> terms_,
                       ExponentTuple out_exponents_, SeparableWeight out_weight_,
                       ExponentTuple in_exponents_, SeparableWeight in_weight_, double r_,
                       bool self_adjoint_)
    : grid(std::move(grid_)), terms(std::move(terms_)), out_exponents(std::move(out_exponents_)),
      out_weight(std::move(out_weight_)), in_exponents(std::move(in_exponents_)),
      in_weight(std::move(in_weight_)), r(r_), self_adjoint(self_adjoint_) {
  validate();
}

void NuclearRep::validate() const {
  const std::size_t n = grid.dimension();
  require(r > 0.0 && r <= 1.0, "r_range", "r must lie in (0, 1]");
  require(out_exponents.size() == n && in_exponents.size() == n, "dimension_mismatch",
          "declared exponents do not match the grid dimension");
  require(out_weight.size() == n && in_weight.size() == n, "dimension_mismatch",
          "declared weights do not match the grid dimension");
  for (const auto& [g, h] : terms) {
    require(g.grid == grid && h.grid == grid, "grid_mismatch", "factor lives on a different grid");
  }
}

NuclearRep concatenate(const NuclearRep& a, const NuclearRep& b) {
  require(a.grid == b.grid, "grid_mismatch", "cannot concatenate reps on different grids");
  require(a.in_exponents == b.in_exponents && a.out_exponents == b.out_exponents &&
              a.in_weight.tag() == b.in_weight.tag() && a.out_weight.tag() == b.out_weight.tag(),
          "space_mismatch", "cannot concatenate reps on different spaces");
  NuclearRep out = a;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  out.r = std::max(a.r, b.r);
  out.self_adjoint = a.self_adjoint && b.self_adjoint;
  return out;
}

namespace {

double l1_norm(const GridFunction& f) {
  const auto& m = f.grid.cell_measures();
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += std::abs(f.values[i]) * m[i];
  return s;
}

Eigen::MatrixXcd factor_matrix(const NuclearRep& rep, std::size_t count, bool take_g) {
  Eigen::MatrixXcd out(rep.grid.size(), count);
  for (std::size_t n = 0; n < count; ++n) {
    const GridFunction& f = take_g ? rep.terms[n].first : rep.terms[n].second;
    out.col(n) = Eigen::Map<const Eigen::VectorXcd>(f.values.data(), f.size());
  }
  return out;
}

Eigen::VectorXd measure_vector(const TensorGrid& grid) {
  const auto& m = grid.cell_measures();
  return Eigen::Map<const Eigen::VectorXd>(m.data(), m.size());
}

bool is_real(const Eigen::MatrixXcd& m) {
  return m.imag().cwiseAbs().maxCoeff() == 0.0;
}

bool is_hermitian(const Eigen::MatrixXcd& m) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= 1e-13 * scale;
}

Spectrum finish(std::vector<cplx> values) {
  sort_eigenvalues(values);
  Spectrum s;
  // Summed smallest modulus first so the result does not depend on solver noise order.
  cplx sum{};
  for (auto it = values.rbegin(); it != values.rend(); ++it) sum += *it;
  s.eigenvalues = std::move(values);
  s.sum = sum;
  return s;
}

[[noreturn]] void no_convergence(const Eigen::MatrixXcd& m, const std::vector<cplx>& partial) {
  cplx sum{};
  for (const cplx& z : partial) sum += z;
  throw NumericalError("eigen_no_convergence",
                       "eigenvalue iteration did not converge; trace residual " +
                           std::to_string(std::abs(m.trace() - sum)));
}

std::vector<cplx> dense_eigenvalues(const Eigen::MatrixXcd& m) {
  std::vector<cplx> values;
  if (m.size() == 0) return values;
  if (is_hermitian(m)) {
    if (is_real(m)) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.real(), Eigen::EigenvaluesOnly);
      for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) values.emplace_back(es.eigenvalues()(i));
      if (es.info() != Eigen::Success) no_convergence(m, values);
    } else {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
      for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) values.emplace_back(es.eigenvalues()(i));
      if (es.info() != Eigen::Success) no_convergence(m, values);
    }
  } else if (is_real(m)) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(m.real(), false);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) values.push_back(es.eigenvalues()(i));
    if (es.info() != Eigen::Success) no_convergence(m, values);
  } else {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) values.push_back(es.eigenvalues()(i));
    if (es.info() != Eigen::Success) no_convergence(m, values);
  }
  return values;
}

} // namespace

void sort_eigenvalues(std::vector<cplx>& values) {
  std::stable_sort(values.begin(), values.end(), [](const cplx& a, const cplx& b) {
    const double ma = std::abs(a);
    const double mb = std::abs(b);
    if (ma != mb) return ma > mb;
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
}

KernelAssembly assemble_kernel(const NuclearRep& rep, std::size_t truncation) {
  require(truncation <= rep.rank(), "truncation_range", "truncation exceeds the representation length");
  KernelAssembly out;
  const Eigen::MatrixXcd g = factor_matrix(rep, truncation, true);
  const Eigen::MatrixXcd h = factor_matrix(rep, truncation, false);
  out.kernel = g * h.transpose();
  // k_n - k_{n-1} = g_n (x) h_n, whose L^1 norm factorises.
  for (std::size_t n = 0; n < truncation; ++n) {
    out.l1_increments.push_back(l1_norm(rep.terms[n].first) * l1_norm(rep.terms[n].second));
  }
  return out;
}

KernelAssembly assemble_kernel(const NuclearRep& rep) { return assemble_kernel(rep, rep.rank()); }

GridFunction apply_operator(const NuclearRep& rep, const GridFunction& f) {
  require(f.grid == rep.grid, "grid_mismatch", "function and operator grids differ");
  const auto& kernels = simd::active_kernels();
  const auto& m = rep.grid.cell_measures();
  std::vector<cplx> out(f.size());
  for (const auto& [g, h] : rep.terms) {
    const cplx c = kernels.weighted_dot(f.values.data(), h.values.data(), m.data(), f.size());
    kernels.axpy(c, g.values.data(), out.data(), out.size());
  }
  return GridFunction(rep.grid, std::move(out));
}

GridFunction apply_kernel(const Eigen::MatrixXcd& kernel, const GridFunction& f) {
  require(static_cast<std::size_t>(kernel.cols()) == f.size() &&
              static_cast<std::size_t>(kernel.rows()) == f.size(),
          "grid_mismatch", "kernel and function sizes differ");
  Eigen::VectorXcd fm(f.size());
  const auto& m = f.grid.cell_measures();
  for (std::size_t i = 0; i < f.size(); ++i) fm(i) = f.values[i] * m[i];
  const Eigen::VectorXcd out = kernel * fm;
  return GridFunction(f.grid, std::vector<cplx>(out.data(), out.data() + out.size()));
}

double nuclear_bound(const NuclearRep& rep, double r) {
  require(r > 0.0 && r <= 1.0, "r_range", "r must lie in (0, 1]");
  const WeightField w_out = rep.out_weight.on(rep.grid);
  const WeightField w_in_dual = rep.in_weight.inverse().on(rep.grid);
  const ExponentTuple p_dual = rep.in_exponents.dual();
  double s = 0.0;
  for (const auto& [g, h] : rep.terms) {
    const double prod = mixed_norm(g, rep.out_exponents, w_out) * mixed_norm(h, p_dual, w_in_dual);
    s += std::pow(prod, r);
  }
  return std::pow(s, 1.0 / r);
}

TraceReport trace_from_rep(const NuclearRep& rep) {
  const auto& m = rep.grid.cell_measures();
  const auto& kernels = simd::active_kernels();
  TraceReport report{};
  for (const auto& [g, h] : rep.terms) {
    report.trace += kernels.weighted_dot(g.values.data(), h.values.data(), m.data(), g.size());
  }
  for (std::size_t x = 0; x < rep.grid.size(); ++x) {
    cplx diag{};
    for (const auto& [g, h] : rep.terms) diag += g.values[x] * h.values[x];
    report.kernel_diagonal += diag * m[x];
  }
  const double gap = std::abs(report.trace - report.kernel_diagonal);
  if (gap > 1e-8 * std::max(1.0, std::abs(report.trace))) {
    throw NumericalError("trace_mismatch", "pairing trace and kernel diagonal differ by " +
                                               std::to_string(gap));
  }
  return report;
}

DiscretizedOperator discretize(const NuclearRep& rep, bool symmetric) {
  DiscretizedOperator op;
  op.grid = rep.grid;
  op.symmetric = symmetric;
  op.matrix = assemble_kernel(rep).kernel;
  const Eigen::VectorXd m = measure_vector(rep.grid);
  if (symmetric) {
    const Eigen::VectorXd s = m.cwiseSqrt();
    op.matrix = s.asDiagonal() * op.matrix * s.asDiagonal();
  } else {
    op.matrix = op.matrix * m.asDiagonal();
  }
  op.provenance = "rank=" + std::to_string(rep.rank()) + ";r=" + std::to_string(rep.r) +
                  (symmetric ? ";symmetric" : ";plain");
  return op;
}

DiscretizedOperator discretize(const NuclearRep& rep) { return discretize(rep, rep.self_adjoint); }

Spectrum spectrum(const DiscretizedOperator& op) {
  require(op.matrix.rows() == op.matrix.cols(), "not_square", "matrix must be square");
  require(static_cast<std::size_t>(op.matrix.rows()) == op.grid.size(), "grid_mismatch",
          "matrix size does not match the grid");
  require(op.matrix.allFinite(), "non_finite", "matrix has non-finite entries");
  return finish(dense_eigenvalues(op.matrix));
}

Spectrum compressed_spectrum(const NuclearRep& rep) {
  const std::size_t n = rep.rank();
  const Eigen::MatrixXcd g = factor_matrix(rep, n, true);
  const Eigen::MatrixXcd h = factor_matrix(rep, n, false);
  const Eigen::VectorXd m = measure_vector(rep.grid);
  const Eigen::MatrixXcd c = h.transpose() * m.asDiagonal() * g;
  return finish(dense_eigenvalues(c));
}

LidskiiReport lidskii_check(const NuclearRep& rep, SpectrumMethod method) {
  LidskiiReport report;
  report.trace = trace_from_rep(rep).trace;
  report.r = rep.r;
  report.grothendieck_hypothesis = rep.r <= 2.0 / 3.0;
  if (method == SpectrumMethod::automatic) {
    method = rep.grid.size() <= 1500 ? SpectrumMethod::dense : SpectrumMethod::compressed;
  }
  Spectrum s;
  if (method == SpectrumMethod::dense) {
    s = spectrum(discretize(rep));
    report.method = "dense";
  } else {
    s = compressed_spectrum(rep);
    report.method = "compressed";
  }
  report.eigensum = s.sum;
  report.eigenvalue_count = s.eigenvalues.size();
  const double scale = std::abs(report.trace);
  const double gap = std::abs(report.trace - report.eigensum);
  report.rel_error = scale > 0.0 ? gap / scale : gap;
  return report;
}

std::vector<double> singular_values(const DiscretizedOperator& op) {
  require(op.matrix.rows() == op.matrix.cols(), "not_square", "matrix must be square");
  Eigen::MatrixXcd m = op.matrix;
  if (!op.symmetric) {
    // W^{1/2} (K W) W^{-1/2}: the L^2-isometric form.
    const Eigen::VectorXd w = measure_vector(op.grid);
    m = w.cwiseSqrt().asDiagonal() * m * w.cwiseSqrt().cwiseInverse().asDiagonal();
  }
  std::vector<double> out;
  if (m.size() == 0) return out;
  if (is_real(m)) {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(m.real());
    out.assign(svd.singularValues().data(), svd.singularValues().data() + svd.singularValues().size());
  } else {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    out.assign(svd.singularValues().data(), svd.singularValues().data() + svd.singularValues().size());
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double schatten_quasinorm(const DiscretizedOperator& op, double r) {
  require(r > 0.0 && r <= 1.0, "r_range", "r must lie in (0, 1]");
  const std::vector<double> sigma = singular_values(op);
  if (sigma.empty()) return 0.0;
  // Values below the numerical-rank cutoff n * eps * sigma_max are rounding
  // noise; for r < 1 their r-th powers would otherwise dominate the tail.
  const double cutoff = double(sigma.size()) * std::numeric_limits<double>::epsilon() * sigma.front();
  double s = 0.0;
  for (auto it = sigma.rbegin(); it != sigma.rend(); ++it) {
    if (*it > cutoff) s += std::pow(*it, r);
  }
  return std::pow(s, 1.0 / r);
}

} // namespace nucleon
