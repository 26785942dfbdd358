#include "nucleon/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "nucleon/error.hpp"

namespace nucleon {

namespace {

constexpr double kRescale = 1e150;

// psi_k = phi_k e^{x^2/2} satisfies the same recurrence as phi_k. Values are
// kept as mantissa * e^{log_scale}; the Gaussian enters only at the end.
void hermite_row(int kmax, double x, double* out, std::size_t stride) {
  const double quarter = std::pow(std::numbers::pi, -0.25);
  double prev = 0.0;
  double cur = quarter;
  double log_scale = 0.0;
  const double gauss = -0.5 * x * x;
  for (int k = 0; k <= kmax; ++k) {
    out[static_cast<std::size_t>(k) * stride] =
        cur == 0.0 ? 0.0 : std::copysign(std::exp(std::log(std::abs(cur)) + log_scale + gauss), cur);
    const double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(double(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
    if (std::abs(cur) > kRescale) {
      cur /= kRescale;
      prev /= kRescale;
      log_scale += std::log(kRescale);
    }
  }
}

void check_index(int k) {
  require(k >= 0 && k <= kMaxHermiteIndex, "hermite_index_range",
          "Hermite index must lie in [0, " + std::to_string(kMaxHermiteIndex) + "]");
}

} // namespace

double hermite_function(int k, double x) {
  check_index(k);
  std::vector<double> row(static_cast<std::size_t>(k) + 1);
  hermite_row(k, x, row.data(), 1);
  return row.back();
}

std::vector<double> hermite_table(int kmax, std::span<const double> points) {
  check_index(kmax);
  const std::size_t n = points.size();
  std::vector<double> out((static_cast<std::size_t>(kmax) + 1) * n);
  for (std::size_t i = 0; i < n; ++i) hermite_row(kmax, points[i], out.data() + i, n);
  return out;
}

std::vector<double> hermite_eval(std::span<const int> k, const TensorGrid& grid) {
  require(k.size() == grid.dimension(), "dimension_mismatch", "multi-index does not match the grid");
  std::vector<std::vector<double>> rows;
  for (std::size_t a = 0; a < k.size(); ++a) {
    check_index(k[a]);
    const std::vector<double> table = hermite_table(k[a], grid.axis(a).points);
    const std::size_t n = grid.axis(a).size();
    rows.emplace_back(table.end() - static_cast<std::ptrdiff_t>(n), table.end());
  }
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::vector<std::size_t> multi = grid.multi_index(i);
    double v = 1.0;
    for (std::size_t a = 0; a < k.size(); ++a) v *= rows[a][multi[a]];
    out[i] = v;
  }
  return out;
}

double eigenvalue(std::span<const int> k) {
  double s = 0.0;
  for (int ki : k) {
    require(ki >= 0, "hermite_index_range", "multi-index entries must be >= 0");
    s += 2.0 * ki + 1.0;
  }
  return s;
}

std::vector<std::vector<int>> enumerate_indices(std::size_t d, int K) {
  require(d >= 1, "dimension_range", "dimension must be >= 1");
  require(K >= 1, "truncation_range", "K must be >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> k(d, 0);
  while (true) {
    out.push_back(k);
    std::size_t a = 0;
    for (; a < d; ++a) {
      if (++k[a] < K) break;
      k[a] = 0;
    }
    if (a == d) break;
  }
  std::stable_sort(out.begin(), out.end(), [](const std::vector<int>& x, const std::vector<int>& y) {
    const double lx = eigenvalue(x);
    const double ly = eigenvalue(y);
    if (lx != ly) return lx < ly;
    return x < y;
  });
  return out;
}

HermiteSystem::HermiteSystem(std::size_t d, int K, double step, double half_width) : d_(d), K_(K) {
  require(d >= 1, "dimension_range", "dimension must be >= 1");
  require(K >= 1 && K - 1 <= kMaxHermiteIndex, "truncation_range", "K out of range");
  require(step > 0.0 && std::isfinite(step), "step_range", "grid step must be > 0");
  const double L = half_width > 0.0 ? half_width : std::sqrt(2.0 * K - 1.0) + 6.0;
  const auto n = static_cast<std::size_t>(std::llround(2.0 * L / step)) + 1;
  std::vector<Axis> axes(d, Axis::equispaced(-L, 2.0 * L / double(n - 1), n));
  grid_ = TensorGrid(std::move(axes));
  enumerate();
}

HermiteSystem::HermiteSystem(int K, TensorGrid grid) : d_(grid.dimension()), K_(K), grid_(std::move(grid)) {
  require(d_ >= 1, "dimension_range", "grid must have at least one axis");
  require(K >= 1 && K - 1 <= kMaxHermiteIndex, "truncation_range", "K out of range");
  enumerate();
}

void HermiteSystem::enumerate() {
  indices_ = enumerate_indices(d_, K_);
  eigenvalues_.clear();
  for (const auto& k : indices_) eigenvalues_.push_back(nucleon::eigenvalue(k));
  axis_tables_.clear();
  for (std::size_t a = 0; a < d_; ++a) axis_tables_.push_back(hermite_table(K_ - 1, grid_.axis(a).points));
}

GridFunction HermiteSystem::function(std::size_t j) const {
  require(j < indices_.size(), "truncation_range", "eigenfunction index out of range");
  const std::vector<int>& k = indices_[j];
  std::vector<cplx> values(grid_.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    double v = 1.0;
    std::size_t rest = i;
    for (std::size_t a = 0; a < d_; ++a) {
      const std::size_t n = grid_.axis(a).size();
      v *= axis_tables_[a][static_cast<std::size_t>(k[a]) * n + rest % n];
      rest /= n;
    }
    values[i] = v;
  }
  return GridFunction(grid_, std::move(values));
}

SpectralFunction SpectralFunction::power(int n) {
  require(n >= 1, "spectral_param", "power order N must be a positive integer");
  SpectralFunction f;
  f.kind_ = Kind::power;
  f.n_ = n;
  return f;
}

SpectralFunction SpectralFunction::exp(double t) {
  require(t > 0.0 && std::isfinite(t), "spectral_param", "exp rate t must be > 0");
  SpectralFunction f;
  f.kind_ = Kind::exp;
  f.t_ = t;
  return f;
}

SpectralFunction SpectralFunction::table(std::vector<std::pair<double, double>> entries) {
  require(!entries.empty(), "spectral_param", "spectral table is empty");
  std::sort(entries.begin(), entries.end());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    require(std::isfinite(entries[i].first) && std::isfinite(entries[i].second), "spectral_param",
            "spectral table entries must be finite");
    require(i == 0 || entries[i].first != entries[i - 1].first, "spectral_param",
            "spectral table lists an eigenvalue twice");
  }
  SpectralFunction f;
  f.kind_ = Kind::table;
  f.entries_ = std::move(entries);
  return f;
}

double SpectralFunction::operator()(double lambda) const {
  switch (kind_) {
  case Kind::power:
    return std::pow(lambda, -n_);
  case Kind::exp:
    return std::exp(-t_ * lambda);
  case Kind::table: {
    const auto it = std::lower_bound(entries_.begin(), entries_.end(),
                                     std::pair{lambda - 1e-9, -std::numeric_limits<double>::infinity()});
    if (it == entries_.end() || std::abs(it->first - lambda) > 1e-9) {
      throw ValidationError("spectral_undefined",
                            "spectral table has no value at eigenvalue " + std::to_string(lambda));
    }
    return it->second;
  }
  }
  return 0.0;
}

std::string SpectralFunction::tag() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind_) {
  case Kind::power:
    os << "power:-" << n_;
    break;
  case Kind::exp:
    os << "exp:" << t_;
    break;
  case Kind::table:
    os << "table:" << entries_.size();
    break;
  }
  return os.str();
}

NuclearRep spectral_rep(const SpectralFunction& F, const HermiteSystem& system, std::size_t truncation,
                        double r) {
  require(truncation <= system.size(), "truncation_range", "truncation exceeds the system size");
  std::vector<std::pair<GridFunction, GridFunction>> terms;
  terms.reserve(truncation);
  for (std::size_t j = 0; j < truncation; ++j) {
    GridFunction phi = system.function(j);
    GridFunction g = phi.scaled(F(system.eigenvalue(j)));
    terms.emplace_back(std::move(g), std::move(phi));
  }
  return NuclearRep(system.grid(), std::move(terms), r, true);
}

namespace {

// sum over m >= K of f(m) = (2m + d)^{-s}. For convex f each term is the
// integral over [m - 1/2, m + 1/2] minus f''(xi)/24 >= f''(m + 1/2)/24, and
// f'' decreases, so the correction sums to at least -f'(K + 1/2)/24.
double power_tail(double s, std::size_t d, int K) {
  const double dd = static_cast<double>(d);
  const double integral = std::pow(2.0 * K - 1.0 + dd, 1.0 - s) / (2.0 * (s - 1.0));
  const double correction = s * std::pow(2.0 * K + 1.0 + dd, -s - 1.0) / 12.0;
  return integral - correction;
}

} // namespace

TraceEstimate trace_F(const SpectralFunction& F, std::size_t d, int K) {
  require(d >= 1, "dimension_range", "dimension must be >= 1");
  require(K >= 1, "truncation_range", "K must be >= 1");
  const auto dd = static_cast<double>(d);
  TraceEstimate est;
  const std::vector<std::vector<int>> indices = enumerate_indices(d, K);
  // Summed from the small end so rounding does not depend on the large leading terms.
  std::vector<double> terms;
  terms.reserve(indices.size());
  for (const auto& k : indices) terms.push_back(F(eigenvalue(k)));
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) est.value += *it;
  est.terms = terms.size();

  switch (F.kind()) {
  case SpectralFunction::Kind::exp: {
    const double t = F.rate();
    const double full = std::exp(-t) / (1.0 - std::exp(-2.0 * t));
    const double partial = full * (1.0 - std::exp(-2.0 * t * K));
    est.tail_bound = std::pow(full, dd) - std::pow(partial, dd);
    break;
  }
  case SpectralFunction::Kind::power: {
    // Multiplicity of lambda = 2m + d is C(m + d - 1, d - 1) <= (2m + d)^{d - 1}, and
    // every omitted index has m >= K.
    const double s = F.power_order() - dd + 1.0;
    require(s > 1.0, "power_not_summable", "power(-N) trace needs N > d");
    est.tail_bound = power_tail(s, d, K);
    break;
  }
  case SpectralFunction::Kind::table: {
    const auto& e = F.entries();
    if (e.size() < 2 || e.back().second == 0.0) {
      est.tail_bound = 0.0;
      break;
    }
    const auto& [l1, f1] = e[e.size() - 2];
    const auto& [l2, f2] = e.back();
    if (f1 == 0.0 || std::abs(f2) >= std::abs(f1) || l1 <= 0.0) {
      throw NumericalError("divergent_tail", "spectral table does not decay at its end");
    }
    const double a = -std::log(std::abs(f2) / std::abs(f1)) / std::log(l2 / l1);
    const double s = a - dd + 1.0;
    if (!(s > 1.0)) {
      throw NumericalError("divergent_tail", "spectral table decays too slowly to be summable");
    }
    est.tail_bound = std::abs(f2) * std::pow(l2, a) * power_tail(s, d, K);
    break;
  }
  }
  return est;
}

NuclearityReport nuclearity_criterion(const SpectralFunction& F, double r, double s, double p, double q,
                                      const HermiteSystem& system, const Window& g,
                                      std::size_t truncation, const TensorGrid& tf_grid) {
  require(r > 0.0 && r <= 1.0, "r_range", "r must lie in (0, 1]");
  require(p >= 1.0 && std::isfinite(p) && q >= 1.0 && std::isfinite(q), "exponent_range",
          "p and q must lie in [1, inf)");
  require(system.dimension() == 1, "dimension_range", "nuclearity criterion is implemented for d = 1");
  require(truncation <= system.size(), "truncation_range", "truncation exceeds the system size");
  const SeparableWeight w = SeparableWeight::frequency_bracket(1, s);
  const SeparableWeight w_dual = SeparableWeight::frequency_bracket(1, -s);
  const double pd = conjugate_exponent(p);
  const double qd = conjugate_exponent(q);

  NuclearityReport report;
  report.rows.resize(truncation);
  for (std::size_t j = 0; j < truncation; ++j) {
    NuclearityRow& row = report.rows[j];
    row.j = j;
    row.lambda = system.eigenvalue(j);
    const double f = std::abs(F(row.lambda));
    if (f == 0.0) continue;
    const TFGridFunction v = stft(system.function(j), g, tf_grid);
    row.norm = tf_mixed_norm(v, p, q, w);
    row.dual_norm = tf_mixed_norm(v, pd, qd, w_dual);
    row.term = std::pow(f * row.norm * row.dual_norm, r);
  }
  double sum = 0.0;
  for (NuclearityRow& row : report.rows) {
    const double next = sum + row.term;
    if (next < sum) report.monotone = false;
    sum = next;
    row.partial_sum = sum;
  }
  report.flatness = std::numeric_limits<double>::quiet_NaN();
  if (truncation >= 2 && report.rows[truncation - 2].term > 0.0) {
    report.flatness = report.rows[truncation - 1].term / report.rows[truncation - 2].term;
  }
  return report;
}

double gram_error(const HermiteSystem& system, std::size_t count) {
  require(count <= system.size(), "truncation_range", "count exceeds the system size");
  const auto& m = system.grid().cell_measures();
  std::vector<GridFunction> phi;
  for (std::size_t j = 0; j < count; ++j) phi.push_back(system.function(j));
  double err = 0.0;
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      double s = 0.0;
      for (std::size_t i = 0; i < m.size(); ++i) s += phi[a].values[i].real() * phi[b].values[i].real() * m[i];
      err = std::max(err, std::abs(s - (a == b ? 1.0 : 0.0)));
    }
  }
  return err;
}

double eigen_residual(int k, double h) {
  check_index(k);
  require(h > 0.0, "step_range", "difference step must be > 0");
  const double L = std::sqrt(2.0 * k + 1.0) + 8.0;
  const auto n = static_cast<std::size_t>(std::ceil(2.0 * L / h)) + 1;
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -L + h * double(i);
  const std::vector<double> table = hermite_table(k, x);
  const double* phi = table.data() + static_cast<std::size_t>(k) * n;
  const double lambda = 2.0 * k + 1.0;
  double res = 0.0;
  double norm = 0.0;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    const double d2 = (-phi[i + 2] + 16.0 * phi[i + 1] - 30.0 * phi[i] + 16.0 * phi[i - 1] - phi[i - 2]) /
                      (12.0 * h * h);
    const double r = -d2 + x[i] * x[i] * phi[i] - lambda * phi[i];
    res += r * r * h;
    norm += phi[i] * phi[i] * h;
  }
  return std::sqrt(res / norm);
}

} // namespace nucleon
