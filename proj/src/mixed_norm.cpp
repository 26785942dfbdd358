#include "nucleon/mixed_norm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nucleon/error.hpp"
#include "nucleon/simd/kernels.hpp"

namespace nucleon {
namespace {

double root(double sum, double p) {
  if (p == 1.0) return sum;
  if (p == 2.0) return std::sqrt(sum);
  return std::pow(sum, 1.0 / p);
}

void check_weight(const TensorGrid& grid, const WeightField& w) {
  require(w.size() == grid.size(), "dimension_mismatch",
          "weight has " + std::to_string(w.size()) + " samples for a grid of " +
              std::to_string(grid.size()) + " nodes");
}

std::vector<double> weighted_magnitudes(const GridFunction& f, const WeightField& w) {
  check_weight(f.grid, w);
  std::vector<double> mag(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double a = std::abs(f.values[i]);
    require(std::isfinite(a), "nonfinite_value", "function values must be finite");
    mag[i] = a * w.values[i];
  }
  return mag;
}

} // namespace

double iterated_norm(std::span<const double> magnitudes, const TensorGrid& grid,
                     const ExponentTuple& exponents) {
  require(exponents.size() == grid.dimension(), "dimension_mismatch",
          "exponent tuple has " + std::to_string(exponents.size()) + " entries for a " +
              std::to_string(grid.dimension()) + "-axis grid");
  require(magnitudes.size() == grid.size(), "dimension_mismatch", "magnitude array size mismatch");
  const auto& kernels = simd::active_kernels();

  std::vector<double> level(magnitudes.begin(), magnitudes.end());
  std::size_t remaining = grid.size();
  for (std::size_t j = 0; j < grid.dimension(); ++j) {
    const Axis& axis = grid.axis(j);
    const std::size_t n = axis.size();
    const std::size_t outer = remaining / n;
    std::vector<double> next(outer);
    for (std::size_t o = 0; o < outer; ++o) {
      const double* seg = level.data() + o * n;
      if (exponents.is_infinite(j)) {
        next[o] = *std::max_element(seg, seg + n);
      } else {
        const double p = exponents[j];
        next[o] = root(kernels.power_sum(seg, axis.measures.data(), n, p), p);
      }
    }
    level = std::move(next);
    remaining = outer;
  }
  return level.front();
}

double mixed_norm(const GridFunction& f, const ExponentTuple& exponents, const WeightField& weight) {
  const std::vector<double> mag = weighted_magnitudes(f, weight);
  return iterated_norm(mag, f.grid, exponents);
}

double mixed_norm(const GridFunction& f, const ExponentTuple& exponents,
                  const SeparableWeight& weight) {
  return mixed_norm(f, exponents, weight.on(f.grid));
}

double mixed_norm(const GridFunction& f, const ExponentTuple& exponents) {
  return mixed_norm(f, exponents, WeightField::ones(f.size()));
}

double mixed_norm(const SimpleFunction& f, const ExponentTuple& exponents,
                  const WeightField& weight) {
  return mixed_norm(f.to_grid(), exponents, weight);
}

double mixed_norm(const SimpleFunction& f, const ExponentTuple& exponents) {
  return mixed_norm(f.to_grid(), exponents);
}

double seq_mixed_norm(const LatticeCoefficients& a, double p, double q) {
  require(!a.coeffs.empty(), "empty_coefficients", "lattice coefficient set is empty");
  require(std::isfinite(p) && std::isfinite(q), "infinite_exponent", "p and q must be finite");
  const TensorGrid counting({Axis::unit_cells(a.k_count()), Axis::unit_cells(a.l_count())});
  std::vector<double> mag(a.coeffs.size());
  for (std::size_t i = 0; i < mag.size(); ++i) mag[i] = std::abs(a.coeffs[i]) * a.weights[i];
  return iterated_norm(mag, counting, ExponentTuple({p, q}));
}

cplx holder_pair(const GridFunction& f, const GridFunction& g) {
  require(f.grid == g.grid, "dimension_mismatch", "pairing requires functions on the same grid");
  return simd::active_kernels().weighted_dot(f.values.data(), g.values.data(),
                                             f.grid.cell_measures().data(), f.size());
}

bool closed_form_applicable(std::span<const Box> boxes, const ExponentTuple& exponents) {
  const std::size_t n = exponents.size();
  std::size_t tail_start = n - 1;
  while (tail_start > 0 && exponents[tail_start - 1] == exponents[n - 1]) --tail_start;
  for (std::size_t a = 0; a < boxes.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      bool separated = false;
      for (std::size_t j = tail_start; j < n && !separated; ++j) {
        separated = boxes[a].disjoint_on(boxes[b], j);
      }
      if (!separated) return false;
    }
  }
  return true;
}

double simple_norm_closed_form(const SimpleFunction& f, const ExponentTuple& exponents,
                               std::span<const double> gammas) {
  require(gammas.size() == f.boxes.size(), "partition_misaligned",
          "elementary weight must assign one gamma to each box of the function");
  require(exponents.size() == f.grid.dimension(), "dimension_mismatch",
          "exponent tuple does not match the grid dimension");
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    require(!exponents.is_infinite(j), "infinite_exponent", "closed form needs finite exponents");
  }
  require(closed_form_applicable(f.boxes, exponents), "partition_not_separated",
          "boxes share a slice at a level where the exponent changes; "
          "the iterated norm does not collapse to a sum over boxes");
  for (double g : gammas) require(g > 0.0 && std::isfinite(g), "nonpositive_weight", "gamma must be > 0");

  const double pn = exponents[exponents.size() - 1];
  double sum = 0.0;
  double c = 0.0;
  for (std::size_t k = 0; k < f.boxes.size(); ++k) {
    double base = std::abs(f.coeffs[k]) * gammas[k];
    for (std::size_t j = 0; j < exponents.size(); ++j) {
      base *= std::pow(f.boxes[k].axis_measure(f.grid, j), exponents.reciprocal(j));
    }
    const double y = std::pow(base, pn) - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
  return root(sum, pn);
}

double simple_norm_closed_form(const SimpleFunction& f, const ExponentTuple& exponents) {
  const std::vector<double> ones(f.boxes.size(), 1.0);
  return simple_norm_closed_form(f, exponents, ones);
}

} // namespace nucleon
