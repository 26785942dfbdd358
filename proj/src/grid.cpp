#include "nucleon/grid.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "nucleon/error.hpp"

namespace nucleon {

Axis Axis::uniform(double lo, double hi, std::size_t n) {
  require(n >= 2, "grid_too_small", "uniform axis needs at least two points");
  require(hi > lo, "grid_bounds", "uniform axis needs hi > lo");
  Axis a;
  const double step = (hi - lo) / static_cast<double>(n - 1);
  a.points.resize(n);
  a.measures.assign(n, step);
  for (std::size_t k = 0; k < n; ++k) a.points[k] = lo + step * static_cast<double>(k);
  a.points.back() = hi;
  a.measures.front() = a.measures.back() = step / 2.0;
  return a;
}

Axis Axis::equispaced(double lo, double step, std::size_t n) {
  require(n >= 1, "grid_too_small", "axis needs at least one point");
  require(step > 0.0, "grid_bounds", "axis step must be positive");
  Axis a;
  a.points.resize(n);
  a.measures.assign(n, step);
  for (std::size_t k = 0; k < n; ++k) a.points[k] = lo + step * static_cast<double>(k);
  return a;
}

Axis Axis::cells(const std::vector<double>& widths, double origin) {
  require(!widths.empty(), "grid_too_small", "axis needs at least one cell");
  Axis a;
  double left = origin;
  for (double w : widths) {
    require(w > 0.0 && std::isfinite(w), "nonpositive_measure", "cell widths must be finite and > 0");
    a.points.push_back(left + w / 2.0);
    a.measures.push_back(w);
    left += w;
  }
  return a;
}

double Axis::total_measure() const {
  return std::accumulate(measures.begin(), measures.end(), 0.0);
}

double Axis::uniform_step() const {
  if (points.size() < 2) return 0.0;
  const double step = (points.back() - points.front()) / static_cast<double>(points.size() - 1);
  if (step <= 0.0) return 0.0;
  for (std::size_t k = 1; k < points.size(); ++k) {
    if (std::abs((points[k] - points[k - 1]) - step) > 1e-9 * step) return 0.0;
  }
  return step;
}

TensorGrid::TensorGrid(std::vector<Axis> axes) : axes_(std::move(axes)) {
  require(!axes_.empty(), "grid_dimension", "grid needs at least one axis");
  size_ = 1;
  strides_.resize(axes_.size());
  for (std::size_t j = 0; j < axes_.size(); ++j) {
    const Axis& a = axes_[j];
    require(!a.points.empty(), "grid_too_small", "every axis needs at least one point");
    require(a.points.size() == a.measures.size(), "grid_shape",
            "axis " + std::to_string(j) + ": points and measures differ in length");
    for (std::size_t k = 0; k < a.size(); ++k) {
      require(std::isfinite(a.points[k]), "nonfinite_value", "grid points must be finite");
      require(a.measures[k] > 0.0 && std::isfinite(a.measures[k]), "nonpositive_measure",
              "cell measures must be finite and > 0");
      if (k > 0) {
        require(a.points[k] >= a.points[k - 1], "grid_unsorted", "axis points must be sorted");
      }
    }
    strides_[j] = size_;
    size_ *= a.size();
  }
  cell_measures_.assign(size_, 1.0);
  for (std::size_t j = 0; j < axes_.size(); ++j) {
    const std::size_t n = axes_[j].size();
    for (std::size_t i = 0; i < size_; ++i) {
      cell_measures_[i] *= axes_[j].measures[(i / strides_[j]) % n];
    }
  }
}

std::vector<std::size_t> TensorGrid::shape() const {
  std::vector<std::size_t> s;
  for (const Axis& a : axes_) s.push_back(a.size());
  return s;
}

std::size_t TensorGrid::flat_index(std::span<const std::size_t> multi) const {
  std::size_t flat = 0;
  for (std::size_t j = 0; j < axes_.size(); ++j) flat += multi[j] * strides_[j];
  return flat;
}

std::vector<std::size_t> TensorGrid::multi_index(std::size_t flat) const {
  std::vector<std::size_t> m(axes_.size());
  for (std::size_t j = 0; j < axes_.size(); ++j) m[j] = (flat / strides_[j]) % axes_[j].size();
  return m;
}

double TensorGrid::total_measure() const {
  double t = 1.0;
  for (const Axis& a : axes_) t *= a.total_measure();
  return t;
}

GridFunction::GridFunction(TensorGrid g, std::vector<cplx> v) : grid(std::move(g)), values(std::move(v)) {
  require(values.size() == grid.size(), "dimension_mismatch",
          "function has " + std::to_string(values.size()) + " values for a grid of " +
              std::to_string(grid.size()) + " nodes");
  for (const cplx& z : values) {
    require(std::isfinite(z.real()) && std::isfinite(z.imag()), "nonfinite_value",
            "function values must be finite");
  }
}

GridFunction GridFunction::zeros(const TensorGrid& grid) {
  return GridFunction(grid, std::vector<cplx>(grid.size()));
}

GridFunction GridFunction::scaled(cplx c) const {
  GridFunction out = *this;
  for (cplx& z : out.values) z *= c;
  return out;
}

WeightField::WeightField(std::vector<double> v) : values(std::move(v)) {
  for (double w : values) {
    require(w > 0.0 && std::isfinite(w), "nonpositive_weight", "weights must be finite and > 0");
  }
}

WeightField WeightField::inverse() const {
  std::vector<double> inv(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) inv[i] = 1.0 / values[i];
  return WeightField(std::move(inv));
}

} // namespace nucleon
