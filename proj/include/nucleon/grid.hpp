#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace nucleon {

using cplx = std::complex<double>;

/// One axis of a product grid: sample points (non-decreasing) and the
/// quadrature weight / cell measure attached to each point.
struct Axis {
  std::vector<double> points;
  std::vector<double> measures;

  /// n equispaced points on [lo, hi] with trapezoid weights.
  static Axis uniform(double lo, double hi, std::size_t n);
  /// n equispaced points lo + k*step (k = 0..n-1) with unit-free weight step.
  /// Suited to rapidly decaying integrands where the endpoint correction is moot.
  static Axis equispaced(double lo, double step, std::size_t n);
  /// Contiguous cells of the given widths starting at origin; points are the
  /// cell centres and measures the widths.
  static Axis cells(const std::vector<double>& widths, double origin = 0.0);
  static Axis unit_cells(std::size_t n) { return cells(std::vector<double>(n, 1.0)); }

  std::size_t size() const { return points.size(); }
  double total_measure() const;
  /// Spacing if the points are equispaced (relative tolerance 1e-9), else 0.
  double uniform_step() const;

  bool operator==(const Axis&) const = default;
};

/// Product grid; flat storage has axis 0 varying fastest, so the innermost
/// integration of an iterated norm runs over contiguous memory.
class TensorGrid {
public:
  TensorGrid() = default;
  explicit TensorGrid(std::vector<Axis> axes);

  std::size_t dimension() const { return axes_.size(); }
  std::size_t size() const { return size_; }
  const Axis& axis(std::size_t j) const { return axes_[j]; }
  const std::vector<Axis>& axes() const { return axes_; }
  std::vector<std::size_t> shape() const;
  std::size_t stride(std::size_t j) const { return strides_[j]; }

  std::size_t flat_index(std::span<const std::size_t> multi) const;
  std::vector<std::size_t> multi_index(std::size_t flat) const;

  /// Product measure of every cell, in flat order.
  const std::vector<double>& cell_measures() const { return cell_measures_; }
  double total_measure() const;

  bool operator==(const TensorGrid& other) const { return axes_ == other.axes_; }

private:
  std::vector<Axis> axes_;
  std::vector<std::size_t> strides_;
  std::vector<double> cell_measures_;
  std::size_t size_ = 0;
};

/// Complex samples over a TensorGrid.
struct GridFunction {
  TensorGrid grid;
  std::vector<cplx> values;

  GridFunction() = default;
  /// Throws ValidationError on shape mismatch or non-finite values.
  GridFunction(TensorGrid grid, std::vector<cplx> values);

  static GridFunction zeros(const TensorGrid& grid);

  std::size_t size() const { return values.size(); }
  GridFunction scaled(cplx c) const;
};

/// Strictly positive weight samples aligned with a grid's flat order.
struct WeightField {
  std::vector<double> values;

  WeightField() = default;
  /// Throws ValidationError if any value is not finite and > 0.
  explicit WeightField(std::vector<double> values);

  static WeightField ones(std::size_t n) { return WeightField(std::vector<double>(n, 1.0)); }
  WeightField inverse() const;
  std::size_t size() const { return values.size(); }
};

} // namespace nucleon
