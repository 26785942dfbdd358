#pragma once

#include <span>
#include <vector>

#include "nucleon/grid.hpp"

namespace nucleon {

/// Half-open range of cell indices [lo, hi) along one axis.
struct Interval {
  std::size_t lo = 0;
  std::size_t hi = 0;

  bool overlaps(const Interval& o) const { return lo < o.hi && o.lo < hi; }
  bool operator==(const Interval&) const = default;
};

/// Axis-aligned box of grid cells.
struct Box {
  std::vector<Interval> intervals;

  bool disjoint_on(const Box& other, std::size_t axis) const {
    return !intervals[axis].overlaps(other.intervals[axis]);
  }
  bool disjoint(const Box& other) const;
  bool contains(std::span<const std::size_t> multi) const;
  double axis_measure(const TensorGrid& grid, std::size_t axis) const;
  double measure(const TensorGrid& grid) const;
};

/// Finite combination sum_k lambda_k 1_{B_k} of pairwise disjoint boxes.
struct SimpleFunction {
  TensorGrid grid;
  std::vector<Box> boxes;
  std::vector<cplx> coeffs;

  SimpleFunction() = default;
  /// Validates box dimensions and bounds, positive measure, pairwise
  /// disjointness and finite coefficients.
  SimpleFunction(TensorGrid grid, std::vector<Box> boxes, std::vector<cplx> coeffs);

  GridFunction to_grid() const;
};

/// Flat indices of every grid cell inside the box, axis 0 fastest.
std::vector<std::size_t> box_cells(const TensorGrid& grid, const Box& box);

/// Elementary weight: gamma_k on box k, background elsewhere.
WeightField elementary_weight(const TensorGrid& grid, std::span<const Box> boxes,
                              std::span<const double> gammas, double background = 1.0);

} // namespace nucleon
