#include "nucleon/simple_function.hpp"

#include <cmath>
#include <string>

#include "nucleon/error.hpp"

namespace nucleon {

bool Box::disjoint(const Box& other) const {
  for (std::size_t j = 0; j < intervals.size(); ++j) {
    if (disjoint_on(other, j)) return true;
  }
  return false;
}

bool Box::contains(std::span<const std::size_t> multi) const {
  for (std::size_t j = 0; j < intervals.size(); ++j) {
    if (multi[j] < intervals[j].lo || multi[j] >= intervals[j].hi) return false;
  }
  return true;
}

double Box::axis_measure(const TensorGrid& grid, std::size_t axis) const {
  double m = 0.0;
  const Interval& iv = intervals[axis];
  for (std::size_t k = iv.lo; k < iv.hi; ++k) m += grid.axis(axis).measures[k];
  return m;
}

double Box::measure(const TensorGrid& grid) const {
  double m = 1.0;
  for (std::size_t j = 0; j < intervals.size(); ++j) m *= axis_measure(grid, j);
  return m;
}

namespace {

void validate_boxes(const TensorGrid& grid, std::span<const Box> boxes) {
  for (std::size_t b = 0; b < boxes.size(); ++b) {
    const Box& box = boxes[b];
    require(box.intervals.size() == grid.dimension(), "dimension_mismatch",
            "box " + std::to_string(b) + " has the wrong number of intervals");
    for (std::size_t j = 0; j < grid.dimension(); ++j) {
      const Interval& iv = box.intervals[j];
      require(iv.hi <= grid.axis(j).size(), "box_out_of_range",
              "box " + std::to_string(b) + " exceeds the grid on axis " + std::to_string(j));
      require(iv.lo < iv.hi, "degenerate_box",
              "box " + std::to_string(b) + " has zero measure on axis " + std::to_string(j));
    }
    for (std::size_t c = 0; c < b; ++c) {
      require(box.disjoint(boxes[c]), "overlapping_boxes",
              "boxes " + std::to_string(c) + " and " + std::to_string(b) + " overlap");
    }
  }
}

template <class Fn>
void for_each_cell(const TensorGrid& grid, const Box& box, Fn&& fn) {
  const std::size_t n = grid.dimension();
  std::vector<std::size_t> idx(n);
  for (std::size_t j = 0; j < n; ++j) idx[j] = box.intervals[j].lo;
  while (true) {
    fn(grid.flat_index(idx));
    std::size_t j = 0;
    for (; j < n; ++j) {
      if (++idx[j] < box.intervals[j].hi) break;
      idx[j] = box.intervals[j].lo;
    }
    if (j == n) return;
  }
}

} // namespace

SimpleFunction::SimpleFunction(TensorGrid g, std::vector<Box> b, std::vector<cplx> c)
    : grid(std::move(g)), boxes(std::move(b)), coeffs(std::move(c)) {
  require(boxes.size() == coeffs.size(), "dimension_mismatch", "one coefficient per box required");
  validate_boxes(grid, boxes);
  for (const cplx& z : coeffs) {
    require(std::isfinite(z.real()) && std::isfinite(z.imag()), "nonfinite_value",
            "coefficients must be finite");
  }
}

GridFunction SimpleFunction::to_grid() const {
  std::vector<cplx> values(grid.size());
  for (std::size_t b = 0; b < boxes.size(); ++b) {
    for_each_cell(grid, boxes[b], [&](std::size_t i) { values[i] = coeffs[b]; });
  }
  return GridFunction(grid, std::move(values));
}

std::vector<std::size_t> box_cells(const TensorGrid& grid, const Box& box) {
  std::vector<std::size_t> cells;
  for_each_cell(grid, box, [&](std::size_t i) { cells.push_back(i); });
  return cells;
}

WeightField elementary_weight(const TensorGrid& grid, std::span<const Box> boxes,
                              std::span<const double> gammas, double background) {
  require(boxes.size() == gammas.size(), "partition_misaligned",
          "elementary weight needs one gamma per box");
  validate_boxes(grid, boxes);
  std::vector<double> values(grid.size(), background);
  for (std::size_t b = 0; b < boxes.size(); ++b) {
    for_each_cell(grid, boxes[b], [&](std::size_t i) { values[i] = gammas[b]; });
  }
  return WeightField(std::move(values));
}

} // namespace nucleon
