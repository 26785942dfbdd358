#include "nucleon/exponents.hpp"

#include <cmath>
#include <string>

#include "nucleon/error.hpp"

namespace nucleon {

double conjugate_exponent(double p) {
  if (p == ExponentTuple::infinity) return 1.0;
  if (p == 1.0) return ExponentTuple::infinity;
  return p / (p - 1.0);
}

ExponentTuple::ExponentTuple(std::vector<double> exponents) : values_(std::move(exponents)) {
  require(!values_.empty(), "empty_exponents", "exponent tuple must have at least one entry");
  conjugates_.reserve(values_.size());
  for (double p : values_) {
    require(std::isfinite(p), "infinite_exponent",
            "primal exponents must be finite (p = inf only appears in dual tuples)");
    require(p >= 1.0, "exponent_below_one", "exponent " + std::to_string(p) + " is below 1");
    conjugates_.push_back(conjugate_exponent(p));
  }
}

ExponentTuple ExponentTuple::with_infinite(std::vector<double> exponents) {
  require(!exponents.empty(), "empty_exponents", "exponent tuple must have at least one entry");
  ExponentTuple t;
  for (double p : exponents) {
    require(!std::isnan(p) && p >= 1.0, "exponent_below_one",
            "exponent " + std::to_string(p) + " is below 1");
    t.values_.push_back(p);
    t.conjugates_.push_back(conjugate_exponent(p));
  }
  return t;
}

ExponentTuple ExponentTuple::uniform(std::size_t n, double p) {
  return ExponentTuple(std::vector<double>(n, p));
}

double ExponentTuple::reciprocal(std::size_t j) const {
  return is_infinite(j) ? 0.0 : 1.0 / values_[j];
}

ExponentTuple ExponentTuple::dual() const {
  ExponentTuple d;
  d.values_ = conjugates_;
  d.conjugates_ = values_;
  return d;
}

} // namespace nucleon
