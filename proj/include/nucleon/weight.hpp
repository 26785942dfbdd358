#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "nucleon/grid.hpp"

namespace nucleon {

/// One per-axis factor w_j of a separable weight.
struct WeightFactor {
  enum class Kind { constant, polynomial, bracket, custom };

  Kind kind = Kind::constant;
  // constant: the value; polynomial: s in (1+t^2)^{s/2}; bracket: s in (1+|t|)^s.
  double param = 1.0;
  std::function<double(double)> fn; // custom only

  double operator()(double t) const;
  WeightFactor inverse() const;
  std::string tag() const;
};

/// w(x_1, ..., x_n) = prod_j w_j(x_j).
///
/// The polynomial form is the per-axis product of (1+t^2)^{s/2}, which
/// dominates v_s(z) = (1+|z|^2)^{s/2} for s >= 0. Each factor is moderate,
/// v(x+y) <= 2^{s/2} v(x) v(y), but not submultiplicative with constant 1.
/// The bracket form (1+|t|)^s is submultiplicative and meant for frequency axes.
class SeparableWeight {
public:
  SeparableWeight() = default;
  explicit SeparableWeight(std::vector<WeightFactor> factors);

  static SeparableWeight constant(std::size_t n, double value = 1.0);
  static SeparableWeight polynomial(std::size_t n, double s);
  /// Time-frequency weight (1+|xi|)^s on a (x_1..x_d, xi_1..xi_d) grid.
  static SeparableWeight frequency_bracket(std::size_t d, double s);

  std::size_t size() const { return factors_.size(); }
  const WeightFactor& factor(std::size_t j) const { return factors_[j]; }

  double operator()(std::span<const double> point) const;
  /// Samples the weight at every node; throws ValidationError if any sample is not > 0.
  WeightField on(const TensorGrid& grid) const;
  SeparableWeight inverse() const;
  /// Reorders factors: result.factor(j) = factor(order[j]).
  SeparableWeight permuted(std::span<const std::size_t> order) const;
  std::string tag() const;

private:
  std::vector<WeightFactor> factors_;
};

} // namespace nucleon
