#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace nucleon {

/// Exponent multi-index P = (p_1, ..., p_n) for iterated norms, axis 0 innermost.
///
/// Each entry is stored together with its Hölder conjugate, so dual() is an
/// exact involution. Primal tuples are built from finite entries >= 1; an
/// entry of +inf only arises as the conjugate of 1 and is evaluated as a
/// weighted supremum.
class ExponentTuple {
public:
  static constexpr double infinity = std::numeric_limits<double>::infinity();

  ExponentTuple() = default;

  /// Throws ValidationError unless every entry is finite and >= 1.
  explicit ExponentTuple(std::vector<double> exponents);

  /// Accepts +inf entries; for norms on dual spaces (e.g. M^{p',q'}).
  static ExponentTuple with_infinite(std::vector<double> exponents);

  /// Constant tuple (p, ..., p).
  static ExponentTuple uniform(std::size_t n, double p);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t j) const { return values_[j]; }
  bool is_infinite(std::size_t j) const { return values_[j] == infinity; }
  /// 1/p_j, with 1/inf = 0.
  double reciprocal(std::size_t j) const;
  const std::vector<double>& values() const { return values_; }

  ExponentTuple dual() const;

  bool operator==(const ExponentTuple&) const = default;

private:
  std::vector<double> values_;
  std::vector<double> conjugates_;
};

/// P' with 1/p_j + 1/p_j' = 1; 1 maps to inf and inf back to 1.
inline ExponentTuple dual_exponents(const ExponentTuple& p) { return p.dual(); }

/// Conjugate exponent of a scalar p >= 1 (inf for p == 1, 1 for p == inf).
double conjugate_exponent(double p);

} // namespace nucleon
