#include "nucleon/weight.hpp"

#include <cmath>
#include <sstream>

#include "nucleon/error.hpp"

namespace nucleon {

double WeightFactor::operator()(double t) const {
  switch (kind) {
  case Kind::constant:
    return param;
  case Kind::polynomial:
    return std::pow(1.0 + t * t, param / 2.0);
  case Kind::bracket:
    return std::pow(1.0 + std::abs(t), param);
  case Kind::custom:
    return fn(t);
  }
  return param;
}

WeightFactor WeightFactor::inverse() const {
  WeightFactor inv = *this;
  switch (kind) {
  case Kind::constant:
    inv.param = 1.0 / param;
    break;
  case Kind::polynomial:
  case Kind::bracket:
    inv.param = -param;
    break;
  case Kind::custom:
    inv.fn = [f = fn](double t) { return 1.0 / f(t); };
    break;
  }
  return inv;
}

std::string WeightFactor::tag() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind) {
  case Kind::constant:
    os << "constant:" << param;
    break;
  case Kind::polynomial:
    os << "poly:" << param;
    break;
  case Kind::bracket:
    os << "bracket:" << param;
    break;
  case Kind::custom:
    os << "custom";
    break;
  }
  return os.str();
}

SeparableWeight::SeparableWeight(std::vector<WeightFactor> factors) : factors_(std::move(factors)) {
  for (const WeightFactor& f : factors_) {
    if (f.kind == WeightFactor::Kind::constant) {
      require(f.param > 0.0 && std::isfinite(f.param), "nonpositive_weight",
              "constant weight factor must be > 0");
    }
    if (f.kind == WeightFactor::Kind::custom) {
      require(static_cast<bool>(f.fn), "weight_form", "custom weight factor needs a function");
    }
  }
}

SeparableWeight SeparableWeight::constant(std::size_t n, double value) {
  return SeparableWeight(std::vector<WeightFactor>(n, WeightFactor{WeightFactor::Kind::constant, value, {}}));
}

SeparableWeight SeparableWeight::polynomial(std::size_t n, double s) {
  return SeparableWeight(std::vector<WeightFactor>(n, WeightFactor{WeightFactor::Kind::polynomial, s, {}}));
}

SeparableWeight SeparableWeight::frequency_bracket(std::size_t d, double s) {
  std::vector<WeightFactor> f(d, WeightFactor{WeightFactor::Kind::constant, 1.0, {}});
  f.resize(2 * d, WeightFactor{WeightFactor::Kind::bracket, s, {}});
  return SeparableWeight(std::move(f));
}

double SeparableWeight::operator()(std::span<const double> point) const {
  require(point.size() == factors_.size(), "dimension_mismatch", "weight/point dimension mismatch");
  double w = 1.0;
  for (std::size_t j = 0; j < factors_.size(); ++j) w *= factors_[j](point[j]);
  return w;
}

WeightField SeparableWeight::on(const TensorGrid& grid) const {
  require(grid.dimension() == factors_.size(), "dimension_mismatch",
          "weight has " + std::to_string(factors_.size()) + " factors for a " +
              std::to_string(grid.dimension()) + "-axis grid");
  std::vector<std::vector<double>> per_axis(grid.dimension());
  for (std::size_t j = 0; j < grid.dimension(); ++j) {
    for (double t : grid.axis(j).points) per_axis[j].push_back(factors_[j](t));
  }
  std::vector<double> values(grid.size(), 1.0);
  for (std::size_t j = 0; j < grid.dimension(); ++j) {
    const std::size_t n = grid.axis(j).size();
    const std::size_t stride = grid.stride(j);
    for (std::size_t i = 0; i < values.size(); ++i) values[i] *= per_axis[j][(i / stride) % n];
  }
  return WeightField(std::move(values));
}

SeparableWeight SeparableWeight::inverse() const {
  std::vector<WeightFactor> inv;
  for (const WeightFactor& f : factors_) inv.push_back(f.inverse());
  return SeparableWeight(std::move(inv));
}

SeparableWeight SeparableWeight::permuted(std::span<const std::size_t> order) const {
  std::vector<WeightFactor> f;
  for (std::size_t j : order) f.push_back(factors_.at(j));
  return SeparableWeight(std::move(f));
}

std::string SeparableWeight::tag() const {
  if (factors_.empty()) return "constant:1";
  std::string t = factors_[0].tag();
  for (std::size_t j = 1; j < factors_.size(); ++j) t += "|" + factors_[j].tag();
  return t;
}

} // namespace nucleon
