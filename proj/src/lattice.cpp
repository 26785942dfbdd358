#include "nucleon/lattice.hpp"

#include <cmath>

#include "nucleon/error.hpp"

namespace nucleon {

LatticeCoefficients::LatticeCoefficients(double alpha_, double beta_, int k_bound_, int l_bound_,
                                         std::vector<cplx> coeffs_, std::vector<double> weights_,
                                         std::string weight_tag_)
    : alpha(alpha_), beta(beta_), k_bound(k_bound_), l_bound(l_bound_), coeffs(std::move(coeffs_)),
      weights(std::move(weights_)), weight_tag(std::move(weight_tag_)) {
  require(alpha > 0.0 && std::isfinite(alpha), "lattice_range", "alpha must be finite and > 0");
  require(beta > 0.0 && std::isfinite(beta), "lattice_range", "beta must be finite and > 0");
  require(k_bound >= 0 && l_bound >= 0, "lattice_range", "lattice bounds must be >= 0");
  const std::size_t n = k_count() * l_count();
  require(coeffs.size() == n, "shape_mismatch", "lattice coefficient count does not match bounds");
  if (weights.empty()) weights.assign(n, 1.0);
  require(weights.size() == n, "shape_mismatch", "lattice weight count does not match bounds");
  for (double w : weights) {
    require(w > 0.0 && std::isfinite(w), "nonpositive_weight", "lattice weights must be > 0");
  }
  for (const cplx& z : coeffs) {
    require(std::isfinite(z.real()) && std::isfinite(z.imag()), "non_finite",
            "lattice coefficients must be finite");
  }
}

} // namespace nucleon
