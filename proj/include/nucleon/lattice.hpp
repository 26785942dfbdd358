#pragma once

#include <string>
#include <vector>

#include "nucleon/grid.hpp"

namespace nucleon {

/// Samples on the truncated lattice alpha*Z x beta*Z, k in [-K, K] (time),
/// l in [-L, L] (frequency). Storage has k fastest:
/// index = (k + K) + (2K + 1) * (l + L).
struct LatticeCoefficients {
  double alpha = 1.0;
  double beta = 1.0;
  int k_bound = 0;
  int l_bound = 0;
  std::vector<cplx> coeffs;
  std::vector<double> weights; // w(alpha k, beta l), strictly positive
  std::string weight_tag = "constant:1";

  LatticeCoefficients() = default;
  LatticeCoefficients(double alpha, double beta, int k_bound, int l_bound, std::vector<cplx> coeffs,
                      std::vector<double> weights, std::string weight_tag);

  std::size_t k_count() const { return static_cast<std::size_t>(2 * k_bound + 1); }
  std::size_t l_count() const { return static_cast<std::size_t>(2 * l_bound + 1); }
  std::size_t index(int k, int l) const {
    return static_cast<std::size_t>(k + k_bound) + k_count() * static_cast<std::size_t>(l + l_bound);
  }
  cplx at(int k, int l) const { return coeffs[index(k, l)]; }
};

} // namespace nucleon
