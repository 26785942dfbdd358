#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nucleon/exponents.hpp"
#include "nucleon/grid.hpp"
#include "nucleon/random.hpp"
#include "nucleon/simple_function.hpp"

namespace nucleon {

/// Product partition of a grid: per-axis disjoint cell-index intervals, a
/// selection of product cells (k_1, ..., k_n), and optionally an elementary
/// weight gamma per selected cell.
class PartitionSpec {
public:
  PartitionSpec() = default;
  /// Empty `cells` selects every product cell; empty `gammas` means gamma = 1.
  PartitionSpec(TensorGrid grid, std::vector<std::vector<Interval>> axis_intervals,
                std::vector<std::vector<std::size_t>> cells = {}, std::vector<double> gammas = {});

  const TensorGrid& grid() const { return grid_; }
  const std::vector<std::vector<Interval>>& axis_intervals() const { return axis_intervals_; }
  const std::vector<std::vector<std::size_t>>& cells() const { return cells_; }
  const std::vector<double>& gammas() const { return gammas_; }
  bool weighted() const { return weighted_; }

  std::vector<Box> boxes() const;
  /// gamma on each selected cell, background elsewhere.
  WeightField weight_field(double background = 1.0) const;

private:
  TensorGrid grid_;
  std::vector<std::vector<Interval>> axis_intervals_;
  std::vector<std::vector<std::size_t>> cells_;
  std::vector<double> gammas_;
  bool weighted_ = false;
};

/// One term v_(k) (x) u_(k): u is the functional factor, v the range factor.
/// Both are constant multiples of the box indicator:
///   u = gamma      * 1_B / prod_j mu_j(B_j)^{1/p_j'}
///   v = gamma^{-1} * 1_B / prod_j mu_j(B_j)^{1/p_j}
struct RankOneFactorPair {
  std::vector<std::size_t> index;
  Box box;
  double u_value = 0.0;
  double v_value = 0.0;
  std::vector<std::size_t> cells; // flat grid indices covered by the box

  SimpleFunction u(const TensorGrid& grid) const;
  SimpleFunction v(const TensorGrid& grid) const;
};

/// L = sum_k v_(k) (x) u_(k), acting as Lf = sum_k <f, u_(k)> v_(k).
struct FiniteRankOperator {
  TensorGrid grid;
  ExponentTuple exponents;
  std::vector<RankOneFactorPair> factors;
};

FiniteRankOperator build_factors(const PartitionSpec& partition, const ExponentTuple& exponents);

GridFunction apply_L(const FiniteRankOperator& op, const GridFunction& f);
SimpleFunction apply_L(const FiniteRankOperator& op, const SimpleFunction& f);

struct ContractionReport {
  double max_ratio = 0.0;
  std::size_t argmax_trial = 0;
  std::string argmax_digest; // FNV-1a 64 of the argmax input values, hex
  double projection_residual = 0.0;
  std::size_t trials = 0;
  std::size_t skipped = 0;
};

/// Largest ||Lf||_{L^P_w} / ||f||_{L^P_w} over `trials` random inputs (dense
/// grid functions, random simple functions, sparse spikes), and the largest
/// relative ||Lf0 - f0|| over random functions subordinate to the partition.
ContractionReport contraction_certificate(const FiniteRankOperator& op, const PartitionSpec& partition,
                                          const WeightField& weight, std::size_t trials,
                                          std::uint64_t seed);

/// ( ||<f, u_(k)>||_{l^{p_n}}, ||<v_(k), g>||_{l^{p_n'}} ).
std::pair<double, double> ell_pn_row_norms(const FiniteRankOperator& op, const GridFunction& f,
                                           const GridFunction& g);

// Random inputs shared by the certificate and the test suites.

/// Random dyadic split of [0, n) into disjoint covering intervals.
std::vector<Interval> random_dyadic_intervals(std::size_t n, SplitMix64& rng);
GridFunction random_grid_function(const TensorGrid& grid, SplitMix64& rng);
/// Independent random dyadic boxes with complex normal coefficients.
SimpleFunction random_simple_function(const TensorGrid& grid, SplitMix64& rng);
/// Random coefficient on every selected cell of the partition.
SimpleFunction random_subordinate(const PartitionSpec& partition, SplitMix64& rng);

std::string fnv1a_digest(std::span<const cplx> values);

} // namespace nucleon
