#pragma once

#include <span>

#include "nucleon/exponents.hpp"
#include "nucleon/grid.hpp"
#include "nucleon/lattice.hpp"
#include "nucleon/simple_function.hpp"
#include "nucleon/weight.hpp"

namespace nucleon {

// Weighted mixed norms
//
//   ||f||_{L^P_w} = ( int_{x_n} ... ( int_{x_1} (|f| w)^{p_1} dmu_1 )^{p_2/p_1} ... dmu_n )^{1/p_n}
//
// integrated axis 0 first. Infinite entries (only present in dual tuples) take
// the supremum of |f| w over that axis. Sums are Kahan-compensated in a fixed
// order, so results are reproducible run to run.

/// Core reduction on precomputed magnitudes |f| * w in grid flat order.
double iterated_norm(std::span<const double> magnitudes, const TensorGrid& grid,
                     const ExponentTuple& exponents);

double mixed_norm(const GridFunction& f, const ExponentTuple& exponents, const WeightField& weight);
double mixed_norm(const GridFunction& f, const ExponentTuple& exponents,
                  const SeparableWeight& weight);
double mixed_norm(const GridFunction& f, const ExponentTuple& exponents);
double mixed_norm(const SimpleFunction& f, const ExponentTuple& exponents,
                  const WeightField& weight);
double mixed_norm(const SimpleFunction& f, const ExponentTuple& exponents);

/// ( sum_l ( sum_k |a_kl|^p w(alpha k, beta l)^p )^{q/p} )^{1/q}.
double seq_mixed_norm(const LatticeCoefficients& a, double p, double q);

/// Duality pairing sum f g dmu (bilinear).
cplx holder_pair(const GridFunction& f, const GridFunction& g);

/// True when every pair of boxes is disjoint along some axis m with
/// p_m = p_{m+1} = ... = p_n. On such layouts the iterated norm of a simple
/// function collapses to a single sum over boxes.
bool closed_form_applicable(std::span<const Box> boxes, const ExponentTuple& exponents);

/// ( sum_k |lambda_k|^{p_n} gamma_k^{p_n} prod_j mu_j(B_k^j)^{p_n/p_j} )^{1/p_n}
/// for f weighted by the elementary weight gamma_k on box k. Equals
/// mixed_norm(f, P, elementary_weight(...)) whenever closed_form_applicable holds;
/// throws ValidationError otherwise or when gammas are not aligned with the boxes.
double simple_norm_closed_form(const SimpleFunction& f, const ExponentTuple& exponents,
                               std::span<const double> gammas);
double simple_norm_closed_form(const SimpleFunction& f, const ExponentTuple& exponents);

} // namespace nucleon
