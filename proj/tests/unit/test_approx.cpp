#include <cmath>
#include <vector>

#include "doctest.h"
#include "nucleon/approx.hpp"
#include "nucleon/error.hpp"
#include "nucleon/mixed_norm.hpp"

using namespace nucleon;

namespace {

double rel_diff(const GridFunction& a, const GridFunction& b, const ExponentTuple& P) {
  std::vector<cplx> d(a.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.values[i] - b.values[i];
  return mixed_norm(GridFunction(a.grid, d), P) / std::max(1e-300, mixed_norm(b, P));
}

// Dyadic intervals of length 2^level covering [0, n).
std::vector<Interval> dyadic(std::size_t n, std::size_t len) {
  std::vector<Interval> out;
  for (std::size_t lo = 0; lo < n; lo += len) out.push_back({lo, std::min(n, lo + len)});
  return out;
}

} // namespace

TEST_CASE("factor values") {
  SUBCASE("unit box") {
    const TensorGrid g({Axis::unit_cells(1)});
    const auto op = build_factors(PartitionSpec(g, {{{0, 1}}}), ExponentTuple({3.0}));
    REQUIRE(op.factors.size() == 1);
    CHECK(op.factors[0].u_value == doctest::Approx(1.0));
    CHECK(op.factors[0].v_value == doctest::Approx(1.0));
  }
  SUBCASE("box of measure m in L2") {
    const TensorGrid g({Axis::cells({0.5, 1.5, 2.0})});
    const auto op = build_factors(PartitionSpec(g, {{{0, 2}, {2, 3}}}), ExponentTuple({2.0}));
    CHECK(op.factors[0].u_value == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(op.factors[0].v_value == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(op.factors[1].u_value == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  }
  SUBCASE("mixed exponents (1, 2) on a 2 x 3 box") {
    const TensorGrid g({Axis::cells({2.0}), Axis::cells({3.0})});
    const auto op = build_factors(PartitionSpec(g, {{{0, 1}}, {{0, 1}}}), ExponentTuple({1.0, 2.0}));
    CHECK(op.factors[0].u_value == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(op.factors[0].v_value == doctest::Approx(1.0 / (2.0 * std::sqrt(3.0))).epsilon(1e-15));
  }
  SUBCASE("gamma scales u up and v down") {
    const TensorGrid g({Axis::unit_cells(2)});
    const auto op = build_factors(PartitionSpec(g, {{{0, 2}}}, {}, {4.0}), ExponentTuple({2.0}));
    CHECK(op.factors[0].u_value == doctest::Approx(4.0 / std::sqrt(2.0)));
    CHECK(op.factors[0].v_value == doctest::Approx(0.25 / std::sqrt(2.0)));
  }
}

TEST_CASE("partition validation") {
  const TensorGrid g({Axis::unit_cells(4)});
  CHECK_THROWS_AS(PartitionSpec(g, {{{0, 2}, {1, 3}}}), ValidationError);
  CHECK_THROWS_AS(PartitionSpec(g, {{{0, 5}}}), ValidationError);
  CHECK_THROWS_AS(PartitionSpec(g, {{{2, 2}}}), ValidationError);
  CHECK_THROWS_AS(PartitionSpec(g, {{{0, 2}}}, {{0}, {0}}), ValidationError);
  CHECK_THROWS_AS(PartitionSpec(g, {{{0, 2}}}, {}, {1.0, 2.0}), ValidationError);
}

TEST_CASE("L on simple inputs") {
  const TensorGrid g({Axis::cells({1.0, 0.5, 0.5, 2.0}), Axis::cells({1.0, 3.0, 1.0})});
  const ExponentTuple P({1.5, 3.0});
  const PartitionSpec part(g, {{{0, 1}, {1, 3}, {3, 4}}, {{0, 2}, {2, 3}}}, {{0, 0}, {1, 1}, {2, 0}});
  const auto op = build_factors(part, P);
  SplitMix64 rng(11);

  SUBCASE("subordinate functions are fixed") {
    for (int t = 0; t < 20; ++t) {
      const SimpleFunction f = random_subordinate(part, rng);
      const GridFunction fg = f.to_grid();
      CHECK(rel_diff(apply_L(op, fg), fg, P) < 1e-14);
      CHECK(rel_diff(apply_L(op, f).to_grid(), fg, P) < 1e-14);
      CHECK(mixed_norm(apply_L(op, fg), P) / mixed_norm(fg, P) == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
  SUBCASE("functions outside the selection are annihilated") {
    GridFunction f = GridFunction::zeros(g);
    f.values[0 + 4 * 2] = cplx(3.0, 1.0); // box (0, 1) is not selected
    for (const cplx& z : apply_L(op, f).values) CHECK(z == cplx(0.0));
  }
  SUBCASE("half a box averages to one half") {
    // Box (1, 1) is axis-0 cells 1..2 (measures 0.5, 0.5) by axis-1 cell 2.
    GridFunction f = GridFunction::zeros(g);
    f.values[1 + 4 * 2] = 1.0;
    const GridFunction lf = apply_L(op, f);
    CHECK(std::abs(lf.values[1 + 4 * 2] - 0.5) < 1e-15);
    CHECK(std::abs(lf.values[2 + 4 * 2] - 0.5) < 1e-15);
    CHECK(std::abs(lf.values[0]) == 0.0);
  }
  SUBCASE("L is idempotent") {
    for (int t = 0; t < 20; ++t) {
      const GridFunction f = random_grid_function(g, rng);
      const GridFunction lf = apply_L(op, f);
      CHECK(rel_diff(apply_L(op, lf), lf, P) < 1e-14);
    }
  }
}

TEST_CASE("contraction certificate") {
  SplitMix64 rng(12);
  for (const ExponentTuple& P : {ExponentTuple({1.0, 2.0}), ExponentTuple({2.0, 1.0}), ExponentTuple({3.0, 1.5})}) {
    std::vector<double> w0(12), w1(10);
    for (double& x : w0) x = rng.uniform(0.2, 2.0);
    for (double& x : w1) x = rng.uniform(0.2, 2.0);
    const TensorGrid g({Axis::cells(w0), Axis::cells(w1)});
    const PartitionSpec part(g, {random_dyadic_intervals(12, rng), random_dyadic_intervals(10, rng)});
    const auto op = build_factors(part, P);
    const auto rep = contraction_certificate(op, part, part.weight_field(), 1000, 99);
    CHECK(rep.trials == 1000);
    CHECK(rep.max_ratio <= 1.0 + 1e-10);
    CHECK(rep.projection_residual < 1e-12);
    CHECK(rep.argmax_digest.size() == 16);
    const auto again = contraction_certificate(op, part, part.weight_field(), 1000, 99);
    CHECK(again.max_ratio == rep.max_ratio);
    CHECK(again.argmax_digest == rep.argmax_digest);
  }
  SUBCASE("empty partition is the zero operator") {
    const TensorGrid g({Axis::unit_cells(4), Axis::unit_cells(4)});
    const PartitionSpec part(g, {{}, {}});
    const auto op = build_factors(part, ExponentTuple({2.0, 2.0}));
    CHECK(op.factors.empty());
    CHECK(contraction_certificate(op, part, WeightField::ones(16), 50, 1).max_ratio == 0.0);
  }
  SUBCASE("weighted partition") {
    const TensorGrid g({Axis::unit_cells(6), Axis::unit_cells(6)});
    const PartitionSpec part(g, {{{0, 3}, {3, 6}}, {{0, 2}, {2, 6}}}, {}, {0.5, 2.0, 4.0, 1.0});
    const auto op = build_factors(part, ExponentTuple({1.0, 2.0}));
    const auto rep = contraction_certificate(op, part, part.weight_field(), 300, 5);
    CHECK(rep.max_ratio <= 1.0 + 1e-10);
    CHECK(rep.projection_residual < 1e-12);
  }
}

TEST_CASE("coefficient sequences on separated selections") {
  SplitMix64 rng(13);
  const TensorGrid g({Axis::cells({1.0, 2.0, 0.5, 1.5, 1.0}), Axis::cells({0.5, 1.0, 2.0, 1.0})});
  // Distinct axis-1 interval per cell keeps the boxes separated at the last level.
  const PartitionSpec part(g, {{{0, 2}, {2, 5}}, {{0, 1}, {1, 3}, {3, 4}}}, {{0, 0}, {1, 1}, {0, 2}});
  for (const ExponentTuple& P : {ExponentTuple({1.0, 2.0}), ExponentTuple({2.5, 1.5}), ExponentTuple({2.0, 2.0})}) {
    const auto op = build_factors(part, P);
    const GridFunction zero = GridFunction::zeros(g);
    const auto z = ell_pn_row_norms(op, zero, zero);
    CHECK(z.first == 0.0);
    CHECK(z.second == 0.0);
    const GridFunction s = random_subordinate(part, rng).to_grid();
    CHECK(ell_pn_row_norms(op, s, s).first == doctest::Approx(mixed_norm(s, P)).epsilon(1e-13));
    for (int t = 0; t < 200; ++t) {
      const GridFunction f = random_grid_function(g, rng);
      const GridFunction h = random_grid_function(g, rng);
      const auto [a, b] = ell_pn_row_norms(op, f, h);
      CHECK(a <= (1.0 + 1e-12) * mixed_norm(f, P));
      CHECK(b <= (1.0 + 1e-12) * mixed_norm(h, P.dual()));
    }
  }
}

TEST_CASE("dyadic refinement improves the L2 approximation of a smooth function") {
  const std::size_t n = 64;
  const TensorGrid g({Axis::uniform(0.0, 1.0, n), Axis::uniform(0.0, 1.0, n)});
  std::vector<cplx> v(g.size());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const double x = g.axis(0).points[i], y = g.axis(1).points[j];
      v[i + n * j] = std::sin(3.0 * x) * std::exp(y) + cplx(0.0, x * y);
    }
  }
  const GridFunction f(g, v);
  const ExponentTuple P({2.0, 2.0});
  double previous = std::numeric_limits<double>::infinity();
  for (std::size_t len = n; len >= 1; len /= 2) {
    const auto op = build_factors(PartitionSpec(g, {dyadic(n, len), dyadic(n, len)}), P);
    const double err = rel_diff(apply_L(op, f), f, P);
    CHECK(err <= previous + 1e-15);
    previous = err;
  }
  CHECK(previous < 1e-14);
}

TEST_CASE("digest is stable") {
  const std::vector<cplx> v{cplx(1.0, 2.0), cplx(-0.5, 0.0)};
  CHECK(fnv1a_digest(v) == fnv1a_digest(v));
  CHECK(fnv1a_digest(v) != fnv1a_digest(std::vector<cplx>{cplx(1.0, 2.0)}));
}
