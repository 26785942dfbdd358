#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "nucleon/error.hpp"
#include "nucleon/exponents.hpp"
#include "nucleon/mixed_norm.hpp"
#include "nucleon/random.hpp"

using namespace nucleon;

namespace {

// Independent oracle for n = 2: explicit nested loops, no shared reduction code.
double nested2(const GridFunction& f, double p1, double p2, const std::vector<double>& w) {
  const Axis& a0 = f.grid.axis(0);
  const Axis& a1 = f.grid.axis(1);
  double outer = 0.0;
  for (std::size_t j = 0; j < a1.size(); ++j) {
    double inner = 0.0;
    for (std::size_t i = 0; i < a0.size(); ++i) {
      const std::size_t idx = i + a0.size() * j;
      inner += std::pow(std::abs(f.values[idx]) * w[idx], p1) * a0.measures[i];
    }
    outer += std::pow(inner, p2 / p1) * a1.measures[j];
  }
  return std::pow(outer, 1.0 / p2);
}

// n = 3 oracle.
double nested3(const GridFunction& f, const std::vector<double>& p) {
  const std::size_t n0 = f.grid.axis(0).size(), n1 = f.grid.axis(1).size(), n2 = f.grid.axis(2).size();
  double s2 = 0.0;
  for (std::size_t k = 0; k < n2; ++k) {
    double s1 = 0.0;
    for (std::size_t j = 0; j < n1; ++j) {
      double s0 = 0.0;
      for (std::size_t i = 0; i < n0; ++i) {
        s0 += std::pow(std::abs(f.values[i + n0 * (j + n1 * k)]), p[0]) * f.grid.axis(0).measures[i];
      }
      s1 += std::pow(s0, p[1] / p[0]) * f.grid.axis(1).measures[j];
    }
    s2 += std::pow(s1, p[2] / p[1]) * f.grid.axis(2).measures[k];
  }
  return std::pow(s2, 1.0 / p[2]);
}

TensorGrid random_grid(SplitMix64& rng, std::size_t dims, std::size_t max_cells) {
  std::vector<Axis> axes;
  for (std::size_t d = 0; d < dims; ++d) {
    std::vector<double> w(2 + rng.below(max_cells - 1));
    for (double& x : w) x = rng.uniform(0.2, 2.0);
    axes.push_back(Axis::cells(w));
  }
  return TensorGrid(axes);
}

GridFunction random_function(const TensorGrid& grid, SplitMix64& rng) {
  std::vector<cplx> v(grid.size());
  for (auto& z : v) z = rng.complex_normal();
  return GridFunction(grid, v);
}

} // namespace

TEST_CASE("dual exponents") {
  CHECK(dual_exponents(ExponentTuple({2, 2})).values() == std::vector<double>{2, 2});
  const ExponentTuple d = dual_exponents(ExponentTuple({1, 4}));
  CHECK(d.is_infinite(0));
  CHECK(d[1] == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  const ExponentTuple e = dual_exponents(ExponentTuple({1.5, 3}));
  CHECK(e[0] == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(e[1] == doctest::Approx(1.5).epsilon(1e-15));
  SplitMix64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const ExponentTuple p({rng.uniform(1.0, 10.0), 1.0, rng.uniform(1.0, 3.0)});
    CHECK(p.dual().dual() == p);
    const ExponentTuple q = p.dual();
    for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(p.reciprocal(j) + q.reciprocal(j) - 1.0) < 1e-15);
  }
  CHECK_THROWS_AS(ExponentTuple({0.5, 2}), ValidationError);
  CHECK_THROWS_AS(ExponentTuple({ExponentTuple::infinity}), ValidationError);
  CHECK_THROWS_AS(ExponentTuple({std::nan("")}), ValidationError);
}

TEST_CASE("mixed norm examples") {
  const TensorGrid unit({Axis::unit_cells(3), Axis::unit_cells(3)});
  const SimpleFunction box(unit, {Box{{{1, 2}, {0, 1}}}}, {cplx(1)});
  for (auto p : {std::vector<double>{1, 1}, {1, 2}, {3, 1.5}, {2, 7}}) {
    CHECK(mixed_norm(box, ExponentTuple(p)) == doctest::Approx(1.0).epsilon(1e-15));
  }
  // Boxes A, B of unit measure separated along axis 1, coefficients 1 and 2.
  const SimpleFunction two(unit, {Box{{{0, 1}, {0, 1}}}, Box{{{0, 1}, {1, 2}}}}, {cplx(1), cplx(2)});
  CHECK(mixed_norm(two, ExponentTuple({1, 2})) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
  CHECK(simple_norm_closed_form(two, ExponentTuple({1, 2})) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
  // One box with gamma = 4 on a unit box, P = (2, 2).
  const SimpleFunction one(unit, {Box{{{0, 1}, {0, 1}}}}, {cplx(1)});
  const std::vector<double> g4{4.0};
  CHECK(simple_norm_closed_form(one, ExponentTuple({2, 2}), g4) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(mixed_norm(one, ExponentTuple({2, 2}), elementary_weight(unit, one.boxes, g4)) ==
        doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("closed form rejects layouts that are not separated") {
  const TensorGrid unit({Axis::unit_cells(2), Axis::unit_cells(2)});
  // Side by side along axis 0, sharing the axis-1 slice where the exponent changes.
  const SimpleFunction f(unit, {Box{{{0, 1}, {0, 1}}}, Box{{{1, 2}, {0, 1}}}}, {cplx(1), cplx(2)});
  const ExponentTuple P({1, 2});
  CHECK_FALSE(closed_form_applicable(f.boxes, P));
  CHECK_THROWS_AS(simple_norm_closed_form(f, P), ValidationError);
  CHECK(mixed_norm(f, P) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(closed_form_applicable(f.boxes, ExponentTuple({2, 2})));
}

TEST_CASE("iterated norm matches nested-loop oracles") {
  SplitMix64 rng(4);
  for (int t = 0; t < 100; ++t) {
    const TensorGrid g2 = random_grid(rng, 2, 9);
    const GridFunction f = random_function(g2, rng);
    const double p1 = rng.uniform(1.0, 5.0), p2 = rng.uniform(1.0, 5.0);
    std::vector<double> w(g2.size());
    for (double& x : w) x = rng.uniform(0.1, 3.0);
    CHECK(mixed_norm(f, ExponentTuple({p1, p2}), WeightField(w)) ==
          doctest::Approx(nested2(f, p1, p2, w)).epsilon(1e-12));
    const TensorGrid g3 = random_grid(rng, 3, 6);
    const GridFunction h = random_function(g3, rng);
    const std::vector<double> p3{rng.uniform(1.0, 4.0), rng.uniform(1.0, 4.0), rng.uniform(1.0, 4.0)};
    CHECK(mixed_norm(h, ExponentTuple(p3)) == doctest::Approx(nested3(h, p3)).epsilon(1e-12));
  }
}

TEST_CASE("equal exponents collapse to the flat p-norm") {
  SplitMix64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const TensorGrid g = random_grid(rng, 1 + rng.below(3), 7);
    const GridFunction f = random_function(g, rng);
    const double p = rng.uniform(1.0, 6.0);
    double s = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) s += std::pow(std::abs(f.values[i]), p) * g.cell_measures()[i];
    CHECK(mixed_norm(f, ExponentTuple::uniform(g.dimension(), p)) ==
          doctest::Approx(std::pow(s, 1.0 / p)).epsilon(1e-12));
  }
}

TEST_CASE("infinite dual entries take the weighted supremum") {
  const TensorGrid g({Axis::unit_cells(3), Axis::unit_cells(2)});
  const GridFunction f(g, {cplx(1), cplx(-3), cplx(2), cplx(0), cplx(4), cplx(1)});
  // sup over axis 0 per row: 3 and 4; then l^2 over axis 1.
  CHECK(mixed_norm(f, ExponentTuple({1, 2}).dual().dual()) > 0.0);
  CHECK(mixed_norm(f, ExponentTuple::with_infinite({ExponentTuple::infinity, 2})) ==
        doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("homogeneity, triangle and Hölder inequalities") {
  SplitMix64 rng(6);
  const std::vector<std::vector<double>> tuples = {{1, 2}, {2, 1}, {2, 3, 2}};
  for (const auto& p : tuples) {
    const ExponentTuple P(p);
    for (int t = 0; t < 1000; ++t) {
      const TensorGrid g = random_grid(rng, p.size(), 5);
      const GridFunction f = random_function(g, rng);
      const GridFunction h = random_function(g, rng);
      std::vector<cplx> sum(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) sum[i] = f.values[i] + h.values[i];
      CHECK(mixed_norm(GridFunction(g, sum), P) <= mixed_norm(f, P) + mixed_norm(h, P) + 1e-12);
      if (t < 100) {
        const cplx c(0.3, -2.0);
        CHECK(mixed_norm(f.scaled(c), P) == doctest::Approx(std::abs(c) * mixed_norm(f, P)).epsilon(1e-14));
      }
    }
  }
  for (int t = 0; t < 500; ++t) {
    const TensorGrid g = random_grid(rng, 2, 6);
    const GridFunction f = random_function(g, rng);
    const GridFunction h = random_function(g, rng);
    std::vector<double> w(g.size());
    for (double& x : w) x = rng.uniform(0.2, 4.0);
    const WeightField wf(w);
    const ExponentTuple P({1.0 + 3.0 * rng.uniform(), rng.uniform() < 0.3 ? 1.0 : 1.0 + 3.0 * rng.uniform()});
    const double lhs = std::abs(holder_pair(f, h));
    const double rhs = mixed_norm(f, P, wf) * mixed_norm(h, P.dual(), wf.inverse());
    CHECK(rhs - lhs >= -1e-12);
  }
}

TEST_CASE("Hölder pairing examples") {
  const TensorGrid g({Axis::unit_cells(2)});
  const GridFunction e(g, {cplx(1), cplx(0)});
  CHECK(holder_pair(e, e) == cplx(1));
  CHECK(holder_pair(e, GridFunction::zeros(g)) == cplx(0));
}

TEST_CASE("sequence mixed norm") {
  const LatticeCoefficients single(1.0, 1.0, 1, 1, {0, 0, 0, 0, cplx(3, 4), 0, 0, 0, 0}, {}, "constant:1");
  CHECK(seq_mixed_norm(single, 1.0, 2.0) == doctest::Approx(5.0));
  // 2x2 block of ones inside a 3x3 lattice, p = 1, q = 2: sqrt(2^2 + 2^2).
  const LatticeCoefficients block(1.0, 1.0, 1, 1, {1, 1, 0, 1, 1, 0, 0, 0, 0}, {}, "constant:1");
  CHECK(seq_mixed_norm(block, 1.0, 2.0) == doctest::Approx(std::sqrt(8.0)).epsilon(1e-15));
  SplitMix64 rng(7);
  std::vector<cplx> a(5 * 7);
  double flat = 0.0;
  for (auto& z : a) {
    z = rng.complex_normal();
    flat += std::pow(std::abs(z), 3.0);
  }
  const LatticeCoefficients r(0.5, 2.0, 2, 3, a, {}, "constant:1");
  CHECK(seq_mixed_norm(r, 3.0, 3.0) == doctest::Approx(std::cbrt(flat)).epsilon(1e-12));
  CHECK_THROWS_AS(LatticeCoefficients(0.0, 1.0, 0, 0, {cplx(1)}, {}, ""), ValidationError);
  CHECK_THROWS_AS(LatticeCoefficients(1.0, 1.0, 1, 0, {cplx(1)}, {}, ""), ValidationError);
}

TEST_CASE("simple function validation") {
  const TensorGrid g({Axis::unit_cells(4), Axis::unit_cells(4)});
  CHECK_THROWS_AS(SimpleFunction(g, {Box{{{0, 2}, {0, 2}}}, Box{{{1, 3}, {1, 3}}}}, {cplx(1), cplx(1)}),
                  ValidationError);
  CHECK_THROWS_AS(SimpleFunction(g, {Box{{{2, 2}, {0, 2}}}}, {cplx(1)}), ValidationError);
  CHECK_THROWS_AS(SimpleFunction(g, {Box{{{0, 5}, {0, 2}}}}, {cplx(1)}), ValidationError);
  CHECK_THROWS_AS(GridFunction(g, std::vector<cplx>(15)), ValidationError);
}

TEST_CASE("separable weights") {
  SplitMix64 rng(8);
  for (double s : {0.5, 1.0, 2.0, 3.5}) {
    const SeparableWeight v = SeparableWeight::polynomial(1, s);
    const SeparableWeight b = SeparableWeight::frequency_bracket(1, s);
    for (int t = 0; t < 1000; ++t) {
      const double x = rng.uniform(-50.0, 50.0), y = rng.uniform(-50.0, 50.0);
      const double sx[] = {x}, sy[] = {y}, sxy[] = {x + y};
      CHECK(v(sx) > 0.0);
      CHECK(v(sxy) <= std::pow(2.0, s / 2.0) * v(sx) * v(sy) * (1.0 + 1e-14));
      const double px[] = {0.0, x}, py[] = {0.0, y}, pxy[] = {0.0, x + y};
      CHECK(b(pxy) <= b(px) * b(py) * (1.0 + 1e-14));
    }
    // (1+t^2)^{s/2} is not submultiplicative with constant 1: take x = y = 1/2.
    const double h[] = {0.5}, one[] = {1.0};
    CHECK(v(one) > v(h) * v(h));
  }
  const SeparableWeight b = SeparableWeight::frequency_bracket(1, 1.5);
  const double pt[] = {7.0, -3.0};
  CHECK(b(pt) == doctest::Approx(std::pow(4.0, 1.5)));
  CHECK(b.inverse()(pt) * b(pt) == doctest::Approx(1.0));
  CHECK_THROWS_AS(SeparableWeight::constant(2, 0.0).on(TensorGrid({Axis::unit_cells(2), Axis::unit_cells(2)})),
                  ValidationError);
}
