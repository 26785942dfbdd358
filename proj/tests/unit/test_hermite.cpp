#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "nucleon/error.hpp"
#include "nucleon/hermite.hpp"

using namespace nucleon;
using std::numbers::pi;

TEST_CASE("Hermite function values") {
  const double c = std::pow(pi, -0.25);
  CHECK(hermite_function(0, 0.0) == doctest::Approx(c).epsilon(1e-15));
  CHECK(hermite_function(1, 0.0) == 0.0);
  for (double x : {-3.1, -0.4, 0.0, 0.7, 2.2, 5.0}) {
    const double g = c * std::exp(-x * x / 2.0);
    CHECK(hermite_function(2, x) == doctest::Approx(g * (2 * x * x - 1) / std::sqrt(2.0)).epsilon(1e-13));
    CHECK(hermite_function(3, x) == doctest::Approx(g * (2 * x * x * x - 3 * x) / std::sqrt(3.0)).epsilon(1e-13));
  }
  for (double x : {0.0, 1.0, 10.0, 28.0, 40.0, 200.0}) {
    const double v = hermite_function(kMaxHermiteIndex, x);
    CHECK(std::isfinite(v));
    CHECK(std::abs(v) < 1.0);
  }
  CHECK(hermite_function(kMaxHermiteIndex, 200.0) == 0.0);
  CHECK_THROWS_AS(hermite_function(-1, 0.0), ValidationError);
  CHECK_THROWS_AS(hermite_function(kMaxHermiteIndex + 1, 0.0), ValidationError);
}

TEST_CASE("table rows match pointwise evaluation") {
  const std::vector<double> pts{-2.0, 0.3, 4.5};
  const auto t = hermite_table(6, pts);
  REQUIRE(t.size() == 21);
  for (int k = 0; k <= 6; ++k) {
    for (std::size_t i = 0; i < 3; ++i) CHECK(t[std::size_t(k) * 3 + i] == hermite_function(k, pts[i]));
  }
}

TEST_CASE("orthonormality and the eigen equation") {
  const HermiteSystem sys(1, 40, 0.02);
  CHECK(gram_error(sys, 40) < 1e-12);
  double s = 0.0;
  const GridFunction phi3 = sys.function(3);
  for (std::size_t i = 0; i < phi3.size(); ++i) s += std::norm(phi3.values[i]) * sys.grid().cell_measures()[i];
  CHECK(s == doctest::Approx(1.0).epsilon(1e-13));
  for (int k : {0, 1, 5, 20}) {
    const double coarse = eigen_residual(k, 0.02), fine = eigen_residual(k, 0.01);
    CHECK(fine < 1e-5);
    CHECK(coarse / fine > 12.0); // fourth-order difference: halving h gains about 16
  }
  const HermiteSystem two(2, 6, 0.1);
  CHECK(gram_error(two, two.size()) < 1e-10);
}

TEST_CASE("eigenvalues and enumeration") {
  CHECK(eigenvalue(std::vector<int>{0}) == 1.0);
  CHECK(eigenvalue(std::vector<int>{1, 2}) == 8.0);
  const auto idx = enumerate_indices(2, 2);
  CHECK(idx == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  const auto big = enumerate_indices(3, 4);
  CHECK(big.size() == 64);
  for (std::size_t j = 1; j < big.size(); ++j) CHECK(eigenvalue(big[j - 1]) <= eigenvalue(big[j]));
  const HermiteSystem sys(1, 10, 0.1);
  CHECK(sys.eigenvalue(9) == 19.0);
  CHECK(sys.grid().axis(0).points.back() == doctest::Approx(std::sqrt(19.0) + 6.0).epsilon(0.01));
}

TEST_CASE("spectral functions") {
  CHECK(SpectralFunction::power(2)(3.0) == doctest::Approx(1.0 / 9.0));
  CHECK(SpectralFunction::exp(0.5)(4.0) == doctest::Approx(std::exp(-2.0)));
  const SpectralFunction t = SpectralFunction::table({{1.0, 0.5}, {3.0, 0.25}});
  CHECK(t(3.0) == 0.25);
  CHECK_THROWS_AS(t(5.0), ValidationError);
  CHECK_THROWS_AS(SpectralFunction::power(0), ValidationError);
  CHECK_THROWS_AS(SpectralFunction::exp(-1.0), ValidationError);
  CHECK(SpectralFunction::power(3).tag() == "power:-3");
}

TEST_CASE("spectral representation") {
  const HermiteSystem sys(1, 8, 0.05);
  CHECK(spectral_rep(SpectralFunction::exp(1.0), sys, 0).rank() == 0);
  const NuclearRep rep = spectral_rep(SpectralFunction::exp(1.0), sys, 8);
  CHECK(rep.self_adjoint);
  for (std::size_t j = 0; j < 8; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < sys.grid().size(); ++i) {
      s += std::norm(rep.terms[j].first.values[i]) * sys.grid().cell_measures()[i];
    }
    CHECK(std::sqrt(s) == doctest::Approx(std::exp(-(2.0 * double(j) + 1.0))).epsilon(1e-12));
  }
  CHECK_THROWS_AS(spectral_rep(SpectralFunction::exp(1.0), sys, 9), ValidationError);
}

TEST_CASE("spectral traces") {
  SUBCASE("heat trace brackets the closed form") {
    for (double t : {0.1, 1.0, 3.0}) {
      const TraceEstimate e = trace_F(SpectralFunction::exp(t), 1, 30);
      const double exact = 1.0 / (2.0 * std::sinh(t));
      CHECK(e.value <= exact);
      CHECK(e.value + e.tail_bound >= exact * (1.0 - 1e-14));
      CHECK(e.terms == 30);
    }
    const TraceEstimate e2 = trace_F(SpectralFunction::exp(1.0), 2, 40);
    CHECK(e2.value == doctest::Approx(std::pow(1.0 / (2.0 * std::sinh(1.0)), 2.0)).epsilon(1e-14));
  }
  SUBCASE("inverse square in one dimension") {
    const TraceEstimate e = trace_F(SpectralFunction::power(2), 1, 500);
    const double exact = pi * pi / 8.0;
    CHECK(e.value < exact);
    CHECK(e.value + e.tail_bound >= exact);
    CHECK(e.tail_bound < 5e-4);
  }
  SUBCASE("inverse cube in two dimensions") {
    // sum over k1, k2 of (2 k1 + 2 k2 + 2)^{-3} = (1/8) sum_m (m + 1)^{-2}.
    const TraceEstimate e = trace_F(SpectralFunction::power(3), 2, 200);
    const double exact = pi * pi / 48.0;
    CHECK(e.value < exact);
    CHECK(e.value + e.tail_bound >= exact);
  }
  SUBCASE("power series that diverge are rejected") {
    CHECK_THROWS_AS(trace_F(SpectralFunction::power(1), 1, 10), ValidationError);
    CHECK_THROWS_AS(trace_F(SpectralFunction::power(2), 2, 10), ValidationError);
  }
  SUBCASE("tables") {
    std::vector<std::pair<double, double>> decaying, flat;
    for (int k = 0; k < 20; ++k) {
      decaying.emplace_back(2 * k + 1, std::pow(2.0 * k + 1.0, -3.0));
      flat.emplace_back(2 * k + 1, 1.0);
    }
    const TraceEstimate e = trace_F(SpectralFunction::table(decaying), 1, 20);
    double exact = 0.0;
    for (int k = 0; k < 200000; ++k) exact += std::pow(2.0 * k + 1.0, -3.0);
    CHECK(e.value + e.tail_bound >= exact * (1.0 - 1e-12));
    CHECK(e.tail_bound < 1e-3);
    CHECK_THROWS_AS(trace_F(SpectralFunction::table(flat), 1, 20), NumericalError);
  }
}

TEST_CASE("nuclearity criterion") {
  const HermiteSystem sys(1, 10, 0.05);
  const Window g = Window::gaussian(sys.grid().axis(0));
  const TensorGrid tf({Axis::uniform(-12.0, 12.0, 97), Axis::uniform(-12.0, 12.0, 97)});
  SUBCASE("zero symbol") {
    std::vector<std::pair<double, double>> zeros;
    for (int k = 0; k < 10; ++k) zeros.emplace_back(2 * k + 1, 0.0);
    const auto rep = nuclearity_criterion(SpectralFunction::table(zeros), 1.0, 0.0, 2.0, 2.0, sys, g, 6, tf);
    for (const auto& row : rep.rows) CHECK(row.partial_sum == 0.0);
    CHECK(rep.monotone);
  }
  SUBCASE("L2 terms follow the heat decay") {
    const auto rep = nuclearity_criterion(SpectralFunction::exp(1.0), 1.0, 0.0, 2.0, 2.0, sys, g, 8, tf);
    REQUIRE(rep.rows.size() == 8);
    CHECK(rep.monotone);
    for (const auto& row : rep.rows) {
      CHECK(row.norm == doctest::Approx(std::sqrt(2.0 * pi)).epsilon(1e-3));
      CHECK(row.dual_norm == doctest::Approx(std::sqrt(2.0 * pi)).epsilon(1e-3));
    }
    for (std::size_t j = 1; j < 8; ++j) {
      CHECK(rep.rows[j].term / rep.rows[j - 1].term == doctest::Approx(std::exp(-2.0)).epsilon(0.01));
      CHECK(rep.rows[j].partial_sum >= rep.rows[j - 1].partial_sum);
    }
    CHECK(rep.flatness == doctest::Approx(std::exp(-2.0)).epsilon(0.01));
  }
  SUBCASE("weighted norms stay monotone") {
    const auto rep = nuclearity_criterion(SpectralFunction::power(2), 0.5, 1.0, 1.0, 2.0, sys, g, 8, tf);
    CHECK(rep.monotone);
    for (const auto& row : rep.rows) CHECK(row.norm > 0.0);
  }
}
