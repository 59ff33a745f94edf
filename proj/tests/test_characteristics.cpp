#include "doctest.h"

#include <cmath>

#include "genusone/canonical.hpp"
#include "genusone/characteristics.hpp"
#include "genusone/fixtures.hpp"

using namespace genusone;

namespace {

SubharmonicField atom_field(Complex zeta) {
  return SubharmonicField::from_measure(PlanarMeasure({{zeta, 1.0}}));
}

// delta(t) = t on [1, 2], zero elsewhere.
RadialCurve ramp_delta() {
  const double e = 1e-13;
  return RadialCurve("delta", {0.01, 1.0 - e, 1.0, 2.0, 2.0 + e, 100.0}, {0.0, 0.0, 1.0, 2.0, 0.0, 0.0});
}

}  // namespace

TEST_CASE("max modulus of a single atom") {
  // mpmath oracle: maximum 1/8 at cos(theta) = 1/4
  CHECK(max_modulus(atom_field(Complex(2.0, 0.0)), 1.0) == doctest::Approx(0.125).epsilon(1e-9));
}

TEST_CASE("Nevanlinna characteristic of u_p") {
  const UpFixture up = fixture_up(1.5);
  const SubharmonicField f("u_p", [up](Complex z) { return up(z); });
  // mpmath oracle, equal to 2 / (p pi)
  CHECK(nevanlinna_T(f, 1.0) == doctest::Approx(0.42441318157838756205).epsilon(1e-10));
  CHECK(nevanlinna_T(f, 4.0) == doctest::Approx(0.42441318157838756205 * 8.0).epsilon(1e-10));
}

TEST_CASE("Tsuji characteristics of a single atom") {
  const TsujiPair tp = tsuji_characteristics(atom_field(Complex(0.4, -1.1)), 2.0);
  // mpmath oracle
  CHECK(tp.T == doctest::Approx(0.3808691663715908887).epsilon(1e-9));
  CHECK(tp.m == doctest::Approx(0.077949458342393808413).epsilon(1e-9));
}

TEST_CASE("Tsuji first main theorem on random atomic fixtures") {
  for (const auto& f : atomic_fixtures(20, 1)) {
    for (double r : {0.2, 1.0, 2.154, 2.929, 3.981, 9.0}) {
      const TsujiPair tp = tsuji_characteristics(f.field, r);
      const double rhs = tp.m + levin_rhs(f.mu, r);
      CHECK(std::abs(tp.T - rhs) <= 1e-8 * std::max(1.0, tp.T));
    }
  }
}

TEST_CASE("Levin and Carleman identities") {
  for (const auto& f : atomic_fixtures(5, 3)) {
    const double R = f.R;
    CHECK(levin_lhs(f.field, R) == doctest::Approx(levin_rhs(f.mu, R)).epsilon(1e-8));
    CHECK(carleman_lhs(f.field, R) == doctest::Approx(carleman_rhs(f.mu, R)).epsilon(1e-8));
  }
}

TEST_CASE("Tsuji integrand that is not integrable is rejected") {
  // |z| = r sin(theta) on the tangent circle, so the integrand is 1/sin(theta).
  const SubharmonicField f("modulus", [](Complex z) { return std::abs(z); });
  CHECK_THROWS_AS(tsuji_characteristics(f, 1.0), HypothesisError);
}

TEST_CASE("delta star against the oracle") {
  const RadialCurve d = ramp_delta();
  CHECK(delta_star(d, 0.5) == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(delta_star(d, 1.5) == doctest::Approx(1.0345553306539930296).epsilon(1e-10));
  CHECK(delta_star(d, 3.0) == doctest::Approx(2.0794415416798359283).epsilon(1e-10));
}

TEST_CASE("delta star rejects divergent integrals") {
  std::vector<double> r = log_grid(0.01, 100.0, 8), v;
  for (double t : r) v.push_back(t);
  CHECK_THROWS_AS(delta_star(RadialCurve("linear", r, v), 1.0), HypothesisError);
}

TEST_CASE("delta star doubling") {
  const RadialCurve d = ramp_delta();
  for (double r = 0.05; r < 50.0; r *= 1.4) {
    const double a = delta_star(d, r), b = delta_star(d, 2.0 * r);
    CHECK(a <= b * (1 + 1e-12));
    CHECK(b <= 4.0 * a * (1 + 1e-12));
  }
}

TEST_CASE("radial curves") {
  const std::vector<double> grid = log_grid(1e-2, 1e2, 4);
  CHECK(grid.size() == 17);
  CHECK(grid.front() == doctest::Approx(1e-2));
  CHECK(grid.back() == doctest::Approx(1e2));
  std::vector<double> v;
  for (double t : grid) v.push_back(t * t);
  const RadialCurve c("sq", grid, v);
  CHECK(c.left_tail().exponent == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(c(1e3) == doctest::Approx(1e6).epsilon(1e-10));
  CHECK(c.nondecreasing());
  CHECK(curve_integral(RadialCurve("one", grid, std::vector<double>(grid.size(), 1.0)), 1.0, 2.0, -2.0) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(require_coverage(c, 50.0), DomainError);
  CHECK_NOTHROW(require_coverage(c, 1.0));
}

TEST_CASE("counting curves are nondecreasing and M bounds T") {
  const auto f = atomic_fixtures(3, 2)[2];
  const std::vector<double> grid = log_grid(0.1, 10.0, 4);
  CHECK(curve_mu(f.mu, grid).nondecreasing());
  CHECK(curve_n(f.mu, grid).nondecreasing());
  const RadialCurve M = curve_M(f.field, grid), T = curve_T(f.field, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(T.values()[i] <= M.values()[i] + 1e-9);
    CHECK(T.values()[i] >= 0.0);
  }
}
