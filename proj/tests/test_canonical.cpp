#include "doctest.h"

#include <cmath>

#include "genusone/canonical.hpp"
#include "genusone/fixtures.hpp"
#include "genusone/kernels.hpp"

using namespace genusone;

TEST_CASE("canonical integral of atoms is a sum of kernels") {
  const PlanarMeasure mu({{{1.0, -1.0}, 2.0}, {{-0.5, 3.0}, 0.25}});
  for (Complex z : {Complex(0.3, 0.2), Complex(-4.0, 1.0), Complex(2.0, -2.5)}) {
    const double want = 2.0 * kernel_H(z / Complex(1.0, -1.0)) + 0.25 * kernel_H(z / Complex(-0.5, 3.0));
    CHECK(eval_canonical(mu, z) == doctest::Approx(want).epsilon(1e-14));
  }
  CHECK(eval_canonical(mu, Complex(1.0, -1.0)) == -kInf);
  CHECK(eval_canonical(mu, Complex(0.0, 0.0)) == 0.0);
}

TEST_CASE("canonical integral requires a genus-one measure") {
  const PlanarMeasure mu({}, {LineDensity{1.0, kInf, {0.0, 1.0}, 0.0}});
  CHECK_THROWS_AS(eval_canonical(mu, Complex(0.5, 0.5)), DomainError);
}

TEST_CASE("u_p constant from the normal-derivative jump") {
  // mpmath oracle, p = 1.5
  CHECK(fixture_up(1.5).c_p == doctest::Approx(0.33761861855891477608).epsilon(1e-15));
}

TEST_CASE("canonical integral of the u_p density reproduces u_p") {
  for (double p : {1.1, 1.25, 1.5, 1.75, 1.9}) {
    const UpFixture up = fixture_up(p);
    const PlanarMeasure mu = up.measure();
    for (Complex z : {Complex(0.5, 0.5), Complex(-2.0, 1.0), Complex(3.0, -4.0), Complex(0.0, 10.0),
                      Complex(-7.0, 0.0)}) {
      const double scale = std::pow(std::abs(z), p);
      CHECK(std::abs(eval_canonical(mu, z) - up(z)) <= 1e-6 * scale);
    }
  }
}

TEST_CASE("u_p truncation bound holds") {
  const UpFixture up = fixture_up(1.5, 50.0);
  const PlanarMeasure cut = up.truncated_measure();
  for (Complex z : {Complex(1.0, 1.0), Complex(-3.0, 0.5), Complex(0.0, -4.0)}) {
    CHECK(std::abs(eval_canonical(cut, z) - up(z)) <= up.truncation_bound(std::abs(z)));
  }
}

TEST_CASE("u_p closed form is nonpositive on the real axis") {
  for (double p : {1.25, 1.5, 1.75})
    for (double x : {-10.0, -1.0, -0.1, 0.1, 1.0, 10.0}) CHECK(fixture_up(p)(Complex(x, 0.0)) <= 1e-14);
}

TEST_CASE("principal value on a symmetric segment matches its closed form") {
  for (double a : {0.3, 1.0, 4.0}) {
    const double c = 0.8;
    const PlanarMeasure mu({}, {LineDensity{-a, a, {c}, 0.0}});
    CHECK_FALSE(mu.genus_one());
    for (Complex z : {Complex(0.2, 0.5), Complex(-3.0, 1.0), Complex(6.0, -2.0)})
      CHECK(eval_canonical_pv(mu, z) == doctest::Approx(segment_canonical(c, a, z)).epsilon(1e-7));
  }
}

TEST_CASE("principal-value ladders") {
  SUBCASE("balanced ladder converges") {
    const PvLadder l = pv_ladder(quad_ladder(0.5, 0.5, 0.3, 36), Complex(0.7, 0.4));
    CHECK(l.cauchy);
    CHECK(l.eps.size() == l.partial_sums.size());
  }
  SUBCASE("one-sided ladder is rejected") {
    CHECK_THROWS_AS(eval_canonical_pv(one_sided_ladder(0.5, 36), Complex(0.7, 0.4)), HypothesisError);
  }
  SUBCASE("genus-one measures give the ordinary integral") {
    const PlanarMeasure mu({{{1.0, -1.0}, 1.0}, {{2.0, 0.5}, 1.5}});
    const Complex z(0.4, 0.9);
    CHECK(eval_canonical_pv(mu, z) == doctest::Approx(eval_canonical(mu, z)).epsilon(1e-10));
  }
}

TEST_CASE("logarithmic determinants") {
  const MeasuredFunction f = MeasuredFunction::complex_valued({{0.5, 1.0}, {-2.0, 0.25}}, {1.0, 0.5});
  const Complex z(0.3, -0.7);
  CHECK(logdet_complex(f, z) == doctest::Approx(kernel_H(z * Complex(0.5, 1.0)) +
                                                0.5 * kernel_H(z * Complex(-2.0, 0.25)))
                                    .epsilon(1e-14));
}

TEST_CASE("vector determinant equals the surrogate on the real axis") {
  Rng rng(41);
  std::vector<double> flat, w;
  for (int k = 0; k < 30; ++k) {
    for (int j = 0; j < 4; ++j) flat.push_back(rng.uniform(-2.0, 2.0));
    w.push_back(rng.uniform(0.1, 1.0));
  }
  const MeasuredFunction fn = MeasuredFunction::vector_valued(4, flat, w);
  const MeasuredFunction s = surrogate_complexify(fn);
  for (int k = 0; k < 4; ++k) {
    const double d = std::hypot(flat[4 * k + 1], std::hypot(flat[4 * k + 2], flat[4 * k + 3]));
    CHECK(s.values()[k].real() == flat[4 * k]);
    CHECK(s.values()[k].imag() == doctest::Approx(d).epsilon(1e-15));
  }
  for (double x : {-3.0, -0.4, 0.1, 0.9, 5.0})
    CHECK(logdet_vector(fn, x) == doctest::Approx(logdet_complex(s, Complex(x, 0.0))).epsilon(1e-12));
}
