#include "doctest.h"

#include <cmath>

#include "genusone/canonical.hpp"
#include "genusone/fixtures.hpp"
#include "genusone/jensen.hpp"

using namespace genusone;

TEST_CASE("uniform circle potential") {
  const JensenMeasure s = JensenMeasure::uniform_circle(64);
  // mpmath oracle: (1/64) log|1 - 2^-64|, below double resolution
  CHECK(std::abs(potential_V(s, Complex(0.5, 0.0))) < 1e-15);
  CHECK(potential_V(s, Complex(1.0, 0.0)) == -kInf);
  // outside the unit disk V(z) = log|z| + (1/N) log|1 - z^-N|
  CHECK(potential_V(s, Complex(2.0, 0.0)) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("circle moments vanish below the point count") {
  const JensenMeasure s = JensenMeasure::uniform_circle(16, 2.0);
  const auto m = moment_check(s, 16);
  REQUIRE(m.size() == 16);
  std::vector<double> low(m.begin(), m.end() - 1);
  CHECK(moments_vanish(s, low));
  CHECK(m.back() == doctest::Approx(std::pow(2.0, 16)).epsilon(1e-12));
  CHECK_FALSE(moments_vanish(s, m));
}

TEST_CASE("offset disk represents the origin") {
  const JensenMeasure s = JensenMeasure::offset_disk(256, Complex(0.3, -0.2), 1.0);
  double total = 0.0;
  for (const Atom& a : s.atoms()) total += a.mass;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(moments_vanish(s, moment_check(s, 12)));
  CHECK_THROWS_AS(JensenMeasure::offset_disk(64, Complex(2.0, 0.0), 1.0), DomainError);
}

TEST_CASE("weights must form a probability measure") {
  CHECK_THROWS_AS(JensenMeasure({{{1.0, 0.0}, 0.5}}), DomainError);
  CHECK_THROWS_AS(JensenMeasure({{{1.0, 0.0}, 1.5}, {{-1.0, 0.0}, -0.5}}), DomainError);
}

TEST_CASE("polynomial push-forward keeps the moments vanishing") {
  const JensenMeasure s = JensenMeasure::uniform_circle(256);
  const std::vector<Complex> coeffs{0.0, 1.0, Complex(0.0, 0.5), -0.25};
  const JensenMeasure p = pushforward(s, coeffs);
  REQUIRE(p.atoms().size() == s.atoms().size());
  for (std::size_t k = 0; k < p.atoms().size(); ++k)
    CHECK(std::abs(p.atoms()[k].z - eval_polynomial(coeffs, s.atoms()[k].z)) < 1e-14);
  CHECK(moments_vanish(p, moment_check(p, 20), 1e-9));
  CHECK_THROWS_AS(pushforward(s, {1.0, 1.0}), DomainError);
}

TEST_CASE("imaginary-part distribution integrals") {
  for (const auto& fx : jensen_fixtures(128, 1)) {
    for (double lambda : {0.05, 0.5, 2.0}) {
      double lower = 0.0, upper = 0.0, tail = 0.0, imag = 0.0;
      for (const Atom& a : fx.sigma.atoms()) {
        const double y = std::abs(a.z.imag());
        lower += a.mass * 0.5 * std::pow(std::min(y, lambda), 2);
        upper += a.mass * std::max(y - lambda, 0.0);
        if (std::abs(a.z) >= lambda) tail += a.mass;
        if (y >= lambda) imag += a.mass;
      }
      const ImagIntegrals ii = imag_distribution_integrals(fx.sigma, lambda);
      CHECK(ii.lower == doctest::Approx(lower).epsilon(1e-12));
      CHECK(ii.upper == doctest::Approx(upper).epsilon(1e-12));
      const SigmaDistribution d = sigma_distributions(fx.sigma, lambda);
      CHECK(d.total == doctest::Approx(tail).epsilon(1e-12));
      CHECK(d.imag == doctest::Approx(imag).epsilon(1e-12));
    }
  }
}

TEST_CASE("sub-mean-value property on Jensen fixtures") {
  const auto fixtures = atomic_fixtures(4, 9);
  for (const auto& jf : jensen_fixtures(256, 1)) {
    for (const auto& cf : fixtures) {
      double mean = 0.0, size = 0.0;
      for (const Atom& a : jf.sigma.atoms()) {
        const double v = cf.field(a.z);
        mean += a.mass * v;
        size += a.mass * std::abs(v);
      }
      // discretized measures represent the origin up to quadrature error
      CHECK(mean >= -1e-5 * std::max(1.0, size));
    }
  }
}
