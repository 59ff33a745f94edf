#include "doctest.h"

#include <cmath>

#include "genusone/fixtures.hpp"
#include "genusone/measures.hpp"

using namespace genusone;

TEST_CASE("counting_mu of the square-root density") {
  const PlanarMeasure mu({}, {LineDensity{-1.0, 1.0, {1.0}, 0.5}});
  // mpmath oracle: integral of |x|^(1/2) over [-1, 1]
  CHECK(counting_mu(mu, 1.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
  CHECK(counting_mu(mu, 2.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
  CHECK(counting_mu(mu, 0.25) == doctest::Approx(4.0 / 3.0 * 0.125).epsilon(1e-13));
}

TEST_CASE("counting functions of atoms") {
  const PlanarMeasure mu({{{0.0, 1.0}, 2.0}, {{3.0, 0.0}, 1.0}});
  CHECK(counting_mu(mu, 0.5) == 0.0);
  CHECK(counting_mu(mu, 1.0) == 2.0);
  CHECK(counting_mu(mu, 3.0) == 3.0);
  // i lies in the disk |z - ir/2| <= r/2 exactly when r >= 1
  CHECK(counting_levin_tsuji(mu, 0.9) == 0.0);
  CHECK(counting_levin_tsuji(mu, 1.0) == 2.0);
  // real atoms never enter the tangent disks
  CHECK(counting_levin_tsuji(mu, 100.0) == 2.0);
}

TEST_CASE("genus-one norm") {
  SUBCASE("atoms") {
    const PlanarMeasure mu({{{2.0, 0.0}, 1.0}, {{0.0, 0.5}, 3.0}});
    const NormResult n = genus_one_norm(mu);
    CHECK(n.finite);
    CHECK(n.value == doctest::Approx(0.25 + 3.0 * 2.0).epsilon(1e-15));
    CHECK(mu.genus_one());
  }
  SUBCASE("linearly growing density diverges") {
    const PlanarMeasure mu({}, {LineDensity{1.0, kInf, {0.0, 1.0}, 0.0}});
    CHECK_FALSE(genus_one_norm(mu).finite);
    CHECK_FALSE(mu.genus_one());
  }
  SUBCASE("constant density near the origin is only pv-admissible") {
    const PlanarMeasure mu({}, {LineDensity{-1.0, 1.0, {1.0}, 0.0}});
    CHECK_FALSE(mu.genus_one());
    CHECK(mu.pv_admissible());
  }
  SUBCASE("u_p density") {
    const PlanarMeasure mu = fixture_up(1.5).measure();
    CHECK(mu.genus_one());
  }
}

TEST_CASE("negative masses are rejected") {
  CHECK_THROWS_AS(PlanarMeasure({{{1.0, 1.0}, -1.0}}), DomainError);
}

TEST_CASE("reflect_to_lower merges coincident atoms") {
  const PlanarMeasure mu({{{1.0, 1.0}, 1.0}, {{1.0, -1.0}, 2.0}, {{-2.0, 0.0}, 0.5}});
  const PlanarMeasure low = reflect_to_lower(mu);
  double total = 0.0;
  for (const Atom& a : low.atoms()) {
    CHECK(a.z.imag() <= 0.0);
    total += a.mass;
    if (std::abs(a.z - Complex(1.0, -1.0)) < 1e-15) CHECK(a.mass == 3.0);
  }
  CHECK(total == 3.5);
  CHECK(low.atoms().size() == 2);
}

TEST_CASE("reflection preserves the genus-one norm and the counting functions") {
  for (const auto& f : atomic_fixtures(8, 11)) {
    const PlanarMeasure low = reflect_to_lower(f.mu);
    CHECK(low.genus_norm() == doctest::Approx(f.mu.genus_norm()).epsilon(1e-12));
    for (double r : {0.3, 1.0, 4.0}) {
      CHECK(counting_mu(low, r) == doctest::Approx(counting_mu(f.mu, r)).epsilon(1e-12));
      CHECK(counting_levin_tsuji(low, r) == doctest::Approx(counting_levin_tsuji(f.mu, r)).epsilon(1e-12));
    }
  }
}

TEST_CASE("counting functions are nondecreasing and bounded by mu") {
  for (const auto& f : atomic_fixtures(6, 5)) {
    double prev_mu = 0.0, prev_n = 0.0;
    for (double r = 0.01; r < 100.0; r *= 1.3) {
      const double m = counting_mu(f.mu, r), n = counting_levin_tsuji(f.mu, r);
      CHECK(m >= prev_mu);
      CHECK(n >= prev_n);
      CHECK(n <= m + 1e-12);
      prev_mu = m;
      prev_n = n;
    }
  }
}

TEST_CASE("measure JSON round trip") {
  const PlanarMeasure mu({{{0.25, -1.5}, 0.75}}, {LineDensity{-2.0, 3.0, {1.0, 0.25}, 0.25}});
  const PlanarMeasure back = measure_from_json(measure_to_json(mu));
  REQUIRE(back.atoms().size() == 1);
  CHECK(back.atoms()[0].z == mu.atoms()[0].z);
  CHECK(back.atoms()[0].mass == 0.75);
  REQUIRE(back.densities().size() == 1);
  CHECK(back.densities()[0].coeffs == mu.densities()[0].coeffs);
  CHECK(back.densities()[0].power == 0.25);
  CHECK(back.genus_norm() == mu.genus_norm());
}

TEST_CASE("measured functions") {
  const MeasuredFunction f = MeasuredFunction::complex_valued({{3.0, 4.0}, {0.0, 0.5}}, {1.0, 2.0});
  CHECK(f.norm_at(0) == 5.0);
  CHECK(f.condition_norm() == doctest::Approx(5.0 + 2.0 * 0.25));
  CHECK(distribution(f, 1.0, Projector::modulus) == 1.0);
  CHECK(distribution(f, 0.4, Projector::imag_part) == 3.0);
  const MeasuredFunction v = MeasuredFunction::vector_valued(3, {1.0, 2.0, 2.0}, {1.0});
  CHECK(v.is_vector());
  CHECK(v.norm_at(0) == 3.0);
  const MeasuredFunction back = function_from_json(function_to_json(f));
  CHECK(back.values() == f.values());
  CHECK(back.weights() == f.weights());
}

TEST_CASE("pushforward measure puts mass w at 1/f") {
  const MeasuredFunction f = MeasuredFunction::complex_valued({{0.0, 2.0}}, {0.5});
  const PlanarMeasure mu = pushforward_measure(f);
  REQUIRE(mu.atoms().size() == 1);
  CHECK(std::abs(mu.atoms()[0].z - Complex(0.0, -0.5)) < 1e-15);
  CHECK(mu.atoms()[0].mass == 0.5);
}
