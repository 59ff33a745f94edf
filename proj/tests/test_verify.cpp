#include "doctest.h"

#include <cmath>

#include "genusone/fixtures.hpp"
#include "genusone/suites.hpp"
#include "genusone/verify.hpp"

using namespace genusone;

TEST_CASE("fit_constant") {
  CHECK(fit_constant({1.0, 2.0, 0.0}, {2.0, 1.0, 0.0}) == 2.0);
  CHECK(fit_constant({1.0}, {0.0}) == kInf);
  CHECK(fit_constant({0.0, -1.0}, {0.0, 0.0}) == 0.0);
  CHECK_THROWS_AS(fit_constant({1.0}, {1.0, 2.0}), DomainError);
  const FitResult f = fit_constant({1.0}, {1.0}, {1.0, 1.1}, {1.0, 1.0});
  CHECK(f.C == doctest::Approx(1.1));
  CHECK(f.stability == doctest::Approx(0.1 / 1.1));
  CHECK(f.finite);
  CHECK_FALSE(fit_constant({1.0}, {0.0}, {1.0}, {1.0}).finite);
}

TEST_CASE("relative_residual") {
  CHECK(relative_residual(0.0, 0.0) == 0.0);
  CHECK(relative_residual(1.0, 1.5) == doctest::Approx(1.0 / 3.0));
  CHECK(relative_residual(1e-9, 0.0, 1.0) == doctest::Approx(1e-9));
}

TEST_CASE("kernel identities pass on random tuples") {
  IdentityParams p;
  for (const auto& name : {"kernel_k1", "kernel_k2", "kernel_k3"}) {
    const VerificationReport r = check_identity(name, CanonicalFixture{}, p);
    CHECK(r.status == Status::pass);
    CHECK(r.lhs.size() == 200);
    CHECK(r.fixture == "random_tuples");
  }
}

TEST_CASE("identities mark boundary atoms as unmet") {
  CanonicalFixture f;
  f.id = "boundary";
  f.mu = PlanarMeasure({{std::polar(3.0, 0.7), 1.0}});
  f.field = SubharmonicField::from_measure(f.mu);
  const VerificationReport r = check_identity("levin", f, IdentityParams{});
  CHECK(r.status == Status::hypotheses_unmet);
  CHECK_THROWS_AS(check_identity("nonsense", f, IdentityParams{}), DomainError);
}

TEST_CASE("positivity of the log determinant of a Hilbert pair") {
  const PositivityResult p = positivity_scan(make_hilbert_pair(smooth_bump()));
  CHECK(p.evaluated > 0);
  CHECK(p.min_value >= -1e-6 * std::max(1.0, p.max_value));
  CHECK(p.max_value >= p.min_value);
}

TEST_CASE("fixture selectors") {
  CHECK(fixture_selected("atomic_03", {}));
  CHECK(fixture_selected("atomic_03", {"atomic_03"}));
  CHECK(fixture_selected("atomic_03", {"atomic*"}));
  CHECK_FALSE(fixture_selected("atomic_03", {"atomic_04", "up*"}));
}

TEST_CASE("suite registry") {
  const auto names = suite_names();
  CHECK(names.size() >= 20);
  for (const auto& n : names) CHECK(is_suite(n));
  CHECK_FALSE(is_suite("theorem9"));
}

TEST_CASE("suite output does not depend on the worker count") {
  SuiteConfig cfg;
  cfg.per_decade = 8;
  cfg.fixtures = {"atomic_0*", "up_1.50"};
  auto a = run_suite("borel", cfg);
  cfg.workers = 3;
  auto b = run_suite("borel", cfg);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].fixture == b[i].fixture);
    CHECK(a[i].lhs == b[i].lhs);
    CHECK(a[i].rhs == b[i].rhs);
    CHECK(std::isnan(a[i].constant) == std::isnan(b[i].constant));
    if (!std::isnan(a[i].constant)) CHECK(a[i].constant == b[i].constant);
  }
}

TEST_CASE("inequality reports carry both grids") {
  SuiteConfig cfg;
  cfg.per_decade = 8;
  cfg.fixtures = {"atomic_01"};
  for (const auto& r : run_suite("borel", cfg)) {
    if (r.kind != "inequality") continue;
    CHECK(std::isfinite(r.constant));
    CHECK(std::isfinite(r.constant_coarse));
    CHECK(r.stability == doctest::Approx(std::abs(r.constant - r.constant_coarse) / r.constant));
    CHECK(r.status == (r.stability <= cfg.stability_band ? Status::pass : Status::fail));
  }
}
