#include "doctest.h"

#include <cmath>

#include "genusone/fixtures.hpp"
#include "genusone/kernels.hpp"

using namespace genusone;

TEST_CASE("kernel_H values") {
  CHECK(kernel_H(Complex(0.0, 0.0)) == 0.0);
  CHECK(kernel_H(Complex(1.0, 0.0)) == -kInf);
  CHECK(kernel_H(Complex(2.0, 0.0)) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(kernel_H(Complex(0.0, 1.0)) == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-15));
  // leading term -Re(z^2)/2 for small z, where the direct formula cancels
  CHECK(kernel_H(Complex(1e-8, 0.0)) == doctest::Approx(-5e-17).epsilon(1e-7));
  CHECK(kernel_H(Complex(0.0, 1e-6)) == doctest::Approx(5e-13).epsilon(1e-5));
}

TEST_CASE("kernel_H series and direct branches agree near |z| = 1/2") {
  for (int k = 0; k < 64; ++k) {
    const double th = 2.0 * kPi * k / 64;
    const Complex in = std::polar(0.5 - 1e-12, th), out = std::polar(0.5 + 1e-12, th);
    CHECK(kernel_H(in) == doctest::Approx(kernel_H(out)).epsilon(1e-10));
    const Complex z = std::polar(0.49, th);
    CHECK(kernel_H(z) == doctest::Approx(std::log(std::abs(1.0 - z)) + z.real()).epsilon(1e-12));
  }
}

TEST_CASE("kernel_H is symmetric under conjugation") {
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    const Complex z(rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0));
    CHECK(kernel_H(z) == kernel_H(std::conj(z)));
  }
}

TEST_CASE("semi-disk kernels at fixed points") {
  CHECK(kernel_K1(Complex(0.0, 1.0), 0.0, 2.0) == doctest::Approx(3.0 / (4.0 * kPi)).epsilon(1e-15));
  CHECK(kernel_K2(Complex(0.0, 1.0), 2.0, 0.5 * kPi) == doctest::Approx(4.0 / (3.0 * kPi)).epsilon(1e-15));
  // zeta on the real axis: the Green function vanishes
  CHECK(kernel_K3(Complex(0.3, 0.7), Complex(0.5, 0.0), 2.0) == doctest::Approx(0.0));
  CHECK(kernel_K3(Complex(0.3, 0.7), Complex(0.5, 0.4), 2.0) > 0.0);
}

TEST_CASE("semi-disk kernels reject points outside the domain") {
  CHECK_THROWS_AS(kernel_K1(Complex(0.0, -1.0), 0.0, 2.0), DomainError);
  CHECK_THROWS_AS(kernel_K1(Complex(0.0, 1.0), 3.0, 2.0), DomainError);
  CHECK_THROWS_AS(kernel_K2(Complex(0.0, 3.0), 2.0, 1.0), DomainError);
  CHECK_THROWS_AS(kernel_K2(Complex(0.0, 1.0), 2.0, 0.0), DomainError);
  CHECK_THROWS_AS(kernel_K3(Complex(0.0, 1.0), Complex(0.0, 5.0), 2.0), DomainError);
  CHECK_THROWS_AS(closed_form_K1_integral(0.5, 3.0, 2.0), DomainError);
}

TEST_CASE("closed-form radial integrals") {
  CHECK(closed_form_K1_integral(1.0, 2.0, 4.0) == doctest::Approx(3.0 / 32.0).epsilon(1e-15));
  CHECK(closed_form_K1_integral(3.0, 1.0, 4.0) == doctest::Approx(0.5 * (1.0 / 9.0 - 1.0 / 16.0)));
  CHECK(closed_form_K2_integral(1.0, 2.0, 0.5 * kPi) == doctest::Approx(0.5));
  CHECK(closed_form_K3_integral(Complex(0.0, 1.0), 0.5, 2.0) == doctest::Approx(kPi * (1.0 - 0.25)));
}

TEST_CASE("closed forms match direct quadrature") {
  Rng rng(17);
  for (int k = 0; k < 40; ++k) {
    const double R = std::exp(rng.uniform(-2.0, 2.0));
    const double r = R * rng.uniform(0.05, 0.95);
    const double t = R * rng.uniform(-1.0, 1.0);
    const double phi = rng.uniform(0.05, kPi - 0.05);
    const Complex zeta = std::polar(R * rng.uniform(0.05, 0.95), rng.uniform(0.05, kPi - 0.05));
    CHECK(numeric_K1_integral(t, r, R) == doctest::Approx(closed_form_K1_integral(t, r, R)).epsilon(1e-8));
    CHECK(numeric_K2_integral(r, R, phi) == doctest::Approx(closed_form_K2_integral(r, R, phi)).epsilon(1e-8));
    CHECK(numeric_K3_integral(zeta, r, R) == doctest::Approx(closed_form_K3_integral(zeta, r, R)).epsilon(1e-8));
  }
}

TEST_CASE("tangent-circle forms match direct quadrature") {
  Rng rng(23);
  for (int k = 0; k < 20; ++k) {
    const double R = std::exp(rng.uniform(-1.0, 1.0));
    double t = R * rng.uniform(0.05, 1.0);
    if (k % 2) t = -t;
    const double phi = rng.uniform(0.05, kPi - 0.05);
    const Complex zeta = std::polar(R * rng.uniform(0.05, 0.95), rng.uniform(0.05, kPi - 0.05));
    CHECK(numeric_tangent_K1(t, R) == doctest::Approx(tangent_form_K1(t, R)).epsilon(1e-8));
    CHECK(numeric_tangent_K2(R, phi) == doctest::Approx(tangent_form_K2(R, phi)).epsilon(1e-8));
    CHECK(numeric_tangent_K3(zeta, R) == doctest::Approx(tangent_form_K3(zeta, R)).epsilon(1e-8));
  }
}

TEST_CASE("semi-disk kernels are nonnegative") {
  Rng rng(29);
  for (int k = 0; k < 200; ++k) {
    const double R = 2.0;
    const Complex z = std::polar(R * rng.uniform(0.01, 0.99), rng.uniform(0.01, kPi - 0.01));
    CHECK(kernel_K1(z, R * rng.uniform(-1.0, 1.0), R) >= 0.0);
    CHECK(kernel_K2(z, R, rng.uniform(0.01, kPi - 0.01)) >= 0.0);
    const Complex zeta = std::polar(R * rng.uniform(0.01, 0.99), rng.uniform(0.01, kPi - 0.01));
    CHECK(kernel_K3(z, zeta, R) >= 0.0);
  }
}
