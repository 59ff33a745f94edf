#include "genusone/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "genusone/quadrature.hpp"

namespace genusone {

double kernel_H(Complex z) {
  const double m = std::abs(z);
  if (m == 0.0) return 0.0;
  if (m < 0.5) {
    // -Re sum_{k>=2} z^k / k; avoids cancellation between log and Re z.
    const double stop = 1e-17 * m * m;
    Complex p = z * z;
    double pm = m * m;
    double s = 0.0;
    for (int k = 2; k < 200 && pm > stop; ++k) {
      s -= p.real() / k;
      p *= z;
      pm *= m;
    }
    return s;
  }
  const double d = std::hypot(1.0 - z.real(), z.imag());
  if (d == 0.0) return -kInf;
  return std::log(d) + z.real();
}

namespace detail {

double K1_raw(Complex z, double t, double R) {
  const double d1 = std::norm(z - t);
  if (d1 == 0.0) return kInf;
  const double d2 = std::norm(Complex(R * R, 0.0) - z * t);
  return z.imag() / kPi * (1.0 / d1 - R * R / d2);
}

double K2_raw(Complex z, double R, double phi) {
  const double r = std::abs(z);
  const double th = argument(z);
  const double den1 = R * R + r * r - 2.0 * R * r * std::cos(phi - th);
  const double den2 = R * R + r * r - 2.0 * R * r * std::cos(phi + th);
  if (den1 == 0.0 || den2 == 0.0) return kInf;
  // r sin(theta) = Im z.
  return 4.0 * R * (R * R - r * r) * std::sin(phi) * z.imag() / (2.0 * kPi * den1 * den2);
}

double K3_raw(Complex z, Complex zeta, double R) {
  const double d1 = std::norm(z - zeta);
  if (d1 == 0.0) return kInf;
  // |z - conj(zeta)|^2 - |z - zeta|^2 = 4 Im z Im zeta, and
  // |R^2 - z conj(zeta)|^2 - |R^2 - z zeta|^2 = -4 R^2 Im z Im zeta.
  const double q = 4.0 * z.imag() * zeta.imag();
  const double d2 = std::norm(R * R - z * zeta);
  return 0.5 * (std::log1p(q / d1) + std::log1p(-R * R * q / d2));
}

}  // namespace detail

namespace {

void check_semidisk(Complex z, double R, bool closed) {
  require_positive(R, "R");
  if (!(z.imag() > 0.0)) throw DomainError("z must lie in the upper half-plane");
  const double m = std::abs(z);
  if (closed ? m > R * (1.0 + 1e-15) : m >= R) throw DomainError("z must lie inside the semi-disk");
}

}  // namespace

double kernel_K1(Complex z, double t, double R) {
  check_semidisk(z, R, true);
  if (std::abs(t) > R) throw DomainError("|t| must not exceed R");
  return detail::K1_raw(z, t, R);
}

double kernel_K2(Complex z, double R, double phi) {
  require_positive(R, "R");
  if (std::abs(z) >= R) throw DomainError("|z| must be less than R");
  if (!(phi > 0.0 && phi < kPi)) throw DomainError("phi must lie in (0, pi)");
  return detail::K2_raw(z, R, phi);
}

double kernel_K3(Complex z, Complex zeta, double R) {
  require_positive(R, "R");
  if (std::abs(z) > R * (1.0 + 1e-15) || std::abs(zeta) > R * (1.0 + 1e-15))
    throw DomainError("z and zeta must lie in the closed disk of radius R");
  return detail::K3_raw(z, zeta, R);
}

namespace {

void check_radii(double r, double R) {
  require_positive(r, "r");
  require_positive(R, "R");
  if (!(r < R)) throw DomainError("need 0 < r < R");
}

}  // namespace

double closed_form_K1_integral(double t, double r, double R) {
  check_radii(r, R);
  if (std::abs(t) > R) throw DomainError("|t| must not exceed R");
  const double inv_t2 = t == 0.0 ? kInf : 1.0 / (t * t);
  return 0.5 * (std::min(inv_t2, 1.0 / (r * r)) - 1.0 / (R * R));
}

double closed_form_K2_integral(double r, double R, double phi) {
  check_radii(r, R);
  return std::sin(phi) / R;
}

double closed_form_K3_integral(Complex zeta, double r, double R) {
  check_radii(r, R);
  if (zeta.imag() < 0.0 || std::abs(zeta) > R) throw DomainError("zeta must lie in the closed upper semi-disk");
  const double n2 = std::norm(zeta);
  const double inv = n2 == 0.0 ? kInf : 1.0 / n2;
  return kPi * zeta.imag() * (std::min(inv, 1.0 / (r * r)) - 1.0 / (R * R));
}

double tangent_form_K1(double t, double R) {
  require_positive(R, "R");
  if (t == 0.0 || std::abs(t) > R) throw DomainError("need 0 < |t| <= R");
  return 1.0 / (t * t) - 1.0 / (R * R);
}

double tangent_form_K2(double R, double phi) {
  require_positive(R, "R");
  return 2.0 / R * std::sin(phi);
}

double tangent_form_K3(Complex zeta, double R) {
  require_positive(R, "R");
  if (zeta.imag() <= 0.0 || std::abs(zeta) > R) throw DomainError("zeta must lie in the upper semi-disk");
  const double im_inv = std::abs((1.0 / zeta).imag());
  return 2.0 * kPi * (std::min(im_inv, 1.0 / R) - zeta.imag() / (R * R));
}

namespace {

constexpr double kTol = 1e-13;

double theta_quadrature(const quad::Fn& f, std::vector<double> breaks) {
  quad::Options opt;
  opt.rel_tol = kTol;
  opt.max_depth = 14;
  return quad::integrate(f, 0.0, kPi, std::move(breaks), opt).value;
}

// Angle on the tangent circle z = R e^{i th} sin th closest to w (upper circle).
double tangent_angle_near(Complex w, double R) {
  const double psi = argument(w - Complex(0.0, 0.5 * R));
  double th = 0.5 * (psi + 0.5 * kPi);
  if (th < 0.0) th += kPi;
  return th;
}

}  // namespace

double numeric_K1_integral(double t, double r, double R) {
  check_radii(r, R);
  auto f = [&](double th) {
    return detail::K1_raw(std::polar(r, th), t, R) * std::sin(th) / r;
  };
  return theta_quadrature(f, {0.5 * kPi});
}

double numeric_K2_integral(double r, double R, double phi) {
  check_radii(r, R);
  auto f = [&](double th) {
    return detail::K2_raw(std::polar(r, th), R, phi) * std::sin(th) / r;
  };
  return theta_quadrature(f, {phi});
}

double numeric_K3_integral(Complex zeta, double r, double R) {
  check_radii(r, R);
  auto f = [&](double th) {
    return detail::K3_raw(std::polar(r, th), zeta, R) * std::sin(th) / r;
  };
  return theta_quadrature(f, {argument(zeta)});
}

namespace {

Complex tangent_point(double R, double th) { return std::polar(R * std::sin(th), th); }

}  // namespace

double numeric_tangent_K1(double t, double R) {
  require_positive(R, "R");
  auto f = [&](double th) {
    const double s = std::sin(th);
    return detail::K1_raw(tangent_point(R, th), t, R) / (R * s * s);
  };
  return theta_quadrature(f, {0.5 * kPi});
}

double numeric_tangent_K2(double R, double phi) {
  require_positive(R, "R");
  auto f = [&](double th) {
    const double s = std::sin(th);
    return detail::K2_raw(tangent_point(R, th), R, phi) / (R * s * s);
  };
  return theta_quadrature(f, {0.5 * kPi, 0.5 * (phi + 0.5 * kPi)});
}

double numeric_tangent_K3(Complex zeta, double R) {
  require_positive(R, "R");
  auto f = [&](double th) {
    const double s = std::sin(th);
    return detail::K3_raw(tangent_point(R, th), zeta, R) / (R * s * s);
  };
  return theta_quadrature(f, {tangent_angle_near(zeta, R)});
}

}  // namespace genusone
