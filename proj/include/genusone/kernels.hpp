#pragma once

#include "genusone/types.hpp"

namespace genusone {

// H(z) = log|1 - z| + Re z. Returns -inf at z = 1.
double kernel_H(Complex z);

// Semi-disk Poisson-Nevanlinna kernels on D_R = {Im z > 0, |z| < R}.
// Domain violations throw DomainError; singular points return +inf.
double kernel_K1(Complex z, double t, double R);
double kernel_K2(Complex z, double R, double phi);
double kernel_K3(Complex z, Complex zeta, double R);

// (1/r) * integral over (0, pi) of K_j(r e^{i theta}, .) sin(theta) d theta.
double closed_form_K1_integral(double t, double r, double R);
double closed_form_K2_integral(double r, double R, double phi);
double closed_form_K3_integral(Complex zeta, double r, double R);

// Integrals along the tangent circle z = R e^{i theta} sin(theta) with weight
// d theta / (R sin^2 theta).
double tangent_form_K1(double t, double R);
double tangent_form_K2(double R, double phi);
double tangent_form_K3(Complex zeta, double R);

// Direct theta-quadratures of the two families above.
double numeric_K1_integral(double t, double r, double R);
double numeric_K2_integral(double r, double R, double phi);
double numeric_K3_integral(Complex zeta, double r, double R);
double numeric_tangent_K1(double t, double R);
double numeric_tangent_K2(double R, double phi);
double numeric_tangent_K3(Complex zeta, double R);

namespace detail {
double K1_raw(Complex z, double t, double R);
double K2_raw(Complex z, double R, double phi);
double K3_raw(Complex z, Complex zeta, double R);
}  // namespace detail

}  // namespace genusone
