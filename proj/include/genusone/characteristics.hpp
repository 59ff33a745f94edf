#pragma once

#include <vector>

#include "genusone/field.hpp"
#include "genusone/measures.hpp"
#include "genusone/radial_curve.hpp"

namespace genusone {

struct ScanOptions {
  int n_theta = 64;
  int max_theta = 4096;
  double rel_tol = 1e-6;
};

// max over |z| = r of u (equal to the max over the disk for subharmonic u).
double max_modulus(const SubharmonicField& u, double r, const ScanOptions& opt = {});

// (1/2pi) * integral of u^+(r e^{i theta}) over a full turn.
double nevanlinna_T(const SubharmonicField& u, double r, double rel_tol = 1e-10);

struct TsujiPair {
  double T = 0.0;
  double m = 0.0;
};

// Tsuji characteristic and proximity function:
// (1/2pi) * integral of u^{+/-}(r e^{i theta} |sin theta|) d theta / (r sin^2 theta).
// Throws HypothesisError when the integrand is not integrable at theta = 0, pi.
TsujiPair tsuji_characteristics(const SubharmonicField& u, double r, double rel_tol = 1e-10);
double tsuji_T(const SubharmonicField& u, double r);
double tsuji_m(const SubharmonicField& u, double r);

// Signed version of the same tangent-circle integral (the Levin left side).
double levin_lhs(const SubharmonicField& u, double R, double rel_tol = 1e-11);
// Integral over (0, R) of n(t)/t^2, integrating the step function n between
// its jump radii.
double levin_rhs(const PlanarMeasure& mu, double R);

// Carleman formula for the upper semi-disk of radius R.
double carleman_lhs(const SubharmonicField& u, double R, double rel_tol = 1e-12);
double carleman_rhs(const PlanarMeasure& mu, double R);

// Radial curves over the supplied grid (parallel over radii, ordered output).
RadialCurve curve_mu(const PlanarMeasure& mu, const std::vector<double>& radii);
RadialCurve curve_n(const PlanarMeasure& mu, const std::vector<double>& radii);
RadialCurve curve_M(const SubharmonicField& u, const std::vector<double>& radii, int workers = 1);
RadialCurve curve_T(const SubharmonicField& u, const std::vector<double>& radii, int workers = 1);
RadialCurve curve_tsuji_m(const SubharmonicField& u, const std::vector<double>& radii, int workers = 1);
// u^-(t) + u^-(-t); radii where u(+-t) = -inf are dropped and listed in
// meta["skipped"].
RadialCurve curve_real_negative(const SubharmonicField& u, const std::vector<double>& radii,
                                int workers = 1);
RadialCurve delta_curve(const SubharmonicField& u, const PlanarMeasure& mu,
                        const std::vector<double>& radii, int workers = 1);

// r int_0^r delta/t^2 + r^2 int_r^inf delta/t^3 (1 + log(t/r)).
// Throws HypothesisError when either integral diverges.
double delta_star(const RadialCurve& delta, double r);
RadialCurve delta_star_curve(const RadialCurve& delta, const std::vector<double>& radii);

// Throws DomainError naming the missing range unless the curve covers [r/kappa, kappa r].
void require_coverage(const RadialCurve& c, double r, double kappa = 10.0);

double rhs_borel(const RadialCurve& mu, double r);
double rhs_marcinkiewicz(const RadialCurve& n, double r);
double rhs_theorem1(const RadialCurve& n, const RadialCurve& m, double r);
double rhs_theorem2(const RadialCurve& delta_star, double r);
double rhs_corollary5(const RadialCurve& delta, double r, double eps = 1.0);
double rhs_real_line(const RadialCurve& uminus, double r);
// (1/r) int_0^r Phi + r int_r^inf Phi/t^2.
double rhs_lemma1(const RadialCurve& phi, double r);

}  // namespace genusone
