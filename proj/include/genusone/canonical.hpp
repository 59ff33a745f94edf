#pragma once

#include "genusone/measures.hpp"
#include "genusone/types.hpp"

namespace genusone {

struct CanonicalOptions {
  double rel_tol = 1e-11;
  // Density quadrature runs numerically up to |x| = tail_cut; beyond it the
  // kernel's power series is integrated term by term in closed form.
  double tail_cut = 1e3;
};

// u(z) = integral of H(z/zeta) dmu(zeta). Throws DomainError unless the
// measure is genus one; returns -inf at an atom.
double eval_canonical(const PlanarMeasure& mu, Complex z, const CanonicalOptions& opt = {});

struct PvOptions {
  // First rung of the epsilon ladder; 0 places the last rung at twice the
  // smallest atom modulus.
  double eps0 = 0.0;
  int rungs = 6;
  double cauchy_tol = 1e-6;
  CanonicalOptions base;
};

struct PvLadder {
  std::vector<double> eps;
  std::vector<double> partial_sums;
  std::vector<double> extrapolants;
  bool cauchy = true;
  // Atoms with modulus inside the ladder range.
  int resolved = 0;
};

// Principal-value canonical integral lim_{eps->0} of the integral over |zeta| > eps.
// Throws HypothesisError when the density part has no principal value, or when
// at least `rungs` atoms fall inside the ladder range and the ladder is not
// Cauchy (this also rejects truncations of divergent ladders).
double eval_canonical_pv(const PlanarMeasure& mu, Complex z, const PvOptions& opt = {});
PvLadder pv_ladder(const PlanarMeasure& mu, Complex z, const PvOptions& opt = {});

// Canonical integral of the density part of mu alone (principal value at the origin).
double density_canonical(const LineDensity& d, Complex z, const CanonicalOptions& opt = {});

// u_f(z) = sum_k w_k H(z f_k); vector samples go through the surrogate.
double logdet_complex(const MeasuredFunction& fn, Complex z);
// (f_0, ..., f_n) -> f_0 + i sqrt(f_1^2 + ... + f_n^2).
MeasuredFunction surrogate_complexify(const MeasuredFunction& fn);
// v_f(x) = sum_k w_k [log ||e_0 - x f_k|| + x f_{k,0}].
double logdet_vector(const MeasuredFunction& fn, double x);

// u_p(z) = r^p cos p(pi/2 - |theta|), 1 < p < 2, with Riesz measure
// c_p |x|^{p-1} dx, c_p = (p / pi) sin(p pi / 2).
struct UpFixture {
  double p = 1.5;
  double c_p = 0.0;
  double A = 1e3;

  double operator()(Complex z) const;
  // Full-line density (genus one); eval_canonical switches to the analytic
  // tail at A.
  PlanarMeasure measure() const;
  // Density cut to [-A, A].
  PlanarMeasure truncated_measure() const;
  // Bound on |u_p(z) - u_A(z)| for |z| <= r, u_A the canonical integral of the
  // truncated density: c_p r^2 A^{p-2} / ((2 - p)(1 - r/A)).
  double truncation_bound(double r) const;
};

UpFixture fixture_up(double p, double A = 1e3);

}  // namespace genusone
