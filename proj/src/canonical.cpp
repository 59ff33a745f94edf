#include "genusone/canonical.hpp"

#include <algorithm>
#include <cmath>

#include "genusone/kernels.hpp"
#include "genusone/quadrature.hpp"

namespace genusone {
namespace {

// Integral over [A, inf) of H(z/x) x^power sum_k c_k x^k dx via the power series of H.
double analytic_tail(const std::vector<double>& c, double power, Complex z, double A) {
  const double ratio = std::abs(z) / A;
  double total = 0.0;
  Complex zj = z * z;
  double rj = ratio * ratio;
  for (int j = 2; j < 400 && rj > 1e-19; ++j) {
    double inner = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] == 0.0) continue;
      const double e = power + static_cast<double>(k) - j + 1.0;
      inner += c[k] * std::pow(A, e) / (-e);
    }
    total -= zj.real() / j * inner;
    zj *= z;
    rj *= ratio;
  }
  return total;
}

std::vector<double> geometric_breaks(double lo, double hi) {
  std::vector<double> b;
  for (double x = lo * 4.0; x < hi; x *= 4.0) b.push_back(x);
  return b;
}

}  // namespace

double density_canonical(const LineDensity& d, Complex z, const CanonicalOptions& opt) {
  const double rz = std::abs(z);
  if (rz == 0.0) return 0.0;
  const double N = 2.0 * rz;
  const double A = std::max(opt.tail_cut, 8.0 * rz);
  quad::Options qo;
  qo.rel_tol = opt.rel_tol;

  double total = 0.0;

  // |x| <= N: log|1 - z/x| numerically, Re(z)/x by its closed-form principal value.
  const double nl = std::max(d.a, -N);
  const double nh = std::min(d.b, N);
  if (nl < nh) {
    auto f = [&](double x) {
      return std::log(std::abs(1.0 - z / x)) * d(x);
    };
    total += quad::integrate(f, nl, nh, {0.0, z.real()}, qo).value;
    total += z.real() * d.pv_inverse_integral(nl, nh);
  }

  auto far = [&](double x) { return kernel_H(z / x) * d(x); };
  // x > N
  if (d.b > N) {
    const double lo = std::max(d.a, N);
    const double hi = std::isinf(d.b) ? A : d.b;
    if (lo < hi) total += quad::integrate(far, lo, hi, geometric_breaks(lo, hi), qo,
                                          quad::Rule::gauss_kronrod).value;
    if (std::isinf(d.b)) total += analytic_tail(d.coeffs, d.power, z, std::max(A, lo));
  }
  // x < -N
  if (d.a < -N) {
    const double hi = std::min(d.b, -N);
    const double lo = std::isinf(d.a) ? -A : d.a;
    if (lo < hi) {
      auto mirrored = [&](double s) { return far(-s); };
      total += quad::integrate(mirrored, -hi, -lo, geometric_breaks(-hi, -lo), qo,
                               quad::Rule::gauss_kronrod).value;
    }
    if (std::isinf(d.a)) {
      std::vector<double> flipped = d.coeffs;
      for (std::size_t k = 1; k < flipped.size(); k += 2) flipped[k] = -flipped[k];
      total += analytic_tail(flipped, d.power, -z, std::max(A, -hi));
    }
  }
  return total;
}

double eval_canonical(const PlanarMeasure& mu, Complex z, const CanonicalOptions& opt) {
  if (!mu.genus_one()) throw DomainError("measure does not satisfy the genus-one condition");
  if (z == Complex(0.0, 0.0)) return 0.0;
  double s = 0.0;
  for (const Atom& a : mu.atoms()) {
    if (a.mass == 0.0) continue;
    const double h = kernel_H(z / a.z);
    if (std::isinf(h)) return -kInf;
    s += a.mass * h;
  }
  for (const LineDensity& d : mu.densities()) s += density_canonical(d, z, opt);
  return s;
}

PvLadder pv_ladder(const PlanarMeasure& mu, Complex z, const PvOptions& opt) {
  PvLadder out;
  double min_mod = kInf;
  for (const Atom& a : mu.atoms())
    if (a.mass > 0.0) min_mod = std::min(min_mod, std::abs(a.z));
  if (!std::isfinite(min_mod) || min_mod == 0.0) return out;
  // Rungs stay above the smallest modulus, where a finite atom set stops
  // resolving the behaviour of the measure at the origin.
  const double eps_last = 2.0 * min_mod;
  double eps = opt.eps0 > 0.0 ? opt.eps0 : eps_last * std::ldexp(1.0, opt.rungs - 1);
  double scale = 0.0;
  std::vector<double> h(mu.atoms().size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Atom& a = mu.atoms()[i];
    h[i] = a.mass == 0.0 ? 0.0 : a.mass * kernel_H(z / a.z);
    scale += std::abs(h[i]);
    const double m = std::abs(a.z);
    if (a.mass > 0.0 && m >= eps_last && m <= eps) ++out.resolved;
  }
  for (int k = 0; k < opt.rungs; ++k, eps *= 0.5) {
    double s = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i)
      if (std::abs(mu.atoms()[i].z) > eps) s += h[i];
    out.eps.push_back(eps);
    out.partial_sums.push_back(s);
  }
  for (std::size_t k = 0; k + 1 < out.partial_sums.size(); ++k)
    out.extrapolants.push_back(2.0 * out.partial_sums[k + 1] - out.partial_sums[k]);
  const std::size_t n = out.extrapolants.size();
  if (n >= 2) {
    const double e1 = out.extrapolants[n - 1];
    const double e0 = out.extrapolants[n - 2];
    const double denom = std::max({std::abs(e1), std::abs(e0), scale, 1e-300});
    out.cauchy = std::abs(e1 - e0) <= opt.cauchy_tol * denom;
  }
  return out;
}

double eval_canonical_pv(const PlanarMeasure& mu, Complex z, const PvOptions& opt) {
  if (!mu.genus_one() && !mu.pv_admissible())
    throw HypothesisError("principal value of the integral of dmu/zeta does not exist");
  if (z == Complex(0.0, 0.0)) return 0.0;
  const PvLadder ladder = pv_ladder(mu, z, opt);
  // Sparse atoms near the origin carry no accumulation to test.
  if (!ladder.cauchy && ladder.resolved >= opt.rungs)
    throw HypothesisError("epsilon ladder is not Cauchy: principal value does not exist");
  if (mu.genus_one()) return eval_canonical(mu, z, opt.base);
  // The atom set is finite, so the limit is the full sum.
  double s = 0.0;
  for (const Atom& a : mu.atoms()) {
    if (a.mass == 0.0) continue;
    const double h = kernel_H(z / a.z);
    if (std::isinf(h)) return -kInf;
    s += a.mass * h;
  }
  for (const LineDensity& d : mu.densities()) s += density_canonical(d, z, opt.base);
  return s;
}

double logdet_complex(const MeasuredFunction& fn, Complex z) {
  if (fn.is_vector()) return logdet_complex(surrogate_complexify(fn), z);
  double s = 0.0;
  for (std::size_t k = 0; k < fn.size(); ++k) {
    const double w = fn.weights()[k];
    if (w == 0.0) continue;
    const double h = kernel_H(z * fn.values()[k]);
    if (std::isinf(h)) return -kInf;
    s += w * h;
  }
  return s;
}

MeasuredFunction surrogate_complexify(const MeasuredFunction& fn) {
  if (!fn.is_vector()) return fn;
  std::vector<Complex> vals(fn.size());
  for (std::size_t k = 0; k < fn.size(); ++k)
    vals[k] = Complex(fn.vector_at(k)[0], fn.projected(k, Projector::hat_norm));
  return MeasuredFunction::complex_valued(std::move(vals), fn.weights());
}

double logdet_vector(const MeasuredFunction& fn, double x) {
  if (!fn.is_vector()) throw DomainError("logdet_vector needs vector-valued samples");
  double s = 0.0;
  for (std::size_t k = 0; k < fn.size(); ++k) {
    const double w = fn.weights()[k];
    if (w == 0.0) continue;
    const double f0 = fn.vector_at(k)[0];
    const double n = fn.norm_at(k);
    const double arg = -2.0 * x * f0 + x * x * n * n;
    if (arg <= -1.0) return -kInf;
    s += w * (0.5 * std::log1p(arg) + x * f0);
  }
  return s;
}

double UpFixture::operator()(Complex z) const {
  const double r = std::abs(z);
  if (r == 0.0) return 0.0;
  const double th = std::abs(argument(z));
  return std::pow(r, p) * std::cos(p * (0.5 * kPi - th));
}

PlanarMeasure UpFixture::measure() const {
  return PlanarMeasure({}, {LineDensity{-kInf, kInf, {c_p}, p - 1.0}});
}

PlanarMeasure UpFixture::truncated_measure() const {
  return PlanarMeasure({}, {LineDensity{-A, A, {c_p}, p - 1.0}});
}

double UpFixture::truncation_bound(double r) const {
  if (!(r < A)) return kInf;
  return c_p * r * r * std::pow(A, p - 2.0) / ((2.0 - p) * (1.0 - r / A));
}

UpFixture fixture_up(double p, double A) {
  if (!(p > 1.0 && p < 2.0)) throw DomainError("p must lie in (1, 2)");
  require_positive(A, "A");
  UpFixture f;
  f.p = p;
  f.c_p = p / kPi * std::sin(0.5 * p * kPi);
  f.A = A;
  return f;
}

}  // namespace genusone
