#include "genusone/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "genusone/canonical.hpp"
#include "genusone/characteristics.hpp"
#include "genusone/kernels.hpp"

namespace genusone {

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::hypotheses_unmet: return "hypotheses_unmet";
  }
  return "fail";
}

double fit_constant(const std::vector<double>& lhs, const std::vector<double>& rhs) {
  if (lhs.size() != rhs.size()) throw DomainError("fit_constant: curves must share a grid");
  double C = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (!(lhs[i] > 0.0)) continue;
    if (!(rhs[i] > 0.0)) return kInf;
    C = std::max(C, lhs[i] / rhs[i]);
  }
  return C;
}

FitResult fit_constant(const std::vector<double>& lhs_coarse, const std::vector<double>& rhs_coarse,
                       const std::vector<double>& lhs_fine, const std::vector<double>& rhs_fine) {
  FitResult f;
  f.C = fit_constant(lhs_fine, rhs_fine);
  f.C_coarse = fit_constant(lhs_coarse, rhs_coarse);
  f.finite = std::isfinite(f.C) && std::isfinite(f.C_coarse);
  if (!f.finite) f.stability = kInf;
  else if (f.C == 0.0) f.stability = f.C_coarse == 0.0 ? 0.0 : kInf;
  else f.stability = std::abs(f.C - f.C_coarse) / f.C;
  return f;
}

FitResult fit_constant(const RadialCurve& lhs, const RadialCurve& rhs) {
  if (lhs.radii() != rhs.radii()) throw DomainError("fit_constant: curves must share a grid");
  std::vector<double> lc, rc;
  for (std::size_t i = 0; i < lhs.size(); i += 2) {
    lc.push_back(lhs.values()[i]);
    rc.push_back(rhs.values()[i]);
  }
  return fit_constant(lc, rc, lhs.values(), rhs.values());
}

double relative_residual(double a, double b, double scale) {
  const double d = std::max({std::abs(a), std::abs(b), std::abs(scale)});
  if (d == 0.0) return 0.0;
  return std::abs(a - b) / d;
}

namespace {

double im_inverse_mass(const PlanarMeasure& mu) {
  double s = 0.0;
  for (const Atom& a : mu.atoms()) s += a.mass * std::abs((1.0 / a.z).imag());
  return s;
}

void summarize_residuals(VerificationReport& r) {
  std::vector<double> res(r.lhs.size());
  for (std::size_t i = 0; i < res.size(); ++i) res[i] = relative_residual(r.lhs[i], r.rhs[i], r.max_stat);
  r.max_stat = 0.0;
  for (double v : res) r.max_stat = std::max(r.max_stat, std::isnan(v) ? kInf : v);
  if (!res.empty()) {
    std::sort(res.begin(), res.end());
    r.median_stat = res[res.size() / 2];
  }
  r.status = r.max_stat <= r.tolerance ? Status::pass : Status::fail;
}

// Atoms on the circle |z| = R make the semi-disk boundary degenerate.
bool boundary_atom(const PlanarMeasure& mu, double R) {
  for (const Atom& a : mu.atoms())
    if (a.mass > 0.0 && std::abs(std::abs(a.z) - R) <= 1e-9 * R) return true;
  return false;
}

void kernel_report(VerificationReport& r, const IdentityParams& p) {
  Rng rng(p.seed ^ std::hash<std::string>{}(r.check));
  for (int k = 0; k < p.tuples; ++k) {
    const double R = std::exp(rng.uniform(std::log(0.1), std::log(10.0)));
    const double r0 = R * rng.uniform(0.02, 0.98);
    double lhs = 0.0, rhs = 0.0;
    if (r.check == "kernel_k1") {
      const double t = R * rng.uniform(-1.0, 1.0);
      lhs = numeric_K1_integral(t, r0, R);
      rhs = closed_form_K1_integral(t, r0, R);
    } else if (r.check == "kernel_k2") {
      const double phi = rng.uniform(0.01, kPi - 0.01);
      lhs = numeric_K2_integral(r0, R, phi);
      rhs = closed_form_K2_integral(r0, R, phi);
    } else {
      const Complex zeta = std::polar(R * rng.uniform(0.02, 0.98), rng.uniform(0.01, kPi - 0.01));
      lhs = numeric_K3_integral(zeta, r0, R);
      rhs = closed_form_K3_integral(zeta, r0, R);
    }
    r.abscissa.push_back(k);
    r.lhs.push_back(lhs);
    r.rhs.push_back(rhs);
  }
  r.max_stat = 0.0;
  summarize_residuals(r);
}

}  // namespace

std::vector<std::string> identity_names() {
  return {"levin", "carleman", "tsuji_fft", "kernel_k1", "kernel_k2", "kernel_k3"};
}

VerificationReport check_identity(const std::string& name, const CanonicalFixture& fixture,
                                  const IdentityParams& params) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.check = name;
  r.fixture = fixture.id;
  r.kind = "identity";
  r.tolerance = params.tol;
  try {
    if (name == "kernel_k1" || name == "kernel_k2" || name == "kernel_k3") {
      r.fixture = "random_tuples";
      r.tolerance = std::min(params.tol, 1e-8);
      kernel_report(r, params);
    } else if (name == "levin" || name == "carleman") {
      if (boundary_atom(fixture.mu, params.R)) {
        r.status = Status::hypotheses_unmet;
        r.note = "atom on the circle |z| = R";
      } else if (!fixture.mu.genus_one() && fixture.family != "up") {
        r.status = Status::hypotheses_unmet;
        r.note = "measure is not genus one";
      } else {
        const bool levin = name == "levin";
        r.abscissa = {params.R};
        r.lhs = {levin ? levin_lhs(fixture.field, params.R) : carleman_lhs(fixture.field, params.R)};
        r.rhs = {levin ? levin_rhs(fixture.mu, params.R) : carleman_rhs(fixture.mu, params.R)};
        r.max_stat = im_inverse_mass(fixture.mu);
        summarize_residuals(r);
      }
    } else if (name == "tsuji_fft") {
      if (!fixture.mu.genus_one() && fixture.family != "up") {
        r.status = Status::hypotheses_unmet;
        r.note = "measure is not genus one";
      } else {
        for (double rad : params.radii) {
          const TsujiPair tp = tsuji_characteristics(fixture.field, rad);
          r.abscissa.push_back(rad);
          r.lhs.push_back(tp.T);
          r.rhs.push_back(tp.m + levin_rhs(fixture.mu, rad));
        }
        r.max_stat = im_inverse_mass(fixture.mu);
        summarize_residuals(r);
      }
    } else {
      throw DomainError("unknown identity '" + name + "'");
    }
  } catch (const HypothesisError& e) {
    r.status = Status::hypotheses_unmet;
    r.note = e.what();
  }
  r.runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace {

// Local sample spacing of the complexified values, for the singular-set skip rule.
std::vector<double> sample_spacing(const std::vector<Complex>& v) {
  const std::size_t n = v.size();
  std::vector<double> spacing(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) spacing[k] = std::max(spacing[k], std::abs(v[k] - v[k - 1]));
    if (k + 1 < n) spacing[k] = std::max(spacing[k], std::abs(v[k + 1] - v[k]));
  }
  return spacing;
}

bool near_singular(const std::vector<Complex>& v, const std::vector<double>& spacing, Complex z, double kappa) {
  const double rad = std::abs(z);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (std::abs(1.0 - z * v[k]) < kappa * rad * spacing[k]) return true;
  return false;
}

double max_abs(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

PositivityResult positivity_scan(const MeasuredFunction& fn, int n_radii, int n_theta, double reach,
                                 double kappa) {
  const MeasuredFunction f = surrogate_complexify(fn);
  const auto& v = f.values();
  const double fmax = max_abs(v);
  PositivityResult out;
  if (fmax == 0.0) return out;
  const std::vector<double> spacing = sample_spacing(v);
  out.r_max = reach / fmax;
  out.min_value = kInf;
  out.max_value = -kInf;
  for (int i = 1; i <= n_radii; ++i) {
    const double rad = out.r_max * i / n_radii;
    for (int j = 0; j < n_theta; ++j) {
      const Complex z = std::polar(rad, 2 * kPi * (j + 0.5) / n_theta);
      if (near_singular(v, spacing, z, kappa)) {
        ++out.skipped;
        continue;
      }
      const double u = logdet_complex(f, z);
      ++out.evaluated;
      out.min_value = std::min(out.min_value, u);
      out.max_value = std::max(out.max_value, u);
    }
  }
  if (out.evaluated == 0) out.min_value = out.max_value = 0.0;
  return out;
}

PositivityResult real_axis_scan(const MeasuredFunction& fn, int per_decade, double reach, double kappa) {
  const MeasuredFunction f = surrogate_complexify(fn);
  const auto& v = f.values();
  const double fmax = max_abs(v);
  PositivityResult out;
  if (fmax == 0.0) return out;
  const std::vector<double> spacing = sample_spacing(v);
  out.r_max = reach / fmax;
  out.min_value = kInf;
  out.max_value = -kInf;
  for (double x : log_grid(1e-3 * out.r_max, out.r_max, per_decade))
    for (double sx : {x, -x}) {
      if (near_singular(v, spacing, Complex(sx, 0.0), kappa)) {
        ++out.skipped;
        continue;
      }
      const double u = fn.is_vector() ? logdet_vector(fn, sx) : logdet_complex(f, Complex(sx, 0.0));
      ++out.evaluated;
      out.min_value = std::min(out.min_value, u);
      out.max_value = std::max(out.max_value, u);
    }
  if (out.evaluated == 0) out.min_value = out.max_value = 0.0;
  return out;
}

}  // namespace genusone
