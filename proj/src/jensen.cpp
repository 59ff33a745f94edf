#include "genusone/jensen.hpp"

#include <algorithm>
#include <cmath>

namespace genusone {

JensenMeasure::JensenMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  double total = 0.0;
  for (const auto& a : atoms_) {
    if (!(a.mass > 0.0) || !std::isfinite(a.mass)) throw DomainError("Jensen weights must be positive");
    if (!std::isfinite(a.z.real()) || !std::isfinite(a.z.imag()))
      throw DomainError("Jensen atoms must be finite");
    total += a.mass;
    radius_ = std::max(radius_, std::abs(a.z));
  }
  if (atoms_.empty() || std::abs(total - 1.0) > 1e-12)
    throw DomainError("Jensen weights must sum to one");
}

JensenMeasure JensenMeasure::uniform_circle(int n, double rho) {
  if (n < 1) throw DomainError("uniform_circle: n must be positive");
  require_positive(rho, "uniform_circle radius");
  std::vector<Atom> atoms(n);
  for (int k = 0; k < n; ++k) atoms[k] = {std::polar(rho, 2 * kPi * k / n), 1.0 / n};
  return JensenMeasure(std::move(atoms));
}

JensenMeasure JensenMeasure::offset_disk(int n, Complex centre, double rho) {
  if (n < 1) throw DomainError("offset_disk: n must be positive");
  require_positive(rho, "offset_disk radius");
  if (!(std::abs(centre) < rho)) throw DomainError("offset_disk: the origin must lie inside the disk");
  std::vector<Atom> atoms(n);
  double total = 0.0;
  const double num = rho * rho - std::norm(centre);
  for (int k = 0; k < n; ++k) {
    const Complex e = std::polar(rho, 2 * kPi * k / n);
    const double w = num / std::norm(e + centre) / n;
    atoms[k] = {centre + e, w};
    total += w;
  }
  for (auto& a : atoms) a.mass /= total;
  return JensenMeasure(std::move(atoms));
}

double potential_V(const JensenMeasure& sigma, Complex z) {
  double v = 0.0;
  for (const auto& a : sigma.atoms()) {
    const double d = std::abs(1.0 - z * a.z);
    if (d == 0.0) return -kInf;
    v += a.mass * std::log(d);
  }
  return v;
}

std::vector<double> moment_check(const JensenMeasure& sigma, int K) {
  if (K < 1) throw DomainError("moment_check: K must be positive");
  std::vector<Complex> acc(K, 0.0);
  for (const auto& a : sigma.atoms()) {
    Complex p = a.z;
    for (int j = 0; j < K; ++j) {
      acc[j] += a.mass * p;
      p *= a.z;
    }
  }
  std::vector<double> out(K);
  for (int j = 0; j < K; ++j) out[j] = std::abs(acc[j]);
  return out;
}

bool moments_vanish(const JensenMeasure& sigma, const std::vector<double>& residuals, double tol) {
  const double rho = std::max(sigma.radius(), 1e-300);
  for (std::size_t j = 0; j < residuals.size(); ++j)
    if (residuals[j] > tol * std::pow(rho, static_cast<double>(j + 1))) return false;
  return true;
}

Complex eval_polynomial(const std::vector<Complex>& coeffs, Complex z) {
  Complex v = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * z + *it;
  return v;
}

JensenMeasure pushforward(const JensenMeasure& sigma, const std::vector<Complex>& coeffs) {
  if (coeffs.empty() || coeffs[0] != Complex(0.0)) throw DomainError("pushforward: F(0) must vanish");
  std::vector<Atom> atoms = sigma.atoms();
  for (auto& a : atoms) a.z = eval_polynomial(coeffs, a.z);
  return JensenMeasure(std::move(atoms));
}

SigmaDistribution sigma_distributions(const JensenMeasure& sigma, double lambda) {
  require_positive(lambda, "lambda");
  SigmaDistribution d;
  for (const auto& a : sigma.atoms()) {
    if (std::abs(a.z) >= lambda) d.total += a.mass;
    if (std::abs(a.z.imag()) >= lambda) d.imag += a.mass;
  }
  return d;
}

ImagIntegrals imag_distribution_integrals(const JensenMeasure& sigma, double lambda) {
  require_positive(lambda, "lambda");
  ImagIntegrals out;
  for (const auto& a : sigma.atoms()) {
    const double y = std::abs(a.z.imag());
    const double m = std::min(lambda, y);
    out.lower += a.mass * 0.5 * m * m;
    out.upper += a.mass * positive_part(y - lambda);
  }
  return out;
}

std::string jensen_to_json(const JensenMeasure& sigma) {
  return measure_to_json(PlanarMeasure(sigma.atoms()), true);
}

}  // namespace genusone
