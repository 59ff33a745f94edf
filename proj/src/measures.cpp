#include "genusone/measures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "json.hpp"

namespace genusone {
namespace {

// Integral of s^e over [s0, s1] with 0 <= s0 <= s1 <= inf.
double power_integral(double e, double s0, double s1) {
  if (s0 >= s1) return 0.0;
  if (std::abs(e + 1.0) < 1e-14) {
    if (s0 == 0.0 || std::isinf(s1)) return kInf;
    return std::log(s1 / s0);
  }
  if (e < -1.0) {
    if (s0 == 0.0) return kInf;
    const double top = std::isinf(s1) ? 0.0 : std::pow(s1, e + 1.0);
    return (top - std::pow(s0, e + 1.0)) / (e + 1.0);
  }
  if (std::isinf(s1)) return kInf;
  return (std::pow(s1, e + 1.0) - std::pow(s0, e + 1.0)) / (e + 1.0);
}

double parity_sign(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

double LineDensity::operator()(double x) const {
  if (x < a || x > b) return 0.0;
  double poly = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) poly = poly * x + *it;
  if (power == 0.0) return poly;
  return std::pow(std::abs(x), power) * poly;
}

double LineDensity::weighted_integral(double lo, double hi, int j, double q) const {
  const double L = std::max(lo, a);
  const double H = std::min(hi, b);
  if (!(L < H)) return 0.0;
  double total = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const double c = coeffs[k];
    if (c == 0.0) continue;
    const double e = static_cast<double>(k) + j + power + q;
    if (H > 0.0) {
      const double v = power_integral(e, std::max(L, 0.0), H);
      if (std::isinf(v)) return kInf;
      total += c * v;
    }
    if (L < 0.0) {
      const double v = power_integral(e, std::max(-H, 0.0), -L);
      if (std::isinf(v)) return kInf;
      total += c * parity_sign(static_cast<int>(k) + j) * v;
    }
  }
  return total;
}

double LineDensity::pv_inverse_integral(double lo, double hi) const {
  const double L = std::max(lo, a);
  const double H = std::min(hi, b);
  if (!(L < H)) return 0.0;
  const bool straddles = L < 0.0 && H > 0.0;
  double total = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const double c = coeffs[k];
    if (c == 0.0) continue;
    const int n = static_cast<int>(k) - 1;
    const double e = n + power;
    const bool odd_integrand = (n % 2 != 0);
    if (straddles && e <= -1.0 + 1e-14) {
      if (!odd_integrand) return kNaN;
      // Symmetric part cancels; only the one-sided remainder survives.
      const double s = std::min(-L, H);
      double v = 0.0;
      if (H > s) v += power_integral(e, s, H);
      if (-L > s) v += parity_sign(n) * power_integral(e, s, -L);
      if (std::isinf(v)) return kNaN;
      total += c * v;
      continue;
    }
    double v = 0.0;
    if (H > 0.0) v += power_integral(e, std::max(L, 0.0), H);
    if (L < 0.0) v += parity_sign(n) * power_integral(e, std::max(-H, 0.0), -L);
    if (std::isinf(v)) return kNaN;
    total += c * v;
  }
  return total;
}

PlanarMeasure::PlanarMeasure(std::vector<Atom> atoms, std::vector<LineDensity> densities)
    : atoms_(std::move(atoms)), densities_(std::move(densities)) {
  validate_and_classify();
}

void PlanarMeasure::validate_and_classify() {
  for (const Atom& at : atoms_) {
    if (!(at.mass >= 0.0) || !std::isfinite(at.mass))
      throw DomainError("atom masses must be finite and non-negative");
    if (!std::isfinite(at.z.real()) || !std::isfinite(at.z.imag()))
      throw DomainError("atom locations must be finite");
  }
  for (const LineDensity& d : densities_) {
    if (!(d.a < d.b)) throw DomainError("density segment needs a < b");
    if (d.coeffs.empty()) throw DomainError("density needs at least one coefficient");
    const double lo = std::isinf(d.a) ? -1e6 : d.a;
    const double hi = std::isinf(d.b) ? 1e6 : d.b;
    const int n = 400;
    for (int i = 0; i <= n; ++i) {
      double x = lo + (hi - lo) * i / n;
      if (x == 0.0) continue;
      const double v = d(x);
      if (std::isfinite(v) && v < -1e-12 * (1.0 + std::abs(v)))
        throw DomainError("density takes negative values");
    }
    if (std::isinf(d.weighted_integral(-1.0, 1.0)))
      throw DomainError("density is not locally integrable at the origin");
  }
  genus_norm_ = genus_one_norm(*this).value;
  bool tail_ok = true;
  bool pv_ok = true;
  for (const Atom& at : atoms_)
    if (at.mass > 0.0 && at.z == Complex(0.0, 0.0)) pv_ok = false;
  for (const LineDensity& d : densities_) {
    if (std::isinf(d.weighted_integral(-kInf, -1.0, 0, -2.0)) ||
        std::isinf(d.weighted_integral(1.0, kInf, 0, -2.0)))
      tail_ok = false;
    if (std::isnan(d.pv_inverse_integral(-1.0, 1.0))) pv_ok = false;
  }
  pv_admissible_ = tail_ok && pv_ok;
}

bool PlanarMeasure::real_supported() const {
  return std::all_of(atoms_.begin(), atoms_.end(),
                     [](const Atom& a) { return a.mass == 0.0 || a.z.imag() == 0.0; });
}

bool PlanarMeasure::conjugation_symmetric(double tol) const {
  double upper = 0.0;
  for (const Atom& a : atoms_) {
    if (a.z.imag() == 0.0 || a.mass == 0.0) continue;
    double mirror = 0.0;
    for (const Atom& b : atoms_)
      if (std::abs(b.z - std::conj(a.z)) <= tol * (1.0 + std::abs(a.z))) mirror += b.mass;
    double self = 0.0;
    for (const Atom& b : atoms_)
      if (std::abs(b.z - a.z) <= tol * (1.0 + std::abs(a.z))) self += b.mass;
    if (std::abs(mirror - self) > tol * (1.0 + self)) return false;
    upper += a.mass;
  }
  return true;
}

double PlanarMeasure::total_mass() const {
  double m = 0.0;
  for (const Atom& a : atoms_) m += a.mass;
  for (const LineDensity& d : densities_) m += d.weighted_integral(-kInf, kInf);
  return m;
}

double counting_mu(const PlanarMeasure& mu, double r) {
  require_positive(r, "radius");
  double total = 0.0;
  for (const Atom& a : mu.atoms())
    if (std::abs(a.z) <= r + kDiskSlack) total += a.mass;
  for (const LineDensity& d : mu.densities()) total += d.weighted_integral(-r, r);
  return total;
}

double counting_levin_tsuji(const PlanarMeasure& mu, double r) {
  require_positive(r, "radius");
  double total = 0.0;
  for (const Atom& a : mu.atoms()) {
    const double y = a.z.imag();
    if (y == 0.0) continue;
    const Complex centre(0.0, std::copysign(0.5 * r, y));
    if (std::abs(a.z - centre) <= 0.5 * r + kDiskSlack) total += a.mass;
  }
  return total;
}

NormResult genus_one_norm(const PlanarMeasure& mu) {
  double v = 0.0;
  for (const Atom& a : mu.atoms()) {
    if (a.mass == 0.0) continue;
    const double m = std::abs(a.z);
    if (m == 0.0) return {kInf, false};
    v += a.mass * std::min(1.0 / m, 1.0 / (m * m));
  }
  for (const LineDensity& d : mu.densities()) {
    v += d.weighted_integral(-1.0, 1.0, 0, -1.0);
    v += d.weighted_integral(-kInf, -1.0, 0, -2.0);
    v += d.weighted_integral(1.0, kInf, 0, -2.0);
  }
  if (!std::isfinite(v)) return {kInf, false};
  return {v, true};
}

PlanarMeasure reflect_to_lower(const PlanarMeasure& mu) {
  std::map<std::pair<double, double>, double> merged;
  std::vector<std::pair<double, double>> order;
  for (const Atom& a : mu.atoms()) {
    const Complex w = a.z.imag() > 0.0 ? std::conj(a.z) : a.z;
    const auto key = std::make_pair(w.real(), w.imag());
    auto [it, inserted] = merged.emplace(key, 0.0);
    if (inserted) order.push_back(key);
    it->second += a.mass;
  }
  std::vector<Atom> atoms;
  atoms.reserve(order.size());
  for (const auto& key : order) atoms.push_back({Complex(key.first, key.second), merged[key]});
  return PlanarMeasure(std::move(atoms), mu.densities());
}

MeasuredFunction MeasuredFunction::complex_valued(std::vector<Complex> values,
                                                  std::vector<double> weights) {
  if (values.size() != weights.size()) throw DomainError("values and weights differ in length");
  for (double w : weights)
    if (!(w >= 0.0)) throw DomainError("weights must be non-negative");
  MeasuredFunction f;
  f.values_ = std::move(values);
  f.weights_ = std::move(weights);
  return f;
}

MeasuredFunction MeasuredFunction::vector_valued(std::size_t dim, std::vector<double> flat,
                                                 std::vector<double> weights) {
  if (dim < 2) throw DomainError("vector samples need dimension n+1 >= 2");
  if (flat.size() != dim * weights.size()) throw DomainError("sample array has the wrong size");
  for (double w : weights)
    if (!(w >= 0.0)) throw DomainError("weights must be non-negative");
  MeasuredFunction f;
  f.dim_ = dim;
  f.flat_ = std::move(flat);
  f.weights_ = std::move(weights);
  return f;
}

double MeasuredFunction::norm_at(std::size_t k) const {
  if (!is_vector()) return std::abs(values_[k]);
  const double* v = vector_at(k);
  double s = 0.0;
  for (std::size_t j = 0; j < dim_; ++j) s += v[j] * v[j];
  return std::sqrt(s);
}

double MeasuredFunction::projected(std::size_t k, Projector p) const {
  if (p == Projector::modulus) return norm_at(k);
  if (!is_vector()) return std::abs(values_[k].imag());
  const double* v = vector_at(k);
  double s = 0.0;
  for (std::size_t j = 1; j < dim_; ++j) s += v[j] * v[j];
  return std::sqrt(s);
}

double MeasuredFunction::condition_norm() const {
  double s = 0.0;
  for (std::size_t k = 0; k < size(); ++k) {
    const double n = norm_at(k);
    s += weights_[k] * std::min(n, n * n);
  }
  return s;
}

double distribution(const MeasuredFunction& fn, double lambda, Projector p) {
  require_positive(lambda, "lambda");
  double total = 0.0;
  for (std::size_t k = 0; k < fn.size(); ++k)
    if (fn.projected(k, p) >= lambda) total += fn.weights()[k];
  return total;
}

PlanarMeasure pushforward_measure(const MeasuredFunction& fn) {
  std::vector<Atom> atoms;
  atoms.reserve(fn.size());
  for (std::size_t k = 0; k < fn.size(); ++k) {
    Complex f;
    if (fn.is_vector())
      f = Complex(fn.vector_at(k)[0], fn.projected(k, Projector::hat_norm));
    else
      f = fn.values()[k];
    if (f == Complex(0.0, 0.0) || fn.weights()[k] == 0.0) continue;
    atoms.push_back({1.0 / f, fn.weights()[k]});
  }
  return PlanarMeasure(std::move(atoms));
}

namespace {

using nlohmann::json;

json encode_real(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double decode_real(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return kInf;
    if (s == "-inf") return -kInf;
    throw DomainError("unrecognised numeric string: " + s);
  }
  return j.get<double>();
}

}  // namespace

std::string measure_to_json(const PlanarMeasure& mu, bool jensen_tag) {
  json j;
  j["kind"] = "planar_measure";
  j["atoms"] = json::array();
  for (const Atom& a : mu.atoms()) j["atoms"].push_back({a.z.real(), a.z.imag(), a.mass});
  j["densities"] = json::array();
  for (const LineDensity& d : mu.densities())
    j["densities"].push_back({{"a", encode_real(d.a)},
                              {"b", encode_real(d.b)},
                              {"poly_coeffs", d.coeffs},
                              {"power", d.power}});
  j["genus_one"] = mu.genus_one();
  if (jensen_tag) j["jensen"] = true;
  return j.dump(2);
}

PlanarMeasure measure_from_json(const std::string& text) {
  const json j = json::parse(text);
  std::vector<Atom> atoms;
  for (const auto& a : j.value("atoms", json::array())) {
    if (a.size() != 3) throw DomainError("atoms are [re, im, mass] triples");
    atoms.push_back({Complex(a[0].get<double>(), a[1].get<double>()), a[2].get<double>()});
  }
  std::vector<LineDensity> dens;
  for (const auto& d : j.value("densities", json::array())) {
    LineDensity ld;
    ld.a = decode_real(d.at("a"));
    ld.b = decode_real(d.at("b"));
    ld.coeffs = d.at("poly_coeffs").get<std::vector<double>>();
    ld.power = d.value("power", 0.0);
    dens.push_back(std::move(ld));
  }
  return PlanarMeasure(std::move(atoms), std::move(dens));
}

std::string function_to_json(const MeasuredFunction& fn) {
  json j;
  if (fn.is_vector()) {
    j["kind"] = "vector_function";
    j["dim"] = fn.dim();
    j["samples"] = json::array();
    for (std::size_t k = 0; k < fn.size(); ++k) {
      std::vector<double> row(fn.vector_at(k), fn.vector_at(k) + fn.dim());
      row.push_back(fn.weights()[k]);
      j["samples"].push_back(row);
    }
  } else {
    j["kind"] = "measured_function";
    j["samples"] = json::array();
    for (std::size_t k = 0; k < fn.size(); ++k)
      j["samples"].push_back({fn.values()[k].real(), fn.values()[k].imag(), fn.weights()[k]});
  }
  return j.dump(2);
}

MeasuredFunction function_from_json(const std::string& text) {
  const json j = json::parse(text);
  const std::string kind = j.value("kind", "measured_function");
  if (kind == "vector_function") {
    const std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<double> flat;
    std::vector<double> w;
    for (const auto& row : j.at("samples")) {
      if (row.size() != dim + 1) throw DomainError("vector sample has the wrong length");
      for (std::size_t i = 0; i < dim; ++i) flat.push_back(row[i].get<double>());
      w.push_back(row[dim].get<double>());
    }
    return MeasuredFunction::vector_valued(dim, std::move(flat), std::move(w));
  }
  std::vector<Complex> vals;
  std::vector<double> w;
  for (const auto& row : j.at("samples")) {
    if (row.size() != 3) throw DomainError("samples are [re, im, weight] triples");
    vals.emplace_back(row[0].get<double>(), row[1].get<double>());
    w.push_back(row[2].get<double>());
  }
  return MeasuredFunction::complex_valued(std::move(vals), std::move(w));
}

}  // namespace genusone
