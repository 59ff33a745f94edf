#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "genusone/types.hpp"

namespace genusone {

struct Atom {
  Complex z;
  double mass = 0.0;
};

// Density on a segment [a, b] of the real axis (endpoints may be infinite):
// rho(x) = |x|^power * sum_k coeffs[k] x^k.
struct LineDensity {
  double a = 0.0;
  double b = 0.0;
  std::vector<double> coeffs;
  double power = 0.0;

  double operator()(double x) const;
  // Integral of rho(x) * x^j * |x|^q over [lo, hi] intersected with [a, b];
  // +inf when any monomial term diverges.
  double weighted_integral(double lo, double hi, int j = 0, double q = 0.0) const;
  // Principal value of the integral of rho(x)/x over [lo, hi] intersected with
  // [a, b]; NaN when the principal value does not exist.
  double pv_inverse_integral(double lo, double hi) const;
};

class PlanarMeasure {
 public:
  PlanarMeasure() = default;
  explicit PlanarMeasure(std::vector<Atom> atoms, std::vector<LineDensity> densities = {});

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<LineDensity>& densities() const { return densities_; }
  bool empty() const { return atoms_.empty() && densities_.empty(); }

  // Integral of min(1/|z|, 1/|z|^2) dmu and derived flags, computed at construction.
  double genus_norm() const { return genus_norm_; }
  bool genus_one() const { return std::isfinite(genus_norm_); }
  // Tail condition plus existence of the principal value of the integral of
  // dmu/zeta near the origin; implied by genus_one().
  bool pv_admissible() const { return pv_admissible_; }
  // True when every atom lies on the real axis.
  bool real_supported() const;
  bool conjugation_symmetric(double tol = 1e-14) const;
  double total_mass() const;

 private:
  void validate_and_classify();

  std::vector<Atom> atoms_;
  std::vector<LineDensity> densities_;
  double genus_norm_ = 0.0;
  bool pv_admissible_ = true;
};

inline constexpr double kDiskSlack = 1e-12;

// mu({|z| <= r}).
double counting_mu(const PlanarMeasure& mu, double r);
// Levin-Tsuji counting function: mass in the two closed disks |z -+ ir/2| <= r/2.
double counting_levin_tsuji(const PlanarMeasure& mu, double r);

struct NormResult {
  double value = 0.0;
  bool finite = true;
};
NormResult genus_one_norm(const PlanarMeasure& mu);

// Reflects the upper half-plane part into the lower half-plane, merging
// atoms that land on the same point.
PlanarMeasure reflect_to_lower(const PlanarMeasure& mu);

enum class Projector { modulus, imag_part, hat_norm };

// Weighted samples of a complex- or R^{n+1}-valued function.
class MeasuredFunction {
 public:
  MeasuredFunction() = default;
  static MeasuredFunction complex_valued(std::vector<Complex> values, std::vector<double> weights);
  static MeasuredFunction vector_valued(std::size_t dim, std::vector<double> flat,
                                        std::vector<double> weights);

  bool is_vector() const { return dim_ > 0; }
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return weights_.size(); }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<Complex>& values() const { return values_; }
  const double* vector_at(std::size_t k) const { return flat_.data() + k * dim_; }
  const std::vector<double>& flat() const { return flat_; }

  double norm_at(std::size_t k) const;
  double projected(std::size_t k, Projector p) const;
  // Sum of w * min(|f|, |f|^2).
  double condition_norm() const;

 private:
  std::vector<Complex> values_;
  std::vector<double> flat_;
  std::vector<double> weights_;
  std::size_t dim_ = 0;
};

double distribution(const MeasuredFunction& fn, double lambda, Projector p);

// Riesz measure of the logarithmic determinant: atoms at 1/f_k with mass w_k.
PlanarMeasure pushforward_measure(const MeasuredFunction& fn);

std::string measure_to_json(const PlanarMeasure& mu, bool jensen_tag = false);
PlanarMeasure measure_from_json(const std::string& text);
std::string function_to_json(const MeasuredFunction& fn);
MeasuredFunction function_from_json(const std::string& text);

}  // namespace genusone
