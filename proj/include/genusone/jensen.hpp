#pragma once

#include <vector>

#include "genusone/measures.hpp"
#include "genusone/types.hpp"

namespace genusone {

// Finitely atomic probability measure, meant to represent the origin for
// subharmonic functions.
class JensenMeasure {
 public:
  JensenMeasure() = default;
  // Weights must be positive and sum to one (to 1e-12).
  explicit JensenMeasure(std::vector<Atom> atoms);

  // N equally weighted points on |z| = rho.
  static JensenMeasure uniform_circle(int n, double rho = 1.0);
  // Harmonic measure of the disk |z - centre| < rho seen from the origin,
  // discretized at n equally spaced boundary points; requires |centre| < rho.
  static JensenMeasure offset_disk(int n, Complex centre, double rho);

  const std::vector<Atom>& atoms() const { return atoms_; }
  double radius() const { return radius_; }

 private:
  std::vector<Atom> atoms_;
  double radius_ = 0.0;
};

// V(z) = sum w_k log|1 - z zeta_k|; -inf when z zeta_k = 1.
double potential_V(const JensenMeasure& sigma, Complex z);

// |sum w_k zeta_k^j| for j = 1..K.
std::vector<double> moment_check(const JensenMeasure& sigma, int K);
// True when residual j is at most tol * radius^j for every j.
bool moments_vanish(const JensenMeasure& sigma, const std::vector<double>& residuals,
                    double tol = 1e-10);

// F(z) = sum_{k>=1} coeffs[k] z^k; coeffs[0] must vanish.
Complex eval_polynomial(const std::vector<Complex>& coeffs, Complex z);
JensenMeasure pushforward(const JensenMeasure& sigma, const std::vector<Complex>& coeffs);

struct SigmaDistribution {
  double total = 0.0;  // sigma(|z| >= lambda)
  double imag = 0.0;   // sigma(|Im z| >= lambda)
};
SigmaDistribution sigma_distributions(const JensenMeasure& sigma, double lambda);

// The two integrals of the imaginary-part distribution in closed form:
// int_0^lambda s sigma_I(s) ds and int_lambda^inf sigma_I(s) ds.
struct ImagIntegrals {
  double lower = 0.0;
  double upper = 0.0;
};
ImagIntegrals imag_distribution_integrals(const JensenMeasure& sigma, double lambda);

std::string jensen_to_json(const JensenMeasure& sigma);

}  // namespace genusone
