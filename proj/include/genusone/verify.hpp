#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "genusone/fixtures.hpp"
#include "genusone/radial_curve.hpp"

namespace genusone {

enum class Status { pass, fail, hypotheses_unmet };
const char* status_name(Status s);

struct VerificationReport {
  std::string suite;
  std::string check;
  std::string fixture;
  std::string kind;  // identity, inequality or assertion
  std::vector<double> abscissa;
  std::vector<double> lhs;
  std::vector<double> rhs;
  // Residuals for identities, ratios lhs/rhs for inequalities.
  double max_stat = 0.0;
  double median_stat = 0.0;
  double constant = kNaN;         // fitted on the refined grid
  double constant_coarse = kNaN;  // fitted on the base grid
  double stability = kNaN;
  double tolerance = 0.0;
  Status status = Status::pass;
  std::string note;
  double runtime = 0.0;  // seconds
};

// max of lhs/rhs over a shared grid; +inf when rhs <= 0 where lhs > 0.
double fit_constant(const std::vector<double>& lhs, const std::vector<double>& rhs);

struct FitResult {
  double C = 0.0;
  double C_coarse = 0.0;
  double stability = 0.0;
  bool finite = true;
};
// Fits on the curves' grid and on every other node of it.
FitResult fit_constant(const RadialCurve& lhs, const RadialCurve& rhs);
// Fits on a base and a refined evaluation.
FitResult fit_constant(const std::vector<double>& lhs_coarse, const std::vector<double>& rhs_coarse,
                       const std::vector<double>& lhs_fine, const std::vector<double>& rhs_fine);

// Relative residual |a - b| / max(|a|, |b|, scale); 0 when all vanish.
double relative_residual(double a, double b, double scale = 0.0);

struct IdentityParams {
  double R = 3.0;
  std::vector<double> radii;  // tsuji_fft
  double tol = 1e-6;
  int tuples = 200;           // kernel identities
  std::uint64_t seed = 1;
};

// Identity names: levin, carleman, tsuji_fft, kernel_k1, kernel_k2, kernel_k3.
// Hypothesis failures yield Status::hypotheses_unmet instead of throwing.
VerificationReport check_identity(const std::string& name, const CanonicalFixture& fixture,
                                  const IdentityParams& params);
std::vector<std::string> identity_names();

// Grid minimum of u_f on |z| = s / max|f|, excluding points within kappa
// local sample spacings of the singular curve {1/f}.
struct PositivityResult {
  double min_value = 0.0;
  double max_value = 0.0;  // M(r_max, u_f) on the grid
  double r_max = 0.0;
  int evaluated = 0;
  int skipped = 0;
};
PositivityResult positivity_scan(const MeasuredFunction& fn, int n_radii = 24, int n_theta = 96,
                                 double reach = 4.0, double kappa = 4.0);
// Same rule on the real axis, 1e-3 r_max <= |x| <= r_max, evaluating v_f for
// vector samples and u_f otherwise.
PositivityResult real_axis_scan(const MeasuredFunction& fn, int per_decade = 16, double reach = 4.0,
                                double kappa = 4.0);

}  // namespace genusone
