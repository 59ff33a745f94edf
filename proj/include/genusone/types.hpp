#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace genusone {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

inline constexpr const char* kVersion = "0.1.0";

// Argument in (-pi, pi]; the lower branch cut value -pi is folded to +pi.
inline double argument(Complex z) {
  double a = std::atan2(z.imag(), z.real());
  if (a <= -kPi) a = kPi;
  return a;
}

inline double positive_part(double v) { return v > 0.0 ? v : 0.0; }
inline double negative_part(double v) { return v < 0.0 ? -v : 0.0; }

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when an input violates the analytic hypotheses of a check
// (divergent tails, non-Cauchy principal values, degenerate boundaries).
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_positive(double r, const char* what) {
  if (!(r > 0.0) || !std::isfinite(r))
    throw DomainError(std::string(what) + " must be a positive finite number");
}

}  // namespace genusone
