#pragma once

#include <map>
#include <string>
#include <vector>

namespace genusone {

enum class Interp { linear, step };

// c * t^exponent, used to extend a curve below its first and beyond its last radius.
struct PowerTail {
  double coeff = 0.0;
  double exponent = 0.0;
  double operator()(double t) const;
};

class RadialCurve {
 public:
  RadialCurve() = default;
  RadialCurve(std::string name, std::vector<double> radii, std::vector<double> values,
              Interp interp = Interp::linear);

  const std::string& name() const { return name_; }
  const std::vector<double>& radii() const { return radii_; }
  const std::vector<double>& values() const { return values_; }
  Interp interp() const { return interp_; }
  std::size_t size() const { return radii_.size(); }
  double r_min() const { return radii_.front(); }
  double r_max() const { return radii_.back(); }

  // Interpolated value; tail models outside [r_min, r_max].
  double operator()(double t) const;

  // Tails are power laws continuous at the end nodes, with exponents fitted
  // by the log-log secant across the first/last decade.
  const PowerTail& left_tail() const { return left_; }
  const PowerTail& right_tail() const { return right_; }
  void set_tails(PowerTail left, PowerTail right);

  bool nondecreasing(double slack = 1e-12) const;
  RadialCurve scaled(double c) const;
  RadialCurve mapped(double (*fn)(double), std::string name) const;

  std::map<std::string, std::string> meta;

 private:
  void fit_tails();

  std::string name_;
  std::vector<double> radii_;
  std::vector<double> values_;
  Interp interp_ = Interp::linear;
  PowerTail left_;
  PowerTail right_;
};

// Logarithmic grid with `per_decade` points per decade covering [lo, hi].
std::vector<double> log_grid(double lo, double hi, int per_decade);

// Integral over [lo, hi] of v(t) t^q dt, and of v(t) t^q (1 + log^b(t/r0)) dt
// for lo >= r0. Tail models extend v outside the sampled range; +inf signals
// a divergent tail.
double curve_integral(const RadialCurve& c, double lo, double hi, double q);
double curve_integral_log(const RadialCurve& c, double lo, double hi, double q, double r0, double b);

}  // namespace genusone
