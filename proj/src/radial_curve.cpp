#include "genusone/radial_curve.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

#include "genusone/quadrature.hpp"
#include "genusone/types.hpp"

namespace genusone {

double PowerTail::operator()(double t) const {
  if (coeff == 0.0) return 0.0;
  return coeff * std::pow(t, exponent);
}

RadialCurve::RadialCurve(std::string name, std::vector<double> radii, std::vector<double> values,
                         Interp interp)
    : name_(std::move(name)), radii_(std::move(radii)), values_(std::move(values)), interp_(interp) {
  if (radii_.empty() || radii_.size() != values_.size())
    throw DomainError("curve needs matching, non-empty radii and values");
  for (std::size_t i = 0; i < radii_.size(); ++i) {
    if (!(radii_[i] > 0.0)) throw DomainError("curve radii must be positive");
    if (i > 0 && !(radii_[i] > radii_[i - 1])) throw DomainError("curve radii must be strictly increasing");
  }
  fit_tails();
}

namespace {

// Secant exponent between the end radius and one decade inward, so grids that
// share decade nodes extrapolate identically.
PowerTail fit_end(const std::vector<double>& r, const std::vector<double>& v, bool left) {
  const std::size_t n = r.size();
  const std::size_t end = left ? 0 : n - 1;
  const double v0 = v[end];
  const double r0 = r[end];
  if (!(v0 > 0.0) || n < 2) return {};
  const double target = left ? r0 * 10.0 : r0 / 10.0;
  double rt = target, vt = 0.0;
  if (left ? target >= r.back() : target <= r.front()) {
    rt = left ? r.back() : r.front();
    vt = left ? v.back() : v.front();
  } else {
    auto it = std::upper_bound(r.begin(), r.end(), target);
    const std::size_t i = static_cast<std::size_t>(it - r.begin()) - 1;
    const double w = i + 1 < n ? (target - r[i]) / (r[i + 1] - r[i]) : 0.0;
    vt = i + 1 < n ? v[i] + w * (v[i + 1] - v[i]) : v[i];
  }
  double a = 0.0;
  if (vt > 0.0 && rt != r0) a = std::log(v0 / vt) / std::log(r0 / rt);
  return {v0 / std::pow(r0, a), a};
}

}  // namespace

void RadialCurve::fit_tails() {
  left_ = fit_end(radii_, values_, true);
  right_ = fit_end(radii_, values_, false);
}

void RadialCurve::set_tails(PowerTail left, PowerTail right) {
  left_ = left;
  right_ = right;
}

double RadialCurve::operator()(double t) const {
  if (t < radii_.front()) return left_(t);
  if (t > radii_.back()) return right_(t);
  auto it = std::upper_bound(radii_.begin(), radii_.end(), t);
  if (it == radii_.end()) return values_.back();
  const std::size_t i = static_cast<std::size_t>(it - radii_.begin()) - 1;
  if (interp_ == Interp::step) return values_[i];
  const double w = (t - radii_[i]) / (radii_[i + 1] - radii_[i]);
  return values_[i] + w * (values_[i + 1] - values_[i]);
}

bool RadialCurve::nondecreasing(double slack) const {
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i] < values_[i - 1] - slack * std::max(1.0, std::abs(values_[i - 1]))) return false;
  return true;
}

RadialCurve RadialCurve::scaled(double c) const {
  std::vector<double> v = values_;
  for (double& x : v) x *= c;
  RadialCurve out(name_, radii_, std::move(v), interp_);
  out.set_tails({left_.coeff * c, left_.exponent}, {right_.coeff * c, right_.exponent});
  out.meta = meta;
  return out;
}

RadialCurve RadialCurve::mapped(double (*fn)(double), std::string name) const {
  std::vector<double> v = values_;
  for (double& x : v) x = fn(x);
  RadialCurve out(std::move(name), radii_, std::move(v), interp_);
  out.meta = meta;
  return out;
}

std::vector<double> log_grid(double lo, double hi, int per_decade) {
  if (!(lo > 0.0 && hi > lo) || per_decade < 1) throw DomainError("invalid logarithmic grid");
  const double decades = std::log10(hi / lo);
  const int n = static_cast<int>(std::ceil(decades * per_decade - 1e-9));
  std::vector<double> g;
  g.reserve(n + 1);
  for (int i = 0; i <= n; ++i) g.push_back(lo * std::pow(10.0, static_cast<double>(i) / per_decade));
  g.back() = std::max(g.back(), hi);
  return g;
}

namespace {

// Integral of c t^e log^b(t/r0) over [x0, inf), x0 >= r0, e < -1.
double tail_log_integral(double c, double e, double x0, double r0, double b) {
  const double k = -(e + 1.0);
  const double s0 = std::log(x0 / r0);
  return c * std::pow(r0, e + 1.0) * boost::math::tgamma(b + 1.0, k * s0) / std::pow(k, b + 1.0);
}

// Integral of c t^e over [s0, s1].
double tail_power_integral(double c, double e, double s0, double s1) {
  if (c == 0.0 || s0 >= s1) return 0.0;
  if (std::abs(e + 1.0) < 1e-14) {
    if (s0 == 0.0 || std::isinf(s1)) return kInf;
    return c * std::log(s1 / s0);
  }
  if (e < -1.0 && s0 == 0.0) return kInf;
  if (e > -1.0 && std::isinf(s1)) return kInf;
  const double top = std::isinf(s1) ? 0.0 : std::pow(s1, e + 1.0);
  const double bot = s0 == 0.0 ? 0.0 : std::pow(s0, e + 1.0);
  return c * (top - bot) / (e + 1.0);
}

// Gauss-Legendre in s = log t over [lo, hi], split so each piece spans at most
// a factor `ratio`.
double log_space_integral(const std::function<double(double)>& g, double lo, double hi, double ratio) {
  if (!(lo < hi)) return 0.0;
  const double span = std::log(hi / lo);
  const int pieces = std::max(1, static_cast<int>(std::ceil(span / std::log(ratio))));
  const double h = span / pieces;
  const double s_lo = std::log(lo);
  double total = 0.0;
  for (int i = 0; i < pieces; ++i) {
    const double a = s_lo + i * h;
    total += quad::gauss_legendre([&](double s) { const double t = std::exp(s); return g(t) * t; }, a, a + h);
  }
  return total;
}

double integral_impl(const RadialCurve& c, double lo, double hi, double q, double r0, double b) {
  if (!(lo < hi)) return 0.0;
  const bool use_log = b > 0.0;
  if (use_log && lo < r0 * (1.0 - 1e-14)) throw DomainError("logarithmic weight needs lo >= r0");
  auto weight = [&](double t) {
    double w = std::pow(t, q);
    if (use_log) w *= 1.0 + std::pow(std::max(std::log(t / r0), 0.0), b);
    return w;
  };
  const auto& R = c.radii();
  const auto& V = c.values();
  double total = 0.0;

  // Left tail.
  if (lo < R.front()) {
    const double top = std::min(hi, R.front());
    const PowerTail& L = c.left_tail();
    if (!use_log) {
      total += tail_power_integral(L.coeff, L.exponent + q, lo, top);
    } else {
      if (lo == 0.0) throw DomainError("logarithmic weight undefined at 0");
      total += log_space_integral([&](double t) { return L(t) * weight(t); }, lo, top, 1.1);
    }
  }
  // Interior segments.
  const double a = std::max(lo, R.front());
  const double z = std::min(hi, R.back());
  if (a < z) {
    auto it = std::upper_bound(R.begin(), R.end(), a);
    std::size_t i = it == R.begin() ? 0 : static_cast<std::size_t>(it - R.begin()) - 1;
    for (; i + 1 < R.size() && R[i] < z; ++i) {
      const double s0 = std::max(a, R[i]);
      const double s1 = std::min(z, R[i + 1]);
      if (!(s0 < s1)) continue;
      const double t0 = R[i], t1 = R[i + 1];
      const double v0 = V[i], v1 = V[i + 1];
      auto g = [&](double t) {
        const double v = c.interp() == Interp::step ? v0 : v0 + (t - t0) / (t1 - t0) * (v1 - v0);
        return v * weight(t);
      };
      total += log_space_integral(g, s0, s1, 1.5);
    }
  }
  // Right tail.
  if (hi > R.back()) {
    const double from = std::max(lo, R.back());
    const PowerTail& T = c.right_tail();
    if (T.coeff != 0.0) {
      const double e = T.exponent + q;
      if (std::isinf(hi) && e >= -1.0) return kInf;
      total += tail_power_integral(T.coeff, e, from, hi);
      if (use_log) {
        if (std::isinf(hi))
          total += tail_log_integral(T.coeff, e, from, r0, b);
        else
          total += log_space_integral([&](double t) { return T(t) * std::pow(t, q) * std::pow(std::log(t / r0), b); },
                                      from, hi, 1.1);
      }
    }
  }
  return total;
}

}  // namespace

double curve_integral(const RadialCurve& c, double lo, double hi, double q) {
  return integral_impl(c, lo, hi, q, 1.0, 0.0);
}

double curve_integral_log(const RadialCurve& c, double lo, double hi, double q, double r0, double b) {
  return integral_impl(c, lo, hi, q, r0, b);
}

}  // namespace genusone
