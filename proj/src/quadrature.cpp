#include "genusone/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace genusone::quad {
namespace {

namespace bq = boost::math::quadrature;

auto sanitized(const Fn& f) {
  return [&f](double x) {
    const double v = f(x);
    return std::isfinite(v) ? v : 0.0;
  };
}

bq::tanh_sinh<double>& ts_rule() {
  thread_local bq::tanh_sinh<double> rule(12);
  return rule;
}

// Tanh-sinh, with Gauss-Kronrod as a fallback: tanh-sinh stalls on narrow
// pieces far from the origin where smooth integrands converge under Kronrod.
Result ts_estimate(const Fn& f, double a, double b, const Options& opt) {
  Result r;
  auto g = sanitized(f);
  r.value = ts_rule().integrate(g, a, b, opt.rel_tol, &r.error, &r.l1);
  const double target = std::max(opt.abs_tol, opt.rel_tol * r.l1);
  if (r.error <= 100.0 * target || !std::isfinite(a) || !std::isfinite(b)) return r;
  Result gk;
  gk.value = bq::gauss_kronrod<double, 15>::integrate(g, a, b, 8, opt.rel_tol, &gk.error, &gk.l1);
  return gk.error < r.error ? gk : r;
}

Result ts_piece(const Fn& f, double a, double b, const Options& opt, int depth, Result r) {
  const double target = std::max(opt.abs_tol, opt.rel_tol * r.l1);
  if (r.error <= 100.0 * target || depth >= opt.max_depth || !std::isfinite(a) || !std::isfinite(b)) return r;
  const double m = 0.5 * (a + b);
  Options sub = opt;
  sub.abs_tol = 0.5 * target;
  Result left = ts_estimate(f, a, m, sub), right = ts_estimate(f, m, b, sub);
  // No progress from bisection: the estimate is at the evaluation noise floor.
  if (left.error + right.error > 0.5 * r.error)
    return {left.value + right.value, left.error + right.error, left.l1 + right.l1};
  left = ts_piece(f, a, m, sub, depth + 1, left);
  right = ts_piece(f, m, b, sub, depth + 1, right);
  return {left.value + right.value, left.error + right.error, left.l1 + right.l1};
}

}  // namespace

Result tanh_sinh(const Fn& f, double a, double b, const Options& opt) {
  if (a == b) return {};
  if (a > b) {
    Result r = tanh_sinh(f, b, a, opt);
    r.value = -r.value;
    return r;
  }
  return ts_piece(f, a, b, opt, 0, ts_estimate(f, a, b, opt));
}

Result gauss_kronrod(const Fn& f, double a, double b, const Options& opt) {
  if (a == b) return {};
  Result r;
  auto g = sanitized(f);
  r.value = bq::gauss_kronrod<double, 15>::integrate(g, a, b, static_cast<unsigned>(opt.max_depth + 5),
                                                     opt.rel_tol, &r.error, &r.l1);
  return r;
}

Result integrate(const Fn& f, double a, double b, std::vector<double> breaks,
                 const Options& opt, Rule rule) {
  const double sign = a <= b ? 1.0 : -1.0;
  if (a > b) std::swap(a, b);
  std::vector<double> pts{a};
  std::sort(breaks.begin(), breaks.end());
  for (double x : breaks)
    if (x > pts.back() && x < b) pts.push_back(x);
  pts.push_back(b);
  Result total;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Result r = rule == Rule::tanh_sinh ? tanh_sinh(f, pts[i], pts[i + 1], opt)
                                             : gauss_kronrod(f, pts[i], pts[i + 1], opt);
    total.value += r.value;
    total.error += r.error;
    total.l1 += r.l1;
  }
  total.value *= sign;
  return total;
}

double gauss_legendre(const Fn& f, double a, double b, int points) {
  if (points == 10) return bq::gauss<double, 10>::integrate(f, a, b);
  if (points != 20) throw std::invalid_argument("gauss_legendre supports 10 or 20 points");
  return bq::gauss<double, 20>::integrate(f, a, b);
}

}  // namespace genusone::quad
