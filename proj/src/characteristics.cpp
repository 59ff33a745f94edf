#include "genusone/characteristics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "genusone/parallel.hpp"
#include "genusone/quadrature.hpp"

namespace genusone {

double max_modulus(const SubharmonicField& u, double r, const ScanOptions& opt) {
  require_positive(r, "radius");
  int n = std::max(8, opt.n_theta);
  std::vector<double> vals(n);
  for (int j = 0; j < n; ++j) vals[j] = u(std::polar(r, 2.0 * kPi * j / n));
  double prev = kNaN;
  while (true) {
    int arg = -1;
    for (int j = 0; j < n; ++j)
      if (std::isfinite(vals[j]) && (arg < 0 || vals[j] > vals[arg])) arg = j;
    if (arg < 0) throw DomainError("field is singular on the whole circle");
    const double h = 2.0 * kPi / n;
    const double th = 2.0 * kPi * arg / n;
    auto neg = [&](double t) {
      const double v = u(std::polar(r, t));
      return std::isfinite(v) ? -v : 1e300;
    };
    const auto res = boost::math::tools::brent_find_minima(neg, th - h, th + h, 40);
    const double best = std::max(vals[arg], -res.second);
    if (!std::isnan(prev) && std::abs(best - prev) <= opt.rel_tol * std::max(std::abs(best), 1e-300))
      return best;
    if (2 * n > opt.max_theta) return best;
    prev = best;
    std::vector<double> next(2 * n);
    for (int j = 0; j < n; ++j) {
      next[2 * j] = vals[j];
      next[2 * j + 1] = u(std::polar(r, 2.0 * kPi * (2 * j + 1) / (2 * n)));
    }
    vals.swap(next);
    n *= 2;
  }
}

namespace {

// Sign-change locations of g between consecutive sample nodes, refined by TOMS 748.
std::vector<double> sign_changes(const std::function<double(double)>& g, const std::vector<double>& nodes) {
  std::vector<double> roots;
  if (nodes.empty()) return roots;
  double x0 = nodes.front();
  double g0 = g(x0);
  for (std::size_t j = 1; j < nodes.size(); ++j) {
    const double x1 = nodes[j];
    const double g1 = g(x1);
    if (std::isfinite(g0) && std::isfinite(g1) && ((g0 < 0.0 && g1 > 0.0) || (g0 > 0.0 && g1 < 0.0))) {
      boost::uintmax_t iters = 80;
      const auto br = boost::math::tools::toms748_solve(
          g, x0, x1, g0, g1, boost::math::tools::eps_tolerance<double>(50), iters);
      roots.push_back(0.5 * (br.first + br.second));
    }
    x0 = x1;
    g0 = g1;
  }
  return roots;
}

// Uniform midpoints of [a, b], eight extra nodes between consecutive breaks,
// nodes geometric toward each interior break and, when graded, nodes geometric in the distance to either endpoint.
std::vector<double> scan_nodes(double a, double b, int samples, std::vector<double> breaks, bool graded) {
  std::vector<double> x;
  for (int j = 0; j < samples; ++j) x.push_back(a + (b - a) * (j + 0.5) / samples);
  breaks.push_back(a);
  breaks.push_back(b);
  std::sort(breaks.begin(), breaks.end());
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double w = breaks[i + 1] - breaks[i];
    for (int k = 1; k < 8; ++k) x.push_back(breaks[i] + w * k / 8.0);
    // A log singularity just off the contour gives a narrow negative dip
    // whose two roots share one uniform cell.
    for (double d = w / 8.0; d > 1e-12 * (b - a); d /= std::pow(10.0, 1.0 / 8)) {
      if (i > 0) x.push_back(breaks[i] + d);
      if (i + 2 < breaks.size()) x.push_back(breaks[i + 1] - d);
    }
  }
  if (graded) {
    const double h = (b - a) / samples;
    for (double d = h; d > 1e-9 * (b - a); d /= std::pow(10.0, 1.0 / 16)) {
      x.push_back(a + d);
      x.push_back(b - d);
    }
  }
  std::sort(x.begin(), x.end());
  std::vector<double> out;
  for (double v : x)
    if (v > a && v < b && (out.empty() || v > out.back())) out.push_back(v);
  return out;
}

constexpr std::size_t kMaxSingularBreaks = 256;

}  // namespace

double nevanlinna_T(const SubharmonicField& u, double r, double rel_tol) {
  require_positive(r, "radius");
  auto g = [&](double th) { return u(std::polar(r, th)); };
  std::vector<double> breaks{0.5 * kPi, kPi, 1.5 * kPi};
  if (u.singular_points().size() <= kMaxSingularBreaks)
    for (Complex s : u.singular_points())
      if (std::abs(std::abs(s) - r) < 0.5 * r) {
        double a = argument(s);
        if (a < 0.0) a += 2.0 * kPi;
        breaks.push_back(a);
      }
  const auto roots = sign_changes(g, scan_nodes(0.0, 2.0 * kPi, 256, breaks, false));
  breaks.insert(breaks.end(), roots.begin(), roots.end());
  quad::Options qo;
  qo.rel_tol = rel_tol;
  auto plus = [&](double th) { return positive_part(g(th)); };
  return quad::integrate(plus, 0.0, 2.0 * kPi, breaks, qo).value / (2.0 * kPi);
}

namespace {

Complex tangent_point(double r, double th, bool upper) {
  const Complex z = std::polar(r * std::sin(th), th);
  return upper ? z : std::conj(z);
}

double tangent_angle_near(Complex w, double r) {
  const double psi = argument(w - Complex(0.0, 0.5 * r));
  double th = 0.5 * (psi + 0.5 * kPi);
  if (th < 0.0) th += kPi;
  return th;
}

std::vector<double> tangent_breaks(const SubharmonicField& u, double r, bool upper) {
  std::vector<double> b{0.5 * kPi};
  if (u.singular_points().size() > kMaxSingularBreaks) return b;
  for (Complex s : u.singular_points()) {
    const Complex w = upper ? s : std::conj(s);
    if (w == Complex(0.0, 0.0)) continue;
    const double d = std::abs(std::abs(w - Complex(0.0, 0.5 * r)) - 0.5 * r);
    if (d < 0.5 * r) b.push_back(tangent_angle_near(w, r));
  }
  return b;
}

// Probes |g| at angles where the tangent point r e^{i theta} sin(theta) lies
// well inside the smallest singular modulus, i.e. where u = O(|z|^2) for an
// admissible field, and rejects 1/theta growth.
void check_endpoint_integrability(const std::function<double(double)>& g, const SubharmonicField& u, double r) {
  double rho = r;
  for (Complex s : u.singular_points()) rho = std::min(rho, std::abs(s));
  const double e0 = std::min(1e-4, 1e-4 * rho / r);
  for (bool left : {true, false}) {
    auto at = [&](double e) { return std::abs(g(left ? e : kPi - e)); };
    const double g4 = at(e0), g5 = at(0.1 * e0), g6 = at(0.01 * e0);
    if (!(g6 > 1e-300 && g5 > 1e-300 && g4 > 1e-300)) continue;
    const double s1 = std::log10(g5 / g4);
    const double s2 = std::log10(g6 / g5);
    if (s1 >= 0.97 && s2 >= 0.97)
      throw HypothesisError("tangent-circle integrand is not integrable at the real axis");
  }
}

}  // namespace

TsujiPair tsuji_characteristics(const SubharmonicField& u, double r, double rel_tol) {
  require_positive(r, "radius");
  TsujiPair out;
  quad::Options qo;
  qo.rel_tol = rel_tol;
  for (bool upper : {true, false}) {
    auto g = [&](double th) {
      const double s = std::sin(th);
      if (s < 1e-150) return 0.0;
      return u(tangent_point(r, th, upper)) / (r * s * s);
    };
    check_endpoint_integrability(g, u, r);
    std::vector<double> breaks = tangent_breaks(u, r, upper);
    const auto roots = sign_changes(g, scan_nodes(0.0, kPi, 256, breaks, true));
    breaks.insert(breaks.end(), roots.begin(), roots.end());
    out.T += quad::integrate([&](double th) { return positive_part(g(th)); }, 0.0, kPi, breaks, qo).value;
    out.m += quad::integrate([&](double th) { return negative_part(g(th)); }, 0.0, kPi, breaks, qo).value;
  }
  out.T /= 2.0 * kPi;
  out.m /= 2.0 * kPi;
  return out;
}

double tsuji_T(const SubharmonicField& u, double r) { return tsuji_characteristics(u, r).T; }
double tsuji_m(const SubharmonicField& u, double r) { return tsuji_characteristics(u, r).m; }

double levin_lhs(const SubharmonicField& u, double R, double rel_tol) {
  require_positive(R, "R");
  quad::Options qo;
  qo.rel_tol = rel_tol;
  double total = 0.0;
  for (bool upper : {true, false}) {
    auto g = [&](double th) {
      const double s = std::sin(th);
      if (s < 1e-150) return 0.0;
      return u(tangent_point(R, th, upper)) / (R * s * s);
    };
    check_endpoint_integrability(g, u, R);
    total += quad::integrate(g, 0.0, kPi, tangent_breaks(u, R, upper), qo).value;
  }
  return total / (2.0 * kPi);
}

double levin_rhs(const PlanarMeasure& mu, double R) {
  require_positive(R, "R");
  std::vector<double> jumps;
  for (const Atom& a : mu.atoms()) {
    if (a.mass == 0.0 || a.z.imag() == 0.0) continue;
    const double t = 1.0 / std::abs((1.0 / a.z).imag());
    if (t <= R) jumps.push_back(t);
  }
  std::sort(jumps.begin(), jumps.end());
  jumps.erase(std::unique(jumps.begin(), jumps.end()), jumps.end());
  double total = 0.0;
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    const double next = i + 1 < jumps.size() ? jumps[i + 1] : R;
    total += counting_levin_tsuji(mu, jumps[i]) * (1.0 / jumps[i] - 1.0 / next);
  }
  return total;
}

double carleman_lhs(const SubharmonicField& u, double R, double rel_tol) {
  require_positive(R, "R");
  quad::Options qo;
  qo.rel_tol = rel_tol;
  std::vector<double> line_breaks{0.0};
  std::vector<double> arc_breaks{0.5 * kPi};
  if (u.singular_points().size() <= kMaxSingularBreaks) {
    for (Complex s : u.singular_points()) {
      if (std::abs(s.real()) < R && std::abs(s.imag()) < 0.5 * R) line_breaks.push_back(s.real());
      if (std::abs(std::abs(s) - R) < 0.5 * R && s.imag() > 0.0) arc_breaks.push_back(argument(s));
    }
  }
  const double inv_R2 = 1.0 / (R * R);
  auto line = [&](double t) { return u(Complex(t, 0.0)) * (1.0 / (t * t) - inv_R2); };
  auto arc = [&](double ph) { return u(std::polar(R, ph)) * std::sin(ph); };
  const double a = quad::integrate(line, -R, R, line_breaks, qo).value;
  const double b = quad::integrate(arc, 0.0, kPi, arc_breaks, qo).value;
  return a / (2.0 * kPi) + b / (kPi * R);
}

double carleman_rhs(const PlanarMeasure& mu, double R) {
  require_positive(R, "R");
  double total = 0.0;
  for (const Atom& a : mu.atoms()) {
    if (!(a.z.imag() > 0.0) || std::abs(a.z) > R + kDiskSlack) continue;
    total += a.mass * (1.0 / std::norm(a.z) - 1.0 / (R * R)) * a.z.imag();
  }
  return total;
}

namespace {

// Grid radii merged with the jump radii of an atomic counting function, so
// that step interpolation reproduces the function exactly inside the grid.
std::vector<double> with_jumps(const std::vector<double>& radii, std::vector<double> jumps) {
  std::vector<double> out = radii;
  for (double j : jumps)
    if (std::isfinite(j) && j > radii.front() && j < radii.back()) out.push_back(j);
  std::sort(out.begin(), out.end());
  std::vector<double> merged;
  for (double r : out)
    if (merged.empty() || r > merged.back() * (1.0 + 1e-13)) merged.push_back(r);
  return merged;
}

}  // namespace

RadialCurve curve_mu(const PlanarMeasure& mu, const std::vector<double>& radii) {
  const bool steps = mu.densities().empty();
  std::vector<double> jumps;
  if (steps)
    for (const Atom& a : mu.atoms()) jumps.push_back(std::abs(a.z));
  const std::vector<double> grid = steps ? with_jumps(radii, jumps) : radii;
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) v[i] = counting_mu(mu, grid[i]);
  return RadialCurve("mu", grid, std::move(v), steps ? Interp::step : Interp::linear);
}

RadialCurve curve_n(const PlanarMeasure& mu, const std::vector<double>& radii) {
  std::vector<double> jumps;
  for (const Atom& a : mu.atoms()) {
    const double im = std::abs((1.0 / a.z).imag());
    if (im > 0.0) jumps.push_back(1.0 / im);
  }
  const std::vector<double> grid = with_jumps(radii, jumps);
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) v[i] = counting_levin_tsuji(mu, grid[i]);
  return RadialCurve("n", grid, std::move(v), Interp::step);
}

RadialCurve curve_M(const SubharmonicField& u, const std::vector<double>& radii, int workers) {
  auto v = parallel_map(radii.size(), workers, [&](std::size_t i) { return max_modulus(u, radii[i]); });
  return RadialCurve("M", radii, std::move(v));
}

RadialCurve curve_T(const SubharmonicField& u, const std::vector<double>& radii, int workers) {
  auto v = parallel_map(radii.size(), workers, [&](std::size_t i) { return nevanlinna_T(u, radii[i]); });
  return RadialCurve("T", radii, std::move(v));
}

RadialCurve curve_tsuji_m(const SubharmonicField& u, const std::vector<double>& radii, int workers) {
  auto v = parallel_map(radii.size(), workers, [&](std::size_t i) { return tsuji_m(u, radii[i]); });
  return RadialCurve("tsuji_m", radii, std::move(v));
}

namespace {

std::string join_radii(const std::vector<double>& xs) {
  std::ostringstream os;
  char buf[32];
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", xs[i]);
    os << (i ? ";" : "") << buf;
  }
  return os.str();
}

}  // namespace

RadialCurve curve_real_negative(const SubharmonicField& u, const std::vector<double>& radii, int workers) {
  auto raw = parallel_map(radii.size(), workers, [&](std::size_t i) {
    const double a = u(Complex(radii[i], 0.0));
    const double b = u(Complex(-radii[i], 0.0));
    if (std::isinf(a) || std::isinf(b)) return kNaN;
    return negative_part(a) + negative_part(b);
  });
  std::vector<double> r, v, skipped;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (std::isnan(raw[i])) {
      skipped.push_back(radii[i]);
      continue;
    }
    r.push_back(radii[i]);
    v.push_back(raw[i]);
  }
  RadialCurve c("u_minus", std::move(r), std::move(v));
  c.meta["skipped"] = join_radii(skipped);
  return c;
}

RadialCurve delta_curve(const SubharmonicField& u, const PlanarMeasure& mu, const std::vector<double>& radii,
                        int workers) {
  // Each jump of n is resolved by a node pair straddling it.
  std::vector<double> jumps;
  for (const Atom& a : mu.atoms()) {
    const double im = std::abs((1.0 / a.z).imag());
    if (im > 0.0) {
      jumps.push_back(1.0 / im);
      jumps.push_back((1.0 - 1e-9) / im);
    }
  }
  const RadialCurve w = curve_real_negative(u, with_jumps(radii, jumps), workers);
  std::vector<double> v(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) v[i] = counting_levin_tsuji(mu, w.radii()[i]) + w.values()[i];
  RadialCurve c("delta", w.radii(), std::move(v));
  c.meta = w.meta;
  return c;
}

double delta_star(const RadialCurve& delta, double r) {
  require_positive(r, "radius");
  const double a = curve_integral(delta, 0.0, r, -2.0);
  const double b = curve_integral_log(delta, r, kInf, -3.0, r, 1.0);
  if (!std::isfinite(a) || !std::isfinite(b))
    throw HypothesisError("integrals of delta/t^2 at 0 or delta log t/t^3 at infinity diverge");
  return r * a + r * r * b;
}

RadialCurve delta_star_curve(const RadialCurve& delta, const std::vector<double>& radii) {
  std::vector<double> v(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) v[i] = delta_star(delta, radii[i]);
  RadialCurve c("delta_star", radii, std::move(v));
  c.meta = delta.meta;
  return c;
}

void require_coverage(const RadialCurve& c, double r, double kappa) {
  const double lo = r / kappa;
  const double hi = r * kappa;
  const double eps = 1e-12;
  if (c.r_min() > lo * (1.0 + eps) || c.r_max() < hi * (1.0 - eps)) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "curve '%s' covers [%g, %g] but [%g, %g] is required", c.name().c_str(),
                  c.r_min(), c.r_max(), lo, hi);
    throw DomainError(buf);
  }
}

namespace {

double two_sided(const RadialCurve& c, double r) {
  require_coverage(c, r);
  return r * curve_integral(c, 0.0, r, -2.0) + r * r * curve_integral(c, r, kInf, -3.0);
}

}  // namespace

double rhs_borel(const RadialCurve& mu, double r) { return two_sided(mu, r); }

double rhs_marcinkiewicz(const RadialCurve& n, double r) { return two_sided(n, r); }

double rhs_theorem1(const RadialCurve& n, const RadialCurve& m, double r) {
  require_coverage(m, r);
  return two_sided(n, r) + r * r * curve_integral(m, r, kInf, -2.0);
}

double rhs_theorem2(const RadialCurve& dstar, double r) {
  require_coverage(dstar, r);
  RadialCurve s = dstar.mapped([](double x) { return std::sqrt(std::max(x, 0.0)); }, "sqrt_delta_star");
  const PowerTail& L = dstar.left_tail();
  const PowerTail& R = dstar.right_tail();
  s.set_tails({std::sqrt(std::max(L.coeff, 0.0)), 0.5 * L.exponent},
              {std::sqrt(std::max(R.coeff, 0.0)), 0.5 * R.exponent});
  const double I = curve_integral(s, r, kInf, -2.0);
  return r * r * I * I;
}

double rhs_corollary5(const RadialCurve& delta, double r, double eps) {
  require_coverage(delta, r);
  return r * curve_integral(delta, 0.0, r, -2.0) + r * r * curve_integral_log(delta, r, kInf, -3.0, r, 3.0 + eps);
}

double rhs_real_line(const RadialCurve& uminus, double r) { return two_sided(uminus, r); }

double rhs_lemma1(const RadialCurve& phi, double r) {
  require_coverage(phi, r);
  return curve_integral(phi, 0.0, r, 0.0) / r + r * curve_integral(phi, r, kInf, -2.0);
}

}  // namespace genusone
