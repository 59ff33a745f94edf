#include "genusone/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace genusone {

namespace {

struct Grid {
  double lo = 0.0;
  double hi = 0.0;
  int n = 0;  // intervals
  double step() const { return (hi - lo) / n; }
  double node(int i) const { return i == n ? hi : lo + i * step(); }
};

std::vector<double> simpson_weights(int n, double dt) {
  std::vector<double> w(n + 1);
  for (int i = 0; i <= n; ++i) w[i] = (i == 0 || i == n) ? dt / 3 : (i % 2 ? 4 * dt / 3 : 2 * dt / 3);
  return w;
}

// Simpson sum of (h(t) - hx)/(t - x) over every `stride`-th node, with the
// removable point replaced by dhx.
double subtracted_sum(const std::vector<double>& h, const Grid& g, int stride, double x, double hx,
                      double dhx) {
  const int m = g.n / stride;
  const double dt = g.step() * stride;
  double s = 0.0;
  for (int j = 0; j <= m; ++j) {
    const double t = g.node(j * stride);
    const double d = t - x;
    const double q = std::abs(d) < 1e-9 * g.step() ? dhx : (h[j * stride] - hx) / d;
    const double c = (j == 0 || j == m) ? 1.0 : (j % 2 ? 4.0 : 2.0);
    s += c * q;
  }
  return s * dt / 3;
}

double log_term(const Grid& g, double x, double hx) {
  if (hx == 0.0) return 0.0;
  return hx * std::log(std::abs((g.hi - x) / (x - g.lo)));
}

// Integral of 1 / ((1 + t^2)(t - x)) over (U, inf) and (-inf, L).
double model_tail_right(double U, double x) {
  const double A = 1.0 / (1.0 + x * x);
  return A * (-std::log(U - x) + 0.5 * std::log1p(U * U) - x * (kPi / 2 - std::atan(U)));
}
double model_tail_left(double L, double x) {
  const double A = 1.0 / (1.0 + x * x);
  return A * (std::log(x - L) - 0.5 * std::log1p(L * L) - x * (std::atan(L) + kPi / 2));
}

Grid grid_for(const SmoothInput& in, const HilbertOptions& opt, int n) {
  if (!(in.b > in.a)) throw DomainError("support must satisfy a < b");
  if (in.decaying) return {in.a, in.b, n};
  const double w = in.b - in.a;
  const double c = 0.5 * (in.a + in.b);
  return {c - 0.5 * opt.width_factor * w, c + 0.5 * opt.width_factor * w, n};
}

double eval_h(const SmoothInput& in, double t) {
  if (!in.decaying && (t <= in.a || t >= in.b)) return 0.0;
  const double v = in.h(t);
  return std::isfinite(v) ? v : 0.0;
}

std::vector<double> sample(const SmoothInput& in, const Grid& g) {
  std::vector<double> h(g.n + 1);
  for (int i = 0; i <= g.n; ++i) h[i] = eval_h(in, g.node(i));
  return h;
}

double five_point(double m2, double m1, double p1, double p2, double dt) {
  return (m2 - 8 * m1 + 8 * p1 - p2) / (12 * dt);
}

struct Level {
  double g = 0.0;
  double err = 0.0;
};

Level smooth_level(const SmoothInput& in, const HilbertOptions& opt, const Grid& g,
                   const std::vector<double>& h, double x) {
  const double dt = g.step();
  const double hx = eval_h(in, x);
  const double dhx = five_point(eval_h(in, x - 2 * dt), eval_h(in, x - dt), eval_h(in, x + dt),
                                eval_h(in, x + 2 * dt), dt);
  const double fine = subtracted_sum(h, g, 1, x, hx, dhx);
  const double coarse = subtracted_sum(h, g, 2, x, hx, dhx);
  double v = fine + log_term(g, x, hx);
  if (opt.tail_extension && in.decaying) {
    const double cu = eval_h(in, g.hi) * (1 + g.hi * g.hi);
    const double cl = eval_h(in, g.lo) * (1 + g.lo * g.lo);
    v += cu * model_tail_right(g.hi, x) + cl * model_tail_left(g.lo, x);
  }
  return {v / kPi, std::abs(fine - coarse) / (15 * kPi)};
}

void check_options(const SmoothInput& in, const HilbertOptions& opt) {
  if (opt.intervals < 8 || opt.intervals % 4) throw DomainError("intervals must be a multiple of 4");
  if (in.decaying && !opt.tail_extension)
    throw DomainError("input '" + in.name + "' is not compactly supported; enable tail_extension");
}

}  // namespace

HilbertValue hilbert_pv(const SmoothInput& in, double x, const HilbertOptions& opt) {
  check_options(in, opt);
  if (!std::isfinite(x)) throw DomainError("hilbert_pv: x must be finite");
  HilbertValue out;
  for (int level = 0; level <= opt.max_doublings; ++level) {
    const Grid g = grid_for(in, opt, opt.intervals << level);
    if (in.decaying && (x <= g.lo || x >= g.hi))
      throw DomainError("hilbert_pv: x outside the tail-extension window");
    const auto h = sample(in, g);
    const Level lv = smooth_level(in, opt, g, h, x);
    out = {lv.g, lv.err, lv.err <= opt.target_tol};
    if (out.certified) break;
  }
  return out;
}

HilbertValue hilbert_pv(const SampledInput& in, std::size_t node) {
  const int n = static_cast<int>(in.h.size()) - 1;
  if (n < 8 || n % 4) throw DomainError("sampled input needs 4k+1 points, k >= 2");
  if (!(in.dt > 0)) throw DomainError("sampled input needs a positive spacing");
  if (node > static_cast<std::size_t>(n)) throw DomainError("hilbert_pv: node outside the grid");
  const Grid g{in.t0, in.t0 + n * in.dt, n};
  const int i = static_cast<int>(node);
  auto at = [&](int k) { return (k < 0 || k > n) ? 0.0 : in.h[k]; };
  const double x = g.node(i);
  const double hx = at(i);
  const double dhx = five_point(at(i - 2), at(i - 1), at(i + 1), at(i + 2), in.dt);
  const double fine = subtracted_sum(in.h, g, 1, x, hx, dhx);
  const double coarse = subtracted_sum(in.h, g, 2, x, hx, dhx);
  HilbertValue out;
  out.g = (fine + log_term(g, x, hx)) / kPi;
  out.error = std::abs(fine - coarse) / (15 * kPi);
  out.certified = true;
  return out;
}

namespace {

void finish_pair(HilbertPair& p, double dt) {
  const int n = static_cast<int>(p.t.size()) - 1;
  p.weights = simpson_weights(n, dt);
  int first = -1, last = -1;
  for (int i = 0; i <= n; ++i)
    if (p.h[i] != 0.0) {
      if (first < 0) first = i;
      last = i;
    }
  if (first < 0) {
    p.centre = 0.5 * (p.t.front() + p.t.back());
    p.support_radius = 0.0;
  } else {
    p.centre = 0.5 * (p.t[first] + p.t[last]);
    p.support_radius = 0.5 * (p.t[last] - p.t[first]) + dt;
  }
  p.moments.assign(64, 0.0);
  for (int i = 0; i <= n; ++i) {
    double pw = p.weights[i] * p.h[i];
    const double d = p.t[i] - p.centre;
    for (auto& m : p.moments) {
      m += pw;
      pw *= d;
    }
  }
  p.max_error = 0.0;
  for (double e : p.err) p.max_error = std::max(p.max_error, e);
}

}  // namespace

HilbertPair hilbert_pair(const SmoothInput& in, const HilbertOptions& opt) {
  check_options(in, opt);
  const Grid base = grid_for(in, opt, opt.intervals);
  HilbertPair p;
  p.t.resize(base.n + 1);
  for (int i = 0; i <= base.n; ++i) p.t[i] = base.node(i);
  p.h = sample(in, base);
  p.g.assign(base.n + 1, 0.0);
  p.err.assign(base.n + 1, 0.0);
  for (int level = 0; level <= opt.max_doublings; ++level) {
    const Grid g = grid_for(in, opt, opt.intervals << level);
    const auto h = sample(in, g);
    double worst = 0.0;
    for (int i = 0; i <= base.n; ++i) {
      const Level lv = smooth_level(in, opt, g, h, p.t[i]);
      p.g[i] = lv.g;
      p.err[i] = lv.err;
      worst = std::max(worst, lv.err);
    }
    p.certified = worst <= opt.target_tol;
    if (p.certified) break;
  }
  if (in.decaying) {
    p.weights = simpson_weights(base.n, base.step());
    p.max_error = *std::max_element(p.err.begin(), p.err.end());
    p.centre = 0.0;
    p.support_radius = kInf;
    return p;
  }
  finish_pair(p, base.step());
  return p;
}

HilbertPair hilbert_pair(const SampledInput& in) {
  const int n = static_cast<int>(in.h.size()) - 1;
  HilbertPair p;
  p.h = in.h;
  p.t.resize(n + 1);
  p.g.resize(n + 1);
  p.err.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    const auto v = hilbert_pv(in, i);
    p.t[i] = in.t0 + i * in.dt;
    p.g[i] = v.g;
    p.err[i] = v.error;
  }
  finish_pair(p, in.dt);
  return p;
}

double far_field(const HilbertPair& pair, double t) {
  if (!std::isfinite(pair.support_radius)) throw DomainError("far_field: pair has no compact support");
  if (pair.support_radius == 0.0) return 0.0;
  const double d = t - pair.centre;
  if (std::abs(d) < 2 * pair.support_radius) {
    double s = 0.0;
    for (std::size_t i = 0; i < pair.t.size(); ++i)
      if (pair.h[i] != 0.0) s += pair.weights[i] * pair.h[i] / (pair.t[i] - t);
    return s / kPi;
  }
  double s = 0.0, inv = 1.0 / d, pw = inv;
  for (double m : pair.moments) {
    s += m * pw;
    pw *= inv;
  }
  return -s / kPi;
}

MeasuredFunction make_hilbert_pair(const HilbertPair& pair, const PairFunctionOptions& opt) {
  const std::size_t n = pair.t.size();
  std::vector<Complex> values;
  std::vector<double> weights;
  values.reserve(n + 1024);
  weights.reserve(n + 1024);
  for (std::size_t i = 0; i < n; ++i) {
    values.emplace_back(pair.g[i], pair.h[i]);
    weights.push_back(pair.weights[i]);
  }
  if (!std::isfinite(pair.support_radius))
    throw DomainError("make_hilbert_pair: input must be compactly supported");
  for (int side : {1, -1}) {
    const double edge = side > 0 ? pair.t.back() : pair.t.front();
    const double d0 = std::abs(edge - pair.centre);
    if (!(opt.tail_end > d0)) continue;
    const double span = std::log(opt.tail_end / d0);
    int m = static_cast<int>(std::ceil(span / std::log(10.0) * opt.tail_per_decade));
    m += m % 2;
    const auto w = simpson_weights(m, span / m);
    for (int j = 0; j <= m; ++j) {
      const double d = d0 * std::exp(span * j / m);
      const double t = pair.centre + side * d;
      values.emplace_back(far_field(pair, t), 0.0);
      weights.push_back(w[j] * d);
    }
  }
  return MeasuredFunction::complex_valued(std::move(values), std::move(weights));
}

MeasuredFunction make_hilbert_pair(const SmoothInput& in, const HilbertOptions& opt) {
  return make_hilbert_pair(hilbert_pair(in, opt));
}

double far_field_lp_tail(const HilbertPair& pair, double p, const PairFunctionOptions& opt) {
  if (pair.moments.empty()) return 0.0;
  const double c = std::abs(pair.moments[0]) / kPi;
  return 2 * std::pow(c, p) * std::pow(opt.tail_end, 1 - p) / (p - 1);
}

namespace {

double bump(double t) { return std::abs(t) < 1.0 ? std::exp(-1.0 / (1.0 - t * t)) : 0.0; }

const std::map<std::string, SmoothInput>& registry() {
  static const std::map<std::string, SmoothInput> r = [] {
    std::map<std::string, SmoothInput> m;
    m["bump"] = {"bump", bump, -1.0, 1.0};
    m["bump_shifted"] = {"bump_shifted", [](double t) { return 2.0 * bump((t - 1.0) / 0.5); }, 0.5, 1.5};
    m["bump_odd"] = {"bump_odd", [](double t) { return t * bump(t); }, -1.0, 1.0};
    m["bump_pair"] = {"bump_pair",
                      [](double t) { return bump((t + 2.0) / 0.7) + 0.5 * bump((t - 1.5) / 1.2); },
                      -2.7, 2.7};
    m["bump_wave"] = {"bump_wave", [](double t) { return bump(t) * std::cos(3.0 * t); }, -1.0, 1.0};
    m["lorentzian"] = {"lorentzian", [](double t) { return 1.0 / (1.0 + t * t); }, -50.0, 50.0, true};
    return m;
  }();
  return r;
}

}  // namespace

SmoothInput smooth_bump() { return registry().at("bump"); }

SmoothInput named_input(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw DomainError("unknown transform input '" + name + "'");
  return it->second;
}

std::vector<std::string> named_inputs() {
  std::vector<std::string> out;
  for (const auto& [k, v] : registry()) out.push_back(k);
  return out;
}

}  // namespace genusone
