#include "genusone/suites.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>

#include "genusone/canonical.hpp"
#include "genusone/characteristics.hpp"
#include "genusone/kernels.hpp"
#include "genusone/parallel.hpp"
#include "genusone/quadrature.hpp"

namespace genusone {

namespace {

using Clock = std::chrono::steady_clock;
using Reports = std::vector<VerificationReport>;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// One resolution of an inequality: lhs and rhs on a shared abscissa.
struct Sample {
  std::vector<double> x, lhs, rhs;
  void add(double a, double l, double r) {
    x.push_back(a);
    lhs.push_back(l);
    rhs.push_back(r);
  }
};

VerificationReport inequality(const std::string& check, const std::string& fixture, const Sample& coarse,
                              const Sample& fine, double band, std::string note = {}) {
  VerificationReport r;
  r.check = check;
  r.fixture = fixture;
  r.kind = "inequality";
  r.abscissa = fine.x;
  r.lhs = fine.lhs;
  r.rhs = fine.rhs;
  const FitResult fit = fit_constant(coarse.lhs, coarse.rhs, fine.lhs, fine.rhs);
  r.constant = fit.C;
  r.constant_coarse = fit.C_coarse;
  r.stability = fit.stability;
  r.tolerance = band;
  std::vector<double> ratios;
  for (std::size_t i = 0; i < fine.lhs.size(); ++i)
    if (fine.lhs[i] > 0.0) ratios.push_back(fine.rhs[i] > 0.0 ? fine.lhs[i] / fine.rhs[i] : kInf);
  r.max_stat = fit.C;
  if (!ratios.empty()) {
    std::sort(ratios.begin(), ratios.end());
    r.median_stat = ratios[ratios.size() / 2];
  }
  r.status = fit.finite && fit.stability <= band ? Status::pass : Status::fail;
  r.note = std::move(note);
  return r;
}

VerificationReport unmet(const std::string& check, const std::string& fixture, const std::string& why) {
  VerificationReport r;
  r.check = check;
  r.fixture = fixture;
  r.kind = "inequality";
  r.status = Status::hypotheses_unmet;
  r.note = why;
  return r;
}

VerificationReport assertion(const std::string& check, const std::string& fixture, bool ok, double stat,
                             double tol, std::string note = {}) {
  VerificationReport r;
  r.check = check;
  r.fixture = fixture;
  r.kind = "assertion";
  r.max_stat = stat;
  r.tolerance = tol;
  r.status = ok ? Status::pass : Status::fail;
  r.note = std::move(note);
  return r;
}

// Largest constant over the fixture family for each inequality check.
void add_family(Reports& out, double band) {
  std::vector<std::string> checks;
  for (const auto& r : out)
    if (r.kind == "inequality" && std::find(checks.begin(), checks.end(), r.check) == checks.end())
      checks.push_back(r.check);
  for (const auto& check : checks) {
    Sample c, f;
    int n = 0;
    for (const auto& r : out) {
      if (r.check != check || r.kind != "inequality" || r.status == Status::hypotheses_unmet) continue;
      if (std::isnan(r.constant)) continue;
      c.add(n, r.constant_coarse, 1.0);
      f.add(n, r.constant, 1.0);
      ++n;
    }
    if (n == 0) continue;
    VerificationReport fam = inequality(check, "family", c, f, band, std::to_string(n) + " fixtures");
    fam.abscissa.clear();
    fam.lhs.clear();
    fam.rhs.clear();
    fam.kind = "family";
    out.push_back(std::move(fam));
  }
}

// Runs fn over the items in parallel, isolating failures per item.
template <class T, class F>
Reports for_each_fixture(const std::vector<T>& items, const SuiteConfig& cfg, F&& fn) {
  std::vector<const T*> keep;
  for (const auto& it : items)
    if (fixture_selected(it.id, cfg.fixtures)) keep.push_back(&it);
  auto parts = parallel_map(keep.size(), cfg.workers, [&](std::size_t i) {
    const auto t0 = Clock::now();
    Reports rs;
    try {
      rs = fn(*keep[i]);
    } catch (const HypothesisError& e) {
      rs = {unmet("hypotheses", keep[i]->id, e.what())};
    } catch (const std::exception& e) {
      VerificationReport r = unmet("error", keep[i]->id, e.what());
      r.status = Status::fail;
      rs = {r};
    }
    const double dt = seconds_since(t0);
    for (auto& r : rs) r.runtime = dt / std::max<std::size_t>(rs.size(), 1);
    return rs;
  });
  Reports out;
  for (auto& p : parts)
    for (auto& r : p) out.push_back(std::move(r));
  return out;
}

std::vector<double> merged(std::vector<double> g, const std::vector<double>& extra) {
  if (g.empty()) return g;
  const double lo = g.front(), hi = g.back();
  for (double x : extra)
    if (x > lo && x < hi) g.push_back(x);
  std::sort(g.begin(), g.end());
  std::vector<double> out;
  for (double x : g)
    if (out.empty() || x > out.back() * (1.0 + 1e-13)) out.push_back(x);
  return out;
}

class Memo {
 public:
  explicit Memo(std::function<double(double)> f) : f_(std::move(f)) {}
  double operator()(double r) {
    auto it = cache_.find(r);
    if (it != cache_.end()) return it->second;
    const double v = f_(r);
    cache_.emplace(r, v);
    return v;
  }
  std::vector<double> operator()(const std::vector<double>& rs) {
    std::vector<double> v(rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i) v[i] = (*this)(rs[i]);
    return v;
  }

 private:
  std::function<double(double)> f_;
  std::map<double, double> cache_;
};

// Curves of one canonical fixture, memoized across grid resolutions.
struct Canon {
  const CanonicalFixture& fx;
  const SuiteConfig& cfg;
  Memo M, T, tm;

  Canon(const CanonicalFixture& f, const SuiteConfig& c)
      : fx(f),
        cfg(c),
        M([&f](double r) { return max_modulus(f.field, r); }),
        T([&f](double r) { return nevanlinna_T(f.field, r); }),
        tm([&f](double r) { return tsuji_m(f.field, r); }) {}

  std::vector<double> full(int pd) const { return log_grid(cfg.span_lo, cfg.span_hi, pd); }
  std::vector<double> interior(int pd) const { return log_grid(cfg.span_lo * 10.0, cfg.span_hi / 10.0, pd); }
  std::vector<double> mu_jumps() const {
    std::vector<double> j;
    for (const Atom& a : fx.mu.atoms()) j.push_back(std::abs(a.z));
    return j;
  }
  RadialCurve curve(const char* name, Memo& m, const std::vector<double>& radii) {
    return RadialCurve(name, radii, m(radii));
  }
};

// Two resolutions of the radius grid.
template <class F>
std::pair<Sample, Sample> both(const SuiteConfig& cfg, F&& at) {
  Sample c = at(cfg.per_decade);
  Sample f = at(2 * cfg.per_decade);
  return {std::move(c), std::move(f)};
}

bool canonical_nonnegative(const CanonicalFixture& fx, const SuiteConfig& cfg) {
  for (double r : log_grid(cfg.span_lo, cfg.span_hi, 4))
    for (int j = 0; j < 16; ++j) {
      const double v = fx.field(std::polar(r, 2.0 * kPi * j / 16));
      if (v < -1e-9 * std::max(1.0, r * r)) return false;
    }
  return true;
}

// ---------------------------------------------------------------- identities

Reports identity_suite(const std::string& name, const SuiteConfig& cfg) {
  Reports out;
  if (name == "kernel_identities") {
    IdentityParams p;
    p.seed = cfg.seed;
    p.tol = 1e-8;
    CanonicalFixture none;
    none.id = "random_tuples";
    if (!fixture_selected(none.id, cfg.fixtures)) return out;
    for (const char* k : {"kernel_k1", "kernel_k2", "kernel_k3"}) {
      out.push_back(check_identity(k, none, p));
      out.back().note = std::to_string(p.tuples) + " tuples";
    }
    return out;
  }
  const auto fixtures = atomic_fixtures(20, cfg.seed);
  return for_each_fixture(fixtures, cfg, [&](const CanonicalFixture& fx) {
    IdentityParams p;
    p.R = fx.R;
    p.tol = cfg.identity_tol;
    p.seed = cfg.seed;
    if (name == "tsuji_fft")
      for (int i = 0; i < 16; ++i) p.radii.push_back(0.1 * std::pow(100.0, i / 15.0));
    return Reports{check_identity(name, fx, p)};
  });
}

// Nevanlinna tail bound from H(z) <= 2|z|: T(r) <= 2 r sum m / |zeta|.
double atomic_linear_bound(const PlanarMeasure& mu) {
  double s = 0.0;
  for (const Atom& a : mu.atoms()) s += 2.0 * a.mass / std::abs(a.z);
  return s;
}

Reports lemma5_suite(const SuiteConfig& cfg) {
  const auto fixtures = atomic_fixtures(20, cfg.seed);
  return for_each_fixture(fixtures, cfg, [&](const CanonicalFixture& fx) {
    // Gauss-Legendre in s = log r, one panel per decade up to X, at 10 and 20
    // points; the rule difference is charged against the inequality.
    const double X = 1e3;
    const std::vector<double> Rs = {0.1, 1.0, 10.0};
    Memo T([&](double r) { return nevanlinna_T(fx.field, r); });
    Memo TT([&](double r) { return tsuji_characteristics(fx.field, r, 1e-8).T; });
    auto lhs_f = [&](double s) { return T(std::exp(s)) * std::exp(-2.0 * s); };
    auto rhs_f = [&](double s) { return TT(std::exp(s)) * std::exp(-s); };
    auto integral = [&](double R, const std::function<double(double)>& f, int points) {
      double v = 0.0;
      for (double a = std::log(R); a < std::log(X) - 1e-9; a += std::log(10.0))
        v += quad::gauss_legendre(f, a, a + std::log(10.0), points);
      return v;
    };
    const double tail = atomic_linear_bound(fx.mu) / X;
    VerificationReport rep;
    rep.check = "lemma5";
    rep.fixture = fx.id;
    rep.kind = "assertion";
    bool ok = true;
    double worst = 0.0;
    for (double R : Rs) {
      const double l10 = integral(R, lhs_f, 10), l20 = integral(R, lhs_f, 20);
      const double r10 = integral(R, rhs_f, 10), r20 = integral(R, rhs_f, 20);
      const double upper = l20 + std::abs(l20 - l10) + tail;
      const double lower = r20 - std::abs(r20 - r10);
      rep.abscissa.push_back(R);
      rep.lhs.push_back(upper);
      rep.rhs.push_back(lower);
      ok = ok && upper <= lower;
      worst = std::max(worst, lower > 0.0 ? upper / lower : kInf);
    }
    rep.max_stat = worst;
    rep.tolerance = 1.0;
    rep.status = ok ? Status::pass : Status::fail;
    rep.note = "upper bound of int_R^inf T/r^3 (tail beyond 1e3 bounded by 2 sum m/|zeta| / r^2) vs lower bound "
               "of int_R^inf Tsuji-T/r^2, R in {0.1, 1, 10}";
    return Reports{rep};
  });
}

// ---------------------------------------------------------------- transforms

struct NamedInput {
  std::string id;
  SmoothInput in;
};

std::vector<NamedInput> bump_inputs() {
  std::vector<NamedInput> out;
  for (const auto& in : hilbert_inputs()) out.push_back({in.name, in});
  return out;
}

double positivity_floor(const PositivityResult& p) { return -1e-6 * std::max(1.0, p.max_value); }

VerificationReport positivity_report(const std::string& id, const MeasuredFunction& fn) {
  const PositivityResult p = positivity_scan(fn);
  VerificationReport r = assertion("positivity", id, p.min_value >= positivity_floor(p), p.min_value,
                                   -positivity_floor(p));
  r.abscissa = {p.r_max};
  r.lhs = {p.min_value};
  r.rhs = {positivity_floor(p)};
  r.note = "evaluated " + std::to_string(p.evaluated) + ", skipped " + std::to_string(p.skipped) +
           ", M(r_max) " + fmt("%.6g", p.max_value);
  return r;
}

Reports positivity_suite(const SuiteConfig& cfg) {
  return for_each_fixture(bump_inputs(), cfg, [&](const NamedInput& b) {
    HilbertOptions ho;
    ho.intervals = cfg.hilbert_intervals;
    return Reports{positivity_report(b.id, make_hilbert_pair(b.in, ho))};
  });
}

// int_0^lambda s m(s) ds and int_lambda^inf m(s) ds for the distribution of
// the projected samples, both in closed form.
void distribution_integrals(const MeasuredFunction& fn, Projector p, double lambda, double& lower,
                            double& upper) {
  lower = upper = 0.0;
  for (std::size_t k = 0; k < fn.size(); ++k) {
    const double y = fn.projected(k, p), w = fn.weights()[k];
    const double m = std::min(lambda, y);
    lower += w * 0.5 * m * m;
    upper += w * positive_part(y - lambda);
  }
}

double max_projected(const MeasuredFunction& fn, Projector p) {
  double m = 0.0;
  for (std::size_t k = 0; k < fn.size(); ++k) m = std::max(m, fn.projected(k, p));
  return m;
}

double lp_norm(const MeasuredFunction& fn, Projector p, double q, double extra = 0.0) {
  double s = extra;
  for (std::size_t k = 0; k < fn.size(); ++k) s += fn.weights()[k] * std::pow(fn.projected(k, p), q);
  return std::pow(s, 1.0 / q);
}

Projector imag_projector(const MeasuredFunction& fn) {
  return fn.is_vector() ? Projector::hat_norm : Projector::imag_part;
}

// Marcinkiewicz form: m_f(lambda) against the two integrals of m_{Im f}.
Sample marcinkiewicz_sample(const MeasuredFunction& fn, const std::vector<double>& lambdas) {
  Sample s;
  const Projector ip = imag_projector(fn);
  for (double l : lambdas) {
    double lo, up;
    distribution_integrals(fn, ip, l, lo, up);
    s.add(l, distribution(fn, l, Projector::modulus), lo / (l * l) + up / l);
  }
  return s;
}

Sample kolmogorov_sample(const MeasuredFunction& fn, const std::vector<double>& lambdas) {
  Sample s;
  const double l1 = lp_norm(fn, imag_projector(fn), 1.0);
  for (double l : lambdas) s.add(l, l * distribution(fn, l, Projector::modulus), l1);
  return s;
}

std::vector<double> lambda_grid(double top, int pd) { return log_grid(top * 1e-6, top, pd); }

// Levels below ten times |f| at the outermost samples probe beyond the sampled
// range (tan-spaced nodes of a function decaying like 1/t).
std::vector<double> lambda_grid(double top, int pd, const MeasuredFunction& coarse) {
  const std::size_t n = coarse.size();
  const double edge = n == 0 ? 0.0 : 10.0 * std::max(coarse.norm_at(0), coarse.norm_at(n - 1));
  return log_grid(std::max(top * 1e-6, std::min(edge, top * 1e-2)), top, pd);
}

const double kRieszP[] = {1.25, 1.5, 1.75};

std::string pname(const char* base, double p) { return std::string(base) + fmt("_p%.2f", p); }

Reports marcinkiewicz_suite(const SuiteConfig& cfg) {
  Reports out = for_each_fixture(bump_inputs(), cfg, [&](const NamedInput& b) {
    HilbertOptions ho;
    ho.intervals = cfg.hilbert_intervals;
    const HilbertPair pc = hilbert_pair(b.in, ho);
    ho.intervals *= 2;
    const HilbertPair pf = hilbert_pair(b.in, ho);
    const MeasuredFunction fc = make_hilbert_pair(pc), ff = make_hilbert_pair(pf);
    const double top = std::max(max_projected(fc, Projector::modulus), max_projected(ff, Projector::modulus));
    const auto lam = lambda_grid(top, cfg.per_decade);
    const std::string grid = "Hilbert grid " + std::to_string(pc.t.size() - 1) + " vs " +
                             std::to_string(pf.t.size() - 1) + " intervals";
    Reports rs;
    rs.push_back(inequality("marcinkiewicz", b.id, marcinkiewicz_sample(fc, lam), marcinkiewicz_sample(ff, lam),
                            cfg.stability_band, grid));
    rs.push_back(inequality("kolmogorov", b.id, kolmogorov_sample(fc, lam), kolmogorov_sample(ff, lam),
                            cfg.stability_band, grid));
    for (double p : kRieszP) {
      Sample c, f;
      c.add(p, lp_norm(fc, Projector::modulus, p, far_field_lp_tail(pc, p)), lp_norm(fc, Projector::imag_part, p));
      f.add(p, lp_norm(ff, Projector::modulus, p, far_field_lp_tail(pf, p)), lp_norm(ff, Projector::imag_part, p));
      rs.push_back(inequality(pname("riesz", p), b.id, c, f, cfg.stability_band, grid));
    }
    return rs;
  });
  add_family(out, cfg.stability_band);
  return out;
}

// ---------------------------------------------------------------- canonical suites

std::vector<CanonicalFixture> with_up(std::vector<CanonicalFixture> v) {
  for (auto& f : up_family()) v.push_back(std::move(f));
  return v;
}

Reports theorem1_suite(const SuiteConfig& cfg) {
  const auto fixtures = with_up(atomic_fixtures(20, cfg.seed));
  Reports out = for_each_fixture(fixtures, cfg, [&](const CanonicalFixture& fx) {
    Canon c(fx, cfg);
    auto [sc, sf] = both(cfg, [&](int pd) {
      const auto radii = c.full(pd);
      const RadialCurve n = curve_n(fx.mu, radii);
      const RadialCurve m = c.curve("tsuji_m", c.tm, radii);
      Sample s;
      for (double r : c.interior(pd)) s.add(r, c.M(r), rhs_theorem1(n, m, r));
      return s;
    });
    return Reports{inequality("theorem1", fx.id, sc, sf, cfg.stability_band)};
  });
  add_family(out, cfg.stability_band);
  return out;
}

Reports borel_suite(const SuiteConfig& cfg) {
  const auto fixtures = with_up(atomic_fixtures(20, cfg.seed));
  Reports out = for_each_fixture(fixtures, cfg, [&](const CanonicalFixture& fx) {
    Canon c(fx, cfg);
    auto [sc, sf] = both(cfg, [&](int pd) {
      const RadialCurve mu = curve_mu(fx.mu, c.full(pd));
      Sample s;
      for (double r : c.interior(pd)) s.add(r, c.M(r), rhs_borel(mu, r));
      return s;
    });
    return Reports{inequality("borel", fx.id, sc, sf, cfg.stability_band)};
  });
  add_family(out, cfg.stability_band);
  return out;
}

// Jensen potentials V_sigma as logarithmic determinants of the identity map
// on (C, sigma): their Riesz measure is sigma(1/zeta).
struct JensenItem {
  std::string id;
  JensenMeasure sigma;
  MeasuredFunction fn;
  PlanarMeasure mu;
};

JensenItem jensen_item(const std::string& id, const JensenMeasure& sigma) {
  std::vector<Complex> v;
  std::vector<double> w;
  for (const Atom& a : sigma.atoms()) {
    v.push_back(a.z);
    w.push_back(a.mass);
  }
  MeasuredFunction fn = MeasuredFunction::complex_valued(v, w);
  return {id, sigma, fn, pushforward_measure(fn)};
}

Reports corollary1_suite(const SuiteConfig& cfg) {
  std::vector<JensenItem> items;
  for (const auto& j : jensen_fixtures(cfg.jensen_points, cfg.seed)) items.push_back(jensen_item(j.id, j.sigma));
  Reports out = for_each_fixture(items, cfg, [&](const JensenItem& it) {
    const PositivityResult pos = positivity_scan(it.fn);
    if (pos.min_value < positivity_floor(pos))
      return Reports{unmet("corollary1", it.id, "potential is negative: " + fmt("%.3g", pos.min_value))};
    std::vector<double> jumps;
    for (const Atom& a : it.mu.atoms()) jumps.push_back(std::abs(a.z));
    auto at = [&](int pd) {
      const RadialCurve n = curve_n(it.mu, log_grid(cfg.span_lo, cfg.span_hi, pd));
      Sample s;
      for (double r : merged(log_grid(cfg.span_lo * 10, cfg.span_hi / 10, pd), jumps))
        s.add(r, counting_mu(it.mu, r), rhs_marcinkiewicz(n, r));
      return s;
    };
    return Reports{inequality("corollary1", it.id, at(cfg.per_decade), at(2 * cfg.per_decade), cfg.stability_band,
                              "u >= 0 checked on " + std::to_string(pos.evaluated) + " points")};
  });
  const CanonicalFixture up = up_canonical_fixture(1.5);
  if (fixture_selected(up.id, cfg.fixtures) && !canonical_nonnegative(up, cfg))
    out.push_back(unmet("corollary1", up.id, "u_p is negative on the real axis"));
  add_family(out, cfg.stability_band);
  return out;
}

struct FnItem {
  std::string id;
  std::function<MeasuredFunction(int)> make;  // resolution level 1 or 2
};

Reports corollary2_suite(const SuiteConfig& cfg) {
  std::vector<FnItem> items;
  for (int k = 0; k < 10; ++k) {
    char id[32];
    std::snprintf(id, sizeof id, "rational_%02d", k);
    items.push_back({id, [&cfg, k](int level) {
                       return rational_fixtures(k + 1, cfg.seed, cfg.function_nodes * level)[k].fn;
                     }});
  }
  for (const auto& b : bump_inputs())
    items.push_back({b.id, [&cfg, in = b.in](int level) {
                       HilbertOptions ho;
                       ho.intervals = cfg.hilbert_intervals * level;
                       return make_hilbert_pair(in, ho);
                     }});
  Reports out = for_each_fixture(items, cfg, [&](const FnItem& it) {
    const MeasuredFunction fc = it.make(1), ff = it.make(2);
    const PositivityResult pos = positivity_scan(fc);
    if (pos.min_value < positivity_floor(pos))
      return Reports{unmet("corollary2", it.id, "u_f is negative: " + fmt("%.3g", pos.min_value))};
    const double top = std::max(max_projected(fc, Projector::modulus), max_projected(ff, Projector::modulus));
    const auto lam = lambda_grid(top, cfg.per_decade, fc);
    Reports rs;
    rs.push_back(inequality("corollary2", it.id, marcinkiewicz_sample(fc, lam), marcinkiewicz_sample(ff, lam),
                            cfg.stability_band));
    rs.push_back(inequality("corollary2_weak_l1", it.id, kolmogorov_sample(fc, lam), kolmogorov_sample(ff, lam),
                            cfg.stability_band));
    for (double p : kRieszP) {
      Sample c, f;
      c.add(p, lp_norm(fc, Projector::modulus, p), lp_norm(fc, Projector::imag_part, p));
      f.add(p, lp_norm(ff, Projector::modulus, p), lp_norm(ff, Projector::imag_part, p));
      rs.push_back(inequality(pname("corollary2_lp", p), it.id, c, f, cfg.stability_band));
    }
    return rs;
  });
  add_family(out, cfg.stability_band);
  return out;
}

Sample sigma_sample(const JensenMeasure& sigma, const std::vector<double>& lambdas) {
  Sample s;
  for (double l : lambdas) {
    const ImagIntegrals I = imag_distribution_integrals(sigma, l);
    s.add(l, sigma_distributions(sigma, l).total, I.lower / (l * l) + I.upper / l);
  }
  return s;
}

Reports corollary3_suite(const SuiteConfig& cfg) {
  const auto coarse = jensen_fixtures(cfg.jensen_points, cfg.seed);
  const auto fine = jensen_fixtures(2 * cfg.jensen_points, cfg.seed);
  std::vector<NamedInput> ids;
  for (const auto& j : coarse) ids.push_back({j.id, {}});
  Reports out = for_each_fixture(ids, cfg, [&](const NamedInput& id) {
    std::size_t k = 0;
    while (coarse[k].id != id.id) ++k;
    const double top = std::max(coarse[k].sigma.radius(), fine[k].sigma.radius());
    const auto lam = lambda_grid(top, cfg.per_decade);
    const auto res = moment_check(coarse[k].sigma, 8);
    const std::string note = moments_vanish(coarse[k].sigma, res) ? "moments vanish" : "moment residual above tolerance";
    return Reports{inequality("corollary3", id.id, sigma_sample(coarse[k].sigma, lam), sigma_sample(fine[k].sigma, lam),
                              cfg.stability_band, note + "; points " + std::to_string(cfg.jensen_points) + " vs " +
                                                      std::to_string(2 * cfg.jensen_points))};
  });
  add_family(out, cfg.stability_band);
  return out;
}

MeasuredFunction analytic_samples(const JensenMeasure& sigma, const std::vector<Complex>& coeffs, Complex shift) {
  std::vector<Complex> v;
  std::vector<double> w;
  for (const Atom& a : sigma.atoms()) {
    v.push_back(eval_polynomial(coeffs, a.z) + shift);
    w.push_back(a.mass);
  }
  return MeasuredFunction::complex_valued(v, w);
}

Reports corollary4_suite(const SuiteConfig& cfg) {
  const auto coarse = analytic_fixtures(cfg.jensen_points, cfg.seed);
  const auto fine = analytic_fixtures(2 * cfg.jensen_points, cfg.seed);
  std::vector<NamedInput> ids;
  for (const auto& a : coarse) ids.push_back({a.id, {}});
  Reports out = for_each_fixture(ids, cfg, [&](const NamedInput& id) {
    std::size_t k = 0;
    while (coarse[k].id != id.id) ++k;
    Reports rs;
    auto run = [&](const char* check, Complex shift) {
      const MeasuredFunction fc = analytic_samples(coarse[k].sigma, coarse[k].coeffs, shift);
      const MeasuredFunction ff = analytic_samples(fine[k].sigma, fine[k].coeffs, shift);
      const double top = std::max(max_projected(fc, Projector::modulus), max_projected(ff, Projector::modulus));
      const auto lam = lambda_grid(top, cfg.per_decade);
      return inequality(check, id.id, marcinkiewicz_sample(fc, lam), marcinkiewicz_sample(ff, lam),
                        cfg.stability_band);
    };
    rs.push_back(run("corollary4", 0.0));
    if (cfg.experimental_weak) {
      VerificationReport r = run("corollary4_weak", Complex(0.0, 0.5));
      r.kind = "experimental";
      r.status = Status::hypotheses_unmet;
      r.note = "experimental: g(0) = 0 with f(0) = 0.5i; no inequality is claimed";
      rs.push_back(r);
    }
    return rs;
  });
  add_family(out, cfg.stability_band);
  return out;
}

// Integral over (0, inf) of c(t) t^q.
double full_integral(const RadialCurve& c, double q) { return curve_integral(c, 0.0, kInf, q); }

double sup_ratio(const RadialCurve& c, double p) {
  double s = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) s = std::max(s, c.values()[i] / std::pow(c.radii()[i], p));
  return s;
}

Reports corollary6_suite(const std::string& name, const SuiteConfig& cfg) {
  std::vector<CanonicalFixture> fixtures;
  if (name == "corollary6_riesz") fixtures = atomic_fixtures(20, cfg.seed);
  else if (name == "corollary6_weak") fixtures = with_up(atomic_fixtures(20, cfg.seed));
  else fixtures = symmetric_atomic_fixtures(10, cfg.seed);
  Reports out = for_each_fixture(fixtures, cfg, [&](const CanonicalFixture& fx) {
    Canon c(fx, cfg);
    struct Curves {
      RadialCurve mu, M, delta;
    };
    auto curves = [&](int pd) {
      const auto radii = c.full(pd);
      return Curves{curve_mu(fx.mu, radii), c.curve("M", c.M, radii), delta_curve(fx.field, fx.mu, radii)};
    };
    const Curves cc = curves(cfg.per_decade), cf = curves(2 * cfg.per_decade);
    Reports rs;
    auto pair = [&](const std::string& check, const std::function<std::pair<double, double>(const Curves&)>& g,
                    double x) {
      Sample a, b;
      const auto vc = g(cc), vf = g(cf);
      a.add(x, vc.first, vc.second);
      b.add(x, vf.first, vf.second);
      rs.push_back(inequality(check, fx.id, a, b, cfg.stability_band));
    };
    if (name == "corollary6_kolmogorov") {
      pair("kolmogorov_mu_M", [](const Curves& k) { return std::make_pair(sup_ratio(k.mu, 1.0), sup_ratio(k.M, 1.0)); },
           1.0);
      pair("kolmogorov_M_delta",
           [](const Curves& k) { return std::make_pair(sup_ratio(k.M, 1.0), full_integral(k.delta, -2.0)); }, 1.0);
      return rs;
    }
    for (double p : kRieszP) {
      if (fx.family == "up" && std::abs(std::stod(fx.id.substr(3)) - p) > 1e-9) continue;
      if (name == "corollary6_riesz") {
        pair(pname("riesz_mu_M", p),
             [p](const Curves& k) {
               return std::make_pair(full_integral(k.mu, -p - 1), full_integral(k.M, -p - 1));
             },
             p);
        pair(pname("riesz_M_delta", p),
             [p](const Curves& k) {
               return std::make_pair(full_integral(k.M, -p - 1), full_integral(k.delta, -p - 1));
             },
             p);
      } else {
        pair(pname("weak_mu_M", p), [p](const Curves& k) { return std::make_pair(sup_ratio(k.mu, p), sup_ratio(k.M, p)); },
             p);
        pair(pname("weak_M_delta", p),
             [p](const Curves& k) { return std::make_pair(sup_ratio(k.M, p), sup_ratio(k.delta, p)); }, p);
      }
    }
    if (rs.empty()) rs.push_back(unmet(name, fx.id, "exponent does not match the suite's p values"));
    return rs;
  });
  add_family(out, cfg.stability_band);
  return out;
}

// int_0^lambda s (1 + log^b(lambda/s)) 1{a >= s} ds in closed form.
double log_weighted_lower(double lambda, double a, double b) {
  if (!(a > 0.0)) return 0.0;
  const double x0 = std::log(lambda / std::min(lambda, a));
  return lambda * lambda *
         (0.5 * std::exp(-2.0 * x0) + boost::math::tgamma(b + 1.0, 2.0 * x0) / std::pow(2.0, b + 1.0));
}

Sample corollary7_sample(const MeasuredFunction& fn, const std::vector<double>& lambdas, double eps) {
  Sample s;
  for (double l : lambdas) {
    double lo = 0.0, up = 0.0;
    for (std::size_t k = 0; k < fn.size(); ++k) {
      const double a = fn.projected(k, Projector::hat_norm), w = fn.weights()[k];
      lo += w * log_weighted_lower(l, a, 3.0 + eps);
      up += w * positive_part(a - l);
    }
    s.add(l, distribution(fn, l, Projector::modulus), lo / (l * l) + up / l);
  }
  return s;
}

Reports corollary7_suite(const SuiteConfig& cfg) {
  std::vector<FnItem> items;
  for (int k = 0; k < 10; ++k) {
    char id[32];
    std::snprintf(id, sizeof id, "vector_%02d", k);
    items.push_back({id, [&cfg, k](int level) {
                       return vector_fixtures(k + 1, cfg.seed, cfg.function_nodes * level)[k].fn;
                     }});
  }
  Reports out = for_each_fixture(items, cfg, [&](const FnItem& it) {
    const MeasuredFunction fc = it.make(1), ff = it.make(2);
    const double top = std::max(max_projected(fc, Projector::modulus), max_projected(ff, Projector::modulus));
    const PositivityResult sign = real_axis_scan(fc);
    if (sign.min_value < -1e-6 * std::max(1.0, sign.max_value))
      return Reports{unmet("corollary7", it.id, "v_f is negative on the real axis: " + fmt("%.3g", sign.min_value))};
    const auto lam = lambda_grid(top, cfg.per_decade, fc);
    Reports rs;
    rs.push_back(inequality("corollary7", it.id, corollary7_sample(fc, lam, 1.0), corollary7_sample(ff, lam, 1.0),
                            cfg.stability_band, "epsilon = 1"));
    for (double p : kRieszP) {
      Sample c, f;
      c.add(p, lp_norm(fc, Projector::modulus, p), lp_norm(fc, Projector::hat_norm, p));
      f.add(p, lp_norm(ff, Projector::modulus, p), lp_norm(ff, Projector::hat_norm, p));
      rs.push_back(inequality(pname("corollary7_lp", p), it.id, c, f, cfg.stability_band));
    }
    return rs;
  });
  add_family(out, cfg.stability_band);
  return out;
}

Reports theorem2_suite(const std::string& name, const SuiteConfig& cfg) {
  const auto fixtures = with_up(atomic_fixtures(20, cfg.seed));
  Reports out = for_each_fixture(fixtures, cfg, [&](const CanonicalFixture& fx) {
    Canon c(fx, cfg);
    const std::vector<double> eps =
        name == "theorem2" ? std::vector<double>{0.0} : std::vector<double>{0.1, 1.0, 10.0};
    std::vector<Sample> coarse, fine;
    for (int level : {1, 2}) {
      const int pd = level * cfg.per_decade;
      const auto radii = c.full(pd);
      const RadialCurve delta = delta_curve(fx.field, fx.mu, radii);
      const RadialCurve dstar = name == "theorem2" ? delta_star_curve(delta, radii) : RadialCurve();
      auto& dst = level == 1 ? coarse : fine;
      for (double e : eps) {
        Sample s;
        for (double r : c.interior(pd))
          s.add(r, c.M(r), name == "theorem2" ? rhs_theorem2(dstar, r) : rhs_corollary5(delta, r, e));
        dst.push_back(std::move(s));
      }
    }
    Reports rs;
    for (std::size_t i = 0; i < eps.size(); ++i) {
      const std::string check = name == "theorem2" ? "theorem2" : "corollary5" + fmt("_eps%g", eps[i]);
      rs.push_back(inequality(check, fx.id, coarse[i], fine[i], cfg.stability_band,
                              name == "theorem2" ? "" : "constant reported per epsilon; no conclusion drawn"));
    }
    return rs;
  });
  add_family(out, cfg.stability_band);
  return out;
}

Reports theorem3_suite(const SuiteConfig& cfg) {
  auto fixtures = symmetric_atomic_fixtures(10, cfg.seed);
  for (auto& f : segment_fixtures(6, cfg.seed)) fixtures.push_back(std::move(f));
  Reports out = for_each_fixture(fixtures, cfg, [&](const CanonicalFixture& fx) {
    Canon c(fx, cfg);
    Memo plus([&](double t) {
      return positive_part(fx.field(Complex(t, 0.0))) + positive_part(fx.field(Complex(-t, 0.0)));
    });
    const double band = std::pow(10.0, cfg.proxy_decades);
    Sample kc, kf, cc, cf;
    for (int level : {1, 2}) {
      const int pd = level * cfg.per_decade;
      const auto radii = c.full(pd);
      const RadialCurve delta = delta_curve(fx.field, fx.mu, radii);
      const RadialCurve M = c.curve("M", c.M, radii);
      const RadialCurve up("u_plus", radii, plus(radii));
      // limsup proxies: innermost decade for mu(r)/r, outermost for M(r)/r.
      double origin = 0.0, infinity = 0.0;
      for (double r : radii) {
        if (r <= cfg.span_lo * band) origin = std::max(origin, counting_mu(fx.mu, r) / r);
        if (r >= cfg.span_hi / band) infinity = std::max(infinity, c.M(r) / r);
      }
      const double rhs = full_integral(delta, -2.0) + origin;
      (level == 1 ? kc : kf).add(1.0, sup_ratio(M, 1.0), rhs);
      (level == 1 ? cc : cf).add(1.0, full_integral(up, -2.0) + infinity, rhs);
    }
    const std::string proxy =
        "limsup proxies: max over the innermost/outermost " + fmt("%g", cfg.proxy_decades) + " sampled decades";
    return Reports{inequality("kolmogorov", fx.id, kc, kf, cfg.stability_band, proxy),
                   inequality("cart", fx.id, cc, cf, cfg.stability_band, proxy)};
  });
  // Principal-value hypotheses on atom ladders accumulating at the origin.
  const auto ladders = ladder_fixtures();
  Reports pv = for_each_fixture(ladders, cfg, [&](const CanonicalFixture& fx) {
    double spread = 0.0;
    bool cauchy = true;
    for (Complex z : {Complex(0.7, 0.4), Complex(-1.3, 2.1), Complex(3.0, -0.5)}) {
      const PvLadder l = pv_ladder(fx.mu, z);
      cauchy = cauchy && l.cauchy;
      const double a = l.extrapolants[l.extrapolants.size() - 2], b = l.extrapolants.back();
      spread = std::max(spread, std::abs(a - b) / std::max(1.0, std::abs(b)));
    }
    return Reports{assertion("pv_exists", fx.id, cauchy, spread, 1e-6, "epsilon ladder is Cauchy")};
  });
  for (auto& r : pv) out.push_back(std::move(r));
  if (fixture_selected("one_sided", cfg.fixtures)) {
    bool detected = false;
    try {
      eval_canonical_pv(one_sided_ladder(0.5, 36), Complex(0.7, 0.4));
    } catch (const HypothesisError&) {
      detected = true;
    }
    out.push_back(assertion("pv_divergence_detected", "one_sided", detected, detected ? 0.0 : 1.0, 0.0,
                            "one-sided ladder must be rejected"));
  }
  for (const auto& fx : segment_fixtures(6, cfg.seed)) {
    if (!fixture_selected(fx.id, cfg.fixtures)) continue;
    double worst = 0.0;
    for (Complex z : {Complex(0.3, 0.2), Complex(-2.0, 1.0), Complex(4.0, -3.0)}) {
      const double a = fx.field(z), b = eval_canonical_pv(fx.mu, z);
      worst = std::max(worst, relative_residual(a, b, 1.0));
    }
    VerificationReport r = assertion("pv_closed_form", fx.id, worst <= 1e-8, worst, 1e-8,
                                     "closed-form segment field vs principal-value quadrature");
    r.kind = "identity";
    out.push_back(r);
  }
  add_family(out, cfg.stability_band);
  return out;
}

Reports real_line_suite(const SuiteConfig& cfg) {
  const auto fixtures = with_up(real_atomic_fixtures(6, cfg.seed));
  Reports out = for_each_fixture(fixtures, cfg, [&](const CanonicalFixture& fx) {
    Canon c(fx, cfg);
    auto [sc, sf] = both(cfg, [&](int pd) {
      const RadialCurve um = curve_real_negative(fx.field, c.full(pd));
      Sample s;
      for (double r : c.interior(pd)) s.add(r, c.M(r), rhs_real_line(um, r));
      return s;
    });
    return Reports{inequality("real_line", fx.id, sc, sf, cfg.stability_band)};
  });
  add_family(out, cfg.stability_band);
  return out;
}

// ---------------------------------------------------------------- lemmas

Reports lemma1_suite(const SuiteConfig& cfg) {
  Reports out = for_each_fixture(half_plane_fixtures(), cfg, [&](const HalfPlaneFixture& fx) {
    auto at = [&](int pd) {
      const auto radii = log_grid(cfg.span_lo, cfg.span_hi, pd);
      std::vector<double> phi(radii.size());
      for (std::size_t i = 0; i < radii.size(); ++i) phi[i] = fx.phi(radii[i]);
      const RadialCurve P("phi", radii, phi);
      const int n_theta = 4 * pd;
      Sample s;
      for (double r : log_grid(cfg.span_lo * 10, cfg.span_hi / 10, pd)) {
        double lhs = 0.0;
        for (int j = 0; j < n_theta; ++j) {
          const double th = kPi * (j + 0.5) / n_theta;
          const double v = fx.v(std::polar(r, th));
          lhs = std::max(lhs, fx.nondecreasing ? v : v * std::sin(th));
        }
        s.add(r, lhs, rhs_lemma1(P, r));
      }
      return s;
    };
    return Reports{inequality("lemma1", fx.id, at(cfg.per_decade), at(2 * cfg.per_decade), cfg.stability_band,
                              fx.nondecreasing ? "nondecreasing majorant: sin factor dropped" : "")};
  });
  add_family(out, cfg.stability_band);
  return out;
}

Reports lemma3_suite(const SuiteConfig& cfg) {
  const auto fixtures = with_up(reflected_fixtures(10, cfg.seed));
  Reports out = for_each_fixture(fixtures, cfg, [&](const CanonicalFixture& fx) {
    Memo arc([&](double r) {
      auto g = [&](double phi) { return negative_part(fx.field(std::polar(r, phi))) * std::sin(phi); };
      quad::Options qo;
      qo.rel_tol = 1e-9;
      return quad::integrate(g, 0.0, kPi, {}, qo, quad::Rule::gauss_kronrod).value / kPi;
    });
    auto at = [&](int pd) {
      const RadialCurve um = curve_real_negative(fx.field, log_grid(cfg.span_lo, cfg.span_hi, pd));
      const int n_theta = 4 * pd;
      Sample s;
      for (double r : log_grid(cfg.span_lo * 10, cfg.span_hi / 10, pd)) {
        double lhs = 0.0;
        for (int j = 0; j < n_theta; ++j) {
          const double th = kPi * (j + 0.5) / n_theta;
          lhs = std::max(lhs, fx.field(std::polar(r, th)) * std::sin(th));
        }
        s.add(r, lhs, arc(2.0 * r) + r / (2.0 * kPi) * curve_integral(um, 0.0, 2.0 * r, -2.0));
      }
      return s;
    };
    return Reports{inequality("lemma3", fx.id, at(cfg.per_decade), at(2 * cfg.per_decade), cfg.stability_band)};
  });
  add_family(out, cfg.stability_band);
  return out;
}

// ---------------------------------------------------------------- assertion suites

Reports up_suite(const SuiteConfig& cfg) {
  Reports out;
  for (double p : kRieszP) {
    const UpFixture up = fixture_up(p, 1e3);
    const std::string id = fmt("up_%.2f", p);
    if (!fixture_selected(id, cfg.fixtures)) continue;
    const PlanarMeasure mu = up.measure();
    VerificationReport r;
    r.check = "closed_form";
    r.fixture = id;
    r.kind = "identity";
    r.tolerance = 1e-3;
    double worst = 0.0;
    for (double rad : log_grid(0.1, 1.0, 9))
      for (int j = 0; j < 24; ++j) {
        const Complex z = std::polar(rad, 2.0 * kPi * (j + 0.5) / 24);
        const double a = eval_canonical(mu, z), b = up(z);
        r.abscissa.push_back(rad);
        r.lhs.push_back(a);
        r.rhs.push_back(b);
        worst = std::max(worst, std::abs(a - b) / std::pow(rad, p));
      }
    r.max_stat = worst;
    r.status = worst <= r.tolerance ? Status::pass : Status::fail;
    r.note = "error relative to M(r, u_p) = r^p; A = 1e3 with analytic tail; truncation bound at r = 1: " +
             fmt("%.3g", up.truncation_bound(1.0));
    out.push_back(r);
    double pos = -kInf;
    for (double x : log_grid(1e-3, 1e3, 8))
      for (double sx : {x, -x}) pos = std::max({pos, up(Complex(sx, 0.0)), eval_canonical(mu, Complex(sx, 0.0))});
    out.push_back(assertion("nonpositive_on_R", id, pos <= 0.0, pos, 0.0, "max of u_p and its canonical integral on R"));
  }
  return out;
}

Reports jensen_suite(const SuiteConfig& cfg) {
  Reports out;
  const int N = cfg.jensen_points;
  if (fixture_selected("circle", cfg.fixtures)) {
    const JensenMeasure circle = JensenMeasure::uniform_circle(N);
    double worst = 0.0;
    for (double r : log_grid(0.01, 100.0, 8)) {
      if (r > 0.7 && r < 1.4) continue;
      for (int j = 0; j < 16; ++j) {
        const Complex z = std::polar(r, 2.0 * kPi * (j + 0.3) / 16);
        worst = std::max(worst, std::abs(potential_V(circle, z) - std::max(0.0, std::log(r))));
      }
    }
    out.push_back(assertion("circle_potential", "circle", worst <= 1e-8, worst, 1e-8,
                            "|z| outside (0.7, 1.4), " + std::to_string(N) + " points"));
    out.back().kind = "identity";
  }
  if (fixture_selected("circle_squared", cfg.fixtures)) {
    const JensenMeasure sq = pushforward(JensenMeasure::uniform_circle(N), {0.0, 0.0, 1.0});
    const auto res = moment_check(sq, 10);
    double mres = 0.0;
    for (double v : res) mres = std::max(mres, v);
    out.push_back(assertion("push_moments", "circle_squared", moments_vanish(sq, res), mres, 1e-10));
    double vmin = kInf;
    for (double r : log_grid(0.01, 100.0, 8)) {
      if (r > 0.7 && r < 1.4) continue;
      for (int j = 0; j < 16; ++j) vmin = std::min(vmin, potential_V(sq, std::polar(r, 2.0 * kPi * (j + 0.3) / 16)));
    }
    out.push_back(assertion("push_potential_nonnegative", "circle_squared", vmin >= -1e-8, vmin, 1e-8,
                            "|z| outside (0.7, 1.4)"));
  }
  // Sub-mean-value test with log|q| for random polynomials, q(0) != 0.
  Rng rng(cfg.seed ^ 0x9A11ull);
  for (const auto& j : jensen_fixtures(N, cfg.seed)) {
    if (!fixture_selected(j.id, cfg.fixtures)) continue;
    double worst = -kInf;
    for (int t = 0; t < 20; ++t) {
      std::vector<Complex> roots(rng.integer(1, 4));
      for (auto& z : roots) z = std::polar(std::exp(rng.uniform(std::log(0.05), std::log(5.0))), rng.uniform(-kPi, kPi));
      auto h = [&](Complex z) {
        double s = 0.0;
        for (Complex a : roots) s += std::log(std::abs(z - a));
        return s;
      };
      double mean = 0.0;
      for (const Atom& a : j.sigma.atoms()) mean += a.mass * h(a.z);
      worst = std::max(worst, h(0.0) - mean);
    }
    out.push_back(assertion("sub_mean_value", j.id, worst <= 1e-6, worst, 1e-6,
                            "max of h(0) - int h dsigma over 20 polynomials"));
  }
  Reports c3 = corollary3_suite(cfg);
  for (auto& r : c3)
    if (r.fixture == "family") out.push_back(std::move(r));
  return out;
}

Reports structural_suite(const SuiteConfig& cfg) {
  const auto fixtures = with_up(atomic_fixtures(20, cfg.seed));
  return for_each_fixture(fixtures, cfg, [&](const CanonicalFixture& fx) {
    Canon c(fx, cfg);
    const auto radii = c.full(cfg.per_decade);
    const RadialCurve delta = delta_curve(fx.field, fx.mu, radii);
    auto le = [](double a, double b) { return a <= b + 1e-12 * std::max({std::abs(a), std::abs(b), 1e-300}); };
    double d_worst = 0.0, n_worst = 0.0, j_worst = 0.0, m_worst = 0.0;
    bool d_ok = true, n_ok = true, j_ok = true, m_ok = true;
    for (double r : c.interior(cfg.per_decade)) {
      const double d1 = delta_star(delta, r), d2 = delta_star(delta, 2.0 * r);
      d_ok = d_ok && le(d1, d2) && le(d2, 4.0 * d1);
      if (d1 > 0.0) d_worst = std::max(d_worst, d2 / (4.0 * d1));
      const double n = counting_levin_tsuji(fx.mu, r), mu = counting_mu(fx.mu, r);
      n_ok = n_ok && le(n, mu);
      if (mu > 0.0) n_worst = std::max(n_worst, n / mu);
      const double T2 = c.T(2.0 * r);
      j_ok = j_ok && le(mu * std::log(2.0), T2);
      if (T2 > 0.0) j_worst = std::max(j_worst, mu * std::log(2.0) / T2);
      const double M = c.M(r);
      m_ok = m_ok && le(M, 3.0 * T2);
      if (T2 > 0.0) m_worst = std::max(m_worst, M / (3.0 * T2));
    }
    const double u0 = fx.field(0.0);
    return Reports{assertion("delta_star_doubling", fx.id, d_ok, d_worst, 1e-12, "max delta*(2r)/(4 delta*(r))"),
                   assertion("n_le_mu", fx.id, n_ok, n_worst, 1e-12, "max n(r)/mu(r)"),
                   assertion("jensen_counting", fx.id, j_ok, j_worst, 1e-12, "max mu(r) log 2 / T(2r)"),
                   assertion("max_le_3T", fx.id, m_ok, m_worst, 1e-12, "max M(r)/(3 T(2r))"),
                   assertion("u_origin", fx.id, u0 == 0.0, std::abs(u0), 0.0)};
  });
}

}  // namespace

bool fixture_selected(const std::string& id, const std::vector<std::string>& selectors) {
  if (selectors.empty()) return true;
  for (const auto& s : selectors) {
    if (!s.empty() && s.back() == '*') {
      if (id.compare(0, s.size() - 1, s, 0, s.size() - 1) == 0) return true;
    } else if (id == s) {
      return true;
    }
  }
  return false;
}

std::vector<std::string> suite_names() {
  return {"kernel_identities", "levin",         "carleman",       "tsuji_fft",        "lemma5",
          "positivity",        "marcinkiewicz_hilbert",           "theorem1",         "corollary1",
          "corollary2",        "corollary3",    "corollary4",     "corollary6_riesz", "corollary6_weak",
          "corollary6_kolmogorov",              "corollary7",     "theorem2",         "corollary5",
          "theorem3",          "real_line_1_8", "borel",          "lemma1",           "lemma3",
          "up_fixture",        "jensen",        "structural"};
}

bool is_suite(const std::string& name) {
  const auto names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<VerificationReport> run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (!(cfg.per_decade >= 1 && cfg.span_lo > 0.0 && cfg.span_hi > 100.0 * cfg.span_lo))
    throw DomainError("grid needs per_decade >= 1 and a span of more than two decades");
  Reports out;
  if (name == "kernel_identities" || name == "levin" || name == "carleman" || name == "tsuji_fft")
    out = identity_suite(name, cfg);
  else if (name == "lemma5") out = lemma5_suite(cfg);
  else if (name == "positivity") out = positivity_suite(cfg);
  else if (name == "marcinkiewicz_hilbert") out = marcinkiewicz_suite(cfg);
  else if (name == "theorem1") out = theorem1_suite(cfg);
  else if (name == "corollary1") out = corollary1_suite(cfg);
  else if (name == "corollary2") out = corollary2_suite(cfg);
  else if (name == "corollary3") out = corollary3_suite(cfg);
  else if (name == "corollary4") out = corollary4_suite(cfg);
  else if (name.rfind("corollary6_", 0) == 0 && is_suite(name)) out = corollary6_suite(name, cfg);
  else if (name == "corollary7") out = corollary7_suite(cfg);
  else if (name == "theorem2" || name == "corollary5") out = theorem2_suite(name, cfg);
  else if (name == "theorem3") out = theorem3_suite(cfg);
  else if (name == "real_line_1_8") out = real_line_suite(cfg);
  else if (name == "borel") out = borel_suite(cfg);
  else if (name == "lemma1") out = lemma1_suite(cfg);
  else if (name == "lemma3") out = lemma3_suite(cfg);
  else if (name == "up_fixture") out = up_suite(cfg);
  else if (name == "jensen") out = jensen_suite(cfg);
  else if (name == "structural") out = structural_suite(cfg);
  else throw DomainError("unknown suite '" + name + "'");
  for (auto& r : out) r.suite = name;
  return out;
}

}  // namespace genusone
