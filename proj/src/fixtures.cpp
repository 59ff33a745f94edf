#include "genusone/fixtures.hpp"

#include <cmath>
#include <cstdio>
#include <memory>

#include "genusone/canonical.hpp"
#include "genusone/kernels.hpp"

namespace genusone {

Rng::Rng(std::uint64_t seed) : state_(seed) {}

// splitmix64
double Rng::uniform() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  z ^= z >> 31;
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

int Rng::integer(int lo, int hi) {
  const int v = lo + static_cast<int>(uniform() * (hi - lo + 1));
  return v > hi ? hi : v;
}

namespace {

std::string numbered(const char* prefix, int k) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s_%02d", prefix, k);
  return buf;
}

CanonicalFixture make_canonical(std::string id, std::string family, PlanarMeasure mu, double R = 3.0) {
  CanonicalFixture f;
  f.field = SubharmonicField::from_measure(mu, {}, id);
  f.id = std::move(id);
  f.family = std::move(family);
  f.mu = std::move(mu);
  f.R = R;
  return f;
}

std::vector<Atom> random_atoms(Rng& rng, int n, double R) {
  std::vector<Atom> atoms;
  while (static_cast<int>(atoms.size()) < n) {
    const double mod = std::exp(rng.uniform(std::log(0.05), std::log(20.0)));
    const double arg = rng.uniform(-kPi, kPi);
    if (std::abs(std::sin(arg)) < 0.05) continue;
    if (std::abs(mod - R) < 1e-3 * R) continue;
    atoms.push_back({std::polar(mod, arg), rng.uniform(0.1, 2.0)});
  }
  return atoms;
}

}  // namespace

std::vector<CanonicalFixture> atomic_fixtures(int count, std::uint64_t seed, int max_atoms) {
  std::vector<CanonicalFixture> out;
  Rng rng(seed);
  for (int k = 0; k < count; ++k) {
    if (k == 0) {
      out.push_back(make_canonical("atomic_00", "atomic", PlanarMeasure({{{1.0, -1.0}, 1.0}})));
      continue;
    }
    const double R = rng.uniform(1.0, 10.0);
    const int n = rng.integer(1, max_atoms);
    out.push_back(make_canonical(numbered("atomic", k), "atomic", PlanarMeasure(random_atoms(rng, n, R)), R));
  }
  return out;
}

std::vector<CanonicalFixture> symmetric_atomic_fixtures(int count, std::uint64_t seed) {
  std::vector<CanonicalFixture> out;
  Rng rng(seed ^ 0x5133ull);
  for (int k = 0; k < count; ++k) {
    const double R = rng.uniform(1.0, 10.0);
    std::vector<Atom> atoms = random_atoms(rng, rng.integer(1, 25), R);
    const std::size_t n = atoms.size();
    for (std::size_t j = 0; j < n; ++j) atoms.push_back({-std::conj(atoms[j].z), atoms[j].mass});
    out.push_back(make_canonical(numbered("symmetric", k), "symmetric", PlanarMeasure(atoms), R));
  }
  return out;
}

std::vector<CanonicalFixture> real_atomic_fixtures(int count, std::uint64_t seed) {
  std::vector<CanonicalFixture> out;
  Rng rng(seed ^ 0x5EA1ull);
  for (int k = 0; k < count; ++k) {
    const int n = rng.integer(1, 30);
    std::vector<Atom> atoms;
    for (int j = 0; j < n; ++j) {
      const double x = std::exp(rng.uniform(std::log(0.05), std::log(20.0)));
      atoms.push_back({{rng.uniform() < 0.5 ? -x : x, 0.0}, rng.uniform(0.1, 2.0)});
    }
    out.push_back(make_canonical(numbered("real_atomic", k), "real_atomic", PlanarMeasure(atoms)));
  }
  return out;
}

std::vector<CanonicalFixture> reflected_fixtures(int count, std::uint64_t seed) {
  std::vector<CanonicalFixture> out;
  for (auto& f : atomic_fixtures(count, seed ^ 0xF1Full)) {
    const std::string id = "reflected" + f.id.substr(f.id.find('_'));
    out.push_back(make_canonical(id, "reflected", reflect_to_lower(f.mu), f.R));
  }
  return out;
}

CanonicalFixture up_canonical_fixture(double p) {
  const UpFixture up = fixture_up(p);
  char buf[32];
  std::snprintf(buf, sizeof buf, "up_%.2f", p);
  CanonicalFixture f;
  f.id = buf;
  f.family = "up";
  f.mu = up.measure();
  f.field = SubharmonicField(buf, up);
  f.R = 3.0;
  return f;
}

std::vector<CanonicalFixture> up_family() {
  std::vector<CanonicalFixture> out;
  for (double p : {1.1, 1.2, 1.25, 1.3, 1.4, 1.5, 1.6, 1.7, 1.75, 1.8, 1.9}) out.push_back(up_canonical_fixture(p));
  return out;
}

PlanarMeasure quad_ladder(double angle, double ratio, double mass, int depth) {
  std::vector<Atom> atoms;
  for (int k = 0; k <= depth; ++k) {
    const double s = std::pow(ratio, k);
    for (double sign : {1.0, -1.0})
      for (double a : {angle, -angle}) atoms.push_back({sign * std::polar(s, a), mass * s});
  }
  return PlanarMeasure(atoms);
}

PlanarMeasure one_sided_ladder(double ratio, int depth) {
  std::vector<Atom> atoms;
  for (int k = 0; k <= depth; ++k) {
    const double s = std::pow(ratio, k);
    atoms.push_back({{s, 0.0}, s});
  }
  return PlanarMeasure(atoms);
}

std::vector<CanonicalFixture> ladder_fixtures() {
  std::vector<CanonicalFixture> out;
  const double angles[] = {0.2, 0.5, 0.8, 1.1, 1.4};
  const double ratios[] = {0.5, 0.35};
  int k = 0;
  for (double r : ratios)
    for (double a : angles) {
      const PlanarMeasure mu = quad_ladder(a, r, 0.25 + 0.1 * k, 36);
      CanonicalFixture f = make_canonical(numbered("ladder", k), "ladder", mu);
      auto m = std::make_shared<const PlanarMeasure>(mu);
      f.field = SubharmonicField(f.id, [m](Complex z) { return eval_canonical_pv(*m, z); },
                                 f.field.singular_points());
      out.push_back(std::move(f));
      ++k;
    }
  return out;
}

double segment_canonical(double c, double a, Complex z) {
  auto F = [&](double x) {
    const Complex d = x - z;
    if (d == Complex(0.0)) return 0.0;
    return (d * (std::log(d) - 1.0)).real();
  };
  return c * (F(a) - F(-a) - 2.0 * (a * std::log(a) - a));
}

std::vector<CanonicalFixture> segment_fixtures(int count, std::uint64_t seed) {
  std::vector<CanonicalFixture> out;
  Rng rng(seed ^ 0x5E6ull);
  for (int k = 0; k < count; ++k) {
    const double c = rng.uniform(0.2, 2.0);
    const double a = std::exp(rng.uniform(std::log(0.2), std::log(5.0)));
    std::vector<Atom> atoms;
    if (k % 2) {
      atoms = random_atoms(rng, rng.integer(1, 6), 3.0);
      const std::size_t n = atoms.size();
      for (std::size_t j = 0; j < n; ++j) atoms.push_back({-std::conj(atoms[j].z), atoms[j].mass});
    }
    PlanarMeasure mu(atoms, {LineDensity{-a, a, {c}, 0.0}});
    PlanarMeasure atomic(atoms);
    CanonicalFixture f;
    f.id = numbered("segment", k);
    f.family = "segment";
    f.field = SubharmonicField(
        f.id,
        [c, a, atomic](Complex z) {
          double v = segment_canonical(c, a, z);
          for (const auto& at : atomic.atoms()) v += at.mass * kernel_H(z / at.z);
          return v;
        },
        [&] {
          std::vector<Complex> s;
          for (const auto& at : atoms) s.push_back(at.z);
          return s;
        }());
    f.mu = std::move(mu);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<JensenFixture> jensen_fixtures(int points, std::uint64_t seed) {
  std::vector<JensenFixture> out;
  Rng rng(seed ^ 0x7E55ull);
  out.push_back({"circle", JensenMeasure::uniform_circle(points)});
  for (int k = 0; k < 5; ++k) {
    const double rho = rng.uniform(0.5, 3.0);
    const Complex c = std::polar(rng.uniform(0.1, 0.8) * rho, rng.uniform(-kPi, kPi));
    out.push_back({numbered("disk", k), JensenMeasure::offset_disk(points, c, rho)});
  }
  for (int k = 0; k < 5; ++k) {
    const int deg = rng.integer(1, 4);
    std::vector<Complex> coeffs(deg + 1, 0.0);
    for (int j = 1; j <= deg; ++j) coeffs[j] = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const auto base = k % 2 ? JensenMeasure::uniform_circle(points, rng.uniform(0.5, 2.0))
                            : JensenMeasure::offset_disk(points, {0.3, 0.2}, 1.0);
    out.push_back({numbered("push", k), pushforward(base, coeffs)});
  }
  return out;
}

std::vector<AnalyticFixture> analytic_fixtures(int points, std::uint64_t seed) {
  std::vector<AnalyticFixture> out;
  Rng rng(seed ^ 0xA7Aull);
  for (int k = 0; k < 10; ++k) {
    const int deg = rng.integer(1, 5);
    std::vector<Complex> coeffs(deg + 1, 0.0);
    for (int j = 1; j <= deg; ++j) coeffs[j] = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    JensenMeasure sigma = k % 2 ? JensenMeasure::uniform_circle(points, rng.uniform(0.5, 1.5))
                                : JensenMeasure::offset_disk(
                                      points, std::polar(rng.uniform(0.0, 0.6), rng.uniform(-kPi, kPi)),
                                      1.0);
    out.push_back({numbered("analytic", k), std::move(sigma), std::move(coeffs)});
  }
  return out;
}

namespace {

struct Rational {
  std::vector<double> a;
  std::vector<Complex> p;
  Complex operator()(double t) const {
    Complex v = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) v -= a[j] / (t - p[j]);
    return v;
  }
};

Rational random_rational(Rng& rng) {
  Rational r;
  const int n = rng.integer(1, 4);
  for (int j = 0; j < n; ++j) {
    r.a.push_back(rng.uniform(0.2, 2.0));
    r.p.emplace_back(rng.uniform(-3.0, 3.0), -rng.uniform(0.2, 2.0));
  }
  return r;
}

// Midpoint nodes in s on (-pi/2, pi/2) with t = tan s and dt = sec^2 s ds.
template <class F>
void tan_nodes(int nodes, F&& emit) {
  const double ds = kPi / nodes;
  for (int j = 0; j < nodes; ++j) {
    const double s = -kPi / 2 + (j + 0.5) * ds;
    const double c = std::cos(s);
    emit(std::tan(s), ds / (c * c));
  }
}

}  // namespace

std::vector<FunctionFixture> rational_fixtures(int count, std::uint64_t seed, int nodes) {
  std::vector<FunctionFixture> out;
  Rng rng(seed ^ 0x4A7ull);
  for (int k = 0; k < count; ++k) {
    const Rational F = random_rational(rng);
    std::vector<Complex> vals;
    std::vector<double> w;
    tan_nodes(nodes, [&](double t, double dt) {
      vals.push_back(F(t));
      w.push_back(dt);
    });
    out.push_back({numbered("rational", k), MeasuredFunction::complex_valued(vals, w)});
  }
  return out;
}

std::vector<FunctionFixture> vector_fixtures(int count, std::uint64_t seed, int nodes) {
  std::vector<FunctionFixture> out;
  Rng rng(seed ^ 0x7EC7ull);
  for (int k = 0; k < count; ++k) {
    const Rational F = random_rational(rng);
    const double c = rng.uniform(0.5, 4.0);
    std::vector<double> flat;
    std::vector<double> w;
    tan_nodes(nodes, [&](double t, double dt) {
      const Complex v = F(t);
      const double psi = c * std::atan(t);
      flat.push_back(v.real());
      flat.push_back(v.imag() * std::cos(psi));
      flat.push_back(v.imag() * std::sin(psi));
      w.push_back(dt);
    });
    out.push_back({numbered("vector", k), MeasuredFunction::vector_valued(3, flat, w)});
  }
  return out;
}

std::vector<SmoothInput> hilbert_inputs() {
  std::vector<SmoothInput> out;
  for (const auto& name : named_inputs()) {
    SmoothInput in = named_input(name);
    if (!in.decaying) out.push_back(in);
  }
  return out;
}

std::vector<HalfPlaneFixture> half_plane_fixtures() {
  std::vector<HalfPlaneFixture> out;
  const double shifts[] = {0.0, 0.5, -1.0, 2.0, 0.3, -4.0};
  const double widths[] = {1.0, 0.2, 0.5, 3.0, 0.05, 1.5};
  for (int k = 0; k < 6; ++k) {
    const double a = shifts[k], b = widths[k];
    HalfPlaneFixture f;
    f.id = numbered("poisson", k);
    f.v = [a, b](Complex z) {
      const double y = b + z.imag(), x = z.real() - a;
      return y / (x * x + y * y);
    };
    f.phi = [a, b](double t) {
      return std::max(b / ((t - a) * (t - a) + b * b), b / ((t + a) * (t + a) + b * b));
    };
    out.push_back(f);
  }
  const double powers[] = {0.25, 0.5, 0.75, 0.9};
  for (int k = 0; k < 4; ++k) {
    const double p = powers[k];
    HalfPlaneFixture f;
    f.id = numbered("power", k);
    f.v = [p](Complex z) { return std::pow(std::abs(z), p) * std::cos(p * (argument(z) - kPi / 2)); };
    f.phi = [p](double t) { return std::pow(t, p) * std::cos(p * kPi / 2); };
    f.nondecreasing = true;
    out.push_back(f);
  }
  return out;
}

std::vector<std::string> canonical_fixture_ids(std::uint64_t seed) {
  std::vector<std::string> ids;
  for (const auto& f : atomic_fixtures(20, seed)) ids.push_back(f.id);
  for (const auto& f : symmetric_atomic_fixtures(10, seed)) ids.push_back(f.id);
  for (const auto& f : real_atomic_fixtures(6, seed)) ids.push_back(f.id);
  for (const auto& f : reflected_fixtures(10, seed)) ids.push_back(f.id);
  for (const auto& f : up_family()) ids.push_back(f.id);
  for (const auto& f : ladder_fixtures()) ids.push_back(f.id);
  for (const auto& f : segment_fixtures(6, seed)) ids.push_back(f.id);
  return ids;
}

CanonicalFixture find_canonical_fixture(const std::string& id, std::uint64_t seed) {
  std::vector<CanonicalFixture> pool;
  if (id.rfind("atomic_", 0) == 0) pool = atomic_fixtures(20, seed);
  else if (id.rfind("real_atomic_", 0) == 0) pool = real_atomic_fixtures(6, seed);
  else if (id.rfind("reflected_", 0) == 0) pool = reflected_fixtures(10, seed);
  else if (id.rfind("up_", 0) == 0) pool = up_family();
  else if (id.rfind("ladder_", 0) == 0) pool = ladder_fixtures();
  else if (id.rfind("symmetric_", 0) == 0) pool = symmetric_atomic_fixtures(10, seed);
  else if (id.rfind("segment_", 0) == 0) pool = segment_fixtures(6, seed);
  for (auto& f : pool)
    if (f.id == id) return f;
  throw DomainError("unknown fixture '" + id + "'");
}

}  // namespace genusone
