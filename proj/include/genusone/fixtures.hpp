#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "genusone/field.hpp"
#include "genusone/jensen.hpp"
#include "genusone/measures.hpp"
#include "genusone/transforms.hpp"

namespace genusone {

// Deterministic uniform draws in [0, 1) that do not depend on the standard
// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int integer(int lo, int hi);  // inclusive

 private:
  std::uint64_t state_;
};

struct CanonicalFixture {
  std::string id;
  std::string family;
  PlanarMeasure mu;
  SubharmonicField field;
  // Radius of the semi-disk used by identity checks.
  double R = 3.0;
};

// Random finite atomic measures, atoms off the real axis and off |z| = R.
// The first fixture is the single atom at 1 - i.
std::vector<CanonicalFixture> atomic_fixtures(int count, std::uint64_t seed, int max_atoms = 50);
// Atoms in mirror pairs zeta, -conj(zeta): u(t) = u(-t) on the real axis
// and u grows only logarithmically there.
std::vector<CanonicalFixture> symmetric_atomic_fixtures(int count, std::uint64_t seed);
// Atoms on the real axis only.
std::vector<CanonicalFixture> real_atomic_fixtures(int count, std::uint64_t seed);
// Atomic fixtures reflected into the closed lower half-plane.
std::vector<CanonicalFixture> reflected_fixtures(int count, std::uint64_t seed);
// u_p with its closed form as the field and the full-line density as measure.
CanonicalFixture up_canonical_fixture(double p);
std::vector<CanonicalFixture> up_family();

// Four atoms of mass m q^k at q^k e^{+-i a}, -q^k e^{+-i a} for k = 0..depth:
// the principal value at the origin exists but the measure is not genus one
// when m / q^k does not decay.
PlanarMeasure quad_ladder(double angle, double ratio, double mass, int depth);
// Atoms of mass ratio^k at ratio^k: the principal value diverges.
PlanarMeasure one_sided_ladder(double ratio, int depth);
std::vector<CanonicalFixture> ladder_fixtures();

// Density c on [-a, a] plus mirror-paired atoms: admissible only in the
// principal-value sense, with mu(r)/r -> 2c at the origin. The field uses the
// closed form of the segment integral.
double segment_canonical(double c, double a, Complex z);
std::vector<CanonicalFixture> segment_fixtures(int count, std::uint64_t seed);

// Jensen measures: off-centre disks and polynomial push-forwards of circles.
struct JensenFixture {
  std::string id;
  JensenMeasure sigma;
};
std::vector<JensenFixture> jensen_fixtures(int points, std::uint64_t seed);

// Analytic polynomial f with f(0) = 0 over a Jensen measure.
struct AnalyticFixture {
  std::string id;
  JensenMeasure sigma;
  std::vector<Complex> coeffs;
};
std::vector<AnalyticFixture> analytic_fixtures(int points, std::uint64_t seed);

// Boundary values F(t) = -sum a_j / (t - p_j), Im p_j < 0, sampled on the
// real line through t = tan(s); u_F >= 0 and Im F > 0.
struct FunctionFixture {
  std::string id;
  MeasuredFunction fn;
};
std::vector<FunctionFixture> rational_fixtures(int count, std::uint64_t seed, int nodes);
// R^3-valued f = (Re F, Im F cos psi, Im F sin psi), whose surrogate is F.
std::vector<FunctionFixture> vector_fixtures(int count, std::uint64_t seed, int nodes);

// Smooth compactly supported transform inputs used by the positivity and
// Hilbert-pair suites.
std::vector<SmoothInput> hilbert_inputs();

// Harmonic functions in the upper half-plane with a boundary majorant.
struct HalfPlaneFixture {
  std::string id;
  std::function<double(Complex)> v;
  std::function<double(double)> phi;  // majorant on |t|
  bool nondecreasing = false;         // majorant monotone: drop the sin factor
};
std::vector<HalfPlaneFixture> half_plane_fixtures();

std::vector<std::string> canonical_fixture_ids(std::uint64_t seed);
CanonicalFixture find_canonical_fixture(const std::string& id, std::uint64_t seed);

}  // namespace genusone
