#include "doctest.h"

#include <cmath>

#include "genusone/transforms.hpp"

using namespace genusone;

TEST_CASE("Hilbert transform of the bump against the oracle") {
  const SmoothInput b = smooth_bump();
  const HilbertValue mid = hilbert_pv(b, 0.5);
  CHECK(mid.certified);
  CHECK(mid.g == doctest::Approx(-0.2376440780542310748).epsilon(1e-9));
  const HilbertValue far = hilbert_pv(b, 3.0);
  CHECK(far.g == doctest::Approx(-0.047969222954389876708).epsilon(1e-9));
  CHECK(std::abs(hilbert_pv(b, 0.0).g) < 1e-12);
}

TEST_CASE("Hilbert transform of an even input is odd") {
  const SmoothInput b = smooth_bump();
  for (double x : {0.1, 0.37, 0.9, 1.5, 4.0})
    CHECK(hilbert_pv(b, -x).g == doctest::Approx(-hilbert_pv(b, x).g).epsilon(1e-10));
}

TEST_CASE("Lorentzian with the tail extension") {
  const SmoothInput l = named_input("lorentzian");
  HilbertOptions opt;
  CHECK_THROWS_AS(hilbert_pv(l, 0.5, opt), DomainError);
  opt.tail_extension = true;
  for (double x : {-2.0, 0.5, 3.0})
    CHECK(hilbert_pv(l, x, opt).g == doctest::Approx(-x / (1.0 + x * x)).epsilon(1e-6));
}

TEST_CASE("Hilbert pair and far field") {
  const HilbertPair pair = hilbert_pair(smooth_bump());
  CHECK(pair.certified);
  CHECK(pair.t.size() == pair.g.size());
  CHECK(pair.convention == std::string(kHilbertConvention));
  for (double t : {5.0, -12.0, 40.0})
    CHECK(far_field(pair, t) == doctest::Approx(hilbert_pv(smooth_bump(), t).g).epsilon(1e-8));
  double mass = 0.0;
  for (std::size_t k = 0; k < pair.t.size(); ++k) mass += pair.weights[k] * pair.h[k];
  CHECK(mass == doctest::Approx(pair.moments[0]).epsilon(1e-10));
}

TEST_CASE("sampled input agrees with the smooth route") {
  const SmoothInput b = smooth_bump();
  SampledInput s;
  s.t0 = -4.0;
  s.dt = 8.0 / 4096;
  for (int k = 0; k <= 4096; ++k) s.h.push_back(b.h(s.t0 + k * s.dt));
  for (std::size_t node : {1024u, 2048u + 256u, 3000u}) {
    const double x = s.t0 + node * s.dt;
    CHECK(hilbert_pv(s, node).g == doctest::Approx(hilbert_pv(b, x).g).epsilon(1e-7));
  }
  SampledInput bad = s;
  bad.h.pop_back();
  CHECK_THROWS_AS(hilbert_pv(bad, 3), DomainError);
}

TEST_CASE("measured Hilbert pair") {
  const MeasuredFunction f = make_hilbert_pair(smooth_bump());
  CHECK(f.size() > 4096);
  for (std::size_t k = 0; k < f.size(); ++k) CHECK(f.weights()[k] >= 0.0);
  CHECK_THROWS_AS(named_input("no_such_input"), DomainError);
}
