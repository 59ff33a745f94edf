#pragma once

#include <functional>
#include <string>
#include <vector>

#include "genusone/measures.hpp"

namespace genusone {

// Sign convention of the transform: g(x) = p.v. (1/pi) int h(t) / (t - x) dt.
inline constexpr const char* kHilbertConvention = "paper:(t-x)";

// Smooth h supported in [a, b]; with tail_extension the interval is a window
// beyond which h is modelled as C / (1 + t^2).
struct SmoothInput {
  std::string name;
  std::function<double(double)> h;
  double a = -1.0;
  double b = 1.0;
  // Not compactly supported; requires HilbertOptions::tail_extension.
  bool decaying = false;
};

// Uniform samples h(t0 + k dt), k = 0..n-1, with h = 0 outside.
struct SampledInput {
  double t0 = 0.0;
  double dt = 1.0;
  std::vector<double> h;
};

struct HilbertOptions {
  int intervals = 4096;       // Simpson intervals across the grid (multiple of 4)
  double width_factor = 4.0;  // grid spans this multiple of the support width
  double target_tol = 1e-8;
  int max_doublings = 3;
  bool tail_extension = false;
};

struct HilbertValue {
  double g = 0.0;
  double error = 0.0;
  bool certified = true;
};

// p.v. transform at a single abscissa. The singularity is removed globally:
// int (h(t) - h(x)) / (t - x) dt by composite Simpson (the quotient is
// replaced by h'(x) at t = x) plus h(x) log|(U - x)/(x - L)| on the grid [L, U].
HilbertValue hilbert_pv(const SmoothInput& in, double x, const HilbertOptions& opt = {});
HilbertValue hilbert_pv(const SampledInput& in, std::size_t node);

struct HilbertPair {
  std::vector<double> t;
  std::vector<double> h;
  std::vector<double> g;
  std::vector<double> err;
  std::string convention = kHilbertConvention;
  bool certified = true;
  double max_error = 0.0;
  // Centred moments int h(s) (s - c)^k ds for the far-field expansion of g.
  double centre = 0.0;
  double support_radius = 0.0;
  std::vector<double> moments;
  std::vector<double> weights;  // composite Simpson weights on t
};

HilbertPair hilbert_pair(const SmoothInput& in, const HilbertOptions& opt = {});
HilbertPair hilbert_pair(const SampledInput& in);

// g far outside the support from the moment expansion.
double far_field(const HilbertPair& pair, double t);

struct PairFunctionOptions {
  double tail_end = 1e13;  // |t| up to which tail samples are generated
  int tail_per_decade = 32;
};

// f = g + i h sampled on the pair grid with composite Simpson weights, plus
// logarithmically spaced tail samples (h = 0, g from the far field).
MeasuredFunction make_hilbert_pair(const HilbertPair& pair, const PairFunctionOptions& opt = {});
MeasuredFunction make_hilbert_pair(const SmoothInput& in, const HilbertOptions& opt = {});

// Contribution of |t| > tail_end to int |f|^p dt from the leading far-field term.
double far_field_lp_tail(const HilbertPair& pair, double p, const PairFunctionOptions& opt = {});

// Named smooth compactly supported inputs used by fixtures and the CLI.
SmoothInput smooth_bump();                 // exp(-1/(1-t^2)) on (-1, 1)
SmoothInput named_input(const std::string& name);
std::vector<std::string> named_inputs();

}  // namespace genusone
