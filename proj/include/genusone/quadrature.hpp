#pragma once

#include <functional>
#include <vector>

namespace genusone::quad {

using Fn = std::function<double(double)>;

struct Result {
  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;
};

struct Options {
  double rel_tol = 1e-12;
  double abs_tol = 0.0;
  int max_depth = 10;
};

// Double-exponential rule; tolerates integrable endpoint singularities and
// infinite endpoints. Non-finite integrand values are treated as zero
// (singular nodes have measure zero).
Result tanh_sinh(const Fn& f, double a, double b, const Options& opt = {});

// Adaptive Gauss-Kronrod (15 point); for smooth integrands on finite intervals.
Result gauss_kronrod(const Fn& f, double a, double b, const Options& opt = {});

enum class Rule { tanh_sinh, gauss_kronrod };

// Splits [a, b] at the given interior breakpoints and sums the pieces.
Result integrate(const Fn& f, double a, double b, std::vector<double> breaks,
                 const Options& opt = {}, Rule rule = Rule::tanh_sinh);

// Fixed Gauss-Legendre on [a, b] with 10 or 20 points.
double gauss_legendre(const Fn& f, double a, double b, int points = 20);

}  // namespace genusone::quad
