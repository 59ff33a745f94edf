#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "genusone/canonical.hpp"
#include "genusone/measures.hpp"

namespace genusone {

// A subharmonic function u on the plane with optional knowledge of the
// points where it equals -inf (used as quadrature breakpoints).
class SubharmonicField {
 public:
  using Evaluator = std::function<double(Complex)>;

  SubharmonicField() = default;
  SubharmonicField(std::string name, Evaluator eval, std::vector<Complex> singular = {});

  // Canonical integral of mu; principal-value form when mu is only
  // pv-admissible.
  static SubharmonicField from_measure(const PlanarMeasure& mu, const CanonicalOptions& opt = {},
                                       std::string name = "canonical");
  // Logarithmic determinant of a measured function.
  static SubharmonicField from_function(const MeasuredFunction& fn, std::string name = "logdet");

  double operator()(Complex z) const { return eval_(z); }
  const std::string& name() const { return name_; }
  const std::vector<Complex>& singular_points() const { return singular_; }

  // u on the polar grid radii x {2 pi j / n_theta}, row-major by radius.
  // Computed once per (radii, n_theta) key and shared afterwards.
  std::shared_ptr<const std::vector<double>> polar_grid(const std::vector<double>& radii,
                                                        int n_theta) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<const std::vector<double>>> grids;
  };

  std::string name_;
  Evaluator eval_;
  std::vector<Complex> singular_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

}  // namespace genusone
