#include "genusone/field.hpp"

#include <cstdio>
#include <utility>

namespace genusone {

SubharmonicField::SubharmonicField(std::string name, Evaluator eval, std::vector<Complex> singular)
    : name_(std::move(name)), eval_(std::move(eval)), singular_(std::move(singular)) {}

SubharmonicField SubharmonicField::from_measure(const PlanarMeasure& mu, const CanonicalOptions& opt,
                                                std::string name) {
  auto m = std::make_shared<const PlanarMeasure>(mu);
  std::vector<Complex> sing;
  for (const Atom& a : mu.atoms())
    if (a.mass > 0.0) sing.push_back(a.z);
  if (mu.genus_one())
    return SubharmonicField(std::move(name), [m, opt](Complex z) { return eval_canonical(*m, z, opt); },
                            std::move(sing));
  if (!mu.pv_admissible()) throw DomainError("measure admits neither the genus-one nor the principal-value form");
  PvOptions po;
  po.base = opt;
  return SubharmonicField(std::move(name), [m, po](Complex z) { return eval_canonical_pv(*m, z, po); },
                          std::move(sing));
}

SubharmonicField SubharmonicField::from_function(const MeasuredFunction& fn, std::string name) {
  auto f = std::make_shared<const MeasuredFunction>(surrogate_complexify(fn));
  std::vector<Complex> sing;
  for (std::size_t k = 0; k < f->size(); ++k)
    if (f->values()[k] != Complex(0.0, 0.0) && f->weights()[k] > 0.0) sing.push_back(1.0 / f->values()[k]);
  return SubharmonicField(std::move(name), [f](Complex z) { return logdet_complex(*f, z); }, std::move(sing));
}

std::shared_ptr<const std::vector<double>> SubharmonicField::polar_grid(const std::vector<double>& radii,
                                                                         int n_theta) const {
  std::string key = std::to_string(n_theta);
  char buf[32];
  for (double r : radii) {
    std::snprintf(buf, sizeof buf, ":%.17g", r);
    key += buf;
  }
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->grids.find(key);
    if (it != cache_->grids.end()) return it->second;
  }
  auto values = std::make_shared<std::vector<double>>(radii.size() * static_cast<std::size_t>(n_theta));
  for (std::size_t i = 0; i < radii.size(); ++i)
    for (int j = 0; j < n_theta; ++j)
      (*values)[i * n_theta + j] = eval_(std::polar(radii[i], 2.0 * kPi * j / n_theta));
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto [it, inserted] = cache_->grids.emplace(key, std::move(values));
  return it->second;
}

}  // namespace genusone
