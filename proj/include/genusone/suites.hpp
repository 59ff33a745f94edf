#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "genusone/verify.hpp"

namespace genusone {

struct SuiteConfig {
  int per_decade = 16;  // base grid; the refined grid doubles it
  double span_lo = 1e-3;
  double span_hi = 1e3;
  double identity_tol = 1e-6;
  double stability_band = 0.1;
  std::uint64_t seed = 1;
  int workers = 1;
  // Fixture ids to keep; an entry ending in '*' matches a prefix. Empty keeps all.
  std::vector<std::string> fixtures;
  int hilbert_intervals = 4096;
  int jensen_points = 256;
  int function_nodes = 2048;
  // Corollary 4 under g(0) = 0 only; reported without a claim.
  bool experimental_weak = false;
  // Width in decades of the innermost/outermost band used for limsup proxies.
  double proxy_decades = 1.0;
};

std::vector<std::string> suite_names();
bool is_suite(const std::string& name);

// Per-fixture reports in a fixed order, followed by family-level reports.
// Fixture failures are isolated into their own reports.
std::vector<VerificationReport> run_suite(const std::string& name, const SuiteConfig& cfg);

bool fixture_selected(const std::string& id, const std::vector<std::string>& selectors);

}  // namespace genusone
