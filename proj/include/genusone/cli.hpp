#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "genusone/suites.hpp"

namespace genusone {

enum ExitCode : int { kExitPass = 0, kExitFailure = 1, kExitUsage = 2, kExitIO = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<std::string> suites;  // empty: every suite
  SuiteConfig suite;
  std::string out = "genusone-out";
  std::vector<std::string> inputs;  // hilbert: registry names or CSV paths
};

// Flat "key = value" text; '#' starts a comment. Unknown keys are usage errors.
void apply_config_text(RunConfig& cfg, const std::string& text);
// Normalized key = value listing of everything that affects results
// (worker count and output directory excluded).
std::string canonical_config(const RunConfig& cfg);
std::string config_hash(const RunConfig& cfg);
void validate(const RunConfig& cfg);

// Every fixture id a selector can name.
std::vector<std::string> known_fixture_ids(std::uint64_t seed);

int cmd_eval(const RunConfig& cfg);
int cmd_hilbert(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);
int cmd_report(const RunConfig& cfg);

int run_cli(int argc, char** argv);

}  // namespace genusone
