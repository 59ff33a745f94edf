#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "genusone/verify.hpp"

namespace genusone {

inline constexpr int kReportSchema = 1;

// Provenance written at the top of every emitted file.
struct OutputHeader {
  std::string config_hash;
  double identity_tol = 1e-6;
  double stability_band = 0.1;
  int per_decade = 16;
  std::uint64_t seed = 1;
};

// Hash of the library sources this binary was built from.
const char* source_hash();

// Shortest round-trip decimal form; inf, -inf and nan spelled out.
std::string format_number(double x);
double parse_number(const std::string& s);

// '#'-prefixed comment lines: tool version, source hash, config hash, tolerances.
std::string csv_header(const OutputHeader& h);
// Everything after the comment header.
std::string csv_body(const std::string& csv);

std::string summary_csv(const std::vector<VerificationReport>& reports, const OutputHeader& h);
std::string reports_to_json(const std::string& suite, const std::vector<VerificationReport>& reports,
                            const OutputHeader& h);
std::vector<VerificationReport> reports_from_json(const std::string& text);

std::string two_column_csv(const OutputHeader& h, const std::string& x_name, const std::string& y_name,
                           const std::vector<double>& x, const std::vector<double>& y);

// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& text);
std::string hex64(std::uint64_t v);

// Writes the file, creating parent directories; throws std::runtime_error on failure.
void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

}  // namespace genusone
