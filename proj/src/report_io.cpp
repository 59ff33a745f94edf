#include "genusone/report_io.hpp"

#include <charconv>
#include <cstdio>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#ifndef GENUSONE_SOURCE_HASH
#define GENUSONE_SOURCE_HASH "unknown"
#endif

namespace genusone {

using nlohmann::json;

const char* source_hash() { return GENUSONE_SOURCE_HASH; }

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_number(const std::string& s) {
  if (s == "nan") return kNaN;
  if (s == "inf") return kInf;
  if (s == "-inf") return -kInf;
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw DomainError("not a number: '" + s + "'");
  return v;
}

std::string csv_header(const OutputHeader& h) {
  std::ostringstream os;
  os << "# genusone " << kVersion << "\n"
     << "# source_hash " << source_hash() << "\n"
     << "# config_hash " << h.config_hash << "\n"
     << "# identity_tol " << format_number(h.identity_tol) << "\n"
     << "# stability_band " << format_number(h.stability_band) << "\n"
     << "# grid_per_decade " << h.per_decade << "\n"
     << "# seed " << h.seed << "\n";
  return os.str();
}

std::string csv_body(const std::string& csv) {
  std::istringstream is(csv);
  std::string line, out;
  while (std::getline(is, line))
    if (line.empty() || line[0] != '#') out += line + "\n";
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

json number(double x) {
  if (std::isfinite(x)) return x;
  return format_number(x);
}

double number(const json& j) {
  if (j.is_string()) return parse_number(j.get<std::string>());
  return j.get<double>();
}

json numbers(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(number(x));
  return a;
}

std::vector<double> numbers(const json& a) {
  std::vector<double> v;
  for (const auto& x : a) v.push_back(number(x));
  return v;
}

Status status_from(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "hypotheses_unmet") return Status::hypotheses_unmet;
  return Status::fail;
}

}  // namespace

std::string summary_csv(const std::vector<VerificationReport>& reports, const OutputHeader& h) {
  std::ostringstream os;
  os << csv_header(h);
  os << "suite,check,fixture,kind,C,C_coarse,stability,max_stat,median_stat,tolerance,status\n";
  for (const auto& r : reports) {
    os << csv_field(r.suite) << ',' << csv_field(r.check) << ',' << csv_field(r.fixture) << ',' << r.kind << ','
       << format_number(r.constant) << ',' << format_number(r.constant_coarse) << ','
       << format_number(r.stability) << ',' << format_number(r.max_stat) << ','
       << format_number(r.median_stat) << ',' << format_number(r.tolerance) << ',' << status_name(r.status)
       << '\n';
  }
  return os.str();
}

std::string reports_to_json(const std::string& suite, const std::vector<VerificationReport>& reports,
                            const OutputHeader& h) {
  json doc;
  doc["schema_version"] = kReportSchema;
  doc["tool_version"] = kVersion;
  doc["source_hash"] = source_hash();
  doc["config_hash"] = h.config_hash;
  doc["suite"] = suite;
  json arr = json::array();
  for (const auto& r : reports) {
    json j;
    j["suite"] = r.suite;
    j["check"] = r.check;
    j["fixture"] = r.fixture;
    j["kind"] = r.kind;
    j["abscissa"] = numbers(r.abscissa);
    j["lhs"] = numbers(r.lhs);
    j["rhs"] = numbers(r.rhs);
    j["max_stat"] = number(r.max_stat);
    j["median_stat"] = number(r.median_stat);
    j["constant"] = number(r.constant);
    j["constant_coarse"] = number(r.constant_coarse);
    j["stability"] = number(r.stability);
    j["tolerance"] = number(r.tolerance);
    j["status"] = status_name(r.status);
    j["pass"] = r.status == Status::pass;
    j["note"] = r.note;
    j["runtime"] = r.runtime;
    arr.push_back(std::move(j));
  }
  doc["reports"] = std::move(arr);
  return doc.dump(1) + "\n";
}

std::vector<VerificationReport> reports_from_json(const std::string& text) {
  const json doc = json::parse(text);
  if (doc.value("schema_version", 0) != kReportSchema) throw DomainError("unsupported report schema");
  std::vector<VerificationReport> out;
  for (const auto& j : doc.at("reports")) {
    VerificationReport r;
    r.suite = j.at("suite").get<std::string>();
    r.check = j.at("check").get<std::string>();
    r.fixture = j.at("fixture").get<std::string>();
    r.kind = j.at("kind").get<std::string>();
    r.abscissa = numbers(j.at("abscissa"));
    r.lhs = numbers(j.at("lhs"));
    r.rhs = numbers(j.at("rhs"));
    r.max_stat = number(j.at("max_stat"));
    r.median_stat = number(j.at("median_stat"));
    r.constant = number(j.at("constant"));
    r.constant_coarse = number(j.at("constant_coarse"));
    r.stability = number(j.at("stability"));
    r.tolerance = number(j.at("tolerance"));
    r.status = status_from(j.at("status").get<std::string>());
    r.note = j.value("note", "");
    r.runtime = j.value("runtime", 0.0);
    out.push_back(std::move(r));
  }
  return out;
}

std::string two_column_csv(const OutputHeader& h, const std::string& x_name, const std::string& y_name,
                           const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw DomainError("two_column_csv: column lengths differ");
  std::ostringstream os;
  os << csv_header(h) << x_name << ',' << y_name << '\n';
  for (std::size_t i = 0; i < x.size(); ++i) os << format_number(x[i]) << ',' << format_number(y[i]) << '\n';
  return os.str();
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

void write_text(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  std::error_code ec;
  const fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path(), ec);
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
  if (!f) throw std::runtime_error("cannot write " + path);
}

std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace genusone
