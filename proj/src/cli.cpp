#include "genusone/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "genusone/characteristics.hpp"
#include "genusone/report_io.hpp"

namespace genusone {

namespace fs = std::filesystem;

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

std::string join(const std::vector<std::string>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

template <class T>
T parse_value(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    T v;
    if constexpr (std::is_same_v<T, double>) v = std::stod(value, &used);
    else if constexpr (std::is_same_v<T, int>) v = std::stoi(value, &used);
    else v = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw UsageError("config key '" + key + "': cannot parse '" + value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw UsageError("config key '" + key + "': expected true or false");
}

void set_key(RunConfig& cfg, const std::string& key, const std::string& value) {
  SuiteConfig& s = cfg.suite;
  if (key == "suites") cfg.suites = value.empty() ? std::vector<std::string>{} : split_list(value);
  else if (key == "fixtures") s.fixtures = split_list(value);
  else if (key == "inputs") cfg.inputs = split_list(value);
  else if (key == "out") cfg.out = value;
  else if (key == "grid_per_decade") s.per_decade = parse_value<int>(key, value);
  else if (key == "span_lo") s.span_lo = parse_value<double>(key, value);
  else if (key == "span_hi") s.span_hi = parse_value<double>(key, value);
  else if (key == "identity_tol") s.identity_tol = parse_value<double>(key, value);
  else if (key == "stability_band") s.stability_band = parse_value<double>(key, value);
  else if (key == "seed") s.seed = parse_value<unsigned long long>(key, value);
  else if (key == "workers") s.workers = parse_value<int>(key, value);
  else if (key == "hilbert_intervals") s.hilbert_intervals = parse_value<int>(key, value);
  else if (key == "jensen_points") s.jensen_points = parse_value<int>(key, value);
  else if (key == "function_nodes") s.function_nodes = parse_value<int>(key, value);
  else if (key == "proxy_decades") s.proxy_decades = parse_value<double>(key, value);
  else if (key == "experimental_weak") s.experimental_weak = parse_bool(key, value);
  else throw UsageError("unknown config key '" + key + "'");
}

OutputHeader header_for(const RunConfig& cfg) {
  OutputHeader h;
  h.config_hash = config_hash(cfg);
  h.identity_tol = cfg.suite.identity_tol;
  h.stability_band = cfg.suite.stability_band;
  h.per_decade = cfg.suite.per_decade;
  h.seed = cfg.suite.seed;
  return h;
}

std::string path_in(const RunConfig& cfg, const std::string& rel) { return (fs::path(cfg.out) / rel).string(); }

std::string safe_name(std::string s) {
  for (char& c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.')) c = '_';
  return s;
}

}  // namespace

void apply_config_text(RunConfig& cfg, const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line " + std::to_string(lineno) + ": expected key = value");
    set_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

std::string canonical_config(const RunConfig& cfg) {
  const SuiteConfig& s = cfg.suite;
  std::ostringstream os;
  os << "suites = " << join(cfg.suites) << "\n"
     << "fixtures = " << join(s.fixtures) << "\n"
     << "inputs = " << join(cfg.inputs) << "\n"
     << "grid_per_decade = " << s.per_decade << "\n"
     << "span_lo = " << format_number(s.span_lo) << "\n"
     << "span_hi = " << format_number(s.span_hi) << "\n"
     << "identity_tol = " << format_number(s.identity_tol) << "\n"
     << "stability_band = " << format_number(s.stability_band) << "\n"
     << "seed = " << s.seed << "\n"
     << "hilbert_intervals = " << s.hilbert_intervals << "\n"
     << "jensen_points = " << s.jensen_points << "\n"
     << "function_nodes = " << s.function_nodes << "\n"
     << "proxy_decades = " << format_number(s.proxy_decades) << "\n"
     << "experimental_weak = " << (s.experimental_weak ? "true" : "false") << "\n";
  return os.str();
}

std::string config_hash(const RunConfig& cfg) { return hex64(fnv1a(canonical_config(cfg))); }

std::vector<std::string> known_fixture_ids(std::uint64_t seed) {
  std::vector<std::string> ids = canonical_fixture_ids(seed);
  for (const auto& j : jensen_fixtures(8, seed)) ids.push_back(j.id);
  for (const auto& a : analytic_fixtures(8, seed)) ids.push_back(a.id);
  for (const auto& f : rational_fixtures(10, seed, 8)) ids.push_back(f.id);
  for (const auto& f : vector_fixtures(10, seed, 8)) ids.push_back(f.id);
  for (const auto& in : hilbert_inputs()) ids.push_back(in.name);
  for (const auto& h : half_plane_fixtures()) ids.push_back(h.id);
  for (const char* extra : {"random_tuples", "circle_squared", "one_sided", "family"}) ids.push_back(extra);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

void validate(const RunConfig& cfg) {
  const SuiteConfig& s = cfg.suite;
  if (!(s.identity_tol > 0.0 && s.stability_band > 0.0)) throw UsageError("tolerances must be positive");
  if (!(s.span_lo > 0.0 && s.span_lo < s.span_hi)) throw UsageError("span must satisfy 0 < span_lo < span_hi");
  if (s.span_hi < 100.0 * s.span_lo) throw UsageError("span must cover more than two decades");
  if (s.per_decade < 1) throw UsageError("grid_per_decade must be at least 1");
  if (s.workers < 1) throw UsageError("workers must be at least 1");
  if (s.hilbert_intervals < 16 || s.hilbert_intervals % 4 != 0)
    throw UsageError("hilbert_intervals must be a multiple of 4, at least 16");
  if (s.jensen_points < 8 || s.function_nodes < 8) throw UsageError("jensen_points and function_nodes must be >= 8");
  if (!(s.proxy_decades > 0.0)) throw UsageError("proxy_decades must be positive");
  for (const auto& name : cfg.suites)
    if (!is_suite(name)) throw UsageError("unknown suite '" + name + "'; valid suites: " + join(suite_names(), ", "));
  if (!s.fixtures.empty()) {
    const auto ids = known_fixture_ids(s.seed);
    for (const auto& sel : s.fixtures) {
      if (sel.empty() || sel == "*") throw UsageError("empty fixture selector");
      bool hit = false;
      for (const auto& id : ids) hit = hit || fixture_selected(id, {sel});
      if (!hit) throw UsageError("unknown fixture '" + sel + "'; valid fixtures: " + join(ids, ", "));
    }
  }
}

int cmd_eval(const RunConfig& cfg) {
  if (cfg.suite.fixtures.empty()) throw UsageError("eval needs --fixture");
  const OutputHeader h = header_for(cfg);
  const SuiteConfig& s = cfg.suite;
  int written = 0;
  for (const auto& id : canonical_fixture_ids(s.seed)) {
    if (!fixture_selected(id, s.fixtures)) continue;
    const CanonicalFixture fx = find_canonical_fixture(id, s.seed);
    const auto radii = log_grid(s.span_lo, s.span_hi, s.per_decade);
    std::ostringstream field;
    field << csv_header(h) << "r,theta,u\n";
    const int n_theta = 32;
    for (double r : radii)
      for (int j = 0; j < n_theta; ++j) {
        const double th = 2.0 * kPi * j / n_theta - kPi;
        field << format_number(r) << ',' << format_number(th) << ',' << format_number(fx.field(std::polar(r, th)))
              << '\n';
      }
    const std::string dir = "eval/" + safe_name(id) + "/";
    write_text(path_in(cfg, dir + "field.csv"), field.str());
    auto emit = [&](const RadialCurve& c) {
      write_text(path_in(cfg, dir + c.name() + ".csv"), two_column_csv(h, "r", c.name(), c.radii(), c.values()));
    };
    emit(curve_mu(fx.mu, radii));
    emit(curve_n(fx.mu, radii));
    emit(curve_M(fx.field, radii, s.workers));
    emit(curve_T(fx.field, radii, s.workers));
    emit(curve_tsuji_m(fx.field, radii, s.workers));
    emit(delta_curve(fx.field, fx.mu, radii, s.workers));
    std::cout << "eval " << id << " -> " << path_in(cfg, dir) << "\n";
    ++written;
  }
  if (written == 0) throw UsageError("no canonical fixture matches the selector");
  return kExitPass;
}

namespace {

SampledInput sampled_from_csv(const std::string& path) {
  const std::string body = csv_body(read_text(path));
  std::istringstream is(body);
  std::string line;
  std::vector<double> t, hv;
  bool first = true;
  while (std::getline(is, line)) {
    if (trim(line).empty()) continue;
    const auto cols = split_list(line);
    if (cols.size() < 2) throw UsageError(path + ": expected columns t,h");
    if (first && cols[0] == "t") {
      first = false;
      continue;
    }
    first = false;
    t.push_back(parse_number(cols[0]));
    hv.push_back(parse_number(cols[1]));
  }
  if (t.size() < 8) throw UsageError(path + ": need at least 8 samples");
  SampledInput in;
  in.t0 = t.front();
  in.dt = (t.back() - t.front()) / (t.size() - 1);
  for (std::size_t k = 0; k < t.size(); ++k)
    if (std::abs(t[k] - (in.t0 + k * in.dt)) > 1e-9 * std::max(1.0, std::abs(t[k])))
      throw UsageError(path + ": samples must be uniformly spaced");
  in.h = hv;
  return in;
}

}  // namespace

int cmd_hilbert(const RunConfig& cfg) {
  const OutputHeader h = header_for(cfg);
  std::vector<std::string> inputs = cfg.inputs;
  if (inputs.empty()) inputs = named_inputs();
  const auto names = named_inputs();
  for (const auto& name : inputs) {
    HilbertPair pair;
    std::string stem;
    if (std::find(names.begin(), names.end(), name) != names.end()) {
      HilbertOptions ho;
      ho.intervals = cfg.suite.hilbert_intervals;
      SmoothInput in = named_input(name);
      ho.tail_extension = in.decaying;
      pair = hilbert_pair(in, ho);
      stem = name;
    } else if (fs::exists(name)) {
      pair = hilbert_pair(sampled_from_csv(name));
      stem = fs::path(name).stem().string();
    } else {
      throw UsageError("unknown input '" + name + "'; valid names: " + join(names, ", ") + " or a CSV path");
    }
    std::ostringstream os;
    os << csv_header(h) << "# convention " << pair.convention << "\n"
       << "# certified " << (pair.certified ? "true" : "false") << "\n"
       << "t,h,g,err_estimate\n";
    for (std::size_t k = 0; k < pair.t.size(); ++k)
      os << format_number(pair.t[k]) << ',' << format_number(pair.h[k]) << ',' << format_number(pair.g[k]) << ','
         << format_number(pair.err[k]) << '\n';
    const std::string path = path_in(cfg, "hilbert/" + safe_name(stem) + ".csv");
    write_text(path, os.str());
    std::cout << "hilbert " << stem << " -> " << path << " (max error " << format_number(pair.max_error) << ")\n";
  }
  return kExitPass;
}

int cmd_verify(const RunConfig& cfg) {
  const OutputHeader h = header_for(cfg);
  const std::vector<std::string> suites = cfg.suites.empty() ? suite_names() : cfg.suites;
  std::vector<VerificationReport> all;
  bool failed = false;
  write_text(path_in(cfg, "config.txt"), canonical_config(cfg));
  for (const auto& name : suites) {
    const auto reports = run_suite(name, cfg.suite);
    write_text(path_in(cfg, name + ".json"), reports_to_json(name, reports, h));
    int pass = 0, fail = 0, unmet = 0;
    std::size_t checks = 0;
    double runtime = 0.0;
    for (const auto& r : reports) {
      if (r.status == Status::pass) ++pass;
      else if (r.status == Status::fail) ++fail;
      else ++unmet;
      checks += r.kind == "identity" ? std::max<std::size_t>(r.lhs.size(), 1) : 1;
      runtime += r.runtime;
    }
    failed = failed || fail > 0;
    std::printf("%-24s %s  reports %zu, checks %zu: pass %d, fail %d, hypotheses_unmet %d (%.1f s)\n", name.c_str(),
                fail ? "FAIL" : "ok  ", reports.size(), checks, pass, fail, unmet, runtime);
    for (const auto& r : reports)
      if (r.status == Status::fail)
        std::printf("    fail %s/%s: stat %s C %s stability %s %s\n", r.check.c_str(), r.fixture.c_str(),
                    format_number(r.max_stat).c_str(), format_number(r.constant).c_str(),
                    format_number(r.stability).c_str(), r.note.c_str());
    all.insert(all.end(), reports.begin(), reports.end());
  }
  const std::string summary = summary_csv(all, h);
  write_text(path_in(cfg, "summary.csv"), summary);
  std::printf("config %s, summary body %s\n", h.config_hash.c_str(), hex64(fnv1a(csv_body(summary))).c_str());
  return failed ? kExitFailure : kExitPass;
}

int cmd_report(const RunConfig& cfg) {
  const OutputHeader h = header_for(cfg);
  if (!fs::is_directory(cfg.out)) throw std::runtime_error("no report directory " + cfg.out);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(cfg.out))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw std::runtime_error("no JSON reports in " + cfg.out + "; run verify first");
  std::ostringstream txt;
  txt << "genusone " << kVersion << " report, source " << source_hash() << "\n\n";
  bool failed = false;
  int plots = 0;
  for (const auto& f : files) {
    const auto reports = reports_from_json(read_text(f.string()));
    if (reports.empty()) continue;
    const std::string suite = reports.front().suite;
    if (!cfg.suites.empty() && std::find(cfg.suites.begin(), cfg.suites.end(), suite) == cfg.suites.end()) continue;
    txt << suite << "\n";
    for (const auto& r : reports) {
      if (!fixture_selected(r.fixture, cfg.suite.fixtures)) continue;
      failed = failed || r.status == Status::fail;
      char line[512];
      if (r.kind == "inequality" || r.kind == "family")
        std::snprintf(line, sizeof line, "  %-18s %-28s %-16s C = %-12s stability = %-10s", status_name(r.status),
                      r.check.c_str(), r.fixture.c_str(), format_number(r.constant).c_str(),
                      format_number(r.stability).c_str());
      else
        std::snprintf(line, sizeof line, "  %-18s %-28s %-16s stat = %-12s tol = %-10s", status_name(r.status),
                      r.check.c_str(), r.fixture.c_str(), format_number(r.max_stat).c_str(),
                      format_number(r.tolerance).c_str());
      txt << line << (r.note.empty() ? "" : "  " + r.note) << "\n";
      if (r.kind == "inequality" && r.abscissa.size() > 1) {
        const std::string stem = "plots/" + safe_name(suite) + "/" + safe_name(r.check + "__" + r.fixture);
        write_text(path_in(cfg, stem + "_lhs.csv"), two_column_csv(h, "x", "lhs", r.abscissa, r.lhs));
        write_text(path_in(cfg, stem + "_rhs.csv"), two_column_csv(h, "x", "rhs", r.abscissa, r.rhs));
        ++plots;
      }
    }
    txt << "\n";
  }
  write_text(path_in(cfg, "report.txt"), txt.str());
  std::cout << txt.str() << plots << " plot pairs under " << path_in(cfg, "plots") << "\n";
  return failed ? kExitFailure : kExitPass;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Canonical integrals of genus one: evaluation and verification"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string config_path, out;
  std::vector<std::string> suites, fixtures, inputs;
  int per_decade = 0, workers = 0;
  double tol = 0.0;
  unsigned long long seed = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "flat key = value config file");
    sub->add_option("--fixture", fixtures, "fixture id or prefix* (repeatable, comma separated)")->delimiter(',');
    sub->add_option("--out", out, "output directory");
    sub->add_option("--grid-per-decade", per_decade, "radii per decade on the base grid");
    sub->add_option("--tol", tol, "identity tolerance");
    sub->add_option("--seed", seed, "seed for randomized fixtures and spot checks");
    sub->add_option("--workers", workers, "worker threads");
  };
  CLI::App* eval = app.add_subcommand("eval", "sample fields and radial curves of canonical fixtures");
  CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert pairs for named inputs or sampled CSVs");
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  CLI::App* report = app.add_subcommand("report", "summarize reports and write plot data");
  for (CLI::App* sub : {eval, hilbert, verify, report}) common(sub);
  for (CLI::App* sub : {verify, report})
    sub->add_option("--suite", suites, "suite name (repeatable, comma separated)")->delimiter(',');
  hilbert->add_option("--input", inputs, "registry name or CSV path with columns t,h")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) {
      std::string text;
      try {
        text = read_text(config_path);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIO;
      }
      apply_config_text(cfg, text);
    }
    auto given = [](CLI::App* sub, const char* name) { return sub->count(name) > 0; };
    CLI::App* sub = app.get_subcommands().front();
    if (given(sub, "--fixture")) {
      cfg.suite.fixtures = fixtures;
      if (fixtures.empty()) throw UsageError("empty fixture selector");
    }
    if (given(sub, "--out")) cfg.out = out;
    if (given(sub, "--grid-per-decade")) cfg.suite.per_decade = per_decade;
    if (given(sub, "--tol")) cfg.suite.identity_tol = tol;
    if (given(sub, "--seed")) cfg.suite.seed = seed;
    if (given(sub, "--workers")) cfg.suite.workers = workers;
    if (sub != eval && sub != hilbert && given(sub, "--suite")) cfg.suites = suites;
    if (sub == hilbert && given(sub, "--input")) cfg.inputs = inputs;
    validate(cfg);

    if (sub == eval) return cmd_eval(cfg);
    if (sub == hilbert) return cmd_hilbert(cfg);
    if (sub == verify) return cmd_verify(cfg);
    return cmd_report(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIO;
  }
}

}  // namespace genusone
