// Acceptance run: one PASS/FAIL line per criterion.
// Usage: acceptance [output-dir]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "genusone/cli.hpp"
#include "genusone/fixtures.hpp"
#include "genusone/report_io.hpp"
#include "genusone/suites.hpp"

using namespace genusone;

namespace {

constexpr double kKernelTol = 1e-8;
constexpr double kKernelSeconds = 30.0;
constexpr int kKernelTuples = 200;
constexpr double kIdentityTol = 1e-6;
constexpr double kLevinSeconds = 120.0;
constexpr int kIdentityFixtures = 20;
constexpr int kTsujiRadii = 16;
constexpr int kPositivityFixtures = 5;
constexpr double kPositivitySlack = 1e-6;
constexpr double kStabilityBand = 0.1;
constexpr int kMinFixturesPerSuite = 10;
constexpr double kUpTol = 1e-3;
constexpr double kJensenTol = 1e-8;
constexpr double kMomentTol = 1e-10;
constexpr double kStructuralSlack = 1e-12;

using Reports = std::vector<VerificationReport>;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Timed {
  Reports reports;
  double seconds = 0.0;
};

Timed run(const std::string& suite, const SuiteConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  Timed t;
  t.reports = run_suite(suite, cfg);
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return t;
}

std::string num(double x) { return format_number(x); }

bool stable(const VerificationReport& r) {
  return std::isfinite(r.constant) && std::isfinite(r.constant_coarse) && r.stability <= kStabilityBand;
}

// Every report passes; identities also meet `tol` on their own statistic.
Outcome all_pass(const Reports& rs, double tol = kInf) {
  Outcome o;
  double worst = 0.0;
  int bad = 0;
  for (const auto& r : rs) {
    bool ok = r.status == Status::pass;
    if (r.kind == "identity") {
      ok = ok && r.max_stat <= tol;
      worst = std::max(worst, r.max_stat);
    } else if (r.kind == "inequality" || r.kind == "family") {
      ok = ok && stable(r);
    }
    if (!ok) {
      ++bad;
      if (o.detail.size() < 300) o.detail += " [" + r.check + "/" + r.fixture + " " + status_name(r.status) + "]";
    }
  }
  o.ok = bad == 0 && !rs.empty();
  o.detail = std::to_string(rs.size()) + " reports, " + std::to_string(bad) + " failing" +
             (tol < kInf ? ", worst residual " + num(worst) : "") + o.detail;
  return o;
}

int count_fixtures(const Reports& rs, const std::string& check = "") {
  std::set<std::string> ids;
  for (const auto& r : rs)
    if (r.kind != "family" && (check.empty() || r.check == check)) ids.insert(r.fixture);
  return static_cast<int>(ids.size());
}

Outcome criterion1(const SuiteConfig& cfg) {
  const Timed t = run("kernel_identities", cfg);
  Outcome o = all_pass(t.reports, kKernelTol);
  for (const auto& r : t.reports) o.ok = o.ok && r.lhs.size() >= static_cast<std::size_t>(kKernelTuples);
  o.ok = o.ok && t.reports.size() == 3 && t.seconds <= kKernelSeconds;
  o.detail += ", " + num(std::round(t.seconds * 100) / 100) + " s";
  return o;
}

Outcome identity_criterion(const char* suite, const SuiteConfig& cfg, double seconds, std::size_t points) {
  const Timed t = run(suite, cfg);
  Outcome o = all_pass(t.reports, kIdentityTol);
  for (const auto& r : t.reports) o.ok = o.ok && r.lhs.size() == points;
  o.ok = o.ok && count_fixtures(t.reports) >= kIdentityFixtures && t.seconds <= seconds;
  o.detail += ", " + std::to_string(count_fixtures(t.reports)) + " fixtures, " +
              num(std::round(t.seconds * 100) / 100) + " s";
  return o;
}

Outcome criterion5(const SuiteConfig& cfg) {
  const Timed t = run("lemma5", cfg);
  Outcome o = all_pass(t.reports);
  double worst = 0.0;
  for (const auto& r : t.reports)
    for (std::size_t i = 0; i < r.lhs.size(); ++i) {
      // certified upper bound of the left side against the certified lower bound of the right side
      o.ok = o.ok && r.lhs[i] <= r.rhs[i];
      if (r.rhs[i] > 0.0) worst = std::max(worst, r.lhs[i] / r.rhs[i]);
    }
  o.ok = o.ok && count_fixtures(t.reports) >= kIdentityFixtures;
  o.detail += ", worst bound ratio " + num(worst);
  return o;
}

Outcome criterion6(const SuiteConfig& cfg) {
  const Timed t = run("positivity", cfg);
  Outcome o = all_pass(t.reports);
  o.ok = o.ok && count_fixtures(t.reports) >= kPositivityFixtures;
  // The floor is applied here as well, from a fresh scan of the same inputs.
  int scanned = 0;
  double worst = kInf;
  for (const auto& in : hilbert_inputs()) {
    HilbertOptions ho;
    ho.intervals = cfg.hilbert_intervals;
    const PositivityResult p = positivity_scan(make_hilbert_pair(in, ho));
    const double floor = -kPositivitySlack * std::max(1.0, p.max_value);
    o.ok = o.ok && p.evaluated > 0 && p.min_value >= floor;
    worst = std::min(worst, p.min_value / std::max(1.0, p.max_value));
    ++scanned;
  }
  o.ok = o.ok && scanned >= kPositivityFixtures;
  o.detail += ", min u_f / max(1, M) " + num(worst);
  return o;
}

Outcome criterion7(const SuiteConfig& cfg) {
  const Timed t = run("marcinkiewicz_hilbert", cfg);
  Outcome o = all_pass(t.reports);
  for (const char* check : {"marcinkiewicz", "kolmogorov", "riesz_p1.25", "riesz_p1.50", "riesz_p1.75"})
    if (count_fixtures(t.reports, check) == 0) {
      o.ok = false;
      o.detail += std::string(" missing ") + check;
    }
  return o;
}

Outcome criterion8(const SuiteConfig& cfg) {
  Outcome o;
  std::string parts;
  for (const char* suite : {"theorem1", "theorem2", "corollary5", "corollary6_riesz", "corollary6_weak",
                            "corollary6_kolmogorov", "real_line_1_8", "theorem3"}) {
    const Timed t = run(suite, cfg);
    std::map<std::string, bool> fixture_ok;
    int failing = 0;
    for (const auto& r : t.reports) {
      if (r.kind != "inequality" || r.status == Status::hypotheses_unmet) continue;
      const bool ok = stable(r);
      auto [it, fresh] = fixture_ok.emplace(r.fixture, ok);
      if (!fresh) it->second = it->second && ok;
      if (!ok) ++failing;
    }
    int good = 0;
    for (const auto& [id, ok] : fixture_ok) good += ok;
    const bool ok = failing == 0 && good >= kMinFixturesPerSuite;
    o.ok = o.ok && ok;
    parts += std::string(" ") + suite + "=" + std::to_string(good) + (failing ? "/" + std::to_string(failing) + "bad" : "");
  }
  o.detail = "stable fixtures per suite:" + parts;
  return o;
}

Outcome criterion9(const SuiteConfig& cfg) {
  const Timed t = run("up_fixture", cfg);
  Outcome o = all_pass(t.reports, kUpTol);
  int closed = 0, sign = 0;
  for (const auto& r : t.reports) {
    closed += r.check == "closed_form";
    sign += r.check == "nonpositive_on_R" && r.max_stat <= 0.0;
  }
  o.ok = o.ok && closed == 3 && sign == 3;
  return o;
}

Outcome criterion10(const SuiteConfig& cfg) {
  const Timed t = run("jensen", cfg);
  Outcome o = all_pass(t.reports);
  bool circle = false, moments = false, potential = false, family = false;
  for (const auto& r : t.reports) {
    if (r.check == "circle_potential") circle = r.max_stat <= kJensenTol;
    if (r.check == "push_moments") moments = r.max_stat <= kMomentTol;
    if (r.check == "push_potential_nonnegative") potential = r.status == Status::pass;
    if (r.kind == "family") family = stable(r);
  }
  o.ok = o.ok && circle && moments && potential && family;
  return o;
}

Outcome criterion11(const SuiteConfig& cfg) {
  const Timed t = run("structural", cfg);
  Outcome o = all_pass(t.reports);
  for (const auto& r : t.reports) o.ok = o.ok && r.tolerance <= kStructuralSlack;
  return o;
}

Outcome criterion12(const std::string& out) {
  RunConfig cfg;
  cfg.suites = {"borel", "corollary6_kolmogorov", "levin"};
  cfg.suite.per_decade = 8;
  cfg.suite.fixtures = {"atomic_0*", "symmetric_0*", "up_1.50"};
  std::string bodies[2];
  int k = 0;
  for (int workers : {1, 4}) {
    cfg.suite.workers = workers;
    cfg.out = out + "/determinism_w" + std::to_string(workers);
    const int rc = cmd_verify(cfg);
    if (rc > kExitFailure) return {false, "verify exited with " + std::to_string(rc)};
    bodies[k++] = csv_body(read_text(cfg.out + "/summary.csv"));
  }
  const bool same = !bodies[0].empty() && bodies[0] == bodies[1];
  return {same, std::to_string(std::count(bodies[0].begin(), bodies[0].end(), '\n')) + " summary lines, " +
                    (same ? "identical" : "different")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string out = argc > 1 ? argv[1] : "acceptance-out";
  SuiteConfig cfg;
  cfg.identity_tol = kIdentityTol;
  cfg.stability_band = kStabilityBand;

  struct Item {
    const char* name;
    std::function<Outcome()> fn;
  };
  const std::vector<Item> items = {
      {"kernel identities", [&] { return criterion1(cfg); }},
      {"Levin formula", [&] { return identity_criterion("levin", cfg, kLevinSeconds, 1); }},
      {"Carleman formula", [&] { return identity_criterion("carleman", cfg, kInf, 1); }},
      {"Tsuji identity", [&] { return identity_criterion("tsuji_fft", cfg, kInf, kTsujiRadii); }},
      {"Tsuji characteristic bound", [&] { return criterion5(cfg); }},
      {"log-determinant positivity", [&] { return criterion6(cfg); }},
      {"Hilbert-pair inequalities", [&] { return criterion7(cfg); }},
      {"growth inequalities", [&] { return criterion8(cfg); }},
      {"u_p closed form", [&] { return criterion9(cfg); }},
      {"Jensen measures", [&] { return criterion10(cfg); }},
      {"structural invariants", [&] { return criterion11(cfg); }},
      {"determinism", [&] { return criterion12(out); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    Outcome o;
    try {
      o = items[i].fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.ok;
    std::printf("criterion %2zu %-28s %s  %s\n", i + 1, items[i].name, o.ok ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
