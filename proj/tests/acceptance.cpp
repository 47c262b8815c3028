// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "charboole/verify.hpp"

using namespace charboole::verify;

namespace {

struct Timed {
  SuiteReport report;
  double seconds;
};

Timed run(const std::string& suite, std::vector<long> moduli = {}, int pmax = 0, long bcmax = 0) {
  SuiteConfig cfg;
  cfg.suite = suite;
  cfg.moduli = std::move(moduli);
  cfg.pmax = pmax;
  cfg.bcmax = bcmax;
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport r = run_suite(cfg);
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {std::move(r), s};
}

std::string str(const Json& j, const char* key) {
  return j.contains(key) && j[key].is_string() ? j[key].get<std::string>() : std::string();
}

double max_defect(const SuiteReport& r, const std::function<bool(const CaseResult&)>& pick) {
  double m = 0.0;
  for (const auto& c : r.cases)
    if (pick(c)) m = std::isnan(c.defect) ? c.defect : std::max(m, c.defect);
  return m;
}

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", n, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool all_pass(const SuiteReport& r) { return r.failures == 0 && !r.cases.empty(); }

void criterion1() {
  const auto t = run("recip2", {3, 5}, 5, 6);
  int admissible_odd_p = 0;
  bool exact = true;
  for (const auto& c : t.report.cases) {
    if (str(c.params, "chi") == "chi[3](1)" && c.params["p"].get<int>() % 2 == 1) ++admissible_odd_p;
    exact = exact && c.pass && c.defect == 0.0 && c.route_meta.value("exact", false) && c.lhs == c.rhs;
  }
  const bool ok = all_pass(t.report) && exact && admissible_odd_p >= 30 && t.seconds < 10.0;
  report(1, ok,
         fmt("recip2 exact zero defect on %zu cases (%d with p in {1,3,5}), %.2f s", t.report.cases.size(),
             admissible_odd_p, t.seconds));
}

void criterion2() {
  const auto t = run("recip1", {3, 5, 9}, 7, 5);
  bool chi3_exact = true;
  int chi3_cases = 0, complex_cases = 0;
  double complex_max = 0.0;
  for (const auto& c : t.report.cases) {
    const std::string chi = str(c.params, "chi");
    if (chi == "chi[3](1)") {
      ++chi3_cases;
      chi3_exact = chi3_exact && c.defect == 0.0 && c.lhs == c.rhs;
    } else {
      ++complex_cases;
      complex_max = std::isnan(c.defect) ? c.defect : std::max(complex_max, c.defect);
    }
  }
  const bool ok = all_pass(t.report) && chi3_exact && chi3_cases > 0 && complex_cases > 0 &&
                  complex_max < 1e-10 && t.seconds < 30.0;
  report(2, ok,
         fmt("recip1 exact on %d chi3 cases, max defect %.3g on %d other primitive cases, %.2f s", chi3_cases,
             complex_max, complex_cases, t.seconds));
}

void criterion3() {
  const auto cb = run("char-boole");
  const auto bo = run("boole");
  const auto em = run("cem");
  const double m = std::max({cb.report.max_defect, bo.report.max_defect, em.report.max_defect});
  std::set<std::string> fs;
  for (const auto& c : cb.report.cases) fs.insert(str(c.params, "f"));
  const bool ok = all_pass(cb.report) && all_pass(bo.report) && all_pass(em.report) && m < 1e-10 &&
                  fs.size() == 3 && cb.report.cases.size() >= 72 && cb.seconds < 10.0;
  report(3, ok,
         fmt("char-boole %zu cases (%.2f s), boole %zu, euler-maclaurin %zu; max defect %.3g",
             cb.report.cases.size(), cb.seconds, bo.report.cases.size(), em.report.cases.size(), m));
}

void criterion4() {
  const auto t = run("lfunc-routes");
  std::map<std::string, int> n;
  std::map<std::string, double> worst;
  for (const auto& c : t.report.cases) {
    const std::string k = str(c.params, "check");
    ++n[k];
    worst[k] = std::max(worst[k], c.defect);
  }
  const bool ok = all_pass(t.report) && n["partial"] == 10 && n["routes"] > 0 && n["negint"] > 0 &&
                  worst["routes"] < 1e-8 && worst["partial"] < 1e-9 && worst["negint"] < 1e-9;
  report(4, ok,
         fmt("routes %d (max %.3g), partial sums %d (max %.3g), negative integers %d (max %.3g)", n["routes"],
             worst["routes"], n["partial"], worst["partial"], n["negint"], worst["negint"]));
}

void criterion5() {
  const auto t = run("closed-form");
  const bool ok = all_pass(t.report) && t.report.cases.size() >= 3 && t.report.max_defect < 1e-9;
  report(5, ok, fmt("ell(1, chi3) by %zu paths, max defect %.3g", t.report.cases.size(), t.report.max_defect));
}

void criterion6() {
  const auto t = run("lerch");
  auto by = [&](const char* check) {
    return max_defect(t.report, [&](const CaseResult& c) { return str(c.params, "check") == check; });
  };
  const double lerch = by("lerch"), lf = by("quotient vs log_formula"), pp = by("quotient vs partial_product"),
               w = by("weierstrass");
  const bool ok = all_pass(t.report) && lerch < 1e-8 && lf < 1e-8 && pp < 1e-4 && w < 1e-4;
  report(6, ok,
         fmt("lerch %.3g, log formula %.3g, partial product %.3g, weierstrass %.3g over %zu cases", lerch, lf, pp,
             w, t.report.cases.size()));
}

void criterion7() {
  const auto t = run("identities");
  const std::set<std::string> exact_kinds = {"reflection", "antiperiodicity", "half-argument", "duplication",
                                             "multiplication", "alternating multiplication"};
  int exact_n = 0, deriv_n = 0, bound_n = 0;
  bool exact_zero = true;
  double deriv = 0.0;
  for (const auto& c : t.report.cases) {
    const std::string id = str(c.params, "identity");
    if (exact_kinds.count(id)) {
      ++exact_n;
      exact_zero = exact_zero && c.defect == 0.0;
    } else if (id.find("derivative") != std::string::npos) {
      ++deriv_n;
      deriv = std::max(deriv, c.defect);
    } else if (id == "magnitude bound") {
      ++bound_n;
    }
  }
  const bool ok = all_pass(t.report) && exact_zero && exact_n > 0 && deriv < 1e-6 && deriv_n > 0 && bound_n > 0;
  report(7, ok,
         fmt("%d exact identities with zero defect, %d derivative checks (max %.3g), %d bound checks", exact_n,
             deriv_n, deriv, bound_n));
}

void criterion8() {
  const auto t = run("gf");
  const bool ok = all_pass(t.report) && t.report.cases.size() == 10 && t.report.max_defect < 1e-10;
  report(8, ok, fmt("%zu kernel/character pairs through j = 8, max defect %.3g", t.report.cases.size(),
                    t.report.max_defect));
}

void criterion9() {
  const auto t = run("integrals");
  std::map<std::string, int> n;
  std::map<std::string, double> worst;
  for (const auto& c : t.report.cases) {
    const std::string b = str(c.route_meta, "branch");
    ++n[b];
    worst[b] = std::max(worst[b], c.defect);
  }
  const std::string z = "p odd, b+c even", o = "p even, b+c odd", e = "p even, b+c even";
  const bool ok = all_pass(t.report) && n[z] >= 5 && n[o] >= 5 && n[e] >= 5 && worst[z] < 1e-10 &&
                  worst[o] < 1e-8 && worst[e] < 1e-8;
  report(9, ok,
         fmt("zero %d (max %.3g), p even b+c odd %d (max %.3g), p even b+c even %d (max %.3g)", n[z], worst[z],
             n[o], worst[o], n[e], worst[e]));
}

void criterion10() {
  const auto t = run("asymptotics");
  double least = INFINITY;
  for (const auto& c : t.report.cases) least = std::min(least, c.route_meta.value("reduction", 0.0));
  const bool ok = all_pass(t.report) && least >= 10.0;
  report(10, ok, fmt("%zu decay checks, smallest reduction on doubling %.1fx", t.report.cases.size(), least));
}

}  // namespace

int main() {
  for (auto* c : {criterion1, criterion2, criterion3, criterion4, criterion5, criterion6, criterion7, criterion8,
                  criterion9, criterion10}) {
    try {
      c();
    } catch (const std::exception& e) {
      std::printf("FAIL criterion: exception %s\n", e.what());
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
