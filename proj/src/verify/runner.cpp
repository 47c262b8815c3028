#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <thread>

#include "cases.hpp"

namespace charboole::verify {

int default_jobs() {
  if (const char* env = std::getenv("CHARBOOLE_JOBS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

const SuiteInfo* find_suite(const std::string& name) {
  for (const auto& s : suites()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

void SuiteConfig::validate() const {
  if (!find_suite(suite)) throw ConfigError("unknown suite '" + suite + "'");
  for (long k : moduli) {
    if (k < 3 || k % 2 == 0) throw ConfigError("moduli must be odd and >= 3 (got " + std::to_string(k) + ")");
  }
  if (pmax < 0) throw ConfigError("--pmax must be positive");
  if (bcmax < 0) throw ConfigError("--bcmax must be positive");
  for (int l : orders) {
    if (l < 0) throw ConfigError("orders must be >= 0");
  }
  if (tol && !(*tol > 0.0)) throw ConfigError("--tol must be > 0");
  if (jobs < 0) throw ConfigError("--jobs must be >= 1");
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  const SuiteInfo& info = *find_suite(cfg.suite);
  std::vector<Case> cases = build_cases(cfg);
  if (cases.empty()) throw ConfigError("suite '" + cfg.suite + "' has no admissible cases for this configuration");

  std::vector<CaseResult> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      CaseResult r;
      try {
        r = cases[i].run();
      } catch (const std::exception& e) {
        r = CaseResult{};
        r.defect = std::nan("");
        r.pass = false;
        r.route_meta["error"] = e.what();
      }
      r.params = cases[i].params;
      results[i] = std::move(r);
    }
  };
  const int jobs = std::max(1, std::min<int>(cfg.jobs > 0 ? cfg.jobs : default_jobs(), static_cast<int>(cases.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SuiteReport rep;
  rep.suite = info.name;
  rep.version = info.version;
  rep.timestamp = utc_timestamp();
  for (auto& r : results) {
    if (!r.pass) ++rep.failures;
    if (std::isnan(r.defect)) {
      rep.max_defect = r.defect;  // sticks: a case that failed to evaluate
    } else if (!std::isnan(rep.max_defect)) {
      rep.max_defect = std::max(rep.max_defect, r.defect);
    }
  }
  rep.cases = std::move(results);
  return rep;
}

}  // namespace charboole::verify
