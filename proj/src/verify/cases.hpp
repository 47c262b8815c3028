#pragma once

#include <functional>
#include <string>
#include <vector>

#include "charboole/verify.hpp"

namespace charboole::verify {

struct Case {
  Json params;
  std::function<CaseResult()> run;
};

// The grid of a suite with config overrides applied.
std::vector<Case> build_cases(const SuiteConfig& cfg);

std::string utc_timestamp();

}  // namespace charboole::verify
