#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "charboole/eulerfun.hpp"
#include "charboole/numeric.hpp"
#include "charboole/rational.hpp"
#include "json.hpp"

namespace charboole::verify {

using Json = nlohmann::ordered_json;

// Invalid suite name or parameter range; raised before any case runs.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { json, csv };

// Empty or zero fields mean "use the suite's default grid".
struct SuiteConfig {
  std::string suite;
  std::vector<long> moduli;
  int pmax = 0;
  long bcmax = 0;
  std::vector<int> orders;
  std::optional<double> tol;
  int jobs = 0;

  void validate() const;
};

struct CaseResult {
  Json params = Json::object();
  std::string lhs;
  std::string rhs;
  double defect = 0.0;
  bool pass = false;
  Json route_meta = Json::object();
};

struct SuiteReport {
  std::string suite;
  int version = 1;
  std::vector<CaseResult> cases;
  int failures = 0;
  double max_defect = 0.0;
  std::string timestamp;

  Json to_json() const;
  std::string to_csv() const;
  std::string render(Format f) const;
};

struct SuiteInfo {
  std::string name;
  int version;
  std::string description;
};

const std::vector<SuiteInfo>& suites();
const SuiteInfo* find_suite(const std::string& name);

// Runs every case of the suite on a worker pool; case order is the grid order.
SuiteReport run_suite(const SuiteConfig& cfg);

// CHARBOOLE_JOBS if set and positive, else the hardware thread count.
int default_jobs();

// "p/q" (or "p" for integers).
std::string format_rational(const Rational& r);
// "re+im i" / "re-im i" with 17 significant digits.
std::string format_complex(Complex z);
std::string format_value(const ExactOrComplex& v);
// Round-trippable decimal for report fields.
std::string format_double(double x);

// Parses "1..4" or "1,2,5" into integers (ConfigError on bad input).
std::vector<int> parse_int_list(const std::string& text);
std::vector<long> parse_long_list(const std::string& text);

}  // namespace charboole::verify
