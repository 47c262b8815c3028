#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>

#include "charboole/verify.hpp"

namespace charboole::verify {

std::string format_rational(const Rational& r) { return r.str(); }

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(Complex z) {
  const double im = z.imag();
  std::string out = format_double(z.real());
  out += (im < 0.0 ? "-" : "+");
  out += format_double(std::abs(im));
  out += "i";
  return out;
}

std::string format_value(const ExactOrComplex& v) {
  if (v.exact) return format_rational(*v.exact);
  if (v.cyclotomic) return v.cyclotomic->str();
  return format_complex(v.value);
}

namespace {

// JSON numbers cannot hold nan/inf; those go in as strings.
Json number(double x) {
  if (std::isfinite(x)) return x;
  return format_double(x);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json SuiteReport::to_json() const {
  Json j;
  j["suite"] = suite;
  j["version"] = version;
  Json arr = Json::array();
  for (const auto& c : cases) {
    Json e;
    e["params"] = c.params;
    e["lhs"] = c.lhs;
    e["rhs"] = c.rhs;
    e["defect"] = number(c.defect);
    e["pass"] = c.pass;
    e["route_meta"] = c.route_meta;
    arr.push_back(std::move(e));
  }
  j["cases"] = std::move(arr);
  j["failures"] = failures;
  j["max_defect"] = number(max_defect);
  j["timestamp"] = timestamp;
  return j;
}

std::string SuiteReport::to_csv() const {
  std::ostringstream os;
  os << "suite,version,case,params,lhs,rhs,defect,pass,route_meta\n";
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& c = cases[i];
    os << csv_field(suite) << ',' << version << ',' << i << ',' << csv_field(c.params.dump()) << ','
       << csv_field(c.lhs) << ',' << csv_field(c.rhs) << ',' << format_double(c.defect) << ','
       << (c.pass ? "true" : "false") << ',' << csv_field(c.route_meta.dump()) << '\n';
  }
  return os.str();
}

std::string SuiteReport::render(Format f) const {
  if (f == Format::csv) return to_csv();
  return to_json().dump(2) + "\n";
}

std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

long parse_one(const std::string& s) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw ConfigError("not an integer: '" + s + "'");
  }
  if (pos != s.size()) throw ConfigError("not an integer: '" + s + "'");
  return v;
}

}  // namespace

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_one(item));
      continue;
    }
    const long lo = parse_one(item.substr(0, dots));
    const long hi = parse_one(item.substr(dots + 2));
    if (hi < lo) throw ConfigError("empty range '" + item + "'");
    for (long v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw ConfigError("empty list");
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (long v : parse_long_list(text)) out.push_back(static_cast<int>(v));
  return out;
}

}  // namespace charboole::verify
