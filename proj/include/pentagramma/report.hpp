#pragma once

// RunReport: the record every CLI command produces, with a deterministic
// JSON form (sorted keys, 17 significant digits) and a plain-text table.

#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace pentagramma::report {

using Value = std::variant<double, std::vector<double>, std::string>;

struct Check {
  double value = 0.0;
  double tolerance = 0.0;
  bool pass() const noexcept { return std::abs(value) <= tolerance; }
};

struct RunReport {
  std::string command;
  std::map<std::string, Value> inputs;
  std::map<std::string, Value> outputs;
  std::map<std::string, Check> residuals;
  std::vector<std::string> warnings;

  bool pass() const noexcept {
    for (const auto& [name, check] : residuals) {
      if (!check.pass()) return false;
    }
    return true;
  }

  void check(const std::string& name, double value, double tolerance) { residuals[name] = {value, tolerance}; }

  // Overwrites every tolerance, for --tol and PENTAGRAMMA_TOL.
  void override_tolerance(double tol) {
    for (auto& [name, check] : residuals) check.tolerance = tol;
  }
};

inline std::string format_number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

inline std::string to_json(const Value& v) {
  if (const auto* d = std::get_if<double>(&v)) return format_number(*d);
  if (const auto* s = std::get_if<std::string>(&v)) return quote(*s);
  const auto& xs = std::get<std::vector<double>>(v);
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += format_number(xs[i]);
  }
  return out + "]";
}

inline std::string to_json(const std::map<std::string, Value>& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [key, value] : m) {
    if (!first) out += ",";
    first = false;
    out += quote(key) + ":" + to_json(value);
  }
  return out + "}";
}

// Keys at every level come out in lexicographic order.
inline std::string to_json(const RunReport& r) {
  std::string residuals = "{";
  bool first = true;
  for (const auto& [name, c] : r.residuals) {
    if (!first) residuals += ",";
    first = false;
    residuals += quote(name) + ":{\"pass\":" + (c.pass() ? "true" : "false") +
                 ",\"tolerance\":" + format_number(c.tolerance) + ",\"value\":" + format_number(c.value) + "}";
  }
  residuals += "}";
  std::string warnings = "[";
  for (std::size_t i = 0; i < r.warnings.size(); ++i) {
    if (i) warnings += ",";
    warnings += quote(r.warnings[i]);
  }
  warnings += "]";
  return "{\"command\":" + quote(r.command) + ",\"inputs\":" + to_json(r.inputs) +
         ",\"outputs\":" + to_json(r.outputs) + ",\"residuals\":" + residuals +
         ",\"status\":" + quote(r.pass() ? "pass" : "fail") + ",\"warnings\":" + warnings + "}\n";
}

inline std::string to_text(const RunReport& r) {
  std::ostringstream os;
  auto show = [](const Value& v) {
    if (const auto* d = std::get_if<double>(&v)) return format_number(*d);
    if (const auto* s = std::get_if<std::string>(&v)) return *s;
    return to_json(v);
  };
  os << r.command << "\n";
  for (const auto& [k, v] : r.inputs) os << "  input   " << k << " = " << show(v) << "\n";
  for (const auto& [k, v] : r.outputs) os << "  output  " << k << " = " << show(v) << "\n";
  for (const auto& [k, c] : r.residuals) {
    char line[256];
    std::snprintf(line, sizeof line, "  check   %-34s %12.3e  (tol %.1e)  %s\n", k.c_str(), c.value, c.tolerance,
                  c.pass() ? "ok" : "FAIL");
    os << line;
  }
  for (const auto& w : r.warnings) os << "  warning " << w << "\n";
  os << "status: " << (r.pass() ? "pass" : "fail") << "\n";
  return os.str();
}

} // namespace pentagramma::report
