#pragma once

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "euler2/identities.hpp"
#include "euler2/rational.hpp"

namespace euler2 {

enum class OutputFormat { plain, csv, json, bfile };

inline std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "plain") return OutputFormat::plain;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "bfile") return OutputFormat::bfile;
  return std::nullopt;
}

inline std::string exact_value_to_string(const ExactValue& value) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "undefined";
        } else if constexpr (std::is_same_v<T, std::vector<Int>>) {
          std::string out = "[";
          for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0) out += ", ";
            out += to_string(v[i]);
          }
          return out + "]";
        } else {
          return to_string(v);
        }
      },
      value);
}

// JSON schema for reports:
//   {"identity": str, "params": {..}, "lhs": str|array, "rhs": str|array,
//    "holds": bool, "note": str?}
// Rationals serialize as "p/q" strings, polynomials as ascending coefficient
// arrays of such strings.

inline nlohmann::ordered_json exact_value_to_json(const ExactValue& value) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "undefined";
        } else if constexpr (std::is_same_v<T, Rational>) {
          return to_string(v);
        } else if constexpr (std::is_same_v<T, PolyQ>) {
          auto arr = nlohmann::ordered_json::array();
          for (const auto& c : v.coefficients()) arr.push_back(to_string(c));
          return arr;
        } else {
          auto arr = nlohmann::ordered_json::array();
          for (const auto& c : v) arr.push_back(to_string(c));
          return arr;
        }
      },
      value);
}

inline nlohmann::ordered_json report_to_json(const IdentityReport& report) {
  nlohmann::ordered_json out;
  out["identity"] = report.identity;
  auto params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : report.params) params[name] = value;
  out["params"] = std::move(params);
  out["lhs"] = exact_value_to_json(report.lhs);
  out["rhs"] = exact_value_to_json(report.rhs);
  out["holds"] = report.holds;
  if (!report.note.empty()) out["note"] = report.note;
  return out;
}

inline std::string report_params_string(const IdentityReport& report) {
  std::string out;
  for (const auto& [name, value] : report.params) {
    if (!out.empty()) out += ' ';
    out += name + "=" + std::to_string(value);
  }
  return out;
}

/// One line per report: status, identity, parameters; both sides and the
/// note whenever something needs explaining.
inline std::string report_to_plain(const IdentityReport& report) {
  const char* status = report.holds ? (report.expected_failure ? "XPASS" : "ok")
                                    : (report.expected_failure ? "xfail" : "FAIL");
  std::string line = status;
  line.append(6 - std::min<std::size_t>(5, line.size()), ' ');
  line += report.identity + " " + report_params_string(report);
  if (!report.holds || report.expected_failure)
    line += " lhs=" + exact_value_to_string(report.lhs) +
            " rhs=" + exact_value_to_string(report.rhs);
  if (!report.note.empty()) line += "  # " + report.note;
  return line;
}

inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline constexpr const char* kReportCsvHeader = "identity,params,lhs,rhs,holds,note";

inline std::string report_to_csv_row(const IdentityReport& report) {
  return csv_escape(report.identity) + "," + csv_escape(report_params_string(report)) + "," +
         csv_escape(exact_value_to_string(report.lhs)) + "," +
         csv_escape(exact_value_to_string(report.rhs)) + "," +
         (report.holds ? "true" : "false") + "," + csv_escape(report.note);
}

// OEIS b-file format: one "n a(n)" pair per line, indices consecutive from
// the sequence's natural offset. Only integer sequences are representable.

struct BFileEntry {
  long long index = 0;
  Int value;

  friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

inline std::string render_bfile(const std::vector<Int>& values, long long offset) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i)
    out += std::to_string(offset + static_cast<long long>(i)) + " " + to_string(values[i]) + "\n";
  return out;
}

/// Strict parse; '#' comment lines and blank lines are skipped, indices must
/// be consecutive.
inline std::vector<BFileEntry> parse_bfile(std::istream& in) {
  std::vector<BFileEntry> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    BFileEntry entry;
    std::string value_text, extra;
    if (!(fields >> entry.index >> value_text) || fields >> extra)
      throw std::invalid_argument("b-file: malformed line '" + line + "'");
    try {
      entry.value = Int{value_text};
    } catch (const std::exception&) {
      throw std::invalid_argument("b-file: bad value '" + value_text + "'");
    }
    if (!entries.empty() && entry.index != entries.back().index + 1)
      throw std::invalid_argument("b-file: non-consecutive index " + std::to_string(entry.index));
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace euler2
