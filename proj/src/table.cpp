#include "qfed/table.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "qfed/stack.hpp"

namespace qfed {

using json = nlohmann::ordered_json;

void ResultTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw ValidationError("row width does not match column count");
  }
  rows.push_back(std::move(row));
}

std::string config_hash(const std::string& serialized) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : serialized) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

OutputFormat format_from_string(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw ValidationError("format must be \"csv\" or \"json\"");
}

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17e", v);
  return buf;
}

std::string emit_csv(const ResultTable& table) {
  std::ostringstream out;
  for (size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out << ',';
    out << csv_quote(table.columns[i]);
  }
  out << '\n';
  out << '#';
  for (size_t i = 0; i < table.units.size(); ++i) {
    if (i) out << ',';
    out << csv_quote(table.units[i]);
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      if (std::holds_alternative<double>(row[i])) {
        out << format_number(std::get<double>(row[i]));
      } else {
        out << csv_quote(std::get<std::string>(row[i]));
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string emit_json(const ResultTable& table, const PhysicalConstants& pc) {
  json root;
  json meta;
  meta["config_hash"] = table.config_hash;
  meta["tool_version"] = kToolVersion;
  json constants;
  constants["c"] = pc.c;
  constants["hbar"] = pc.hbar;
  constants["eps0"] = pc.eps0;
  constants["mu0"] = pc.mu0;
  constants["kB"] = pc.kB;
  constants["S"] = pc.S;
  meta["constants"] = constants;
  root["meta"] = meta;
  root["columns"] = table.columns;
  root["units"] = table.units;
  json rows = json::array();
  for (const auto& row : table.rows) {
    json jrow = json::array();
    for (const Cell& cell : row) {
      if (std::holds_alternative<double>(cell)) {
        jrow.push_back(std::get<double>(cell));
      } else {
        jrow.push_back(std::get<std::string>(cell));
      }
    }
    rows.push_back(jrow);
  }
  root["rows"] = rows;
  return root.dump(2) + "\n";
}

}  // namespace

std::string emit(const ResultTable& table, OutputFormat format,
                 const PhysicalConstants& pc) {
  if (table.units.size() != table.columns.size()) {
    throw ValidationError("units row width does not match column count");
  }
  return format == OutputFormat::csv ? emit_csv(table)
                                     : emit_json(table, pc);
}

}  // namespace qfed
