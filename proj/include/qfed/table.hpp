#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "qfed/constants.hpp"

namespace qfed {

inline constexpr const char* kToolVersion = "1.0.0";

using Cell = std::variant<double, std::string>;

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::string> units;  // one entry per column
  std::vector<std::vector<Cell>> rows;
  std::string config_hash;

  void add_row(std::vector<Cell> row);
};

// FNV-1a over the canonical serialized config.
std::string config_hash(const std::string& serialized);

enum class OutputFormat { csv, json };

OutputFormat format_from_string(const std::string& s);

// CSV: header row, units row prefixed '#', RFC 4180 quoting, scientific
// full-precision numbers. JSON: one object {meta, columns, units, rows}.
std::string emit(const ResultTable& table, OutputFormat format,
                 const PhysicalConstants& pc = {});

}  // namespace qfed
