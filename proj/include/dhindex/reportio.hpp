#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "dhindex/cycmap.hpp"
#include "dhindex/report.hpp"

// Report serialization and the mapping file format consumed by the CLI:
// univariate {"n": 6, "table": [0,1,4,3,4,1]}, bivariate
// {"n": 4, "table": [[...], ...]} with row index x and column index y.

namespace dhindex {

struct MappingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Mapping = std::variant<ExpMap, BiExpMap>;

Mapping parse_mapping(const std::string& text);
Mapping load_mapping(const std::string& path);

// One row per line: {"id":...,"params":{...},"expected":...,"computed":...,
// "status":"pass"|"fail","witness":...}. Field order is fixed; identical
// rows serialize byte-identically.
std::string row_to_json(const ReportRow& row);

// Header `id,params,expected,computed,status`; params are semicolon-joined
// key=value; fields containing separators are RFC 4180 quoted.
std::string csv_header();
std::string row_to_csv(const ReportRow& row);

}  // namespace dhindex
