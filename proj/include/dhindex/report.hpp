#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace dhindex {

using json = nlohmann::ordered_json;

// One verification result. `expected`/`witness` are null when absent; the
// comparison semantics between expected and computed depend on the id and
// are documented with each sweep.
struct ReportRow {
  std::string id;
  json params = json::object();
  json expected;  // null when no reference value applies
  json computed;
  bool pass = true;
  json witness;  // null unless there is a payload to show
};

// Sweeps hand rows to a sink one by one so callers can stream them.
using RowSink = std::function<void(const ReportRow&)>;

inline std::vector<ReportRow> collect_rows(
    const std::function<void(const RowSink&)>& sweep) {
  std::vector<ReportRow> rows;
  sweep([&rows](const ReportRow& r) { rows.push_back(r); });
  return rows;
}

}  // namespace dhindex
