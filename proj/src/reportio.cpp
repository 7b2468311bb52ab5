#include "dhindex/reportio.hpp"

#include <fstream>
#include <sstream>

namespace dhindex {

namespace {

u64 get_order(const json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("table"))
    throw MappingError("mapping: expected object with \"n\" and \"table\"");
  const json& n = doc["n"];
  if (!n.is_number_unsigned() || n.get<u64>() == 0)
    throw MappingError("mapping: \"n\" must be a positive integer");
  return n.get<u64>();
}

u64 get_entry(const json& v, u64 n) {
  if (!v.is_number_unsigned() || v.get<u64>() >= n)
    throw MappingError("mapping: table entries must be integers in [0, n)");
  return v.get<u64>();
}

}  // namespace

Mapping parse_mapping(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MappingError(std::string("mapping: invalid JSON: ") + e.what());
  }
  u64 n = get_order(doc);
  const json& table = doc["table"];
  if (!table.is_array() || table.size() != n)
    throw MappingError("mapping: \"table\" must be an array of length n");
  if (n > 0 && table[0].is_array()) {
    BiExpMap f;
    f.n = n;
    f.table.assign(n, std::vector<u64>(n));
    for (u64 x = 0; x < n; ++x) {
      const json& row = table[x];
      if (!row.is_array() || row.size() != n)
        throw MappingError("mapping: bivariate rows must have length n");
      for (u64 y = 0; y < n; ++y) f.table[x][y] = get_entry(row[y], n);
    }
    return f;
  }
  ExpMap f;
  f.n = n;
  f.table.resize(n);
  for (u64 x = 0; x < n; ++x) f.table[x] = get_entry(table[x], n);
  return f;
}

Mapping load_mapping(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MappingError("mapping: cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_mapping(buf.str());
}

std::string row_to_json(const ReportRow& row) {
  json obj;
  obj["id"] = row.id;
  obj["params"] = row.params;
  obj["expected"] = row.expected;
  obj["computed"] = row.computed;
  obj["status"] = row.pass ? "pass" : "fail";
  obj["witness"] = row.witness;
  return obj.dump();
}

namespace {

std::string json_field(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string csv_header() { return "id,params,expected,computed,status"; }

std::string row_to_csv(const ReportRow& row) {
  std::string params;
  for (auto it = row.params.begin(); it != row.params.end(); ++it) {
    if (!params.empty()) params += ';';
    params += it.key();
    params += '=';
    params += json_field(it.value());
  }
  std::string out = csv_escape(row.id);
  out += ',';
  out += csv_escape(params);
  out += ',';
  out += csv_escape(json_field(row.expected));
  out += ',';
  out += csv_escape(json_field(row.computed));
  out += ',';
  out += row.pass ? "pass" : "fail";
  return out;
}

}  // namespace dhindex
