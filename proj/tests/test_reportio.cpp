#include <doctest.h>

#include <sstream>

#include "dhindex/dh.hpp"
#include "dhindex/reportio.hpp"

using namespace dhindex;

TEST_CASE("parse univariate mapping") {
  Mapping m = parse_mapping(R"({"n": 6, "table": [0,1,4,3,4,1]})");
  REQUIRE(std::holds_alternative<ExpMap>(m));
  CHECK(std::get<ExpMap>(m) == dh_uni(6));
}

TEST_CASE("parse bivariate mapping") {
  Mapping m = parse_mapping(R"({"n": 2, "table": [[0,0],[0,1]]})");
  REQUIRE(std::holds_alternative<BiExpMap>(m));
  CHECK(std::get<BiExpMap>(m) == dh_bi(2));
}

TEST_CASE("mapping validation failures") {
  CHECK_THROWS_AS(parse_mapping("not json"), MappingError);
  CHECK_THROWS_AS(parse_mapping(R"({"n": 6})"), MappingError);
  CHECK_THROWS_AS(parse_mapping(R"({"table": [0]})"), MappingError);
  CHECK_THROWS_AS(parse_mapping(R"({"n": 0, "table": []})"), MappingError);
  CHECK_THROWS_AS(parse_mapping(R"({"n": 6, "table": [0,1,4,3,4]})"),
                  MappingError);
  CHECK_THROWS_AS(parse_mapping(R"({"n": 6, "table": [0,1,4,3,4,6]})"),
                  MappingError);
  CHECK_THROWS_AS(parse_mapping(R"({"n": 6, "table": [0,1,4,3,4,-1]})"),
                  MappingError);
  CHECK_THROWS_AS(parse_mapping(R"({"n": 6, "table": [0,1,4,3,4,1.5]})"),
                  MappingError);
  CHECK_THROWS_AS(parse_mapping(R"({"n": 2, "table": [[0,0],[0]]})"),
                  MappingError);
}

TEST_CASE("row serialization is stable") {
  ReportRow row;
  row.id = "t1";
  row.params = {{"n", 17}};
  row.expected = 17;
  row.computed = 17;
  row.pass = true;
  CHECK(row_to_json(row) ==
        R"({"id":"t1","params":{"n":17},"expected":17,"computed":17,"status":"pass","witness":null})");
  CHECK(row_to_csv(row) == "t1,n=17,17,17,pass");
}

TEST_CASE("csv quotes fields containing separators") {
  ReportRow row;
  row.id = "t3";
  row.params = {{"n", 4}};
  row.expected = json::array({json::array({4, 4})});
  row.computed = json::array({json::array({4, 4})});
  row.pass = true;
  CHECK(row_to_csv(row) == "t3,n=4,\"[[4,4]]\",\"[[4,4]]\",pass");
  CHECK(csv_header() == "id,params,expected,computed,status");
}

TEST_CASE("json and csv streams have equal row counts") {
  auto rows = collect_rows([](const RowSink& sink) { verify_thm3(8, sink); });
  std::ostringstream js, cs;
  for (const auto& row : rows) {
    js << row_to_json(row) << "\n";
    cs << row_to_csv(row) << "\n";
  }
  auto count_lines = [](const std::string& s) {
    return std::count(s.begin(), s.end(), '\n');
  };
  CHECK(count_lines(js.str()) == count_lines(cs.str()));
}

TEST_CASE("identical seeds give identical serialized sweeps") {
  auto run = [] {
    std::ostringstream out;
    verify_thm4(10, 5, 99,
                [&out](const ReportRow& row) { out << row_to_json(row) << "\n"; });
    return out.str();
  };
  CHECK(run() == run());
}
