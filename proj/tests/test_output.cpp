#include <doctest.h>

#include "overrank/output.hpp"
#include "overrank/partitions.hpp"
#include "overrank/rank_gf.hpp"

using namespace overrank;

TEST_CASE("table CSV") {
  CHECK(table_to_csv(gf_rank_table(Statistic::d_rank, 0)) == "m,n,count\n0,0,1\n");
  const std::string csv = table_to_csv(gf_rank_table(Statistic::m2_rank, 2));
  CHECK(csv == "m,n,count\n0,0,1\n0,1,2\n0,2,4\n");
  const std::string d = table_to_csv(oracle_rank_table(Statistic::d_rank, 2));
  CHECK(d == "m,n,count\n0,0,1\n0,1,2\n-1,2,2\n1,2,2\n");
}

TEST_CASE("table JSON rows follow the CSV order") {
  const Json rows = table_rows_json(oracle_rank_table(Statistic::d_rank, 2));
  REQUIRE(rows.size() == 4);
  CHECK(rows[2]["m"] == -1);
  CHECK(rows[2]["n"] == 2);
  CHECK(rows[2]["count"] == 2);
  CHECK(rows[0].dump() == R"({"m":0,"n":0,"count":1})");
}

TEST_CASE("series CSV") {
  CHECK(series_to_csv(QSeries({1, -1}, 3)) == "1,-1,0,0\n");
}

TEST_CASE("envelope and report JSON") {
  VerificationReport r;
  r.check_id = "x";
  r.bounds = {{"n_max", 3}};
  r.record(Point{"claim", {{"m", 0}, {"n", 4}}}, 2, 4, true);
  const Json j = envelope("verify", Json{{"max_n", 3}}, Json::array({report_to_json(r)}));
  CHECK(j["schema_version"] == 1);
  CHECK(j["command"] == "verify");
  const Json& rep = j["results"][0];
  CHECK(rep["passed"] == true);
  CHECK(rep["violations"][0]["location"]["n"] == 4);
  CHECK(rep["expected_exceptions"].size() == 1);
  // Keys keep insertion order.
  CHECK(j.begin().key() == "schema_version");
}

TEST_CASE("reports CSV") {
  VerificationReport a;
  a.check_id = "a";
  a.assertions = 3;
  VerificationReport b;
  b.check_id = "b";
  b.record(Point{"c", {}}, 0, 1);
  CHECK(reports_to_csv({a, b}) == "check_id,passed,assertions,violations,unexpected\na,true,3,0,0\nb,false,0,1,1\n");
}
