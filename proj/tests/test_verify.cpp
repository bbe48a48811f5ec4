#include <doctest.h>

#include <json.hpp>
#include <string>

#include "pbp/verify.hpp"

namespace {

pbp::VerifyOptions quiet(std::uint64_t seed = 0) {
  pbp::VerifyOptions o;
  o.seed = seed;
  o.record_timing = false;
  return o;
}

std::size_t rows_in(const pbp::SuiteReport& r, const std::string& suite) {
  std::size_t n = 0;
  for (const auto& row : r.rows) n += row.suite == suite;
  return n;
}

}  // namespace

TEST_CASE("theorem sweep on small limits") {
  const auto report = pbp::verify_theorem1(4, 4, 0, quiet());
  CHECK(report.ok());
  CHECK(rows_in(report, "theorem1/oracle") == 5);  // 2x2, k = 0..4
  CHECK(rows_in(report, "theorem1/reference") == 4);
  for (const auto& row : report.rows) {
    if (row.suite != "theorem1/reference") continue;
    CHECK(row.m == 8);
    CHECK(row.n == 5);
    const std::int64_t expected = row.k == 8 || row.k == 11 ? 6 : row.k == 22 ? 5 : 4;
    CHECK(row.expected == expected);
    CHECK(row.actual == expected);
  }
}

TEST_CASE("rows are sorted by parameters") {
  const auto report = pbp::verify_theorem1(8, 30, 0, quiet());
  CHECK(report.ok());
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    const auto& a = report.rows[i - 1];
    const auto& b = report.rows[i];
    CHECK(std::tie(a.suite, a.m, a.n, a.k) <= std::tie(b.suite, b.m, b.n, b.k));
  }
}

TEST_CASE("failing rows do not stop the sweep") {
  auto options = quiet();
  options.budget = 2;
  const auto report = pbp::verify_theorem1(9, 4, 0, options);
  CHECK_FALSE(report.ok());
  CHECK(report.failed() > 0);
  CHECK(report.passed() > 0);
  CHECK(report.passed() + report.failed() == report.rows.size());
  bool saw_budget = false;
  for (const auto& row : report.rows) saw_budget = saw_budget || row.note.find("budget") != std::string::npos;
  CHECK(saw_budget);
}

TEST_CASE("monotonicity, perimeter and torus suites pass") {
  CHECK(pbp::verify_monotonicity(9, quiet()).ok());
  const auto perimeter = pbp::verify_perimeter(6, 20, quiet(3));
  CHECK(perimeter.ok());
  CHECK(rows_in(perimeter, "perimeter/trace") == 20);
  CHECK(rows_in(perimeter, "perimeter/polyomino") == 6);
  const auto torus = pbp::verify_torus_and_max(9, 12, quiet());
  CHECK(torus.ok());
  CHECK(rows_in(torus, "torus/base") == 1);
}

TEST_CASE("reports are reproducible") {
  const auto a = pbp::verify_perimeter(4, 30, quiet(17));
  const auto b = pbp::verify_perimeter(4, 30, quiet(17));
  CHECK(pbp::report_csv(a) == pbp::report_csv(b));
  CHECK(pbp::report_json(a) == pbp::report_json(b));
  CHECK(pbp::report_csv(pbp::verify_monotonicity(6, quiet())) == pbp::report_csv(pbp::verify_monotonicity(6, quiet())));
}

TEST_CASE("csv and json layout") {
  const auto report = pbp::verify_theorem1(4, 4, 0, quiet(5));
  const auto csv = pbp::report_csv(report);
  CHECK(csv.rfind("# report=theorem1 seed=5\nsuite,m,n,k,expected,actual,pass,elapsed_ms\n", 0) == 0);
  CHECK(csv.find("theorem1/reference,8,5,24,4,4,true,0.000\n") != std::string::npos);

  const auto doc = nlohmann::json::parse(pbp::report_json(report));
  CHECK(doc["report"] == "theorem1");
  CHECK(doc["seed"] == 5);
  CHECK(doc["ok"] == true);
  CHECK(doc["failed"] == 0);
  CHECK(doc["rows"].size() == report.rows.size());
  CHECK(doc["rows"][0].contains("expected"));
}
