#include "doctest.h"

#include "cmotzkin/verify.hpp"

using namespace cmotzkin;

TEST_CASE("verification passes at small bounds") {
  const VerifyReport bijection = verify_bijection(5, 2);
  CHECK(bijection.all_passed());
  const CheckResult* image = bijection.find("bijection-image");
  REQUIRE(image != nullptr);
  CHECK(image->instances > 0);

  CHECK(verify_statistic(6, 2).all_passed());
  CHECK(verify_monotonicity(6, 2).all_passed());
  CHECK(verify_counts(8, 2).all_passed());
}

TEST_CASE("verification is vacuous at length zero") {
  const VerifyReport report = verify_bijection(0, 2);
  CHECK(report.all_passed());
  std::uint64_t roundtrips = 0;
  for (const CheckResult& check : report.checks)
    if (check.name == "bijection-roundtrip") roundtrips += check.instances;
  CHECK(roundtrips == 4);  // one empty pair per direction per d
}

TEST_CASE("enumeration caps") {
  CHECK(enumeration_cap(1) == 14);
  CHECK(enumeration_cap(2) == 10);
  CHECK(enumeration_cap(3) == 8);
  CHECK(enumeration_cap(4) == 7);
  CHECK(enumeration_cap(9) <= 7);
}

TEST_CASE("report rendering") {
  VerifyReport report;
  CheckResult good;
  good.name = "sample-check";
  good.range = "d=1 n<=3";
  good.instances = 12;
  good.seconds = 0.5;
  CheckResult bad;
  bad.name = "broken-check";
  bad.range = "d=2 n<=4";
  bad.instances = 7;
  bad.failure_count = 2;
  bad.failures = {"word=[1 2]"};
  report.checks = {good, bad};

  CHECK_FALSE(report.all_passed());
  CHECK(report.total_instances() == 19);

  const std::string table = report.render_table();
  CHECK(table.find("sample-check") != std::string::npos);
  CHECK(table.find("counterexample: word=[1 2]") != std::string::npos);

  const std::string kv = report.render_kv();
  CHECK(kv.find("check=sample-check range=d=1,n<=3 instances=12 failures=0") !=
        std::string::npos);
  CHECK(kv.find("counterexample check=broken-check") != std::string::npos);
}
