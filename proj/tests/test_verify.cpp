#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

#include "webinv/verify.hpp"

using namespace webinv;

TEST_CASE("every check passes at small search depth") {
    const auto results = run_verification(4);
    REQUIRE(results.size() == 11);
    std::set<std::string> names;
    for (const auto& r : results) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.passed);
        CHECK(r.cases > 0);
        CHECK(names.insert(r.name).second);
    }
}

TEST_CASE("clasp scan counts are stable at length 6") {
    // regression pin: 176 dominant strings up to length 6, each contributing
    // its trivial all-singleton grouping, plus 256 coarser admissible ones
    checks::ClaspScanCounts counts;
    const CheckResult r = checks::clasp_monotonicity(6, &counts);
    CHECK(r.passed);
    CHECK(counts.valid == 176 + 256);
    CHECK(counts.elliptic == 730);
    CHECK(counts.mixed == 3586);
    CHECK(r.cases == counts.valid);
}

TEST_CASE("failing details name the offending string") {
    // the detail of a passing scan summarizes; a failing one must carry a
    // counterexample, which fail() keeps from the first offender only
    CheckResult r{"sample"};
    checks::fail(r, "first");
    checks::fail(r, "second");
    CHECK_FALSE(r.passed);
    CHECK(r.detail == "first");
}
