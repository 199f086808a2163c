#include <doctest.h>

#include <algorithm>

#include "covops/error.hpp"
#include "covops/suites.hpp"

using namespace covops;

namespace {

SuiteConfig tiny() {
    SuiteConfig c;
    c.ms = {1};
    c.ks = {1, 2};
    c.lambdas = {0, 1};
    c.mus = {0, 2};
    c.samples = 3;
    c.seed = 77;
    return c;
}

} // namespace

TEST_CASE("suite registry") {
    const auto& names = suite_names();
    CHECK(names.size() == 8);
    for (const char* n : {"bernstein", "products", "ef", "m1-classical", "covariance", "group-action",
                          "normalization", "omega-compare"})
        CHECK(std::find(names.begin(), names.end(), n) != names.end());
    CHECK_THROWS_AS(run_suite("no-such-suite", tiny()), range_error);
}

TEST_CASE("report shape and determinism") {
    SuiteConfig c = tiny();
    Report r1 = run_suite("bernstein", c);
    Report r2 = run_suite("bernstein", c);
    CHECK(r1.dump(2) == r2.dump(2));

    CHECK(r1["tool"] == "covops");
    CHECK(r1["format"] == "covops-report v1");
    CHECK(r1["suite"] == "bernstein");
    CHECK(r1["config"]["seed"] == 77);
    CHECK(r1["checks"].is_array());
    CHECK(!r1["checks"].empty());
    CHECK(r1["summary"]["fail"] == 0);
    int counted = r1["summary"]["pass"].get<int>() + r1["summary"]["info"].get<int>();
    CHECK(counted == static_cast<int>(r1["checks"].size()));
    CHECK(!report_has_failure(r1));

    // a different seed still passes but changes sampled content
    SuiteConfig c2 = tiny();
    c2.seed = 78;
    Report r3 = run_suite("products", c2);
    CHECK(!report_has_failure(r3));
}

TEST_CASE("all passing suites on a tiny config") {
    SuiteConfig c = tiny();
    for (const char* n : {"products", "ef", "m1-classical", "group-action", "normalization", "omega-compare"}) {
        Report r = run_suite(n, c);
        CHECK_MESSAGE(!report_has_failure(r), n);
        CHECK(r["summary"]["fail"] == 0);
    }
}

TEST_CASE("fault injection produces a failing check with witness") {
    SuiteConfig c = tiny();
    c.inject_fault = true;
    Report r = run_suite("bernstein", c);
    CHECK(report_has_failure(r));
    CHECK(r["summary"]["fail"] == 1);
    bool found = false;
    for (const auto& chk : r["checks"]) {
        if (chk["status"] == "fail") {
            found = true;
            CHECK(chk.contains("witness"));
            CHECK(chk["id"].get<std::string>().find("injected-fault") == 0);
        }
    }
    CHECK(found);
}

TEST_CASE("umbrella suite aggregates") {
    SuiteConfig c = tiny();
    c.samples = 2;
    c.ks = {1};
    c.lambdas = {0};
    c.mus = {1};
    Report r = run_suite("all", c);
    CHECK(r["suite"] == "all");
    CHECK(r["suites"].is_array());
    CHECK(r["suites"].size() == suite_names().size());
    CHECK(!report_has_failure(r));
    int total = 0;
    for (const auto& sub : r["suites"]) total += sub["summary"]["pass"].get<int>();
    CHECK(r["summary"]["pass"].get<int>() == total);
}
