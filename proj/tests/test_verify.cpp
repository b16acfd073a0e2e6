#include <doctest.h>

#include "orth/error.hpp"
#include "orth/verify.hpp"

using namespace orth;

TEST_CASE("sampler is reproducible")
{
    Sampler a(99), b(99);
    CHECK(a.reals(10, -1.0, 1.0) == b.reals(10, -1.0, 1.0));
    CHECK(a.recurrence(5) == b.recurrence(5));
    Sampler c(1);
    const double u = c.uniform(2.0, 3.0);
    CHECK(u >= 2.0);
    CHECK(u < 3.0);
    for (int i = 0; i < 50; ++i) {
        const auto k = c.index(1, 3);
        CHECK(k >= 1);
        CHECK(k <= 3);
    }
}

TEST_CASE("every suite passes at the default seed")
{
    for (const auto& name : suite_names()) {
        CAPTURE(name);
        const SuiteReport r = run_suite(name, VerifyOptions{});
        CHECK(r.passed());
        CHECK_FALSE(r.properties.empty());
        CHECK(format_report(r) == format_report(run_suite(name, VerifyOptions{})));
    }
}

TEST_CASE("unknown suite")
{
    try {
        run_suite("nosuch", VerifyOptions{});
        FAIL("expected UnknownSuite");
    }
    catch (const Error& e) {
        CHECK(e.code() == Errc::unknown_suite);
    }
}

TEST_CASE("tolerance override reaches every property")
{
    VerifyOptions o;
    o.tol = 1e-40;
    const SuiteReport r = run_suite("rel", o);
    for (const auto& p : r.properties)
        CHECK(p.tolerance == 1e-40);
    CHECK_FALSE(r.passed());
}

TEST_CASE("json report")
{
    const SuiteReport r = run_suite("discrepancy", VerifyOptions{});
    const auto j = report_to_json(r);
    CHECK(j.at("suite") == "discrepancy");
    CHECK(j.at("properties").size() == r.properties.size());
}
