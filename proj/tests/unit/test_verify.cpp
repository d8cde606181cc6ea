#include <set>
#include <string>

#include "doctest.h"
#include "etaxi/verify.hpp"

#include "etaxi/errors.hpp"

using namespace etaxi;

namespace {

// Keeps the default contour_n: the deformation-distance floor in the
// contour suite is calibrated to that resolution.
VerifyConfig small_config(long samples) {
    VerifyConfig c;
    c.seed = 7;
    c.samples = samples;
    return c;
}

}  // namespace

TEST_CASE("suite names") {
    for (const char* name :
         {"all", "group", "cover", "metric", "killing", "embed", "contour"}) {
        CHECK(is_suite_name(name));
    }
    CHECK_FALSE(is_suite_name("bogus"));
    CHECK_FALSE(is_suite_name(""));
    CHECK_FALSE(is_suite_name("Group"));
    CHECK_THROWS_AS(run_suite("bogus", small_config(100)), InvalidParamError);
}

TEST_CASE("group suite passes and reports every check") {
    VerificationReport report = run_suite("group", small_config(300));
    CHECK(report.suite == "group");
    CHECK(report.pass);
    REQUIRE(report.checks.size() == 12);
    for (const CheckResult& c : report.checks) {
        CAPTURE(c.check_id);
        CHECK(c.pass);
        CHECK(c.samples > 0);
        CHECK(c.max_residual <= c.tolerance);
        CHECK(c.check_id.rfind("group.", 0) == 0);
    }
    CHECK(report.wall_time_ms >= 0.0);
}

TEST_CASE("all suites pass at reduced sample counts") {
    VerificationReport report = run_suite("all", small_config(300));
    CHECK(report.pass);
    REQUIRE(report.checks.size() == 47);

    std::set<std::string> ids;
    for (const CheckResult& c : report.checks) {
        CAPTURE(c.check_id);
        CHECK(c.pass);
        ids.insert(c.check_id);
    }
    // No duplicate check ids.
    CHECK(ids.size() == report.checks.size());

    std::set<std::string> prefixes;
    for (const std::string& id : ids) {
        prefixes.insert(id.substr(0, id.find('.')));
    }
    CHECK(prefixes ==
          std::set<std::string>{"contour", "cover", "embed", "group",
                                "killing", "metric"});
}

TEST_CASE("reports are deterministic for a fixed seed") {
    VerificationReport a = run_suite("cover", small_config(200));
    VerificationReport b = run_suite("cover", small_config(200));
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].check_id == b.checks[i].check_id);
        CHECK(a.checks[i].samples == b.checks[i].samples);
        CHECK(a.checks[i].max_residual == b.checks[i].max_residual);
    }

    // A different seed draws different samples somewhere.
    VerifyConfig other = small_config(200);
    other.seed = 8;
    VerificationReport c = run_suite("cover", other);
    bool any_differ = false;
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        if (a.checks[i].max_residual != c.checks[i].max_residual) {
            any_differ = true;
        }
    }
    CHECK(any_differ);
}

TEST_CASE("checks do not depend on the suite they run in") {
    VerificationReport sub = run_suite("metric", small_config(200));
    VerificationReport all = run_suite("all", small_config(200));
    for (const CheckResult& c : sub.checks) {
        bool found = false;
        for (const CheckResult& d : all.checks) {
            if (d.check_id == c.check_id) {
                found = true;
                CHECK(d.max_residual == c.max_residual);
                CHECK(d.samples == c.samples);
            }
        }
        CHECK(found);
    }
}

TEST_CASE("tolerance override applies to every check") {
    VerifyConfig config = small_config(200);
    config.tol_override = 1e-20;
    VerificationReport report = run_suite("metric", config);
    CHECK_FALSE(report.pass);
    for (const CheckResult& c : report.checks) {
        CHECK(c.tolerance == 1e-20);
    }

    // A generous override turns everything green.
    config.tol_override = 10.0;
    CHECK(run_suite("metric", config).pass);
}

TEST_CASE("sample scaling follows the documented tiers") {
    VerificationReport report = run_suite("all", small_config(1000));
    for (const CheckResult& c : report.checks) {
        if (c.check_id == "group.associativity") CHECK(c.samples == 1000);
        if (c.check_id == "metric.exp_pullback_plane") {
            CHECK(c.samples == 100);
        }
        if (c.check_id == "group.lorentz_boost_rep") CHECK(c.samples == 10);
        if (c.check_id == "cover.lattice_kernel_exhaustive") {
            // Deterministic enumeration: 20 vectors x 7 x 7 shifts.
            CHECK(c.samples == 980);
        }
    }
}
