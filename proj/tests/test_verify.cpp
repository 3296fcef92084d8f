#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ppsym/verify.hpp"

#include "ppsym/exactnum.hpp"
#include "ppsym/lgvpaths.hpp"
#include "ppsym/lozenge.hpp"
#include "ppsym/matrices.hpp"
#include "ppsym/planepart.hpp"

using namespace ppsym;

TEST_CASE("determinant chain report") {
    VerifyOptions options;
    options.max_n = 5;
    const VerifyOutcome outcome = run_verify(options);
    CHECK(outcome.ok);
    CHECK(outcome.report["overall"] == "pass");
    REQUIRE(outcome.report["results"].size() == 5);
    for (const auto& entry : outcome.report["results"]) {
        for (const auto& [name, status] : entry["checks"].items()) {
            CHECK(status == "pass");
        }
        // exact decimal strings, never JSON numbers
        CHECK(entry["det_st"].is_string());
        CHECK(entry["cssc_det"].is_string());
        CHECK(entry["timings_ms"]["determinants"].is_string());
    }
    CHECK(outcome.report["results"][2]["cssc_det"] == "49");
    CHECK(outcome.report["results"][2]["tssc_implied"] == "7");
    CHECK(outcome.report["results"][2]["det_U"] == "49/8");
}

TEST_CASE("oracle checks run below the guard and skip above it") {
    VerifyOptions options;
    options.max_n = 3;
    options.with_oracles = true;
    options.oracle_max_n = 2;
    const VerifyOutcome outcome = run_verify(options);
    CHECK(outcome.ok);

    const auto& n2 = outcome.report["results"][1];
    CHECK(n2["checks"]["cssc_orbit_eq_det"] == "pass");
    CHECK(n2["oracles"]["cssc_bruteforce"] == "4");
    CHECK(n2["oracles"]["tssc_bruteforce"] == "2");

    const auto& n3 = outcome.report["results"][2];
    CHECK(n3["checks"]["cssc_orbit_eq_det"] == "skipped(guard)");
    CHECK(n3["checks"]["factorization_identity"] == "skipped(guard)");
    CHECK(!n3.contains("oracles"));
    CHECK(n3["checks"]["lgv_entry_identity"] == "pass");  // cheap, still runs
}

TEST_CASE("report round-trips byte-identically") {
    VerifyOptions options;
    options.max_n = 4;
    options.with_oracles = true;
    const VerifyOutcome outcome = run_verify(options);
    const std::string once = outcome.report.dump(2);
    const std::string twice = nlohmann::json::parse(once).dump(2);
    CHECK(once == twice);
}

TEST_CASE("options are validated") {
    VerifyOptions bad;
    bad.max_n = 0;
    CHECK_THROWS_AS(run_verify(bad), std::invalid_argument);
}

TEST_CASE("all counting routes print the same integers") {
    for (int n = 1; n <= 3; ++n) {
        const BigInt via_det = cssc_det(n);
        CHECK(count_cssc_bruteforce(n) == via_det);
        CHECK(count_cssc_via_orbit(n) == via_det);
        CHECK(to_integer(Rational(pow2(n)) * lstar(n)) == via_det);

        const BigInt tssc = tssc_implied(n);
        CHECK(count_tssc_bruteforce(n) == tssc);
        BigInt via_paths;
        REQUIRE(perfect_square(to_integer(Rational(pow2(n)) * lstar(n)), via_paths));
        CHECK(via_paths == tssc);
    }
}
