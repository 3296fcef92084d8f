#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ppsym/lgvpaths.hpp"

#include "ppsym/matrices.hpp"

using namespace ppsym;

TEST_CASE("endpoint layout") {
    CHECK(lgv_start(3, 0) == LatticePoint{0, 6});
    CHECK(lgv_start(3, 2) == LatticePoint{2, 2});
    CHECK(lgv_end(3, 0) == LatticePoint{1, 6});
    CHECK(lgv_end(3, 2) == LatticePoint{5, 4});
    for (int n = 1; n <= 6; ++n) {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                CHECK(lgv_start(n, i) != lgv_start(n, j));
                CHECK(lgv_end(n, i) != lgv_end(n, j));
            }
        }
    }
    CHECK_THROWS_AS(lgv_start(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(lgv_end(0, 0), std::invalid_argument);
}

TEST_CASE("single-path weights") {
    CHECK(path_gf(1, 0, 0) == make_rational(1, 2));  // one east step, the half edge
    CHECK(path_gf(2, 0, 1) == Rational(0));          // v_1 lies below u_0
    CHECK(path_gf(2, 1, 1) == Rational(2));          // 3 paths, one ending in the half edge
}

TEST_CASE("path matrix reproduces U entrywise") {
    for (int n = 1; n <= 10; ++n) {
        CHECK(lgv_matrix(n) == build_U(n));
    }
}

TEST_CASE("unit-weight walk matches the closed form") {
    for (int n = 1; n <= 10; ++n) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                CHECK(path_count(n, i, j) == binom(i + j + 1, 2 * i - j));
            }
        }
    }
}

TEST_CASE("determinant route") {
    CHECK(lstar(1) == make_rational(1, 2));
    CHECK(lstar(2) == Rational(1));
    CHECK(lstar(3) == make_rational(49, 8));
    for (int n = 1; n <= 10; ++n) {
        CHECK(Rational(pow2(n)) * lstar(n) == Rational(cssc_det(n)));
    }
}

TEST_CASE("exhaustive families agree with the determinant") {
    CHECK(enumerate_nonintersecting(1) == make_rational(1, 2));
    CHECK(enumerate_nonintersecting(2) == Rational(1));
    for (int n = 1; n <= 3; ++n) {
        CHECK(enumerate_nonintersecting(n) == determinant(lgv_matrix(n)));
        CHECK(enumerate_nonintersecting(n) == lstar(n));
    }
    CHECK_THROWS_AS(enumerate_nonintersecting(4), guard_error);
}

TEST_CASE("only the identity pairing admits disjoint families") {
    for (int n = 1; n <= 3; ++n) {
        CHECK(compatibility_check(n));
    }
    CHECK_THROWS_AS(compatibility_check(4), guard_error);
    CHECK_THROWS_AS(compatibility_check(0), std::invalid_argument);
}
