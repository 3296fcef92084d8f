#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ppsym/exactnum.hpp"

#include <random>

using namespace ppsym;

namespace {

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-40, 40);
    std::uniform_int_distribution<int> den(1, 40);
    return make_rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("binomial values and the out-of-range convention") {
    CHECK(binom(4, 2) == 6);
    CHECK(binom(0, 0) == 1);
    CHECK(binom(1, -1) == 0);
    CHECK(binom(1, 2) == 0);
    CHECK(binom(5, 0) == 1);
    CHECK(binom(5, 5) == 1);
    CHECK(binom(52, 26) == BigInt("495918532948104"));
    CHECK_THROWS_AS(binom(-1, 0), std::invalid_argument);
}

TEST_CASE("Pascal recurrence holds under the extended convention") {
    for (int n = 1; n <= 30; ++n) {
        // including k slightly outside [0, n] where both sides vanish
        for (int k = -2; k <= n + 2; ++k) {
            CHECK(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
        }
    }
}

TEST_CASE("make_rational canonicalizes") {
    const Rational r = make_rational(4, -6);
    CHECK(numerator(r) == -2);
    CHECK(denominator(r) == 3);
    CHECK(make_rational(0, 7) == Rational(0));
    CHECK(make_rational(10, 5) == Rational(2));
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic examples") {
    const Rational half = make_rational(1, 2);
    CHECK(half + half == Rational(1));
    CHECK(Rational(2) * half == Rational(1));
    CHECK(half * half == make_rational(1, 4));
    CHECK(-half == make_rational(-1, 2));
    CHECK(half != make_rational(2, 3));
}

TEST_CASE("rational operations keep canonical form and the field laws") {
    std::mt19937 rng(20240911);
    for (int trial = 0; trial < 300; ++trial) {
        const Rational a = random_rational(rng);
        const Rational b = random_rational(rng);
        const Rational c = random_rational(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);

        for (const Rational& r : {Rational(a + b), Rational(a * b), Rational(a - c)}) {
            CHECK(denominator(r) > 0);
            CHECK(gcd(numerator(r), denominator(r)) == 1);
        }
    }
}

TEST_CASE("integer extraction") {
    CHECK(is_integer(Rational(7)));
    CHECK(!is_integer(make_rational(7, 2)));
    CHECK(to_integer(make_rational(14, 2)) == 7);
    CHECK_THROWS_AS(to_integer(make_rational(1, 2)), identity_error);
}

TEST_CASE("perfect squares") {
    BigInt root;
    CHECK(perfect_square(0, root));
    CHECK(root == 0);
    CHECK(perfect_square(49, root));
    CHECK(root == 7);
    CHECK(!perfect_square(-4, root));

    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> dist(1, 1'000'000'000LL);
    for (int trial = 0; trial < 100; ++trial) {
        const BigInt r = dist(rng);
        const BigInt square = r * r;
        CHECK(perfect_square(square, root));
        CHECK(root == r);
        CHECK(!perfect_square(square + 1, root));
        CHECK(!perfect_square(square - 1, root));
    }
}

TEST_CASE("string forms") {
    CHECK(rational_str(make_rational(1, 2)) == "1/2");
    CHECK(rational_str(Rational(-3)) == "-3");
    CHECK(parse_rational("1/2") == make_rational(1, 2));
    CHECK(parse_rational("-6/4") == make_rational(-3, 2));
    CHECK(parse_rational("42") == Rational(42));
    CHECK_THROWS_AS(parse_rational("x/y"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);

    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational r = random_rational(rng);
        CHECK(parse_rational(rational_str(r)) == r);
    }
}

TEST_CASE("pow2") {
    CHECK(pow2(0) == 1);
    CHECK(pow2(1) == 2);
    CHECK(pow2(20) == 1048576);
    CHECK(pow2(100) == BigInt("1267650600228229401496703205376"));
}
