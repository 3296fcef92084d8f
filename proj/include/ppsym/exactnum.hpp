#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ppsym {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A desk-scale limit was exceeded (exhaustive routines only).
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A quantity came out different from what the theory forces it to be
// (non-integral determinant, non-square count, failed cross-check).
struct identity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Binomial coefficient extended to all integer k: C(n,k) = 0 whenever
// k < 0 or k > n. Negative n is a contract violation.
BigInt binom(long long n, long long k);

// num/den in canonical form (positive denominator, reduced). den == 0 is
// rejected; boost's raw two-argument constructor is not safe for that.
Rational make_rational(BigInt num, BigInt den);

BigInt pow2(unsigned n);

bool is_integer(const Rational& r);

// Exact integer value of r; throws identity_error when r is not integral.
BigInt to_integer(const Rational& r);

// True iff v is a perfect square; root receives the exact square root.
bool perfect_square(const BigInt& v, BigInt& root);

// "p/q", or plain "p" when the denominator is 1.
std::string rational_str(const Rational& r);

// Inverse of rational_str; accepts optional sign and "p" or "p/q".
Rational parse_rational(const std::string& s);

}  // namespace ppsym
