#include "ppsym/exactnum.hpp"

#include <algorithm>

namespace ppsym {

BigInt binom(long long n, long long k) {
    if (n < 0) {
        throw std::invalid_argument("binom: n must be non-negative, got " + std::to_string(n));
    }
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt result = 1;
    for (long long t = 1; t <= k; ++t) {
        result *= n - k + t;
        result /= t;  // exact at every step: result is C(n-k+t, t)
    }
    return result;
}

Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) {
        throw std::invalid_argument("make_rational: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    BigInt g = gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational(num, den);
}

BigInt pow2(unsigned n) {
    return BigInt(1) << n;
}

bool is_integer(const Rational& r) {
    return denominator(r) == 1;
}

BigInt to_integer(const Rational& r) {
    if (!is_integer(r)) {
        throw identity_error("expected an integer, got " + rational_str(r));
    }
    return numerator(r);
}

bool perfect_square(const BigInt& v, BigInt& root) {
    if (v < 0) {
        return false;
    }
    root = sqrt(v);
    return root * root == v;
}

std::string rational_str(const Rational& r) {
    if (is_integer(r)) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(s));
        }
        return make_rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: malformed value '" + s + "'");
    }
}

}  // namespace ppsym
