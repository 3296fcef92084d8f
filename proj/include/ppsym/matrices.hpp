#pragma once

#include "ppsym/exactnum.hpp"

#include <string>
#include <vector>

namespace ppsym {

// Dense square matrix of exact rationals, zero-initialized.
class RationalMatrix {
public:
    explicit RationalMatrix(int order);

    int order() const { return order_; }

    Rational& at(int i, int j) { return entries_[index(i, j)]; }
    const Rational& at(int i, int j) const { return entries_[index(i, j)]; }

    bool operator==(const RationalMatrix&) const = default;

    static RationalMatrix identity(int order);

private:
    std::size_t index(int i, int j) const;

    int order_;
    std::vector<Rational> entries_;
};

// Entry (i,j) is (1/2)*C(i+j, 2i-j) + C(i+j, 2i-j-1).
RationalMatrix build_U(int n);

// Entry (i,j) is C(i+j+1, 2i-j) + C(i+j, 2i-j-1); integer valued and
// entrywise equal to 2*U(n).
RationalMatrix build_w(int n);

// Skew-symmetric apart from the (0,0) entry:
//   a_00 = 1, a_ii = 0 for i > 0,
//   a_ij = sum_{s=2i-j+1}^{2j-i} C(i+j, s) for i < j (empty sum = 0),
//   a_ij = -a_ji for i > j.
RationalMatrix build_st(int n);

// Fraction-free (Bareiss) elimination over integers after clearing row
// denominators; exact for every input.
Rational determinant(const RationalMatrix& m);

// Plain rational Gaussian elimination. Same result as determinant(); kept
// as an independently coded second route for cross-checks.
Rational determinant_gauss(const RationalMatrix& m);

// 2^n * det U(n), which must be a positive integer.
BigInt cssc_det(int n);

// det st(n) resp. det w(n); both must be perfect squares.
BigInt tssc_sq_st(int n);
BigInt tssc_sq_w(int n);

// Integer square root of det st(n).
BigInt tssc_implied(int n);

// Row-major CSV of exact "p/q" entries, one row per line.
std::string matrix_csv(const RationalMatrix& m);

// {"order": n, "entries": [[...]]} with entries as exact strings.
std::string matrix_json(const RationalMatrix& m);

}  // namespace ppsym
