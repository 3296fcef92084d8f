#pragma once

#include "ppsym/exactnum.hpp"
#include "ppsym/matrices.hpp"

namespace ppsym {

struct LatticePoint {
    int x = 0;
    int y = 0;

    auto operator<=>(const LatticePoint&) const = default;
};

// Path system on directed Z^2 (unit steps north and east): path i starts
// at u_i = (i, 2n-2i) and ends at v_i = (2i+1, 2n-i). The horizontal edge
// entering each v_i carries weight 1/2; every other edge has weight 1.
LatticePoint lgv_start(int n, int i);
LatticePoint lgv_end(int n, int i);

// Weighted count of monotone paths u_i -> v_j by dynamic programming over
// the enclosing rectangle; 0 when no monotone path exists.
Rational path_gf(int n, int i, int j);

// Same walk with every weight 1; equals C(i+j+1, 2i-j).
BigInt path_count(int n, int i, int j);

// Matrix of path_gf values; entrywise equal to U(n).
RationalMatrix lgv_matrix(int n);

// det lgv_matrix(n), the weighted count of nonintersecting path families.
Rational lstar(int n);

// Exhaustive sum over vertex-disjoint tuples (P_0,...,P_{n-1}) with
// P_i : u_i -> v_i.
Rational enumerate_nonintersecting(int n, int max_n = 3);

// True iff exhaustive search finds vertex-disjoint families only for the
// identity pairing of starts to ends.
bool compatibility_check(int n, int max_n = 3);

}  // namespace ppsym
