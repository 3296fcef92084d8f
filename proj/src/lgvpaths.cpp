#include "ppsym/lgvpaths.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace ppsym {

namespace {

void require_index(int n, int i, const char* who) {
    if (n < 1) {
        throw std::invalid_argument(std::string(who) + ": n must be >= 1");
    }
    if (i < 0 || i >= n) {
        throw std::invalid_argument(std::string(who) + ": index out of [0,n)");
    }
}

// Is (x,y) some endpoint v_m? Then the horizontal step into it is the
// half-weight one.
bool is_half_edge_target(int n, int x, int y) {
    const int m = 2 * n - y;
    return m >= 0 && m < n && x == 2 * m + 1;
}

Rational grid_walk(int n, int i, int j, bool weighted) {
    const LatticePoint from = lgv_start(n, i);
    const LatticePoint to = lgv_end(n, j);
    if (to.x < from.x || to.y < from.y) {
        return 0;
    }
    const int w = to.x - from.x + 1;
    const int h = to.y - from.y + 1;
    std::vector<Rational> dp(static_cast<std::size_t>(w) * h);
    const Rational half = make_rational(1, 2);
    for (int dy = 0; dy < h; ++dy) {
        for (int dx = 0; dx < w; ++dx) {
            Rational& cell = dp[static_cast<std::size_t>(dy) * w + dx];
            if (dx == 0 && dy == 0) {
                cell = 1;
                continue;
            }
            if (dx > 0) {
                Rational step = dp[static_cast<std::size_t>(dy) * w + dx - 1];
                if (weighted && is_half_edge_target(n, from.x + dx, from.y + dy)) {
                    step *= half;
                }
                cell += step;
            }
            if (dy > 0) {
                cell += dp[static_cast<std::size_t>(dy - 1) * w + dx];
            }
        }
    }
    return dp.back();
}

}  // namespace

LatticePoint lgv_start(int n, int i) {
    require_index(n, i, "lgv_start");
    return {i, 2 * n - 2 * i};
}

LatticePoint lgv_end(int n, int i) {
    require_index(n, i, "lgv_end");
    return {2 * i + 1, 2 * n - i};
}

Rational path_gf(int n, int i, int j) {
    require_index(n, i, "path_gf");
    require_index(n, j, "path_gf");
    return grid_walk(n, i, j, /*weighted=*/true);
}

BigInt path_count(int n, int i, int j) {
    require_index(n, i, "path_count");
    require_index(n, j, "path_count");
    return to_integer(grid_walk(n, i, j, /*weighted=*/false));
}

RationalMatrix lgv_matrix(int n) {
    if (n < 1) {
        throw std::invalid_argument("lgv_matrix: n must be >= 1");
    }
    RationalMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m.at(i, j) = path_gf(n, i, j);
        }
    }
    return m;
}

Rational lstar(int n) {
    return determinant(lgv_matrix(n));
}

namespace {

// Explicit paths for the exhaustive family search, as vertex bitmasks over
// the bounding grid (x in [0, 2n-1], y in [2, 2n]).
struct ExplicitPath {
    std::uint64_t mask = 0;
    Rational weight = 1;
};

struct PathEnumerator {
    int n;
    int width;   // 2n
    int height;  // 2n - 1

    explicit PathEnumerator(int n_) : n(n_), width(2 * n_), height(2 * n_ - 1) {
        if (width * height > 64) {
            throw guard_error("path-family enumeration grid exceeds 64 points");
        }
    }

    std::uint64_t bit(int x, int y) const {
        return std::uint64_t{1} << (static_cast<std::uint64_t>(y - 2) * width + x);
    }

    // All monotone paths from -> to, east steps explored before north steps.
    std::vector<ExplicitPath> all_paths(LatticePoint from, LatticePoint to) const {
        std::vector<ExplicitPath> out;
        if (to.x < from.x || to.y < from.y) {
            return out;
        }
        ExplicitPath partial;
        partial.mask = bit(from.x, from.y);
        walk(from, to, partial, out);
        return out;
    }

    void walk(LatticePoint at, LatticePoint to, const ExplicitPath& partial,
              std::vector<ExplicitPath>& out) const {
        if (at == to) {
            out.push_back(partial);
            return;
        }
        if (at.x < to.x) {
            ExplicitPath next = partial;
            next.mask |= bit(at.x + 1, at.y);
            if (is_half_edge_target(n, at.x + 1, at.y)) {
                next.weight *= make_rational(1, 2);
            }
            walk({at.x + 1, at.y}, to, next, out);
        }
        if (at.y < to.y) {
            ExplicitPath next = partial;
            next.mask |= bit(at.x, at.y + 1);
            walk({at.x, at.y + 1}, to, next, out);
        }
    }
};

void require_family_scale(int n, int max_n) {
    if (n < 1) {
        throw std::invalid_argument("family enumeration: n must be >= 1");
    }
    if (n > max_n) {
        throw guard_error("path-family enumeration capped at n <= " + std::to_string(max_n) +
                          ", got n = " + std::to_string(n));
    }
}

// Sum of weights of vertex-disjoint families P_i : u_i -> v_{ends[i]}.
Rational disjoint_family_sum(int n, const std::vector<int>& ends) {
    PathEnumerator grid(n);
    std::vector<std::vector<ExplicitPath>> choices(n);
    for (int i = 0; i < n; ++i) {
        choices[i] = grid.all_paths(lgv_start(n, i), lgv_end(n, ends[i]));
        if (choices[i].empty()) {
            return 0;
        }
    }
    Rational total = 0;
    auto place = [&](auto&& self, int i, std::uint64_t used, const Rational& weight) -> void {
        if (i == n) {
            total += weight;
            return;
        }
        for (const ExplicitPath& p : choices[i]) {
            if ((p.mask & used) == 0) {
                self(self, i + 1, used | p.mask, weight * p.weight);
            }
        }
    };
    place(place, 0, 0, Rational(1));
    return total;
}

}  // namespace

Rational enumerate_nonintersecting(int n, int max_n) {
    require_family_scale(n, max_n);
    std::vector<int> identity(n);
    for (int i = 0; i < n; ++i) {
        identity[i] = i;
    }
    return disjoint_family_sum(n, identity);
}

bool compatibility_check(int n, int max_n) {
    require_family_scale(n, max_n);
    std::vector<int> ends(n);
    for (int i = 0; i < n; ++i) {
        ends[i] = i;
    }
    // Every non-identity pairing of starts to ends must admit no
    // vertex-disjoint family at all.
    while (std::next_permutation(ends.begin(), ends.end())) {
        if (disjoint_family_sum(n, ends) != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace ppsym
