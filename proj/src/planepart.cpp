#include "ppsym/planepart.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace ppsym {

namespace {

void require_valid_box(const Box& box, const char* who) {
    if (box.a < 1 || box.b < 1 || box.c < 1) {
        throw std::invalid_argument(std::string(who) + ": box sides must be >= 1, got (" +
                                    std::to_string(box.a) + "," + std::to_string(box.b) + "," +
                                    std::to_string(box.c) + ")");
    }
}

void require_cube(const Box& box, const char* who) {
    if (!box.is_cube()) {
        throw std::invalid_argument(std::string(who) + ": requires a cube box, got (" +
                                    std::to_string(box.a) + "," + std::to_string(box.b) + "," +
                                    std::to_string(box.c) + ")");
    }
}

}  // namespace

PlanePartition::PlanePartition(const Box& box) : box_(box) {
    require_valid_box(box, "PlanePartition");
    heights_.assign(static_cast<std::size_t>(box.a) * box.b, 0);
}

PlanePartition::PlanePartition(const Box& box, std::vector<int> heights)
    : box_(box), heights_(std::move(heights)) {
    require_valid_box(box, "PlanePartition");
    if (heights_.size() != static_cast<std::size_t>(box.a) * box.b) {
        throw std::invalid_argument("PlanePartition: height array has wrong size");
    }
    for (int i = 0; i < box.a; ++i) {
        for (int j = 0; j < box.b; ++j) {
            const int h = height(i, j);
            if (h < 0 || h > box.c) {
                throw std::invalid_argument("PlanePartition: height out of [0,c]");
            }
            if (j + 1 < box.b && height(i, j + 1) > h) {
                throw std::invalid_argument("PlanePartition: row not non-increasing");
            }
            if (i + 1 < box.a && height(i + 1, j) > h) {
                throw std::invalid_argument("PlanePartition: column not non-increasing");
            }
        }
    }
}

int PlanePartition::height(int i, int j) const {
    return heights_[static_cast<std::size_t>(i) * box_.b + j];
}

bool PlanePartition::contains(int i, int j, int k) const {
    if (i < 0 || i >= box_.a || j < 0 || j >= box_.b || k < 0 || k >= box_.c) {
        return false;
    }
    return k < height(i, j);
}

long long PlanePartition::cell_count() const {
    return std::accumulate(heights_.begin(), heights_.end(), 0LL);
}

std::vector<Cell3> PlanePartition::cells() const {
    std::vector<Cell3> out;
    out.reserve(static_cast<std::size_t>(cell_count()));
    for (int i = 0; i < box_.a; ++i) {
        for (int j = 0; j < box_.b; ++j) {
            for (int k = 0; k < height(i, j); ++k) {
                out.push_back({i, j, k});
            }
        }
    }
    return out;
}

std::string PlanePartition::to_text() const {
    std::ostringstream out;
    for (int i = 0; i < box_.a; ++i) {
        for (int j = 0; j < box_.b; ++j) {
            if (j > 0) {
                out << ' ';
            }
            out << height(i, j);
        }
        out << '\n';
    }
    return out.str();
}

PlanePartition transpose_t(const PlanePartition& p) {
    const Box& box = p.box();
    if (box.a != box.b) {
        throw std::invalid_argument("transpose_t: requires a == b");
    }
    std::vector<int> heights(static_cast<std::size_t>(box.a) * box.b);
    for (int i = 0; i < box.a; ++i) {
        for (int j = 0; j < box.b; ++j) {
            heights[static_cast<std::size_t>(i) * box.b + j] = p.height(j, i);
        }
    }
    return PlanePartition(box, std::move(heights));
}

PlanePartition rotate_r(const PlanePartition& p) {
    const Box& box = p.box();
    require_cube(box, "rotate_r");
    const int s = box.a;
    // (x,y,z) lies in the image iff (y,z,x) lies in p, so the new height at
    // (x,y) counts the entries of row y exceeding x.
    std::vector<int> heights(static_cast<std::size_t>(s) * s);
    for (int x = 0; x < s; ++x) {
        for (int y = 0; y < s; ++y) {
            int count = 0;
            for (int z = 0; z < s; ++z) {
                if (p.height(y, z) > x) {
                    ++count;
                }
            }
            heights[static_cast<std::size_t>(x) * s + y] = count;
        }
    }
    return PlanePartition(box, std::move(heights));
}

PlanePartition complement_c(const PlanePartition& p) {
    const Box& box = p.box();
    std::vector<int> heights(static_cast<std::size_t>(box.a) * box.b);
    for (int i = 0; i < box.a; ++i) {
        for (int j = 0; j < box.b; ++j) {
            heights[static_cast<std::size_t>(i) * box.b + j] =
                box.c - p.height(box.a - 1 - i, box.b - 1 - j);
        }
    }
    return PlanePartition(box, std::move(heights));
}

bool is_cssc(const PlanePartition& p) {
    require_cube(p.box(), "is_cssc");
    return rotate_r(p) == p && complement_c(p) == p;
}

bool is_tssc(const PlanePartition& p) {
    require_cube(p.box(), "is_tssc");
    return transpose_t(p) == p && rotate_r(p) == p && complement_c(p) == p;
}

BigInt macmahon_count(const Box& box) {
    require_valid_box(box, "macmahon_count");
    Rational product = 1;
    for (int i = 1; i <= box.a; ++i) {
        for (int j = 1; j <= box.b; ++j) {
            for (int k = 1; k <= box.c; ++k) {
                product *= make_rational(i + j + k - 1, i + j + k - 2);
            }
        }
    }
    return to_integer(product);
}

namespace {

// Row-major DFS: position (i,j) may take any value in
// [0, min(height above, height to the left)], tried in increasing order,
// which yields the partitions in lexicographic height-array order.
void enumerate_rec(const Box& box, std::vector<int>& heights, int pos,
                   const std::function<void(const PlanePartition&)>& yield) {
    const int total = box.a * box.b;
    if (pos == total) {
        yield(PlanePartition(box, heights));
        return;
    }
    const int i = pos / box.b;
    const int j = pos % box.b;
    int limit = box.c;
    if (i > 0) {
        limit = std::min(limit, heights[static_cast<std::size_t>(pos) - box.b]);
    }
    if (j > 0) {
        limit = std::min(limit, heights[static_cast<std::size_t>(pos) - 1]);
    }
    for (int h = 0; h <= limit; ++h) {
        heights[static_cast<std::size_t>(pos)] = h;
        enumerate_rec(box, heights, pos + 1, yield);
    }
    heights[static_cast<std::size_t>(pos)] = 0;
}

}  // namespace

void enumerate_box(const Box& box, const std::function<void(const PlanePartition&)>& yield,
                   long long cap) {
    require_valid_box(box, "enumerate_box");
    const BigInt expected = macmahon_count(box);
    if (expected > cap) {
        throw guard_error("enumerate_box: box (" + std::to_string(box.a) + "," +
                          std::to_string(box.b) + "," + std::to_string(box.c) + ") holds " +
                          expected.str() + " plane partitions, over the cap of " +
                          std::to_string(cap));
    }
    std::vector<int> heights(static_cast<std::size_t>(box.a) * box.b, 0);
    enumerate_rec(box, heights, 0, yield);
}

BigInt count_box(const Box& box, long long cap) {
    long long count = 0;
    enumerate_box(box, [&](const PlanePartition&) { ++count; }, cap);
    return count;
}

namespace {

BigInt count_class_filtered(int n, long long cap, bool total_symmetry) {
    if (n < 1) {
        throw std::invalid_argument("class counts: n must be >= 1");
    }
    const int s = 2 * n;
    long long count = 0;
    enumerate_box(Box{s, s, s},
                  [&](const PlanePartition& p) {
                      if (total_symmetry ? is_tssc(p) : is_cssc(p)) {
                          ++count;
                      }
                  },
                  cap);
    return count;
}

// Exhaustive search over cell orbits of the cube under a symmetry group,
// with the complementation constraint built in: the antipodal map pairs
// orbits, and a valid ideal takes exactly one orbit from each pair. Order
// ideals are counted by DFS over the pairs with closure propagation.
class OrbitIdealSearch {
public:
    OrbitIdealSearch(int side, const std::vector<std::array<int, 3> (*)(int, int, int)>& gens)
        : side_(side) {
        const int ncells = side * side * side;
        orbit_of_.assign(ncells, -1);

        // Orbits under the generated group, discovered in cell-index order.
        std::vector<int> stack;
        for (int start = 0; start < ncells; ++start) {
            if (orbit_of_[start] >= 0) {
                continue;
            }
            const int id = static_cast<int>(orbit_cells_.size());
            orbit_cells_.emplace_back();
            stack.push_back(start);
            orbit_of_[start] = id;
            while (!stack.empty()) {
                const int cell = stack.back();
                stack.pop_back();
                orbit_cells_[id].push_back(cell);
                const auto [i, j, k] = unpack(cell);
                for (auto* gen : gens) {
                    const auto m = gen(i, j, k);
                    const int image = pack(m[0], m[1], m[2]);
                    if (orbit_of_[image] < 0) {
                        orbit_of_[image] = id;
                        stack.push_back(image);
                    }
                }
            }
        }

        const int norbits = static_cast<int>(orbit_cells_.size());
        partner_.assign(norbits, -1);
        for (int o = 0; o < norbits; ++o) {
            const auto [i, j, k] = unpack(orbit_cells_[o].front());
            partner_[o] = orbit_of_[pack(side_ - 1 - i, side_ - 1 - j, side_ - 1 - k)];
        }

        // Orbit-level closure: IN propagates to orbits holding an immediate
        // predecessor cell, OUT to orbits holding an immediate successor.
        preds_.assign(norbits, {});
        succs_.assign(norbits, {});
        for (int o = 0; o < norbits; ++o) {
            for (int cell : orbit_cells_[o]) {
                const auto [i, j, k] = unpack(cell);
                add_link(o, i - 1, j, k);
                add_link(o, i, j - 1, k);
                add_link(o, i, j, k - 1);
            }
            sort_unique(preds_[o]);
            sort_unique(succs_[o]);
        }
    }

    BigInt count() {
        const int norbits = static_cast<int>(orbit_cells_.size());
        for (int o = 0; o < norbits; ++o) {
            if (partner_[o] == o) {
                // An orbit cannot be both inside and outside; the class is
                // empty (this is what rules out odd cube sides).
                return 0;
            }
        }
        state_.assign(norbits, State::kUndecided);
        count_ = 0;
        dfs(0);
        return count_;
    }

private:
    enum class State : unsigned char { kUndecided, kIn, kOut };

    int pack(int i, int j, int k) const { return (i * side_ + j) * side_ + k; }

    std::array<int, 3> unpack(int cell) const {
        return {cell / (side_ * side_), (cell / side_) % side_, cell % side_};
    }

    void add_link(int orbit, int i, int j, int k) {
        if (i < 0 || j < 0 || k < 0) {
            return;
        }
        const int p = orbit_of_[pack(i, j, k)];
        if (p == orbit) {
            return;
        }
        preds_[orbit].push_back(p);
        succs_[p].push_back(orbit);
    }

    static void sort_unique(std::vector<int>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }

    bool assign(int orbit, bool in, std::vector<int>& trail) {
        std::vector<std::pair<int, bool>> work{{orbit, in}};
        while (!work.empty()) {
            const auto [o, value] = work.back();
            work.pop_back();
            const State want = value ? State::kIn : State::kOut;
            if (state_[o] != State::kUndecided) {
                if (state_[o] != want) {
                    return false;
                }
                continue;
            }
            state_[o] = want;
            trail.push_back(o);
            work.emplace_back(partner_[o], !value);
            for (int next : value ? preds_[o] : succs_[o]) {
                work.emplace_back(next, value);
            }
        }
        return true;
    }

    void dfs(int from) {
        int o = from;
        while (o < static_cast<int>(orbit_cells_.size()) && state_[o] != State::kUndecided) {
            ++o;
        }
        if (o == static_cast<int>(orbit_cells_.size())) {
            ++count_;
            return;
        }
        for (bool in : {true, false}) {
            std::vector<int> trail;
            if (assign(o, in, trail)) {
                dfs(o + 1);
            }
            for (int t : trail) {
                state_[t] = State::kUndecided;
            }
        }
    }

    int side_;
    std::vector<int> orbit_of_;
    std::vector<std::vector<int>> orbit_cells_;
    std::vector<int> partner_;
    std::vector<std::vector<int>> preds_;
    std::vector<std::vector<int>> succs_;
    std::vector<State> state_;
    BigInt count_ = 0;
};

std::array<int, 3> cyclic_shift(int i, int j, int k) {
    return {k, i, j};
}

std::array<int, 3> swap_xy(int i, int j, int k) {
    return {j, i, k};
}

BigInt count_class_pruned(int n, int max_n, bool total_symmetry) {
    if (n < 1) {
        throw std::invalid_argument("class counts: n must be >= 1");
    }
    if (n > max_n) {
        throw guard_error("symmetry-class search capped at n <= " + std::to_string(max_n) +
                          ", got n = " + std::to_string(n));
    }
    std::vector<std::array<int, 3> (*)(int, int, int)> gens{&cyclic_shift};
    if (total_symmetry) {
        gens.push_back(&swap_xy);
    }
    OrbitIdealSearch search(2 * n, gens);
    return search.count();
}

}  // namespace

BigInt count_cssc_filtered(int n, long long cap) {
    return count_class_filtered(n, cap, /*total_symmetry=*/false);
}

BigInt count_tssc_filtered(int n, long long cap) {
    return count_class_filtered(n, cap, /*total_symmetry=*/true);
}

BigInt count_cssc_bruteforce(int n, int max_n) {
    return count_class_pruned(n, max_n, /*total_symmetry=*/false);
}

BigInt count_tssc_bruteforce(int n, int max_n) {
    return count_class_pruned(n, max_n, /*total_symmetry=*/true);
}

}  // namespace ppsym
