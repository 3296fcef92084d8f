#pragma once

#include "ppsym/exactnum.hpp"

#include <functional>
#include <string>
#include <vector>

namespace ppsym {

struct Box {
    int a = 0;
    int b = 0;
    int c = 0;

    bool operator==(const Box&) const = default;
    bool is_cube() const { return a == b && b == c; }
};

struct Cell3 {
    int i = 0;
    int j = 0;
    int k = 0;

    auto operator<=>(const Cell3&) const = default;
};

// Order ideal of B(a,b,c), stored as an a x b array of column heights in
// [0,c] with non-increasing rows and columns. (i,j,k) lies in the ideal
// iff k < height(i,j).
class PlanePartition {
public:
    explicit PlanePartition(const Box& box);                          // empty
    PlanePartition(const Box& box, std::vector<int> heights);         // validated

    const Box& box() const { return box_; }
    int height(int i, int j) const;
    const std::vector<int>& heights() const { return heights_; }

    bool contains(int i, int j, int k) const;
    long long cell_count() const;
    std::vector<Cell3> cells() const;  // sorted

    bool operator==(const PlanePartition&) const = default;

    // Debug text form: a lines of b space-separated heights.
    std::string to_text() const;

private:
    Box box_;
    std::vector<int> heights_;  // row-major, heights_[i*b + j]
};

// (i,j,k) -> (j,i,k); requires a == b.
PlanePartition transpose_t(const PlanePartition& p);

// (i,j,k) -> (k,i,j); requires a cube box. This fixes one of the two
// cyclic directions; the symmetry classes do not depend on the choice.
PlanePartition rotate_r(const PlanePartition& p);

// (i,j,k) in the result iff (a-i-1, b-j-1, c-k-1) is absent from p.
PlanePartition complement_c(const PlanePartition& p);

bool is_cssc(const PlanePartition& p);  // r- and c-invariant; cube required
bool is_tssc(const PlanePartition& p);  // t-, r- and c-invariant; cube required

// Exact number of plane partitions in the box (MacMahon's product formula);
// used as the enumeration size guard.
BigInt macmahon_count(const Box& box);

inline constexpr long long kDefaultEnumerationCap = 10'000'000;

// Exhaustive lexicographic enumeration (row-major DFS over height arrays).
// Refuses boxes whose count exceeds the cap.
void enumerate_box(const Box& box, const std::function<void(const PlanePartition&)>& yield,
                   long long cap = kDefaultEnumerationCap);

BigInt count_box(const Box& box, long long cap = kDefaultEnumerationCap);

// Class counts by filtering the unpruned enumeration; cross-check route.
BigInt count_cssc_filtered(int n, long long cap = kDefaultEnumerationCap);
BigInt count_tssc_filtered(int n, long long cap = kDefaultEnumerationCap);

// Class counts by exhaustive DFS over symmetry orbits of cells with
// ideal-closure propagation; feasible well past the unpruned route.
BigInt count_cssc_bruteforce(int n, int max_n = 3);
BigInt count_tssc_bruteforce(int n, int max_n = 3);

}  // namespace ppsym
