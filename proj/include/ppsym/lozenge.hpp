#pragma once

#include "ppsym/exactnum.hpp"

#include <string>
#include <vector>

namespace ppsym {

// Unit triangle of the triangular lattice. Row y holds the up-triangle
// with corners L(x,y), L(x+1,y), L(x,y+1) and the down-triangle with
// corners L(x+1,y), L(x,y+1), L(x+1,y+1), where L(x,y) = x*(1,0) +
// y*(1/2, sqrt(3)/2). An up cell is adjacent to down(x,y), down(x-1,y)
// and down(x,y-1).
struct TriCell {
    int x = 0;
    int y = 0;
    bool up = true;

    auto operator<=>(const TriCell&) const = default;
};

// Finite set of unit triangles.
class Region {
public:
    explicit Region(std::vector<TriCell> cells);

    // Hexagon with side lengths a,b,c,a,b,c: the size-(a+b+c) triangle with
    // corners of sides c, b, a cut off. For a = b = c the center is the
    // lattice vertex L(a, a).
    static Region hexagon(int a, int b, int c);

    const std::vector<TriCell>& cells() const { return cells_; }
    int size() const { return static_cast<int>(cells_.size()); }
    int index_of(const TriCell& cell) const;  // -1 if absent
    bool contains(const TriCell& cell) const { return index_of(cell) >= 0; }

    int up_count() const;

private:
    std::vector<TriCell> cells_;  // sorted, unique
};

struct WeightedEdge {
    int u = 0;
    int v = 0;
    Rational weight = 1;

    bool operator==(const WeightedEdge&) const = default;
};

// Vertices 0..n-1 with weighted edges; parallel edges are meaningful
// (each contributes its own matchings) and loops are never stored.
class DualGraph {
public:
    DualGraph(int vertex_count, std::vector<WeightedEdge> edges);

    // One vertex per cell of the region (in cell order), one unit-weight
    // edge per shared unit segment.
    static DualGraph of_region(const Region& region);

    int vertex_count() const { return vertex_count_; }
    const std::vector<WeightedEdge>& edges() const { return edges_; }

    // Loops dropped during quotient construction (they cannot occur in a
    // perfect matching).
    int loops_removed() const { return loops_removed_; }
    void set_loops_removed(int n) { loops_removed_ = n; }

    bool is_bipartite() const;

private:
    int vertex_count_;
    std::vector<WeightedEdge> edges_;
    int loops_removed_ = 0;
};

inline constexpr int kMatchingVertexGuard = 60;

// Sum of edge-weight products over all perfect matchings, by exhaustive
// branch and bound; 0 when no perfect matching exists.
Rational matching_gf(const DualGraph& g, int max_vertices = kMatchingVertexGuard);

// matching_gf for a unit-weight graph, checked integral.
BigInt matching_count(const DualGraph& g, int max_vertices = kMatchingVertexGuard);

// Lozenge tilings of the hexagon H(a,b,c) = perfect matchings of its dual.
BigInt count_tilings(int a, int b, int c, int max_vertices = kMatchingVertexGuard);

// Exact 60-degree rotation of H(2n,2n,2n) about its center, as a cell map.
TriCell rotation60(const TriCell& cell, int n);

// Quotient of the dual of H(2n,2n,2n) by the rotation group: one vertex
// per size-6 cell orbit, one edge per adjacency orbit, the single central
// loop removed.
DualGraph orbit_graph(int n);

// Matchings of the orbit quotient.
BigInt count_cssc_via_orbit(int n, int max_n = 3);

// The reweighted subgraph of the orbit quotient determined by its
// reflective symmetry: n symmetric edges reweighted to 1/2 and the 2n-1
// edges on one side of the axis deleted, validated by the matching
// identities (see build_K notes in the implementation). Throws
// identity_error if no reconstruction validates.
DualGraph build_K(int n, int max_n = 3);

// True iff matchings(orbit quotient) == 2^n * matching_gf(K_n) exactly.
bool factorization_check(int n, int max_n = 3);

// "u v p/q" edge lines, sorted.
std::string graph_dump(const DualGraph& g);

}  // namespace ppsym
