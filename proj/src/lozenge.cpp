#include "ppsym/lozenge.hpp"

#include "ppsym/matrices.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

namespace ppsym {

namespace {

// Centroid of a cell in tripled lattice coordinates; exact integers, and
// the up/down kinds live in distinct residue classes mod 3.
std::pair<int, int> tripled(const TriCell& cell) {
    if (cell.up) {
        return {3 * cell.x + 1, 3 * cell.y + 1};
    }
    return {3 * cell.x + 2, 3 * cell.y + 2};
}

int mod3(int v) {
    return ((v % 3) + 3) % 3;
}

TriCell from_tripled(int u, int v) {
    if (mod3(u) == 1 && mod3(v) == 1) {
        return {(u - 1) / 3, (v - 1) / 3, true};
    }
    if (mod3(u) == 2 && mod3(v) == 2) {
        return {(u - 2) / 3, (v - 2) / 3, false};
    }
    throw std::logic_error("from_tripled: not a cell centroid");
}

}  // namespace

Region::Region(std::vector<TriCell> cells) : cells_(std::move(cells)) {
    if (cells_.empty()) {
        throw std::invalid_argument("Region: empty cell set");
    }
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

Region Region::hexagon(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) {
        throw std::invalid_argument("hexagon: sides must be >= 1");
    }
    // Size-(a+b+c) lattice triangle with corner triangles of sides c (at the
    // origin corner), b (right corner) and a (top corner) removed.
    const int n = a + b + c;
    std::vector<TriCell> cells;
    for (int x = 0; x <= n - b - 1; ++x) {
        for (int y = 0; y <= n - a - 1; ++y) {
            if (x + y >= c && x + y <= n - 1) {
                cells.push_back({x, y, true});
            }
            if (x + y >= c - 1 && x + y <= n - 2) {
                cells.push_back({x, y, false});
            }
        }
    }
    return Region(std::move(cells));
}

int Region::index_of(const TriCell& cell) const {
    const auto it = std::lower_bound(cells_.begin(), cells_.end(), cell);
    if (it == cells_.end() || *it != cell) {
        return -1;
    }
    return static_cast<int>(it - cells_.begin());
}

int Region::up_count() const {
    return static_cast<int>(std::count_if(cells_.begin(), cells_.end(),
                                          [](const TriCell& c) { return c.up; }));
}

DualGraph::DualGraph(int vertex_count, std::vector<WeightedEdge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 0) {
        throw std::invalid_argument("DualGraph: negative vertex count");
    }
    for (const auto& e : edges_) {
        if (e.u < 0 || e.u >= vertex_count_ || e.v < 0 || e.v >= vertex_count_) {
            throw std::invalid_argument("DualGraph: edge endpoint out of range");
        }
        if (e.u == e.v) {
            throw std::invalid_argument("DualGraph: loops are not stored");
        }
    }
}

DualGraph DualGraph::of_region(const Region& region) {
    std::vector<WeightedEdge> edges;
    for (const TriCell& cell : region.cells()) {
        if (cell.up) {
            continue;
        }
        // down(x,y) meets up(x,y), up(x+1,y) and up(x,y+1).
        const int d = region.index_of(cell);
        for (const TriCell& nb : {TriCell{cell.x, cell.y, true}, TriCell{cell.x + 1, cell.y, true},
                                  TriCell{cell.x, cell.y + 1, true}}) {
            const int u = region.index_of(nb);
            if (u >= 0) {
                edges.push_back({std::min(u, d), std::max(u, d), Rational(1)});
            }
        }
    }
    std::sort(edges.begin(), edges.end(),
              [](const WeightedEdge& l, const WeightedEdge& r) {
                  return std::tie(l.u, l.v) < std::tie(r.u, r.v);
              });
    return DualGraph(region.size(), std::move(edges));
}

bool DualGraph::is_bipartite() const {
    std::vector<int> color(vertex_count_, -1);
    std::vector<std::vector<int>> adj(vertex_count_);
    for (const auto& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<int> stack;
    for (int start = 0; start < vertex_count_; ++start) {
        if (color[start] >= 0) {
            continue;
        }
        color[start] = 0;
        stack.push_back(start);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

class MatchingEnumerator {
public:
    explicit MatchingEnumerator(const DualGraph& g) : edges_(g.edges()) {
        adj_.resize(g.vertex_count());
        for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
            adj_[edges_[e].u].push_back(e);
            adj_[edges_[e].v].push_back(e);
        }
        matched_.assign(g.vertex_count(), false);
    }

    Rational run() {
        if (matched_.size() % 2 != 0) {
            return 0;
        }
        return recurse();
    }

private:
    int live_degree(int v) const {
        int deg = 0;
        for (int e : adj_[v]) {
            if (!matched_[other(e, v)]) {
                ++deg;
            }
        }
        return deg;
    }

    int other(int e, int v) const {
        return edges_[e].u == v ? edges_[e].v : edges_[e].u;
    }

    Rational recurse() {
        // Branch on the unmatched vertex with the fewest usable edges.
        int best = -1;
        int best_deg = 0;
        for (int v = 0; v < static_cast<int>(matched_.size()); ++v) {
            if (matched_[v]) {
                continue;
            }
            const int deg = live_degree(v);
            if (deg == 0) {
                return 0;
            }
            if (best < 0 || deg < best_deg) {
                best = v;
                best_deg = deg;
                if (deg == 1) {
                    break;
                }
            }
        }
        if (best < 0) {
            return 1;
        }
        Rational total = 0;
        matched_[best] = true;
        for (int e : adj_[best]) {
            const int w = other(e, best);
            if (matched_[w]) {
                continue;
            }
            matched_[w] = true;
            total += edges_[e].weight * recurse();
            matched_[w] = false;
        }
        matched_[best] = false;
        return total;
    }

    const std::vector<WeightedEdge>& edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<bool> matched_;
};

void require_matching_size(const DualGraph& g, int max_vertices) {
    if (g.vertex_count() > max_vertices) {
        throw guard_error("matching enumeration capped at " + std::to_string(max_vertices) +
                          " vertices, got " + std::to_string(g.vertex_count()));
    }
}

}  // namespace

Rational matching_gf(const DualGraph& g, int max_vertices) {
    require_matching_size(g, max_vertices);
    return MatchingEnumerator(g).run();
}

BigInt matching_count(const DualGraph& g, int max_vertices) {
    return to_integer(matching_gf(g, max_vertices));
}

BigInt count_tilings(int a, int b, int c, int max_vertices) {
    const Region hex = Region::hexagon(a, b, c);
    return matching_count(DualGraph::of_region(hex), max_vertices);
}

TriCell rotation60(const TriCell& cell, int n) {
    if (n < 1) {
        throw std::invalid_argument("rotation60: n must be >= 1");
    }
    // +60 degrees about the hexagon center L(2n,2n); on relative lattice
    // coordinates the rotation is (p,q) -> (-q, p+q).
    const auto [u, v] = tripled(cell);
    const int center = 6 * n;
    const int p = u - center;
    const int q = v - center;
    return from_tripled(center - q, center + p + q);
}

namespace {

TriCell reflect(const TriCell& cell, int n) {
    // Reflection of the hexagon across the vertical line through its
    // center: (p,q) -> (-p-q, q) on relative lattice coordinates.
    const auto [u, v] = tripled(cell);
    const int center = 6 * n;
    const int p = u - center;
    const int q = v - center;
    return from_tripled(center - p - q, center + q);
}

// Quotient of the hexagon dual by the rotation group, with the symmetry
// bookkeeping needed to reconstruct the axis-cut subgraph.
struct OrbitData {
    Region region;
    std::vector<int> orbit_of;                   // cell index -> orbit id
    int orbit_count = 0;
    std::vector<WeightedEdge> qedges;            // unit weights, loop dropped
    std::vector<std::pair<int, int>> edge_rep;   // quotient edge -> cell pair
    int loops_removed = 0;
    std::vector<int> tau_vertex;                 // reflection on orbits
    std::vector<int> tau_edge;                   // reflection on quotient edges
};

OrbitData build_orbit_data(int n) {
    OrbitData od{Region::hexagon(2 * n, 2 * n, 2 * n)};
    const int ncells = od.region.size();

    std::vector<int> rho(ncells), sigma(ncells);
    for (int i = 0; i < ncells; ++i) {
        rho[i] = od.region.index_of(rotation60(od.region.cells()[i], n));
        sigma[i] = od.region.index_of(reflect(od.region.cells()[i], n));
        if (rho[i] < 0 || sigma[i] < 0) {
            throw identity_error("hexagon symmetry does not close over the cell set");
        }
    }

    od.orbit_of.assign(ncells, -1);
    for (int start = 0; start < ncells; ++start) {
        if (od.orbit_of[start] >= 0) {
            continue;
        }
        const int id = od.orbit_count++;
        int cell = start;
        int size = 0;
        do {
            od.orbit_of[cell] = id;
            cell = rho[cell];
            ++size;
        } while (cell != start);
        if (size != 6) {
            throw identity_error("rotation orbit of size " + std::to_string(size) +
                                 "; the rotation must act freely");
        }
    }

    // Edge orbits, keyed by the smallest (min,max) cell pair the rotation
    // reaches. Parallel quotient edges stay distinct.
    auto edge_key = [&](int a, int b) {
        long long best = -1;
        for (int t = 0; t < 6; ++t) {
            const long long key =
                static_cast<long long>(std::min(a, b)) * ncells + std::max(a, b);
            if (best < 0 || key < best) {
                best = key;
            }
            a = rho[a];
            b = rho[b];
        }
        return best;
    };

    std::map<long long, std::pair<int, int>> reps;
    for (int d = 0; d < ncells; ++d) {
        const TriCell& cell = od.region.cells()[d];
        if (cell.up) {
            continue;
        }
        for (const TriCell& nb :
             {TriCell{cell.x, cell.y, true}, TriCell{cell.x + 1, cell.y, true},
              TriCell{cell.x, cell.y + 1, true}}) {
            const int u = od.region.index_of(nb);
            if (u < 0) {
                continue;
            }
            const long long key = edge_key(u, d);
            const int a = static_cast<int>(key / ncells);
            const int b = static_cast<int>(key % ncells);
            reps.emplace(key, std::make_pair(a, b));
        }
    }

    std::map<long long, int> edge_index;
    for (const auto& [key, rep] : reps) {
        const int u = od.orbit_of[rep.first];
        const int v = od.orbit_of[rep.second];
        if (u == v) {
            ++od.loops_removed;
            continue;
        }
        edge_index.emplace(key, static_cast<int>(od.qedges.size()));
        od.qedges.push_back({std::min(u, v), std::max(u, v), Rational(1)});
        od.edge_rep.push_back(rep);
    }
    if (od.loops_removed != 1) {
        throw identity_error("orbit quotient should drop exactly one central loop, found " +
                             std::to_string(od.loops_removed));
    }

    od.tau_vertex.assign(od.orbit_count, -1);
    for (int cell = 0; cell < ncells; ++cell) {
        const int o = od.orbit_of[cell];
        const int image = od.orbit_of[sigma[cell]];
        if (od.tau_vertex[o] >= 0 && od.tau_vertex[o] != image) {
            throw identity_error("reflection does not descend to the orbit set");
        }
        od.tau_vertex[o] = image;
    }

    od.tau_edge.assign(od.qedges.size(), -1);
    for (int e = 0; e < static_cast<int>(od.qedges.size()); ++e) {
        const auto [a, b] = od.edge_rep[e];
        const auto it = edge_index.find(edge_key(sigma[a], sigma[b]));
        if (it == edge_index.end()) {
            throw identity_error("reflection does not permute the quotient edges");
        }
        od.tau_edge[e] = it->second;
    }

    return od;
}

DualGraph quotient_graph(const OrbitData& od) {
    DualGraph g(od.orbit_count, od.qedges);
    g.set_loops_removed(od.loops_removed);
    return g;
}

void require_orbit_scale(int n, int max_n) {
    if (n < 1) {
        throw std::invalid_argument("orbit routines: n must be >= 1");
    }
    if (n > max_n) {
        throw guard_error("orbit-graph routines capped at n <= " + std::to_string(max_n) +
                          ", got n = " + std::to_string(n));
    }
}

}  // namespace

DualGraph orbit_graph(int n) {
    if (n < 1) {
        throw std::invalid_argument("orbit_graph: n must be >= 1");
    }
    return quotient_graph(build_orbit_data(n));
}

BigInt count_cssc_via_orbit(int n, int max_n) {
    require_orbit_scale(n, max_n);
    return matching_count(orbit_graph(n));
}

namespace {

// The quotient admits a reflective drawing; its involution tau is induced
// by any reflection of the hexagon (all of them agree on rotation orbits).
// The axis carries n tau-invariant edges whose weights drop to 1/2, and
// the 2n-1 edges joining axis vertices to the lower half get deleted.
// Which tau-invariant edges lie on the axis, and which half is "lower",
// is figure information; candidates are enumerated deterministically and
// accepted only when both matching identities hold exactly.
DualGraph reconstruct_axis_cut(int n, const OrbitData& od) {
    const int nv = od.orbit_count;
    const int ne = static_cast<int>(od.qedges.size());

    const BigInt target = matching_count(quotient_graph(od));
    const Rational det_u = determinant(build_U(n));
    const Rational two_pow = Rational(pow2(static_cast<unsigned>(n)));

    std::vector<int> invariant;  // tau-invariant edges: the axis candidates
    for (int e = 0; e < ne; ++e) {
        if (od.tau_edge[e] == e) {
            invariant.push_back(e);
        }
    }
    if (static_cast<int>(invariant.size()) < n) {
        throw identity_error("axis reconstruction: fewer than n reflection-invariant edges");
    }

    // Split the non-fixed vertices into the two mirror halves: connected
    // components over non-invariant edges avoiding fixed vertices, paired
    // off by tau.
    std::vector<int> comp(nv, -1);
    std::vector<std::vector<int>> comp_adj(nv);
    for (int e = 0; e < ne; ++e) {
        if (od.tau_edge[e] == e) {
            continue;
        }
        const auto& edge = od.qedges[e];
        if (od.tau_vertex[edge.u] == edge.u || od.tau_vertex[edge.v] == edge.v) {
            continue;
        }
        comp_adj[edge.u].push_back(edge.v);
        comp_adj[edge.v].push_back(edge.u);
    }
    int ncomp = 0;
    for (int start = 0; start < nv; ++start) {
        if (comp[start] >= 0 || od.tau_vertex[start] == start) {
            continue;
        }
        std::vector<int> stack{start};
        comp[start] = ncomp;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : comp_adj[v]) {
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp;
    }

    std::vector<int> comp_mirror(ncomp, -1);
    for (int v = 0; v < nv; ++v) {
        if (comp[v] >= 0) {
            comp_mirror[comp[v]] = comp[od.tau_vertex[v]];
        }
    }
    std::vector<std::pair<int, int>> comp_pairs;
    for (int c = 0; c < ncomp; ++c) {
        if (comp_mirror[c] == c) {
            throw identity_error("axis reconstruction: a mirror component maps to itself");
        }
        if (c < comp_mirror[c]) {
            comp_pairs.emplace_back(c, comp_mirror[c]);
        }
    }
    if (comp_pairs.size() > 20) {
        throw identity_error("axis reconstruction: side assignment space too large");
    }

    // Walk axis-edge subsets of size n in lexicographic order.
    std::vector<int> pick(n);
    std::iota(pick.begin(), pick.end(), 0);
    const int m = static_cast<int>(invariant.size());
    while (true) {
        for (unsigned long mask = 0; mask < (1UL << comp_pairs.size()); ++mask) {
            std::vector<bool> below(nv, false);
            for (std::size_t p = 0; p < comp_pairs.size(); ++p) {
                const int lower = (mask >> p) & 1 ? comp_pairs[p].second : comp_pairs[p].first;
                for (int v = 0; v < nv; ++v) {
                    if (comp[v] == lower) {
                        below[v] = true;
                    }
                }
            }

            std::vector<bool> halved(ne, false);
            for (int idx : pick) {
                halved[invariant[idx]] = true;
            }

            std::vector<WeightedEdge> kept;
            int deleted = 0;
            for (int e = 0; e < ne; ++e) {
                const auto& edge = od.qedges[e];
                const bool u_fixed = od.tau_vertex[edge.u] == edge.u;
                const bool v_fixed = od.tau_vertex[edge.v] == edge.v;
                if ((u_fixed && below[edge.v]) || (v_fixed && below[edge.u])) {
                    ++deleted;
                    continue;
                }
                WeightedEdge out = edge;
                if (halved[e]) {
                    out.weight = make_rational(1, 2);
                }
                kept.push_back(out);
            }
            if (deleted != 2 * n - 1) {
                continue;
            }

            DualGraph candidate(nv, std::move(kept));
            const Rational gf = matching_gf(candidate);
            if (two_pow * gf == Rational(target) && gf == det_u) {
                return candidate;
            }
        }

        // next n-combination of {0..m-1}
        int i = n - 1;
        while (i >= 0 && pick[i] == m - n + i) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++pick[i];
        for (int j = i + 1; j < n; ++j) {
            pick[j] = pick[j - 1] + 1;
        }
    }

    throw identity_error("no validated axis reconstruction for n = " + std::to_string(n));
}

}  // namespace

DualGraph build_K(int n, int max_n) {
    require_orbit_scale(n, max_n);

    static std::mutex mutex;
    static std::map<int, DualGraph> cache;
    std::lock_guard<std::mutex> lock(mutex);
    if (const auto it = cache.find(n); it != cache.end()) {
        return it->second;
    }
    DualGraph k = reconstruct_axis_cut(n, build_orbit_data(n));
    cache.emplace(n, k);
    return k;
}

bool factorization_check(int n, int max_n) {
    const DualGraph k = build_K(n, max_n);
    const Rational lhs = Rational(matching_count(orbit_graph(n)));
    return lhs == Rational(pow2(static_cast<unsigned>(n))) * matching_gf(k);
}

std::string graph_dump(const DualGraph& g) {
    std::vector<WeightedEdge> edges = g.edges();
    std::sort(edges.begin(), edges.end(), [](const WeightedEdge& l, const WeightedEdge& r) {
        return std::tie(l.u, l.v, l.weight) < std::tie(r.u, r.v, r.weight);
    });
    std::ostringstream out;
    for (const auto& e : edges) {
        out << e.u << ' ' << e.v << ' ' << rational_str(e.weight) << '\n';
    }
    return out.str();
}

}  // namespace ppsym
