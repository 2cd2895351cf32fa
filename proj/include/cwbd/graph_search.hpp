#pragma once

// Tournaments and strongly regular-style graphs, plus the backtracking
// searches used to turn them into designs: translate-invariant Hamiltonian
// cycle enumeration in doubly regular tournaments, and (invariant)
// Hamiltonian decompositions of graphs in which every pair of distinct
// vertices has the same number of common neighbours.
//
// All searches are deterministic: DFS tries vertices in ascending order and
// honours an explicit node budget.

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "cwbd/design.hpp"
#include "cwbd/errors.hpp"
#include "cwbd/finite_field.hpp"
#include "cwbd/matrix.hpp"

namespace cwbd {

struct Digraph {
    int order = 0;
    IntMatrix adjacency; // 0/1, zero diagonal

    Digraph() = default;
    explicit Digraph(IntMatrix a) : order(static_cast<int>(a.rows())), adjacency(std::move(a)) {
        if (adjacency.rows() != adjacency.cols())
            throw std::invalid_argument("digraph adjacency must be square");
        for (int i = 0; i < order; ++i)
            for (int j = 0; j < order; ++j) {
                long long v = adjacency(i, j);
                if (v != 0 && v != 1) throw std::invalid_argument("digraph adjacency must be 0/1");
                if (i == j && v != 0) throw std::invalid_argument("digraph has a self-loop");
            }
    }
};

struct Graph {
    int order = 0;
    IntMatrix adjacency; // symmetric 0/1, zero diagonal

    Graph() = default;
    explicit Graph(IntMatrix a) : order(static_cast<int>(a.rows())), adjacency(std::move(a)) {
        if (adjacency.rows() != adjacency.cols())
            throw std::invalid_argument("graph adjacency must be square");
        if (!adjacency.is_symmetric()) throw std::invalid_argument("graph adjacency must be symmetric");
        for (int i = 0; i < order; ++i)
            for (int j = 0; j < order; ++j) {
                long long v = adjacency(i, j);
                if (v != 0 && v != 1) throw std::invalid_argument("graph adjacency must be 0/1");
                if (i == j && v != 0) throw std::invalid_argument("graph has a self-loop");
            }
    }
};

struct CycleSet {
    std::vector<std::vector<int>> cycles; // each a length-t vertex sequence
    bool directed = true;
};

inline constexpr long long kDefaultSearchBudget = 1000000000LL;

// Quadratic-residue tournament on a field of order t = 3 (mod 4): arc from
// i to j exactly when j - i is a nonzero square.
inline Digraph paley_tournament(const Field& field) {
    const int t = static_cast<int>(field.order());
    if (t % 4 != 3)
        throw infeasible_error("quadratic-residue tournament needs field order 3 mod 4");
    SquarePartition parts = square_partition(field);
    IntMatrix a(t, t);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            if (parts.squares.count(field.sub(j, i))) a(i, j) = 1;
    return Digraph(std::move(a));
}

struct DrtReport {
    bool is_drt = false;
    long long phi = 0, xi = 0; // in A'A = phi*I + xi*J when is_drt
};

// A tournament on t vertices is doubly regular when A + A' = J - I and
// A'A = phi*I + xi*J with phi = (t+1)/4 and xi = (t-3)/4.
inline DrtReport drt_check(const Digraph& g) {
    DrtReport rep;
    const int t = g.order;
    if (t < 3 || t % 4 != 3) return rep;
    rep.phi = (t + 1) / 4;
    rep.xi = (t - 3) / 4;
    const IntMatrix& a = g.adjacency;
    IntMatrix jmi = IntMatrix::ones(t, t) - IntMatrix::identity(t);
    if (a + a.transpose() != jmi) return rep;
    IntMatrix ata = a.transpose() * a;
    auto sym = complete_symmetry(ata);
    rep.is_drt = sym.is_completely_symmetric && sym.diagonal_value == rep.phi + rep.xi &&
                 sym.offdiagonal_value == rep.xi;
    return rep;
}

namespace detail {

inline void check_permutation(const std::vector<int>& p, int order) {
    if (p.size() != static_cast<std::size_t>(order))
        throw std::invalid_argument("permutation length must equal the vertex count");
    std::vector<char> seen(order, 0);
    for (int v : p) {
        if (v < 0 || v >= order || seen[v]) throw std::invalid_argument("invalid permutation");
        seen[v] = 1;
    }
}

inline void check_automorphism(const std::vector<int>& p, const IntMatrix& adjacency) {
    const int t = static_cast<int>(adjacency.rows());
    check_permutation(p, t);
    for (int u = 0; u < t; ++u)
        for (int v = 0; v < t; ++v)
            if (adjacency(u, v) != adjacency(p[u], p[v]))
                throw std::invalid_argument("permutation is not an automorphism");
}

inline std::vector<std::vector<int>> drop_identity(const std::vector<std::vector<int>>& group,
                                                   int order) {
    std::vector<int> id(order);
    for (int i = 0; i < order; ++i) id[i] = i;
    std::vector<std::vector<int>> out;
    for (const auto& g : group) {
        check_permutation(g, order);
        if (g != id) out.push_back(g);
    }
    return out;
}

// Bookkeeping for arc/edge-disjointness from group images.  blocked(u,v)
// counts how many images of the arcs chosen so far land on (u,v); an arc
// may be chosen only while its own slot is zero and no non-identity group
// element maps it to itself.  With `undirected` set, arcs are unordered
// pairs: slots are canonicalized to (min,max) and an edge swapped end for
// end by some group element counts as self-conflicting.
struct ArcConflicts {
    const std::vector<std::vector<int>>& maps; // non-identity elements
    std::vector<int> blocked;
    std::vector<char> self_conflict;
    int order;
    bool undirected;

    ArcConflicts(const std::vector<std::vector<int>>& nonid, int n, bool undirected_arcs)
        : maps(nonid), order(n), undirected(undirected_arcs) {
        blocked.assign(static_cast<std::size_t>(n) * n, 0);
        self_conflict.assign(static_cast<std::size_t>(n) * n, 0);
        for (const auto& g : maps)
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                    bool fixed = g[u] == u && g[v] == v;
                    if (undirected) fixed = fixed || (g[u] == v && g[v] == u);
                    if (fixed) self_conflict[slot(u, v)] = 1;
                }
    }

    std::size_t slot(int u, int v) const {
        if (undirected && u > v) std::swap(u, v);
        return static_cast<std::size_t>(u) * order + v;
    }
    bool usable(int u, int v) const {
        const std::size_t idx = slot(u, v);
        return blocked[idx] == 0 && !self_conflict[idx];
    }
    void push(int u, int v) {
        for (const auto& g : maps) ++blocked[slot(g[u], g[v])];
    }
    void pop(int u, int v) {
        for (const auto& g : maps) --blocked[slot(g[u], g[v])];
    }
};

} // namespace detail

// All Hamiltonian cycles of the digraph that start with the given anchor
// prefix and whose images under the permutation group are pairwise
// arc-disjoint from the cycle (and hence from each other, the action being
// a group).  The group may be passed with or without the identity.  Output
// order is the DFS order: lexicographic in the vertex sequence.
inline CycleSet find_invariant_cycles(const Digraph& g,
                                      const std::vector<std::vector<int>>& group,
                                      const std::vector<int>& anchor,
                                      long long budget = kDefaultSearchBudget) {
    const int t = g.order;
    if (anchor.empty() || anchor.size() > static_cast<std::size_t>(t))
        throw std::invalid_argument("anchor prefix must name between 1 and t vertices");
    for (int v : anchor)
        if (v < 0 || v >= t) throw std::invalid_argument("anchor vertex out of range");
    auto nonid = detail::drop_identity(group, t);
    for (const auto& p : nonid) detail::check_automorphism(p, g.adjacency);

    detail::ArcConflicts conflicts(nonid, t, /*undirected_arcs=*/false);
    std::vector<int> path;
    std::vector<char> used(t, 0);
    CycleSet out;
    out.directed = true;
    long long nodes = 0;

    // Seed the anchor prefix, validating its arcs like any others.
    for (std::size_t i = 0; i < anchor.size(); ++i) {
        int v = anchor[i];
        if (used[v]) throw std::invalid_argument("anchor repeats a vertex");
        if (i > 0) {
            int u = anchor[i - 1];
            if (!g.adjacency(u, v) || !conflicts.usable(u, v))
                return out; // anchor itself is blocked: empty result
            conflicts.push(u, v);
        }
        used[v] = 1;
        path.push_back(v);
    }

    auto dfs = [&](auto&& self) -> void {
        if (++nodes > budget) throw budget_error("cycle search exceeded its node budget");
        const int last = path.back();
        if (path.size() == static_cast<std::size_t>(t)) {
            const int first = path.front();
            if (g.adjacency(last, first) && conflicts.usable(last, first)) out.cycles.push_back(path);
            return;
        }
        for (int v = 0; v < t; ++v) {
            if (used[v] || !g.adjacency(last, v) || !conflicts.usable(last, v)) continue;
            conflicts.push(last, v);
            used[v] = 1;
            path.push_back(v);
            self(self);
            path.pop_back();
            used[v] = 0;
            conflicts.pop(last, v);
        }
    };
    dfs(dfs);
    return out;
}

// Vertex layout shared by the doubling construction on a tournament with
// r vertices: field points 0..r-1, then the hub vertex r, then the primed
// copies r+1..2r.
inline std::vector<int> doubled_translate_permutation(int r, int shift) {
    std::vector<int> p(2 * r + 1);
    for (int x = 0; x < r; ++x) p[x] = (x + shift) % r;
    p[r] = r;
    for (int x = 0; x < r; ++x) p[r + 1 + x] = r + 1 + (x + shift) % r;
    return p;
}

inline std::vector<std::vector<int>> doubled_translate_group(int r) {
    std::vector<std::vector<int>> g;
    for (int i = 0; i < r; ++i) g.push_back(doubled_translate_permutation(r, i));
    return g;
}

inline std::vector<int> doubled_multiplier_permutation(int r, int s) {
    std::vector<int> p(2 * r + 1);
    for (int x = 0; x < r; ++x) p[x] = static_cast<int>((static_cast<long long>(s) * x) % r);
    p[r] = r;
    for (int x = 0; x < r; ++x)
        p[r + 1 + x] = r + 1 + static_cast<int>((static_cast<long long>(s) * x) % r);
    return p;
}

// One subject per cycle; period p of the subject gets the cycle's p-th vertex.
inline Design cycles_to_design(const CycleSet& cs, int t) {
    if (cs.cycles.empty()) throw infeasible_error("no cycles to convert");
    std::vector<std::vector<int>> cells(t, std::vector<int>(cs.cycles.size()));
    for (std::size_t c = 0; c < cs.cycles.size(); ++c) {
        if (cs.cycles[c].size() != static_cast<std::size_t>(t))
            throw std::invalid_argument("cycle length must equal t");
        for (int p = 0; p < t; ++p) cells[p][c] = cs.cycles[c][p];
    }
    return Design(t, static_cast<int>(cs.cycles.size()), std::move(cells));
}

// One subject per (cycle, group element), cycle-major: the full orbit of
// each cycle under the permutation group, in the group's given order.
inline Design cycles_to_design_orbit(const CycleSet& cs,
                                     const std::vector<std::vector<int>>& group, int t) {
    if (cs.cycles.empty() || group.empty()) throw infeasible_error("no cycles to convert");
    CycleSet expanded;
    expanded.directed = cs.directed;
    for (const auto& cycle : cs.cycles)
        for (const auto& g : group) {
            std::vector<int> image(cycle.size());
            for (std::size_t p = 0; p < cycle.size(); ++p) image[p] = g.at(cycle[p]);
            expanded.cycles.push_back(std::move(image));
        }
    return cycles_to_design(expanded, t);
}

// Two subjects per cycle: the cycle as given, then its reversal around the
// same starting vertex (v1, vt, vt-1, ..., v2).
inline Design cycles_to_design_bidirectional(const CycleSet& cs, int t) {
    if (cs.cycles.empty()) throw infeasible_error("no cycles to convert");
    CycleSet expanded;
    expanded.directed = true;
    for (const auto& cycle : cs.cycles) {
        expanded.cycles.push_back(cycle);
        std::vector<int> rev;
        rev.push_back(cycle.front());
        for (std::size_t i = cycle.size(); i > 1; --i) rev.push_back(cycle[i - 1]);
        expanded.cycles.push_back(std::move(rev));
    }
    return cycles_to_design(expanded, t);
}

// 4x4 square lattice graph: vertices 4*row + col, joined when they share a
// row or a column.  Valency 6; every distinct pair has 2 common neighbours.
inline Graph lattice_graph_L2_4() {
    IntMatrix a(16, 16);
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j)
            if (i != j && (i / 4 == j / 4 || i % 4 == j % 4)) a(i, j) = 1;
    return Graph(std::move(a));
}

// An order-3 automorphism of the lattice graph admitting an invariant
// Hamiltonian decomposition.
inline std::vector<int> lattice_rotation() {
    std::vector<int> p(16);
    for (int i = 0; i < 16; ++i) p[i] = i;
    auto cycle3 = [&](int a, int b, int c) { p[a] = b; p[b] = c; p[c] = a; };
    cycle3(1, 2, 3);
    cycle3(4, 8, 12);
    cycle3(5, 10, 15);
    cycle3(6, 11, 13);
    cycle3(7, 9, 14);
    return p;
}

// Cayley graph on Z4 x Z4 (vertex 4a + b) with connection set
// {+-(1,0), +-(0,1), +-(1,1)}: same valency and common-neighbour count as
// the lattice graph but not isomorphic to it.
inline Graph shrikhande_graph() {
    IntMatrix a(16, 16);
    const int diffs[6][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
    for (int i = 0; i < 16; ++i)
        for (auto& d : diffs) {
            int j = 4 * ((i / 4 + d[0]) % 4) + (i % 4 + d[1]) % 4;
            a(i, j) = 1;
        }
    return Graph(std::move(a));
}

// Even-weight binary 5-tuples, joined when they differ in exactly two
// positions.  Vertex code 8*x1 + 4*x2 + 2*x3 + x4 (x5 is the parity bit).
// Valency 10; every distinct pair has 6 common neighbours.
inline Graph clebsch_graph() {
    auto bits = [](int code) {
        std::array<int, 5> x{};
        x[0] = (code >> 3) & 1;
        x[1] = (code >> 2) & 1;
        x[2] = (code >> 1) & 1;
        x[3] = code & 1;
        x[4] = (x[0] + x[1] + x[2] + x[3]) % 2;
        return x;
    };
    IntMatrix a(16, 16);
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) {
            if (i == j) continue;
            auto xi = bits(i), xj = bits(j);
            int dist = 0;
            for (int b = 0; b < 5; ++b) dist += xi[b] != xj[b];
            if (dist == 2) a(i, j) = 1;
        }
    return Graph(std::move(a));
}

// Coordinate rotation (x1,...,x5) -> (x2,...,x5,x1), an order-5
// automorphism of the Clebsch graph.
inline std::vector<int> clebsch_rotation() {
    std::vector<int> p(16);
    for (int code = 0; code < 16; ++code) {
        int x1 = (code >> 3) & 1, x2 = (code >> 2) & 1, x3 = (code >> 1) & 1, x4 = code & 1;
        int x5 = (x1 + x2 + x3 + x4) % 2;
        p[code] = 8 * x2 + 4 * x3 + 2 * x4 + x5;
    }
    return p;
}

struct CommonNeighbourReport {
    bool constant = false;
    long long count = 0;
};

// True when every pair of distinct vertices has the same number of common
// neighbours, i.e. A^2 has constant off-diagonal.
inline CommonNeighbourReport common_neighbour_check(const Graph& g) {
    CommonNeighbourReport rep;
    if (g.order < 2) {
        rep.constant = true;
        return rep;
    }
    IntMatrix sq = g.adjacency * g.adjacency;
    rep.count = sq(0, 1);
    for (int i = 0; i < g.order; ++i)
        for (int j = 0; j < g.order; ++j)
            if (i != j && sq(i, j) != rep.count) return rep;
    rep.constant = true;
    return rep;
}

// Backtracking graph-isomorphism search, small orders only: maps the
// unmapped vertex with the most already-mapped neighbours next, trying
// images in ascending order.  Returns a vertex bijection h with
// adjacency_G(u,v) == adjacency_H(h(u),h(v)), or nullopt.
inline std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
    const int t = g.order;
    if (h.order != t) return std::nullopt;
    std::vector<long long> dg(t, 0), dh(t, 0);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            dg[i] += g.adjacency(i, j);
            dh[i] += h.adjacency(i, j);
        }
    {
        auto sg = dg, sh = dh;
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh) return std::nullopt;
    }
    std::vector<int> map(t, -1);
    std::vector<char> taken(t, 0);
    auto dfs = [&](auto&& self, int placed) -> bool {
        if (placed == t) return true;
        int best = -1, best_score = -1;
        for (int u = 0; u < t; ++u) {
            if (map[u] >= 0) continue;
            int score = 0;
            for (int v = 0; v < t; ++v)
                if (map[v] >= 0 && g.adjacency(u, v)) ++score;
            if (score > best_score) {
                best_score = score;
                best = u;
            }
        }
        for (int img = 0; img < t; ++img) {
            if (taken[img] || dh[img] != dg[best]) continue;
            bool ok = true;
            for (int v = 0; v < t && ok; ++v)
                if (map[v] >= 0 && g.adjacency(best, v) != h.adjacency(img, map[v])) ok = false;
            if (!ok) continue;
            map[best] = img;
            taken[img] = 1;
            if (self(self, placed + 1)) return true;
            map[best] = -1;
            taken[img] = 0;
        }
        return false;
    };
    if (dfs(dfs, 0)) return map;
    return std::nullopt;
}

namespace detail {

// Enumerates Hamiltonian cycles of g in canonical form (start at vertex 0,
// second vertex smaller than last) avoiding banned edges and, when
// `conflicts` is given, staying arc-disjoint from all images of the partial
// cycle.  Calls on_cycle for each complete candidate; a true return stops
// the enumeration and propagates.
template <typename Fn>
bool enumerate_hamiltonian_cycles(const Graph& g, const std::vector<char>& banned,
                                  ArcConflicts* conflicts, long long& nodes, long long budget,
                                  Fn&& on_cycle) {
    const int t = g.order;
    auto edge_ok = [&](int u, int v) {
        if (!g.adjacency(u, v)) return false;
        int lo = std::min(u, v), hi = std::max(u, v);
        if (banned[static_cast<std::size_t>(lo) * t + hi]) return false;
        if (conflicts && !conflicts->usable(u, v)) return false;
        return true;
    };
    std::vector<int> path{0};
    std::vector<char> used(t, 0);
    used[0] = 1;
    auto dfs = [&](auto&& self) -> bool {
        if (++nodes > budget) throw budget_error("decomposition search exceeded its node budget");
        const int last = path.back();
        if (path.size() == static_cast<std::size_t>(t)) {
            if (path[1] > path.back()) return false; // canonical direction only
            if (!edge_ok(last, 0)) return false;
            if (conflicts) conflicts->push(last, 0);
            bool done = on_cycle(path);
            if (conflicts) conflicts->pop(last, 0);
            return done;
        }
        for (int v = 1; v < t; ++v) {
            if (used[v] || !edge_ok(last, v)) continue;
            if (conflicts) conflicts->push(last, v);
            used[v] = 1;
            path.push_back(v);
            if (self(self)) return true;
            path.pop_back();
            used[v] = 0;
            if (conflicts) conflicts->pop(last, v);
        }
        return false;
    };
    return dfs(dfs);
}

} // namespace detail

// Partition of the edge set of a regular graph of valency 2c into c
// Hamiltonian cycles, found by backtracking over cycles (each level
// enumerates candidate cycles of what remains).  With an automorphism pi
// of order m, the decomposition is built from c/m seed cycles that are
// edge-disjoint from all their pi-power images, and each seed contributes
// its full orbit.  The returned decomposition is re-verified edge-by-edge.
inline CycleSet hamiltonian_decomposition(const Graph& g, const std::vector<int>* pi = nullptr,
                                          long long budget = kDefaultSearchBudget) {
    const int t = g.order;
    if (t < 3) throw infeasible_error("decomposition needs at least three vertices");
    long long valency = 0;
    for (int j = 0; j < t; ++j) valency += g.adjacency(0, j);
    for (int i = 0; i < t; ++i) {
        long long vi = 0;
        for (int j = 0; j < t; ++j) vi += g.adjacency(i, j);
        if (vi != valency) throw infeasible_error("decomposition needs a regular graph");
    }
    if (valency <= 0 || valency % 2 != 0)
        throw infeasible_error("decomposition needs positive even valency");
    const long long c = valency / 2;

    CycleSet out;
    out.directed = false;
    long long nodes = 0;
    std::vector<char> banned(static_cast<std::size_t>(t) * t, 0);
    auto mark_cycle = [&](const std::vector<int>& cyc, char flag) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
            banned[static_cast<std::size_t>(std::min(u, v)) * t + std::max(u, v)] = flag;
        }
    };

    bool found = false;
    if (pi) {
        std::vector<std::vector<int>> powers; // pi, pi^2, ... excluding identity
        std::vector<int> id(t), cur = *pi;
        for (int i = 0; i < t; ++i) id[i] = i;
        while (cur != id) {
            detail::check_automorphism(cur, g.adjacency);
            powers.push_back(cur);
            std::vector<int> next(t);
            for (int i = 0; i < t; ++i) next[i] = (*pi)[cur[i]];
            cur = std::move(next);
        }
        const long long m = static_cast<long long>(powers.size()) + 1;
        if (c % m != 0)
            throw infeasible_error("automorphism order must divide the cycle count");
        const long long seeds = c / m;

        auto expand_orbit = [&](const std::vector<int>& cycle) {
            std::vector<std::vector<int>> orbit{cycle};
            for (const auto& p : powers) {
                std::vector<int> img(t);
                for (int i = 0; i < t; ++i) img[i] = p[cycle[i]];
                std::size_t z = 0;
                while (img[z] != 0) ++z;
                std::vector<int> rot(t);
                for (int i = 0; i < t; ++i) rot[i] = img[(z + i) % t];
                if (rot[1] > rot[t - 1]) std::reverse(rot.begin() + 1, rot.end());
                orbit.push_back(std::move(rot));
            }
            return orbit;
        };

        // Earlier orbits are pi-invariant edge sets, so a seed avoiding the
        // banned edges has its whole orbit avoiding them too.
        auto level = [&](auto&& self, long long seed) -> bool {
            if (seed == seeds) return true;
            detail::ArcConflicts conflicts(powers, t, /*undirected_arcs=*/true);
            return detail::enumerate_hamiltonian_cycles(
                g, banned, &conflicts, nodes, budget, [&](const std::vector<int>& cycle) {
                    auto orbit = expand_orbit(cycle);
                    for (const auto& cyc : orbit) mark_cycle(cyc, 1);
                    std::size_t base = out.cycles.size();
                    for (const auto& cyc : orbit) out.cycles.push_back(cyc);
                    if (self(self, seed + 1)) return true;
                    out.cycles.resize(base);
                    for (const auto& cyc : orbit) mark_cycle(cyc, 0);
                    return false;
                });
        };
        found = level(level, 0);
    } else {
        auto level = [&](auto&& self, long long step) -> bool {
            if (step == c) return true;
            return detail::enumerate_hamiltonian_cycles(
                g, banned, nullptr, nodes, budget, [&](const std::vector<int>& cycle) {
                    mark_cycle(cycle, 1);
                    out.cycles.push_back(cycle);
                    if (self(self, step + 1)) return true;
                    out.cycles.pop_back();
                    mark_cycle(cycle, 0);
                    return false;
                });
        };
        found = level(level, 0);
    }
    if (!found) throw infeasible_error("no Hamiltonian decomposition found");

    // Recount: the cycles must cover every edge exactly once.
    IntMatrix cover(t, t);
    for (const auto& cyc : out.cycles) {
        std::vector<char> seen(t, 0);
        for (int v : cyc) {
            if (seen[v]) throw internal_error("decomposition cycle repeats a vertex");
            seen[v] = 1;
        }
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
            ++cover(u, v);
            ++cover(v, u);
        }
    }
    if (cover != g.adjacency) throw internal_error("decomposition does not cover each edge once");
    return out;
}

} // namespace cwbd
