#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "cwbd/constructions.hpp"
#include "cwbd/design.hpp"
#include "cwbd/finite_field.hpp"
#include "cwbd/graph_search.hpp"
#include "support/figures.hpp"

using namespace cwbd;

namespace {

// Multiset of undirected edges covered by a cycle set.
std::multiset<std::pair<int, int>> edge_cover(const CycleSet& cs) {
    std::multiset<std::pair<int, int>> edges;
    for (const auto& cyc : cs.cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
            edges.insert({std::min(u, v), std::max(u, v)});
        }
    }
    return edges;
}

} // namespace

TEST_CASE("quadratic-residue tournaments and their recognition", "[graph]") {
    Digraph p7 = paley_tournament(Field::of_order(7));
    // Arc i -> j iff j - i is a nonzero square mod 7 ({1,2,4}).
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            int diff = ((j - i) % 7 + 7) % 7;
            long long expect = (diff == 1 || diff == 2 || diff == 4) ? 1 : 0;
            REQUIRE(p7.adjacency(i, j) == expect);
        }
    DrtReport rep = drt_check(p7);
    REQUIRE(rep.is_drt);
    REQUIRE(rep.phi == 2);
    REQUIRE(rep.xi == 1);

    REQUIRE_THROWS_AS(paley_tournament(Field::of_order(5)), infeasible_error);
    REQUIRE(drt_check(paley_tournament(Field::of_order(11))).is_drt);
    REQUIRE(drt_check(paley_tournament(Field::of_order(19))).is_drt);
}

TEST_CASE("the doubled tournament pattern is verified doubly regular", "[graph]") {
    IntMatrix doubled = double_tournament(paley_tournament(Field::of_order(7)).adjacency);
    REQUIRE(doubled == figures::doubled_seven_pattern());
    DrtReport rep = drt_check(Digraph(doubled));
    REQUIRE(rep.is_drt);
    REQUIRE(rep.phi == 4);
    REQUIRE(rep.xi == 3);
}

TEST_CASE("translate-invariant cycle search on the fifteen-vertex tournament", "[graph]") {
    Digraph d(double_tournament(paley_tournament(Field::of_order(7)).adjacency));
    auto group = doubled_translate_group(7);
    REQUIRE(group.size() == 7);
    CycleSet cycles = find_invariant_cycles(d, group, {7, 0}, kDefaultSearchBudget);
    REQUIRE(cycles.cycles.size() == 120);
    for (const auto& cyc : cycles.cycles) {
        REQUIRE(cyc.size() == 15);
        REQUIRE(cyc[0] == 7);
        REQUIRE(cyc[1] == 0);
        // every consecutive pair is an arc, including the closing one
        for (std::size_t i = 0; i < cyc.size(); ++i)
            REQUIRE(d.adjacency(cyc[i], cyc[(i + 1) % 15]) == 1);
        // the cycle is arc-disjoint from each nonidentity translate image
        std::set<std::pair<int, int>> arcs;
        for (std::size_t i = 0; i < cyc.size(); ++i)
            arcs.insert({cyc[i], cyc[(i + 1) % 15]});
        for (const auto& g : group) {
            bool identity = true;
            for (std::size_t v = 0; v < g.size(); ++v)
                if (g[v] != static_cast<int>(v)) { identity = false; break; }
            if (identity) continue;
            for (const auto& [u, v] : arcs) REQUIRE(arcs.count({g[u], g[v]}) == 0);
        }
    }
}

TEST_CASE("a too-small budget raises the budget error", "[graph]") {
    Digraph d(double_tournament(paley_tournament(Field::of_order(7)).adjacency));
    REQUIRE_THROWS_AS(find_invariant_cycles(d, doubled_translate_group(7), {7, 0}, 10),
                      budget_error);
}

TEST_CASE("anchored search without a group enumerates plain cycles", "[graph]") {
    // The directed 3-cycle has exactly one Hamiltonian cycle from anchor 0.
    IntMatrix a(3, 3);
    a(0, 1) = a(1, 2) = a(2, 0) = 1;
    CycleSet cs = find_invariant_cycles(Digraph(a), {}, {0}, 1000);
    REQUIRE(cs.cycles.size() == 1);
    REQUIRE(cs.cycles[0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("cycle sets convert to designs", "[graph]") {
    CycleSet cs;
    cs.directed = true;
    cs.cycles = {{0, 1, 2}, {0, 2, 1}};
    Design d = cycles_to_design(cs, 3);
    REQUIRE(d.t == 3);
    REQUIRE(d.n == 2);
    REQUIRE(d.at(0, 0) == 0);
    REQUIRE(d.at(1, 0) == 1);
    REQUIRE(d.at(2, 0) == 2);

    Design both = cycles_to_design_bidirectional(cs, 3);
    REQUIRE(both.n == 4);
    // reversed copy of (0,1,2) is (0,2,1)
    REQUIRE(both.at(0, 2) == 0);
    REQUIRE(both.at(1, 2) == 2);
    REQUIRE(both.at(2, 2) == 1);
}

TEST_CASE("orbit expansion lays out group images cycle-major", "[graph]") {
    CycleSet cs;
    cs.cycles = {{0, 1, 2}};
    std::vector<std::vector<int>> group = {{0, 1, 2}, {1, 2, 0}}; // identity and a rotation
    Design d = cycles_to_design_orbit(cs, group, 3);
    REQUIRE(d.n == 2);
    REQUIRE(d.at(0, 1) == 1);
    REQUIRE(d.at(1, 1) == 2);
    REQUIRE(d.at(2, 1) == 0);
}

TEST_CASE("named strongly regular graphs", "[graph]") {
    Graph l24 = lattice_graph_L2_4();
    Graph shr = shrikhande_graph();
    Graph cle = clebsch_graph();

    for (const Graph* g : {&l24, &shr}) {
        REQUIRE(g->order == 16);
        for (int v = 0; v < 16; ++v) {
            long long deg = 0;
            for (int u = 0; u < 16; ++u) deg += g->adjacency(v, u);
            REQUIRE(deg == 6);
        }
        REQUIRE(common_neighbour_check(*g).constant);
        REQUIRE(common_neighbour_check(*g).count == 2);
    }
    REQUIRE(cle.order == 16);
    for (int v = 0; v < 16; ++v) {
        long long deg = 0;
        for (int u = 0; u < 16; ++u) deg += cle.adjacency(v, u);
        REQUIRE(deg == 10);
    }
    REQUIRE(common_neighbour_check(cle).constant);
    REQUIRE(common_neighbour_check(cle).count == 6);

    // Same parameters, yet not isomorphic.
    REQUIRE_FALSE(find_isomorphism(l24, shr).has_value());
    // Sanity: a graph is isomorphic to a relabelling of itself.
    std::vector<int> relabel(16);
    for (int i = 0; i < 16; ++i) relabel[i] = (i * 3 + 5) % 16;
    IntMatrix perm(16, 16);
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) perm(relabel[i], relabel[j]) = l24.adjacency(i, j);
    REQUIRE(find_isomorphism(l24, Graph(perm)).has_value());
}

TEST_CASE("catalogued rotations are automorphisms of their graphs", "[graph]") {
    detail::check_automorphism(lattice_rotation(), lattice_graph_L2_4().adjacency);
    detail::check_automorphism(clebsch_rotation(), clebsch_graph().adjacency);
}

TEST_CASE("hamiltonian decompositions cover each edge exactly once", "[graph]") {
    SECTION("plain search on the complete graph K5") {
        IntMatrix a = IntMatrix::ones(5, 5) - IntMatrix::identity(5);
        CycleSet cs = hamiltonian_decomposition(Graph(a));
        REQUIRE(cs.cycles.size() == 2);
        auto cover = edge_cover(cs);
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v) REQUIRE(cover.count({u, v}) == 1);
    }
    SECTION("rotation-invariant decomposition of the lattice graph") {
        auto pi = lattice_rotation();
        CycleSet cs = hamiltonian_decomposition(lattice_graph_L2_4(), &pi);
        REQUIRE(cs.cycles.size() == 3);
        auto cover = edge_cover(cs);
        const Graph g = lattice_graph_L2_4();
        for (int u = 0; u < 16; ++u)
            for (int v = u + 1; v < 16; ++v)
                REQUIRE(cover.count({u, v}) == static_cast<std::size_t>(g.adjacency(u, v)));
    }
    SECTION("plain decomposition of the shrikhande graph") {
        CycleSet cs = hamiltonian_decomposition(shrikhande_graph());
        REQUIRE(cs.cycles.size() == 3);
        auto cover = edge_cover(cs);
        const Graph g = shrikhande_graph();
        for (int u = 0; u < 16; ++u)
            for (int v = u + 1; v < 16; ++v)
                REQUIRE(cover.count({u, v}) == static_cast<std::size_t>(g.adjacency(u, v)));
    }
    SECTION("rotation-invariant decomposition of the clebsch graph") {
        auto pi = clebsch_rotation();
        CycleSet cs = hamiltonian_decomposition(clebsch_graph(), &pi);
        REQUIRE(cs.cycles.size() == 5);
        auto cover = edge_cover(cs);
        const Graph g = clebsch_graph();
        for (int u = 0; u < 16; ++u)
            for (int v = u + 1; v < 16; ++v)
                REQUIRE(cover.count({u, v}) == static_cast<std::size_t>(g.adjacency(u, v)));
    }
    SECTION("an odd-valency graph cannot decompose") {
        IntMatrix k4 = IntMatrix::ones(4, 4) - IntMatrix::identity(4);
        REQUIRE_THROWS_AS(hamiltonian_decomposition(Graph(k4)), infeasible_error);
    }
}

TEST_CASE("decomposition designs classify as weakly balanced", "[graph]") {
    CycleSet cs = hamiltonian_decomposition(shrikhande_graph());
    Design d = cycles_to_design_bidirectional(cs, 16);
    Classification c = classify(d);
    REQUIRE(c.kind == DesignKind::cwbd);
    REQUIRE(c.cwbd_type == CwbdType::type_ii);
    REQUIRE(c.uniform_on_subjects);
    REQUIRE(c.connected);
}
