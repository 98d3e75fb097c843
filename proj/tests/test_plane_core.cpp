#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "planemf/errors.hpp"
#include "planemf/generators.hpp"
#include "planemf/plane_graph.hpp"

using namespace planemf;

namespace {

PlaneGraph triangle() {
    // any rotation of a triangle is planar
    return build_plane_graph(3, {{0, 1}, {1, 2}, {2, 0}}, {{0, 5}, {2, 1}, {4, 3}}, 0);
}

PlaneGraph k4_embedded() {
    std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}};
    std::vector<std::vector<int>> rot = {{0, 6, 5}, {2, 8, 1}, {4, 10, 3}, {11, 7, 9}};
    // outer face: the one bounded by the three hull edges e0, e1, e2
    PlaneGraph pg = build_plane_graph(4, edges, rot, 0);
    for (int f = 0; f < pg.num_faces(); ++f) {
        std::set<int> es;
        for (int d : pg.faces[f]) es.insert(d / 2);
        if (es == std::set<int>{0, 1, 2}) return build_plane_graph(4, edges, rot, f);
    }
    FAIL("hull face not found");
    return pg;
}

int face_with_edge_set(const PlaneGraph& pg, const std::set<int>& want) {
    for (int f = 0; f < pg.num_faces(); ++f) {
        std::set<int> es;
        for (int d : pg.faces[f]) es.insert(d / 2);
        if (es == want) return f;
    }
    return -1;
}

std::vector<std::vector<int>> all_simple_circuits(const PlaneGraph& pg) {
    // subsets of edges that are connected with all degrees two
    std::vector<std::vector<int>> out;
    int m = pg.num_edges();
    REQUIRE(m <= 16);
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> cyc;
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1) cyc.push_back(e);
        std::vector<int> deg(pg.num_vertices, 0);
        for (int e : cyc) {
            deg[pg.edges[e].first]++;
            deg[pg.edges[e].second]++;
        }
        bool ok = true;
        for (int v = 0; v < pg.num_vertices; ++v)
            if (deg[v] != 0 && deg[v] != 2) ok = false;
        if (!ok) continue;
        try {
            shore_from_cycle(pg, dual(pg), cyc);
            out.push_back(cyc);
        } catch (const not_a_circuit&) {
        }
    }
    return out;
}

}  // namespace

TEST_CASE("triangle has two faces") {
    PlaneGraph pg = triangle();
    CHECK(pg.num_faces() == 2);
    for (const auto& f : pg.faces) CHECK(f.size() == 3);
}

TEST_CASE("embedded K4 has four faces") {
    PlaneGraph pg = k4_embedded();
    CHECK(pg.num_faces() == 4);
}

TEST_CASE("K5 rotations violate the Euler gate") {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) edges.push_back({i, j});
    // several rotations, none planar: K5 has genus one
    for (int variant = 0; variant < 4; ++variant) {
        std::vector<std::vector<int>> rot(5);
        for (int e = 0; e < 10; ++e) {
            rot[edges[e].first].push_back(2 * e);
            rot[edges[e].second].push_back(2 * e + 1);
        }
        for (int v = 0; v < 5; ++v)
            std::rotate(rot[v].begin(), rot[v].begin() + (variant % rot[v].size()), rot[v].end());
        if (variant == 3) std::swap(rot[0][0], rot[0][2]);
        auto faces = trace_faces(5, edges, rot);
        CHECK(5 - 10 + static_cast<int>(faces.size()) < 2);
        CHECK_THROWS_AS(build_plane_graph(5, edges, rot, 0), euler_violation&);
    }
}

TEST_CASE("build rejects malformed input") {
    CHECK_THROWS_AS(build_plane_graph(2, {{0, 0}}, {{0, 1}, {}}, 0), malformed_rotation&);
    // two disjoint triangles: rotation fine, graph disconnected
    std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
    std::vector<std::vector<int>> rot = {{0, 5}, {2, 1}, {4, 3}, {6, 11}, {8, 7}, {10, 9}};
    CHECK_THROWS_AS(build_plane_graph(6, edges, rot, 0), disconnected_graph&);
    // dart listed twice / missing
    CHECK_THROWS_AS(build_plane_graph(3, {{0, 1}, {1, 2}, {2, 0}}, {{0, 5, 0}, {2, 1}, {4, 3}},
                                      0),
                    malformed_rotation&);
    CHECK_THROWS_AS(build_plane_graph(3, {{0, 1}, {1, 2}, {2, 0}}, {{5, 0}, {2}, {4, 3}}, 0),
                    malformed_rotation&);
    CHECK_THROWS_AS(build_plane_graph(3, {{0, 1}, {1, 2}, {2, 0}}, {{0, 5}, {2, 1}, {3, 4}}, 9),
                    bad_parameter&);
}

TEST_CASE("dual of the triangle is a double vertex with three parallel edges") {
    PlaneGraph pg = triangle();
    DualMap dm = dual(pg);
    CHECK(dm.num_faces == 2);
    CHECK(dm.dual_edges.size() == 3);
    for (auto [a, b] : dm.dual_edges) CHECK(a != b);
    // dual vertex degree equals face length
    std::vector<int> deg(2, 0);
    for (auto [a, b] : dm.dual_edges) {
        deg[a]++;
        deg[b]++;
    }
    CHECK(deg[0] == static_cast<int>(pg.faces[0].size()));
    CHECK(deg[1] == static_cast<int>(pg.faces[1].size()));
}

TEST_CASE("dual counts for the k=3 ladder instance") {
    Instance inst = gen_gk(3);
    CHECK(inst.plane.num_vertices == 6);
    CHECK(inst.plane.num_edges() == 8);
    DualMap dm = dual(inst.plane);
    CHECK(dm.num_faces == 4);
    CHECK(dm.dual_edges.size() == 8);
}

TEST_CASE("dual vertex degrees equal face lengths on K4") {
    PlaneGraph pg = k4_embedded();
    DualMap dm = dual(pg);
    std::vector<int> deg(dm.num_faces, 0);
    for (auto [a, b] : dm.dual_edges) {
        deg[a]++;
        deg[b]++;
    }
    for (int f = 0; f < pg.num_faces(); ++f)
        CHECK(deg[f] == static_cast<int>(pg.faces[f].size()));
}

TEST_CASE("double dual of K4 is isomorphic to K4") {
    PlaneGraph pg = k4_embedded();
    PlaneGraph dd = dual_plane_graph(dual_plane_graph(pg));
    REQUIRE(dd.num_vertices == pg.num_vertices);
    REQUIRE(dd.num_edges() == pg.num_edges());
    // brute-force isomorphism over vertex bijections
    std::vector<int> perm(pg.num_vertices);
    std::iota(perm.begin(), perm.end(), 0);
    auto edge_multiset = [](const PlaneGraph& g, const std::vector<int>* p) {
        std::multiset<std::pair<int, int>> ms;
        for (auto [u, v] : g.edges) {
            int a = p ? (*p)[u] : u, b = p ? (*p)[v] : v;
            ms.insert({std::min(a, b), std::max(a, b)});
        }
        return ms;
    };
    auto target = edge_multiset(pg, nullptr);
    bool iso = false;
    do {
        if (edge_multiset(dd, &perm) == target) iso = true;
    } while (!iso && std::next_permutation(perm.begin(), perm.end()));
    CHECK(iso);
}

TEST_CASE("shore of a single inner face boundary is that face") {
    PlaneGraph pg = k4_embedded();
    DualMap dm = dual(pg);
    int f = face_with_edge_set(pg, {0, 3, 4});  // triangle 0-1-3
    REQUIRE(f >= 0);
    Shore s = shore_from_cycle(pg, dm, {0, 3, 4});
    CHECK(s.faces == std::vector<int>{f});
}

TEST_CASE("shore of the outer boundary is every inner face") {
    PlaneGraph pg = k4_embedded();
    DualMap dm = dual(pg);
    Shore s = shore_from_cycle(pg, dm, {0, 1, 2});
    CHECK(s.faces.size() == 3);
    CHECK(!s.contains(pg.outer_face));
}

TEST_CASE("shore_from_cycle rejects non-circuits") {
    PlaneGraph pg = k4_embedded();
    DualMap dm = dual(pg);
    CHECK_THROWS_AS(shore_from_cycle(pg, dm, {0, 1}), not_a_circuit&);
    CHECK_THROWS_AS(shore_from_cycle(pg, dm, {}), not_a_circuit&);
    CHECK_THROWS_AS(shore_from_cycle(pg, dm, {0, 0}), not_a_circuit&);
}

TEST_CASE("ladder circuit encloses its quad and round-trips") {
    Instance inst = gen_gk(4);
    DualMap dm = dual(inst.plane);
    int k = 4;
    // circuit b1 a1 a2 b2 b1: rung1, spine1, rung2, demand b1b2
    std::vector<int> cyc = {0, k, 1, 2 * k - 1};
    Shore s = shore_from_cycle(inst.plane, dm, cyc);
    auto back = cut_edges(dm, s);
    std::sort(back.begin(), back.end());
    std::vector<int> want = cyc;
    std::sort(want.begin(), want.end());
    CHECK(back == want);
}

TEST_CASE("cut edges of shore and complement agree") {
    PlaneGraph pg = k4_embedded();
    DualMap dm = dual(pg);
    Shore s = shore_from_cycle(pg, dm, {0, 3, 4});
    auto cut = cut_edges(dm, s);
    std::vector<bool> comp(dm.num_faces, true);
    for (int f : s.faces) comp[f] = false;
    auto cut2 = cut_edges_of_set(dm, comp);
    CHECK(cut == cut2);
    CHECK(cut.size() == 3);
}

TEST_CASE("every simple circuit round-trips through its shore") {
    for (const Instance& inst : {gen_gk(3), gen_c4_2k2_overline()}) {
        DualMap dm = dual(inst.plane);
        auto circuits = all_simple_circuits(inst.plane);
        CHECK(circuits.size() > 0);
        for (const auto& cyc : circuits) {
            Shore s = shore_from_cycle(inst.plane, dm, cyc);
            auto back = cut_edges(dm, s);
            std::sort(back.begin(), back.end());
            std::vector<int> want = cyc;
            std::sort(want.begin(), want.end());
            CHECK(back == want);
        }
    }
}

TEST_CASE("shore set operations") {
    Shore a{{1, 2, 3}}, b{{2, 3, 4}}, c{{1, 2}}, d{{4, 5}};
    CHECK(a.crosses(b));
    CHECK_FALSE(a.crosses(c));
    CHECK(c.subset_of(a));
    CHECK(a.disjoint_from(d));
    CHECK_FALSE(a.crosses(d));
    CHECK(c < a);
}

TEST_CASE("face traversal partitions the darts") {
    for (const Instance& inst : {gen_gk(5), gen_c4_2k2_overline(), gen_fuzz(11)}) {
        const PlaneGraph& pg = inst.plane;
        std::vector<int> count(2 * pg.num_edges(), 0);
        for (const auto& f : pg.faces)
            for (int d : f) count[d]++;
        for (int c : count) CHECK(c == 1);
        CHECK(pg.num_vertices - pg.num_edges() + pg.num_faces() == 2);
    }
}
