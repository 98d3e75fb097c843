#include "planemf/plane_graph.hpp"

#include <algorithm>
#include <string>

#include "planemf/errors.hpp"
#include "planemf/graph_util.hpp"

namespace planemf {

bool Shore::operator<(const Shore& o) const {
    if (faces.size() != o.faces.size()) return faces.size() < o.faces.size();
    return faces < o.faces;
}

bool Shore::contains(int face) const {
    return std::binary_search(faces.begin(), faces.end(), face);
}

bool Shore::subset_of(const Shore& o) const {
    return std::includes(o.faces.begin(), o.faces.end(), faces.begin(), faces.end());
}

bool Shore::disjoint_from(const Shore& o) const {
    auto it = faces.begin();
    auto jt = o.faces.begin();
    while (it != faces.end() && jt != o.faces.end()) {
        if (*it == *jt) return false;
        if (*it < *jt) ++it; else ++jt;
    }
    return true;
}

bool Shore::crosses(const Shore& o) const {
    return !disjoint_from(o) && !subset_of(o) && !o.subset_of(*this);
}

std::vector<std::vector<int>> trace_faces(int num_vertices,
                                          const std::vector<std::pair<int, int>>& edges,
                                          const std::vector<std::vector<int>>& rotation) {
    int num_darts = 2 * static_cast<int>(edges.size());
    // successor of each dart within the rotation at its tail
    std::vector<int> rot_next(num_darts, -1);
    for (int v = 0; v < num_vertices; ++v) {
        const auto& rot = rotation[v];
        for (size_t i = 0; i < rot.size(); ++i)
            rot_next[rot[i]] = rot[(i + 1) % rot.size()];
    }
    std::vector<std::vector<int>> faces;
    std::vector<bool> seen(num_darts, false);
    for (int d0 = 0; d0 < num_darts; ++d0) {
        if (seen[d0]) continue;
        std::vector<int> cycle;
        int d = d0;
        do {
            seen[d] = true;
            cycle.push_back(d);
            d = rot_next[d ^ 1];  // reverse, then successor in rotation
        } while (d != d0);
        faces.push_back(std::move(cycle));
    }
    return faces;
}

PlaneGraph build_plane_graph(int num_vertices, std::vector<std::pair<int, int>> edges,
                             std::vector<std::vector<int>> rotation, int outer_face) {
    if (num_vertices <= 0) throw bad_parameter("graph needs at least one vertex");
    int m = static_cast<int>(edges.size());
    for (int e = 0; e < m; ++e) {
        auto [u, v] = edges[e];
        if (u < 0 || u >= num_vertices || v < 0 || v >= num_vertices)
            throw malformed_rotation("edge " + std::to_string(e) + " has endpoint out of range");
        if (u == v)
            throw malformed_rotation("loop edge " + std::to_string(e) + " not allowed");
    }
    if (static_cast<int>(rotation.size()) != num_vertices)
        throw malformed_rotation("rotation must list every vertex");

    // every dart must appear exactly once, at its tail vertex
    std::vector<int> seen_at(2 * m, -1);
    for (int v = 0; v < num_vertices; ++v) {
        for (int d : rotation[v]) {
            if (d < 0 || d >= 2 * m) throw malformed_rotation("dart id out of range");
            if (seen_at[d] != -1) throw malformed_rotation("dart listed twice");
            seen_at[d] = v;
        }
    }
    for (int d = 0; d < 2 * m; ++d) {
        int u = (d & 1) ? edges[d / 2].second : edges[d / 2].first;
        if (seen_at[d] != u)
            throw malformed_rotation("dart " + std::to_string(d) + " missing from rotation of its tail");
    }

    auto comp = connected_components(num_vertices, edges);
    for (int v = 0; v < num_vertices; ++v)
        if (comp[v] != 0) throw disconnected_graph("graph is not connected");

    PlaneGraph pg;
    pg.num_vertices = num_vertices;
    pg.edges = std::move(edges);
    pg.rotation = std::move(rotation);
    pg.faces = trace_faces(num_vertices, pg.edges, pg.rotation);
    int f = pg.num_faces();
    if (num_vertices - m + f != 2)
        throw euler_violation("rotation is not planar: V - E + F = " +
                              std::to_string(num_vertices - m + f));
    if (outer_face < 0 || outer_face >= f) throw bad_parameter("outer face id out of range");
    pg.outer_face = outer_face;
    pg.face_of_dart.assign(2 * m, -1);
    for (int fi = 0; fi < f; ++fi)
        for (int d : pg.faces[fi]) pg.face_of_dart[d] = fi;
    return pg;
}

DualMap dual(const PlaneGraph& pg) {
    DualMap dm;
    dm.num_faces = pg.num_faces();
    dm.dual_edges.reserve(pg.num_edges());
    for (int e = 0; e < pg.num_edges(); ++e)
        dm.dual_edges.push_back({pg.face_of_dart[2 * e], pg.face_of_dart[2 * e + 1]});
    return dm;
}

PlaneGraph dual_plane_graph(const PlaneGraph& pg) {
    DualMap dm = dual(pg);
    std::vector<std::pair<int, int>> dedges = dm.dual_edges;
    // dual dart d has tail face_of_dart[d], so the rotation around a dual
    // vertex is exactly the primal face cycle
    std::vector<std::vector<int>> rot(dm.num_faces);
    for (int fi = 0; fi < pg.num_faces(); ++fi) rot[fi] = pg.faces[fi];
    return build_plane_graph(dm.num_faces, std::move(dedges), std::move(rot), 0);
}

Shore make_shore(const PlaneGraph& pg, std::vector<int> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    if (!faces.empty() && (faces.front() < 0 || faces.back() >= pg.num_faces()))
        throw bad_parameter("face id out of range in shore");
    bool has_outer = std::binary_search(faces.begin(), faces.end(), pg.outer_face);
    if (has_outer) {
        std::vector<int> complement;
        complement.reserve(pg.num_faces() - faces.size());
        size_t i = 0;
        for (int f = 0; f < pg.num_faces(); ++f) {
            if (i < faces.size() && faces[i] == f) { ++i; continue; }
            complement.push_back(f);
        }
        faces = std::move(complement);
    }
    if (faces.empty()) throw bad_parameter("shore must be a proper nonempty face set");
    return Shore{std::move(faces)};
}

Shore shore_from_cycle(const PlaneGraph& pg, const DualMap& dm, const std::vector<int>& cycle) {
    // circuit check: the edge set must induce a connected subgraph with all
    // degrees exactly two
    if (cycle.empty()) throw not_a_circuit("empty edge set");
    std::vector<int> deg(pg.num_vertices, 0);
    std::vector<bool> in_cycle(pg.num_edges(), false);
    for (int e : cycle) {
        if (e < 0 || e >= pg.num_edges()) throw not_a_circuit("edge id out of range");
        if (in_cycle[e]) throw not_a_circuit("repeated edge");
        in_cycle[e] = true;
        deg[pg.edges[e].first]++;
        deg[pg.edges[e].second]++;
    }
    for (int v = 0; v < pg.num_vertices; ++v)
        if (deg[v] != 0 && deg[v] != 2) throw not_a_circuit("vertex degree not two on cycle");
    {
        std::vector<std::pair<int, int>> sub;
        std::vector<int> verts;
        for (int e : cycle) {
            verts.push_back(pg.edges[e].first);
            verts.push_back(pg.edges[e].second);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        std::vector<int> idx(pg.num_vertices, -1);
        for (size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = static_cast<int>(i);
        for (int e : cycle) sub.push_back({idx[pg.edges[e].first], idx[pg.edges[e].second]});
        auto comp = connected_components(static_cast<int>(verts.size()), sub);
        for (int c : comp)
            if (c != 0) throw not_a_circuit("cycle edges not connected");
    }

    // components of the dual with the circuit's dual edges removed
    DisjointSets dsu(dm.num_faces);
    for (int e = 0; e < pg.num_edges(); ++e) {
        if (in_cycle[e]) continue;
        dsu.unite(dm.dual_edges[e].first, dm.dual_edges[e].second);
    }
    int outer_root = dsu.find(pg.outer_face);
    std::vector<int> inside;
    for (int f = 0; f < dm.num_faces; ++f)
        if (dsu.find(f) != outer_root) inside.push_back(f);
    // a simple circuit in a connected plane graph separates the dual in two
    {
        std::vector<bool> root_seen(dm.num_faces, false);
        int roots = 0;
        for (int f = 0; f < dm.num_faces; ++f) {
            int r = dsu.find(f);
            if (!root_seen[r]) { root_seen[r] = true; ++roots; }
        }
        if (roots != 2) throw not_a_circuit("edge set does not bound a disc");
    }
    return Shore{std::move(inside)};
}

std::vector<int> cut_edges_of_set(const DualMap& dm, const std::vector<bool>& in_set) {
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(dm.dual_edges.size()); ++e) {
        auto [a, b] = dm.dual_edges[e];
        if (in_set[a] != in_set[b]) out.push_back(e);
    }
    return out;
}

std::vector<int> cut_edges(const DualMap& dm, const Shore& s) {
    std::vector<bool> in_set(dm.num_faces, false);
    for (int f : s.faces) in_set[f] = true;
    return cut_edges_of_set(dm, in_set);
}

}  // namespace planemf
