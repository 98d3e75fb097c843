#include "planemf/instance.hpp"

#include <algorithm>

#include "planemf/errors.hpp"

namespace planemf {

std::vector<int> Instance::supply_edges() const {
    std::vector<int> out;
    for (int e = 0; e < plane.num_edges(); ++e)
        if (is_supply(e)) out.push_back(e);
    return out;
}

std::vector<int> Instance::demand_edges() const {
    std::vector<int> out;
    for (int e = 0; e < plane.num_edges(); ++e)
        if (is_demand(e)) out.push_back(e);
    return out;
}

long long Instance::total_capacity() const {
    long long t = 0;
    for (int e = 0; e < plane.num_edges(); ++e)
        if (is_supply(e)) t += capacity[e];
    return t;
}

void Path::canonicalize() {
    std::vector<int> rev_edges(edges.rbegin(), edges.rend());
    std::vector<int> rev_vertices(vertices.rbegin(), vertices.rend());
    if (std::tie(rev_vertices, rev_edges) < std::tie(vertices, edges)) {
        edges = std::move(rev_edges);
        vertices = std::move(rev_vertices);
    }
}

bool Path::operator<(const Path& o) const {
    return std::tie(demand_edge, edges) < std::tie(o.demand_edge, o.edges);
}

Rational Flow::value() const {
    Rational v;
    for (const auto& fe : entries) v += fe.value;
    return v;
}

bool Flow::is_integer() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const FlowEntry& fe) { return fe.value.is_integer(); });
}

bool Flow::is_half_integer() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const FlowEntry& fe) { return fe.value.is_half_integer(); });
}

void Flow::add(Path p, const Rational& v) {
    if (v.is_zero()) return;
    p.canonicalize();
    entries.push_back({std::move(p), v});
    normalize();
}

void Flow::normalize() {
    for (auto& fe : entries) fe.path.canonicalize();
    std::sort(entries.begin(), entries.end(),
              [](const FlowEntry& a, const FlowEntry& b) { return a.path < b.path; });
    std::vector<FlowEntry> merged;
    for (auto& fe : entries) {
        if (!merged.empty() && merged.back().path == fe.path)
            merged.back().value += fe.value;
        else
            merged.push_back(std::move(fe));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const FlowEntry& fe) { return fe.value.is_zero(); }),
                 merged.end());
    entries = std::move(merged);
}

int EmbeddingBuilder::add_vertex() {
    rotation.emplace_back();
    return num_vertices++;
}

int EmbeddingBuilder::add_edge_raw(int u, int v) {
    edges.push_back({u, v});
    return static_cast<int>(edges.size()) - 1;
}

std::vector<std::vector<int>> EmbeddingBuilder::faces() const {
    return trace_faces(num_vertices, edges, rotation);
}

int EmbeddingBuilder::insert_in_face(const std::vector<int>& face, int u, int v) {
    if (u == v) throw bad_parameter("cannot insert a loop edge");
    auto head = [&](int d) {
        auto [a, b] = edges[d / 2];
        return (d & 1) ? a : b;
    };
    int du = -1, dv = -1;  // darts on the face arriving at u and v
    for (int d : face) {
        if (du == -1 && head(d) == u) du = d;
        if (dv == -1 && head(d) == v) dv = d;
    }
    if (du == -1 || dv == -1) throw bad_parameter("endpoint not on the given face");

    int e = static_cast<int>(edges.size());
    edges.push_back({u, v});
    // walk ... du, (2e) ... at u and ... dv, (2e+1) ... at v: place the new
    // dart right after the reversal of the arriving dart in each rotation
    auto insert_after = [&](int vertex, int after_dart, int new_dart) {
        auto& rot = rotation[vertex];
        auto it = std::find(rot.begin(), rot.end(), after_dart);
        if (it == rot.end()) throw internal_error("arriving dart not in rotation");
        rot.insert(std::next(it), new_dart);
    };
    insert_after(u, du ^ 1, 2 * e);
    insert_after(v, dv ^ 1, 2 * e + 1);
    return e;
}

std::pair<int, int> EmbeddingBuilder::subdivide_edge(int e) {
    auto [u, v] = edges[e];
    int w = add_vertex();
    edges[e] = {u, w};
    int e2 = static_cast<int>(edges.size());
    edges.push_back({w, v});
    // dart 2e keeps its slot at u; dart 2e+1 moves to w; at v the old
    // reverse dart slot is taken over by the new edge's dart
    auto& rv = rotation[v];
    auto it = std::find(rv.begin(), rv.end(), 2 * e + 1);
    if (it == rv.end()) throw internal_error("subdivide: dart not found at endpoint");
    *it = 2 * e2 + 1;
    rotation[w] = {2 * e + 1, 2 * e2};
    return {w, e2};
}

Instance make_instance(EmbeddingBuilder b, std::vector<EdgeRole> role,
                       std::vector<long long> capacity, int outer_face) {
    if (role.size() != b.edges.size() || capacity.size() != b.edges.size())
        throw bad_parameter("role/capacity size mismatch");
    for (size_t e = 0; e < b.edges.size(); ++e) {
        if (role[e] == EdgeRole::demand && capacity[e] != 0)
            throw bad_parameter("demand edges carry no capacity");
        if (role[e] == EdgeRole::supply && capacity[e] <= 0)
            throw bad_parameter("zero-capacity supply edge must be deleted before assembly");
    }
    Instance inst;
    inst.plane = build_plane_graph(b.num_vertices, std::move(b.edges), std::move(b.rotation),
                                   outer_face);
    inst.role = std::move(role);
    inst.capacity = std::move(capacity);
    return inst;
}

}  // namespace planemf
