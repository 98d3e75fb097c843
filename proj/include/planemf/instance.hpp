#pragma once

#include <vector>

#include "planemf/plane_graph.hpp"
#include "planemf/rational.hpp"

namespace planemf {

enum class EdgeRole { supply, demand };

/// A plane multiflow instance: supply and demand edges embedded together,
/// integer capacities on supply edges, one designated outer face.
struct Instance {
    PlaneGraph plane;                 // over all edges, supply and demand
    std::vector<EdgeRole> role;       // per edge id
    std::vector<long long> capacity;  // per edge id; 0 on demand edges

    bool is_supply(int e) const { return role[e] == EdgeRole::supply; }
    bool is_demand(int e) const { return role[e] == EdgeRole::demand; }
    std::vector<int> supply_edges() const;
    std::vector<int> demand_edges() const;
    long long total_capacity() const;
};

/// Simple supply path between the endpoints of its demand edge, stored in
/// canonical direction (the lexicographically smaller of the two readings).
struct Path {
    int demand_edge = -1;
    std::vector<int> edges;     // supply edge ids, in walk order
    std::vector<int> vertices;  // walk vertices, edges.size() + 1 of them

    void canonicalize();
    bool operator==(const Path& o) const {
        return demand_edge == o.demand_edge && edges == o.edges;
    }
    bool operator<(const Path& o) const;
};

struct PathSet {
    std::vector<Path> paths;                 // sorted
    std::vector<std::vector<int>> by_demand; // demand edge id -> indices into paths

    int size() const { return static_cast<int>(paths.size()); }
};

struct FlowEntry {
    Path path;
    Rational value;  // > 0
};

/// Finite-support multiflow. Entries are kept sorted by path and merged.
struct Flow {
    std::vector<FlowEntry> entries;

    Rational value() const;
    bool is_integer() const;
    bool is_half_integer() const;
    void add(Path p, const Rational& v);  // merges equal paths, drops zeros
    void normalize();                     // sort + merge + drop zeros
};

/// Mutable embedding under construction. All generator surgery funnels
/// through here so that every intermediate state stays a valid rotation
/// system.
struct EmbeddingBuilder {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> rotation;  // dart ids per vertex

    int add_vertex();
    /// Appends edge (u, v) given explicit rotation positions; used for
    /// initial skeletons where the caller lays out rotations directly.
    int add_edge_raw(int u, int v);

    std::vector<std::vector<int>> faces() const;  // current face cycles

    /// Inserts edge (u, v) inside the given face (a dart cycle from faces());
    /// both endpoints must occur on the face. Splits that face in two.
    int insert_in_face(const std::vector<int>& face, int u, int v);

    /// Subdivides edge e = (u, v) at a fresh vertex w: e becomes (u, w) and a
    /// new edge (w, v) is appended. Returns (w, new edge id).
    std::pair<int, int> subdivide_edge(int e);
};

/// Assembles and validates an Instance; zero-capacity supply edges must have
/// been removed by the caller (parse does this; generators never make them).
Instance make_instance(EmbeddingBuilder b, std::vector<EdgeRole> role,
                       std::vector<long long> capacity, int outer_face);

}  // namespace planemf
