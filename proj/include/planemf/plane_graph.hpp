#pragma once

#include <utility>
#include <vector>

namespace planemf {

/// Connected multigraph with a combinatorial embedding (rotation system).
/// Edge i owns darts 2i (u -> v) and 2i+1 (v -> u). Faces are the orbits of
/// d -> rotation-successor(reverse(d)); the Euler relation V - E + F = 2 is
/// the planarity gate. Immutable after construction.
struct PlaneGraph {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;       // endpoints per edge id
    std::vector<std::vector<int>> rotation;      // per vertex, cyclic dart order
    std::vector<std::vector<int>> faces;         // per face, dart cycle in traversal order
    std::vector<int> face_of_dart;               // dart id -> face id
    int outer_face = 0;

    int num_edges() const { return static_cast<int>(edges.size()); }
    int num_faces() const { return static_cast<int>(faces.size()); }
    int dart_tail(int d) const { auto [u, v] = edges[d / 2]; return (d & 1) ? v : u; }
    int dart_head(int d) const { return dart_tail(d ^ 1); }
};

/// Face endpoints of every primal edge: e* joins the faces on either side of
/// e. The map e <-> e* is the identity on edge ids.
struct DualMap {
    int num_faces = 0;
    std::vector<std::pair<int, int>> dual_edges;  // per edge id: (face of dart 2e, face of dart 2e+1)
};

/// One side of a dual cut, canonicalized to the side not containing the
/// outer face. Faces are kept sorted.
struct Shore {
    std::vector<int> faces;  // sorted, never contains the outer face

    bool operator==(const Shore& o) const { return faces == o.faces; }
    bool operator<(const Shore& o) const;  // by size, then lexicographic
    bool contains(int face) const;
    bool subset_of(const Shore& o) const;
    bool disjoint_from(const Shore& o) const;
    bool crosses(const Shore& o) const;  // neither disjoint nor nested
};

/// Orbit decomposition of the darts for a given rotation system, without any
/// validity gating. Exposed so tests can probe non-planar rotations.
std::vector<std::vector<int>> trace_faces(int num_vertices,
                                          const std::vector<std::pair<int, int>>& edges,
                                          const std::vector<std::vector<int>>& rotation);

/// Validates and assembles a PlaneGraph. Throws malformed_rotation (bad dart
/// lists or loop edges), disconnected_graph, euler_violation (V - E + F != 2),
/// or bad_parameter (outer face id out of range).
PlaneGraph build_plane_graph(int num_vertices, std::vector<std::pair<int, int>> edges,
                             std::vector<std::vector<int>> rotation, int outer_face);

DualMap dual(const PlaneGraph& pg);

/// The dual as a plane graph in its own right: vertices are faces of pg,
/// rotation around each dual vertex follows the face cycle. Requires the
/// dual to be loop-free (pg bridgeless).
PlaneGraph dual_plane_graph(const PlaneGraph& pg);

Shore make_shore(const PlaneGraph& pg, std::vector<int> faces);

/// Faces strictly enclosed by a simple circuit (given as an edge id set):
/// the side of the dual cut that avoids the outer face. Throws not_a_circuit.
Shore shore_from_cycle(const PlaneGraph& pg, const DualMap& dm, const std::vector<int>& cycle);

/// delta(s) in the dual: ids of edges with exactly one side inside s.
std::vector<int> cut_edges(const DualMap& dm, const Shore& s);
std::vector<int> cut_edges_of_set(const DualMap& dm, const std::vector<bool>& in_set);

}  // namespace planemf
