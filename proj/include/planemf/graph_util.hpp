#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace planemf {

struct DisjointSets {
    std::vector<int> parent;

    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

/// Bridges of an undirected multigraph given as an edge list over n vertices.
/// Self-loops are never bridges; parallel edges are handled by edge id.
/// Returns a bool per edge.
std::vector<bool> find_bridges(int n, const std::vector<std::pair<int, int>>& edges);

/// Connected component id per vertex (0-based, in discovery order).
std::vector<int> connected_components(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace planemf
