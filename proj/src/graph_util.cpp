#include "planemf/graph_util.hpp"

#include <algorithm>

namespace planemf {

std::vector<bool> find_bridges(int n, const std::vector<std::pair<int, int>>& edges) {
    int m = static_cast<int>(edges.size());
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbour, edge id)
    for (int e = 0; e < m; ++e) {
        auto [u, v] = edges[e];
        if (u == v) continue;
        adj[u].push_back({v, e});
        adj[v].push_back({u, e});
    }
    std::vector<bool> bridge(m, false);
    std::vector<int> num(n, -1), low(n, 0);
    int counter = 0;
    // iterative dfs; state: (vertex, incoming edge id, adjacency cursor)
    std::vector<std::tuple<int, int, size_t>> stack;
    for (int root = 0; root < n; ++root) {
        if (num[root] != -1) continue;
        num[root] = low[root] = counter++;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            auto& [u, pe, it] = stack.back();
            if (it < adj[u].size()) {
                auto [v, e] = adj[u][it++];
                if (e == pe) continue;
                if (num[v] == -1) {
                    num[v] = low[v] = counter++;
                    stack.push_back({v, e, 0});
                } else {
                    low[u] = std::min(low[u], num[v]);
                }
            } else {
                int done_v = u, done_edge = pe;
                stack.pop_back();
                if (!stack.empty()) {
                    int p = std::get<0>(stack.back());
                    low[p] = std::min(low[p], low[done_v]);
                    if (low[done_v] > num[p]) bridge[done_edge] = true;
                }
            }
        }
    }
    return bridge;
}

std::vector<int> connected_components(int n, const std::vector<std::pair<int, int>>& edges) {
    DisjointSets dsu(n);
    for (auto [u, v] : edges) dsu.unite(u, v);
    std::vector<int> comp(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        int r = dsu.find(v);
        if (comp[r] == -1) comp[r] = next++;
        comp[v] = comp[r];
    }
    return comp;
}

}  // namespace planemf
