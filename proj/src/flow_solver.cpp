#include "planemf/flow_solver.hpp"

#include <algorithm>
#include <set>

#include "planemf/errors.hpp"

namespace planemf {

PathSet enumerate_paths(const Instance& inst, int cap) {
    const PlaneGraph& pg = inst.plane;
    std::vector<std::vector<std::pair<int, int>>> adj(pg.num_vertices);  // (neighbour, edge)
    for (int e = 0; e < pg.num_edges(); ++e) {
        if (!inst.is_supply(e)) continue;
        auto [u, v] = pg.edges[e];
        adj[u].push_back({v, e});
        adj[v].push_back({u, e});
    }

    PathSet ps;
    ps.by_demand.assign(pg.num_edges(), {});
    std::set<std::pair<int, std::vector<int>>> seen;  // (demand, canonical edge seq)

    for (int de = 0; de < pg.num_edges(); ++de) {
        if (!inst.is_demand(de)) continue;
        auto [s, t] = pg.edges[de];
        std::vector<bool> visited(pg.num_vertices, false);
        Path cur;
        cur.demand_edge = de;
        cur.vertices.push_back(s);
        visited[s] = true;

        // iterative dfs over simple paths from s to t
        std::vector<size_t> cursor{0};
        while (!cursor.empty()) {
            int u = cur.vertices.back();
            if (cursor.back() < adj[u].size()) {
                auto [w, e] = adj[u][cursor.back()++];
                if (visited[w]) continue;
                cur.vertices.push_back(w);
                cur.edges.push_back(e);
                if (w == t) {
                    Path p = cur;
                    p.canonicalize();
                    if (seen.insert({de, p.edges}).second) {
                        ps.paths.push_back(std::move(p));
                        if (static_cast<int>(ps.paths.size()) > cap)
                            throw path_explosion("more than " + std::to_string(cap) +
                                                 " supply paths");
                    }
                    cur.vertices.pop_back();
                    cur.edges.pop_back();
                } else {
                    visited[w] = true;
                    cursor.push_back(0);
                }
            } else {
                cursor.pop_back();
                visited[u] = false;
                if (!cur.edges.empty()) {
                    cur.vertices.pop_back();
                    cur.edges.pop_back();
                }
            }
        }
    }
    std::sort(ps.paths.begin(), ps.paths.end());
    for (int i = 0; i < ps.size(); ++i) ps.by_demand[ps.paths[i].demand_edge].push_back(i);
    return ps;
}

MaxFlowResult max_multiflow(const Instance& inst, const PathSet& paths) {
    auto supply = inst.supply_edges();
    std::vector<int> row_of_edge(inst.plane.num_edges(), -1);
    for (size_t i = 0; i < supply.size(); ++i) row_of_edge[supply[i]] = static_cast<int>(i);

    LinearProgram lp;
    lp.rows.assign(supply.size(), std::vector<Rational>(paths.size(), Rational(0)));
    lp.rhs.resize(supply.size());
    for (size_t i = 0; i < supply.size(); ++i) lp.rhs[i] = Rational(inst.capacity[supply[i]]);
    for (int j = 0; j < paths.size(); ++j)
        for (int e : paths.paths[j].edges) lp.rows[row_of_edge[e]][j] = Rational(1);

    MaxFlowResult res;
    if (paths.size() == 0) {
        res.value = Rational(0);
        res.edge_dual.assign(inst.plane.num_edges(), Rational(0));
        return res;
    }
    LpSolution sol = solve_max(lp);
    res.value = sol.value;
    for (int j = 0; j < paths.size(); ++j)
        if (!sol.x[j].is_zero()) res.flow.add(paths.paths[j], sol.x[j]);
    res.edge_dual.assign(inst.plane.num_edges(), Rational(0));
    for (size_t i = 0; i < supply.size(); ++i) res.edge_dual[supply[i]] = sol.dual[i];
    return res;
}

FeasibilityReport check_feasible(const Instance& inst, const Flow& f) {
    const PlaneGraph& pg = inst.plane;
    for (const auto& fe : f.entries) {
        const Path& p = fe.path;
        if (p.demand_edge < 0 || p.demand_edge >= pg.num_edges() || !inst.is_demand(p.demand_edge))
            throw unknown_path("flow entry without a demand edge");
        if (p.vertices.size() != p.edges.size() + 1 || p.edges.empty())
            throw unknown_path("malformed path");
        auto [s, t] = pg.edges[p.demand_edge];
        if (!((p.vertices.front() == s && p.vertices.back() == t) ||
              (p.vertices.front() == t && p.vertices.back() == s)))
            throw unknown_path("path does not join the endpoints of its demand edge");
        std::set<int> dedup(p.vertices.begin(), p.vertices.end());
        if (dedup.size() != p.vertices.size()) throw unknown_path("path is not simple");
        for (size_t i = 0; i < p.edges.size(); ++i) {
            int e = p.edges[i];
            if (e < 0 || e >= pg.num_edges() || !inst.is_supply(e))
                throw unknown_path("path uses a non-supply edge");
            auto [a, b] = pg.edges[e];
            int x = p.vertices[i], y = p.vertices[i + 1];
            if (!((a == x && b == y) || (a == y && b == x)))
                throw unknown_path("path edge does not match its vertices");
        }
        if (fe.value.sign() < 0) throw unknown_path("negative flow value");
    }

    FeasibilityReport rep;
    rep.load.assign(pg.num_edges(), Rational(0));
    for (const auto& fe : f.entries)
        for (int e : fe.path.edges) rep.load[e] += fe.value;
    rep.feasible = true;
    Rational max_load(-1);
    for (int e = 0; e < pg.num_edges(); ++e) {
        if (!inst.is_supply(e)) continue;
        if (rep.load[e] > Rational(inst.capacity[e])) {
            rep.feasible = false;
            rep.violated.push_back(e);
        }
        if (rep.load[e] > max_load) max_load = rep.load[e];
    }
    for (int e = 0; e < pg.num_edges(); ++e)
        if (inst.is_supply(e) && rep.load[e] == max_load) rep.max_loaded.push_back(e);
    return rep;
}

}  // namespace planemf
