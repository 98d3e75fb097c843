#include "planemf/multicut.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "planemf/errors.hpp"
#include "planemf/graph_util.hpp"

namespace planemf {

int p_value(const Instance& inst, const DualMap& dm, const std::vector<bool>& in_set) {
    int crossings = 0;
    bool any_in = false, any_out = false;
    for (int f = 0; f < dm.num_faces; ++f) (in_set[f] ? any_in : any_out) = true;
    if (!any_in || !any_out) throw bad_parameter("p is defined on proper nonempty subsets");
    for (int e = 0; e < static_cast<int>(dm.dual_edges.size()); ++e) {
        if (!inst.is_demand(e)) continue;
        auto [a, b] = dm.dual_edges[e];
        if (in_set[a] != in_set[b]) ++crossings;
    }
    return crossings == 1 ? 1 : 0;
}

bool is_2connector(const Instance& inst, const DualMap& dm, const std::vector<int>& qstar) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> demand_pos;  // positions of demand duals in `edges`
    for (int e : qstar) {
        if (!inst.is_supply(e)) throw bad_parameter("connector must consist of supply duals");
        edges.push_back(dm.dual_edges[e]);
    }
    for (int e = 0; e < static_cast<int>(dm.dual_edges.size()); ++e) {
        if (!inst.is_demand(e)) continue;
        demand_pos.push_back(static_cast<int>(edges.size()));
        edges.push_back(dm.dual_edges[e]);
    }
    auto bridge = find_bridges(dm.num_faces, edges);
    for (int pos : demand_pos)
        if (bridge[pos]) return false;
    return true;
}

std::vector<std::vector<int>> minimal_violated_sets(const Instance& inst, const DualMap& dm,
                                                    const std::vector<int>& qstar) {
    // contract the qstar components
    DisjointSets dsu(dm.num_faces);
    for (int e : qstar) dsu.unite(dm.dual_edges[e].first, dm.dual_edges[e].second);
    std::vector<int> comp_id(dm.num_faces, -1);
    int nc = 0;
    for (int f = 0; f < dm.num_faces; ++f) {
        int r = dsu.find(f);
        if (comp_id[r] == -1) comp_id[r] = nc++;
        comp_id[f] = comp_id[r];
    }
    // contracted demand multigraph
    std::vector<std::pair<int, int>> h_edges;
    for (int e = 0; e < static_cast<int>(dm.dual_edges.size()); ++e) {
        if (!inst.is_demand(e)) continue;
        h_edges.push_back({comp_id[dm.dual_edges[e].first], comp_id[dm.dual_edges[e].second]});
    }
    auto bridge = find_bridges(nc, h_edges);

    // 2-edge-connected blocks: components after removing bridges
    DisjointSets blocks(nc);
    for (size_t i = 0; i < h_edges.size(); ++i) {
        if (bridge[i]) continue;
        auto [a, b] = h_edges[i];
        if (a != b) blocks.unite(a, b);
    }
    // bridge degree per block; a leaf block (exactly one incident bridge) is
    // an inclusion-minimal violated set
    std::map<int, int> bridge_degree;
    for (size_t i = 0; i < h_edges.size(); ++i) {
        if (!bridge[i]) continue;
        bridge_degree[blocks.find(h_edges[i].first)]++;
        bridge_degree[blocks.find(h_edges[i].second)]++;
    }
    std::vector<std::vector<int>> out;
    std::set<int> leaf_roots;
    for (auto [root, deg] : bridge_degree)
        if (deg == 1) leaf_roots.insert(root);
    for (int root : leaf_roots) {
        std::vector<int> faces;
        for (int f = 0; f < dm.num_faces; ++f)
            if (blocks.find(comp_id[f]) == root) faces.push_back(f);
        out.push_back(std::move(faces));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Flow flow_from_dual(const Instance& inst, const DualMap& dm,
                    const std::vector<std::pair<Shore, Rational>>& y) {
    const PlaneGraph& pg = inst.plane;
    Flow f;
    for (const auto& [shore, val] : y) {
        if (val.is_zero()) continue;
        auto cut = cut_edges(dm, shore);
        int demand = -1;
        for (int e : cut)
            if (inst.is_demand(e)) {
                if (demand != -1) throw bad_parameter("moat crossed by two demand duals");
                demand = e;
            }
        if (demand == -1) throw bad_parameter("moat crossed by no demand dual");
        // bfs inside the cut's supply edges between the demand endpoints,
        // scanning edges in id order for determinism
        auto [s, t] = pg.edges[demand];
        std::vector<std::vector<std::pair<int, int>>> adj(pg.num_vertices);
        std::sort(cut.begin(), cut.end());
        for (int e : cut) {
            if (!inst.is_supply(e)) continue;
            auto [a, b] = pg.edges[e];
            adj[a].push_back({b, e});
            adj[b].push_back({a, e});
        }
        std::vector<int> via_edge(pg.num_vertices, -1), parent(pg.num_vertices, -1);
        std::vector<bool> seen(pg.num_vertices, false);
        std::vector<int> queue{s};
        seen[s] = true;
        for (size_t qi = 0; qi < queue.size() && !seen[t]; ++qi) {
            int u = queue[qi];
            for (auto [w, e] : adj[u]) {
                if (seen[w]) continue;
                seen[w] = true;
                parent[w] = u;
                via_edge[w] = e;
                queue.push_back(w);
            }
        }
        if (!seen[t]) throw no_path_in_cut("no supply path inside the moat cut");
        Path p;
        p.demand_edge = demand;
        int cur = t;
        while (cur != s) {
            p.vertices.push_back(cur);
            p.edges.push_back(via_edge[cur]);
            cur = parent[cur];
        }
        p.vertices.push_back(s);
        std::reverse(p.vertices.begin(), p.vertices.end());
        std::reverse(p.edges.begin(), p.edges.end());
        f.add(std::move(p), val);
    }
    return f;
}

bool verify_multicut(const Instance& inst, const std::vector<int>& q) {
    std::vector<bool> removed(inst.plane.num_edges(), false);
    for (int e : q) {
        if (!inst.is_supply(e)) throw bad_parameter("multicut must consist of supply edges");
        removed[e] = true;
    }
    std::vector<std::pair<int, int>> kept;
    for (int e = 0; e < inst.plane.num_edges(); ++e)
        if (inst.is_supply(e) && !removed[e]) kept.push_back(inst.plane.edges[e]);
    auto comp = connected_components(inst.plane.num_vertices, kept);
    for (int e = 0; e < inst.plane.num_edges(); ++e) {
        if (!inst.is_demand(e)) continue;
        auto [u, v] = inst.plane.edges[e];
        if (comp[u] == comp[v]) return false;
    }
    return true;
}

MulticutRun wgmv_multicut(const Instance& inst) {
    const PlaneGraph& pg = inst.plane;
    DualMap dm = dual(pg);
    MulticutRun run;
    std::vector<bool> in_qstar(pg.num_edges(), false);
    std::map<Shore, Rational> y;
    std::vector<Rational> load(pg.num_edges(), Rational(0));

    // growth: raise y uniformly on all minimal violated sets until a supply
    // dual goes tight, add it, repeat
    for (;;) {
        std::vector<int> qstar;
        for (int e = 0; e < pg.num_edges(); ++e)
            if (in_qstar[e]) qstar.push_back(e);
        auto violated = minimal_violated_sets(inst, dm, qstar);
        if (violated.empty()) break;

        std::vector<std::vector<int>> active_cuts;  // supply duals on each active boundary
        std::vector<int> multiplicity(pg.num_edges(), 0);
        for (const auto& faces : violated) {
            std::vector<bool> in_set(dm.num_faces, false);
            for (int f : faces) in_set[f] = true;
            std::vector<int> boundary;
            for (int e : cut_edges_of_set(dm, in_set))
                if (inst.is_supply(e)) boundary.push_back(e);
            if (boundary.empty()) throw internal_error("violated set with empty supply boundary");
            for (int e : boundary) {
                if (in_qstar[e]) throw internal_error("violated set touches the connector");
                multiplicity[e]++;
            }
            active_cuts.push_back(std::move(boundary));
        }

        int tight_edge = -1;
        Rational delta;
        for (int e = 0; e < pg.num_edges(); ++e) {
            if (multiplicity[e] == 0) continue;
            Rational room = (Rational(inst.capacity[e]) - load[e]) / Rational(multiplicity[e]);
            if (room.sign() < 0) throw internal_error("dual infeasibility during growth");
            if (tight_edge == -1 || room < delta) {
                tight_edge = e;
                delta = room;
            }
        }
        if (tight_edge == -1) throw internal_error("no growable edge for violated sets");

        for (size_t i = 0; i < violated.size(); ++i) {
            Shore s = make_shore(pg, violated[i]);
            y[s] += delta;
            for (int e : active_cuts[i]) load[e] += delta;
        }
        in_qstar[tight_edge] = true;
        run.addition_order.push_back(tight_edge);
        if (load[tight_edge] != Rational(inst.capacity[tight_edge]))
            throw internal_error("added edge is not tight");
    }

    // reverse delete
    std::vector<int> final_qstar = run.addition_order;
    for (auto it = run.addition_order.rbegin(); it != run.addition_order.rend(); ++it) {
        std::vector<int> without;
        for (int e : final_qstar)
            if (e != *it) without.push_back(e);
        if (is_2connector(inst, dm, without)) final_qstar = std::move(without);
    }
    std::sort(final_qstar.begin(), final_qstar.end());
    run.connector = final_qstar;
    run.multicut = final_qstar;

    for (auto& [shore, val] : y)
        if (!val.is_zero()) run.moats.push_back({shore, val});
    run.flow = flow_from_dual(inst, dm, run.moats);

    // the run must certify itself: dual feasibility, moat support validity,
    // multicut validity, flow feasibility, and the factor-two inequality
    for (int e = 0; e < pg.num_edges(); ++e)
        if (inst.is_supply(e) && load[e] > Rational(inst.capacity[e]))
            throw internal_error("dual solution violates a capacity");
    Rational total_y;
    for (const auto& [shore, val] : run.moats) {
        std::vector<bool> in_set(dm.num_faces, false);
        for (int f : shore.faces) in_set[f] = true;
        if (p_value(inst, dm, in_set) != 1) throw internal_error("moat with p != 1");
        total_y += val;
    }
    if (!verify_multicut(inst, run.multicut))
        throw internal_error("connector dual is not a multicut");
    if (!is_2connector(inst, dm, run.connector))
        throw internal_error("result is not a 2-connector");
    FeasibilityReport rep = check_feasible(inst, run.flow);
    if (!rep.feasible) throw internal_error("extracted flow is infeasible");
    if (run.flow.value() != total_y) throw internal_error("flow value differs from dual value");
    run.multicut_capacity = 0;
    for (int e : run.multicut) run.multicut_capacity += inst.capacity[e];
    if (Rational(run.multicut_capacity) > Rational(2) * total_y)
        throw internal_error("factor-two inequality violated");
    return run;
}

}  // namespace planemf
