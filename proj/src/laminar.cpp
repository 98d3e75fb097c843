#include "planemf/laminar.hpp"

#include <algorithm>
#include <map>

#include "planemf/errors.hpp"
#include "planemf/graph_util.hpp"

namespace planemf {

namespace {

int count_demand_duals(const Instance& inst, const DualMap& dm, const Shore& s, int* which) {
    int count = 0;
    for (int e : cut_edges(dm, s)) {
        if (inst.is_demand(e)) {
            ++count;
            if (which) *which = e;
        }
    }
    return count;
}

std::vector<Rational> dual_edge_loads(const Instance& inst, const DualMap& dm,
                                      const WeightedShores& family) {
    std::vector<Rational> load(inst.plane.num_edges(), Rational(0));
    for (const auto& [shore, w] : family)
        for (int e : cut_edges(dm, shore)) load[e] += w;
    return load;
}

/// Weighted crossing potential: sum of f_A * f_B over crossing pairs. Each
/// uncrossing step must strictly decrease it.
Rational crossing_potential(const WeightedShores& family) {
    Rational phi;
    for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = i + 1; j < family.size(); ++j)
            if (family[i].first.crosses(family[j].first))
                phi += family[i].second * family[j].second;
    return phi;
}

Shore set_to_shore(const PlaneGraph& pg, const std::vector<bool>& in_set) {
    std::vector<int> faces;
    for (int f = 0; f < pg.num_faces(); ++f)
        if (in_set[f]) faces.push_back(f);
    return make_shore(pg, std::move(faces));
}

std::vector<int> component_of(int n, const std::vector<std::pair<int, int>>& edges,
                              const std::vector<bool>& in_set, int start) {
    // connected component of `start` within the induced subgraph on in_set
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
        if (a == b) continue;
        if (in_set[a] && in_set[b]) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    }
    std::vector<bool> seen(n, false);
    std::vector<int> stack{start}, out;
    seen[start] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        out.push_back(v);
        for (int w : adj[v])
            if (!seen[w]) { seen[w] = true; stack.push_back(w); }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Shrinks/grows a cut to the inclusion-minimal cut containing the given
/// demand dual edge, staying inside the original cut's edge set.
Shore minimalize_cut(const Instance& inst, const DualMap& dm, const Shore& s, int demand_edge) {
    const PlaneGraph& pg = inst.plane;
    int n = dm.num_faces;
    auto [fa, fb] = dm.dual_edges[demand_edge];
    std::vector<bool> in_set(n, false);
    for (int f : s.faces) in_set[f] = true;
    int p = in_set[fa] ? fa : fb;  // demand endpoint inside
    int q = (p == fa) ? fb : fa;
    if (in_set[p] == in_set[q]) throw internal_error("demand dual does not cross the cut");

    for (;;) {
        auto inside = component_of(n, dm.dual_edges, in_set, p);
        int inside_count = 0;
        for (int f = 0; f < n; ++f) inside_count += in_set[f] ? 1 : 0;
        if (static_cast<int>(inside.size()) != inside_count) {
            std::fill(in_set.begin(), in_set.end(), false);
            for (int f : inside) in_set[f] = true;
            continue;
        }
        std::vector<bool> comp_set(n, false);
        for (int f = 0; f < n; ++f) comp_set[f] = !in_set[f];
        auto outside = component_of(n, dm.dual_edges, comp_set, q);
        if (static_cast<int>(outside.size()) != n - inside_count) {
            std::fill(in_set.begin(), in_set.end(), true);
            for (int f : outside) in_set[f] = false;
            continue;
        }
        break;
    }
    return set_to_shore(pg, in_set);
}

Path path_from_cut(const Instance& inst, const DualMap& dm, const Shore& shore,
                   int demand_edge) {
    const PlaneGraph& pg = inst.plane;
    auto cut = cut_edges(dm, shore);
    std::vector<int> sup;
    for (int e : cut)
        if (inst.is_supply(e)) sup.push_back(e);
    auto [s, t] = pg.edges[demand_edge];

    std::vector<std::vector<std::pair<int, int>>> adj(pg.num_vertices);
    for (int e : sup) {
        auto [a, b] = pg.edges[e];
        adj[a].push_back({b, e});
        adj[b].push_back({a, e});
    }
    Path p;
    p.demand_edge = demand_edge;
    p.vertices.push_back(s);
    int prev_edge = -1, cur = s;
    while (cur != t) {
        int next = -1, via = -1;
        for (auto [w, e] : adj[cur]) {
            if (e == prev_edge) continue;
            if (via != -1) throw internal_error("cut is not a single circuit");
            next = w;
            via = e;
        }
        if (via == -1) throw internal_error("cut path dead-ends");
        p.vertices.push_back(next);
        p.edges.push_back(via);
        prev_edge = via;
        cur = next;
    }
    if (p.edges.size() != sup.size()) throw internal_error("cut has extra circuits");
    p.canonicalize();
    return p;
}

}  // namespace

Rational LaminarFlow::value() const {
    Rational v;
    for (const auto& le : entries) v += le.value;
    return v;
}

Flow LaminarFlow::to_flow() const {
    Flow f;
    for (const auto& le : entries) f.add(le.path, le.value);
    return f;
}

std::vector<int> LaminarFlow::chain(int u, int v) const {
    std::vector<Shore> shores;
    shores.reserve(entries.size());
    for (const auto& le : entries) shores.push_back(le.shore);
    return chain_indices(shores, u, v);
}

std::vector<int> chain_indices(const std::vector<Shore>& shores, int u, int v) {
    std::vector<int> idx;
    for (int i = 0; i < static_cast<int>(shores.size()); ++i)
        if (shores[i].contains(u) && !shores[i].contains(v)) idx.push_back(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (shores[a].faces.size() != shores[b].faces.size())
            return shores[a].faces.size() < shores[b].faces.size();
        return shores[a] < shores[b];
    });
    for (size_t i = 0; i + 1 < idx.size(); ++i)
        if (!shores[idx[i]].subset_of(shores[idx[i + 1]]))
            throw internal_error("chain slice of a laminar family is not a chain");
    return idx;
}

WeightedShores flow_to_shores(const Instance& inst, const DualMap& dm, const Flow& f) {
    std::map<Shore, Rational> acc;
    for (const auto& fe : f.entries) {
        if (fe.value.is_zero()) continue;
        std::vector<int> cycle = fe.path.edges;
        cycle.push_back(fe.path.demand_edge);
        Shore s = shore_from_cycle(inst.plane, dm, cycle);
        acc[s] += fe.value;
    }
    WeightedShores out(acc.begin(), acc.end());
    return out;
}

LaminarFlow uncross(const Instance& inst, const DualMap& dm, const WeightedShores& input) {
    const PlaneGraph& pg = inst.plane;
    std::map<Shore, Rational> family;
    for (const auto& [shore, w] : input) {
        if (w.sign() < 0) throw bad_parameter("negative shore weight");
        if (w.is_zero()) continue;
        int demand = -1;
        if (count_demand_duals(inst, dm, shore, &demand) != 1)
            throw bad_parameter("every cut must contain exactly one demand dual edge");
        family[shore] += w;
    }
    Rational total_before;
    for (const auto& [shore, w] : family) total_before += w;
    std::vector<Rational> load_before = dual_edge_loads(inst, dm, input);

    long long budget =
        8LL * dm.num_faces * dm.num_faces * std::max<long long>(1, family.size()) + 64;
    auto as_vector = [&]() { return WeightedShores(family.begin(), family.end()); };

    for (;;) {
        // phase 1: uncross until laminar
        for (;;) {
            auto fam = as_vector();
            int ai = -1, bi = -1;
            for (size_t i = 0; i < fam.size() && ai == -1; ++i)
                for (size_t j = i + 1; j < fam.size(); ++j)
                    if (fam[i].first.crosses(fam[j].first)) {
                        ai = static_cast<int>(i);
                        bi = static_cast<int>(j);
                        break;
                    }
            if (ai == -1) break;
            if (--budget < 0) throw internal_error("uncross iteration budget exceeded");

            Rational phi_before = crossing_potential(fam);
            const Shore& A = fam[ai].first;
            const Shore& B = fam[bi].first;
            Rational m = std::min(fam[ai].second, fam[bi].second);

            std::vector<int> inter, uni, only_a, only_b;
            std::set_intersection(A.faces.begin(), A.faces.end(), B.faces.begin(), B.faces.end(),
                                  std::back_inserter(inter));
            std::set_union(A.faces.begin(), A.faces.end(), B.faces.begin(), B.faces.end(),
                           std::back_inserter(uni));
            std::set_difference(A.faces.begin(), A.faces.end(), B.faces.begin(), B.faces.end(),
                                std::back_inserter(only_a));
            std::set_difference(B.faces.begin(), B.faces.end(), A.faces.begin(), A.faces.end(),
                                std::back_inserter(only_b));
            Shore s_inter = make_shore(pg, inter), s_union = make_shore(pg, uni);
            Shore s_a = make_shore(pg, only_a), s_b = make_shore(pg, only_b);

            auto admissible = [&](const Shore& x, const Shore& y) {
                return count_demand_duals(inst, dm, x, nullptr) == 1 &&
                       count_demand_duals(inst, dm, y, nullptr) == 1;
            };
            const Shore* r1;
            const Shore* r2;
            if (admissible(s_inter, s_union)) {
                r1 = &s_inter;
                r2 = &s_union;
            } else if (admissible(s_a, s_b)) {
                r1 = &s_a;
                r2 = &s_b;
            } else {
                throw internal_error("no admissible replacement pair while uncrossing");
            }
            family[A] -= m;  // note: A, B reference fam (copies), map updates are safe
            family[B] -= m;
            family[*r1] += m;
            family[*r2] += m;
            for (auto it = family.begin(); it != family.end();)
                it = it->second.is_zero() ? family.erase(it) : std::next(it);

            Rational phi_after = crossing_potential(as_vector());
            if (!(phi_after < phi_before))
                throw internal_error("uncrossing measure failed to decrease");
        }

        // phase 2: shrink every cut to the circuit through its demand edge
        bool changed = false;
        std::map<Shore, Rational> next;
        for (const auto& [shore, w] : family) {
            int demand = -1;
            if (count_demand_duals(inst, dm, shore, &demand) != 1)
                throw internal_error("cut lost its unique demand dual");
            Shore mini = minimalize_cut(inst, dm, shore, demand);
            if (!(mini == shore)) changed = true;
            next[mini] += w;
        }
        family = std::move(next);
        if (!changed) break;
        if (--budget < 0) throw internal_error("uncross iteration budget exceeded");
    }

    // assemble, with the module invariants checked
    LaminarFlow lf;
    for (const auto& [shore, w] : family) {
        int demand = -1;
        if (count_demand_duals(inst, dm, shore, &demand) != 1)
            throw internal_error("cut lost its unique demand dual");
        LaminarEntry le;
        le.shore = shore;
        le.value = w;
        le.demand_edge = demand;
        le.path = path_from_cut(inst, dm, shore, demand);
        lf.entries.push_back(std::move(le));
    }
    std::sort(lf.entries.begin(), lf.entries.end(),
              [](const LaminarEntry& a, const LaminarEntry& b) { return a.shore < b.shore; });

    for (size_t i = 0; i < lf.entries.size(); ++i)
        for (size_t j = i + 1; j < lf.entries.size(); ++j)
            if (lf.entries[i].shore.crosses(lf.entries[j].shore))
                throw internal_error("uncross output is not laminar");
    if (static_cast<long long>(lf.entries.size()) > 2LL * (dm.num_faces - 1))
        throw internal_error("laminar family too large");
    if (lf.value() != total_before) throw internal_error("uncross changed the flow value");
    WeightedShores out_ws;
    for (const auto& le : lf.entries) out_ws.push_back({le.shore, le.value});
    std::vector<Rational> load_after = dual_edge_loads(inst, dm, out_ws);
    for (int e = 0; e < pg.num_edges(); ++e)
        if (load_after[e] > load_before[e])
            throw internal_error("uncross increased a dual edge load");
    return lf;
}

LaminarFlow laminarize(const Instance& inst, const DualMap& dm, const Flow& f) {
    return uncross(inst, dm, flow_to_shores(inst, dm, f));
}

}  // namespace planemf
