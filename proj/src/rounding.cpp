#include "planemf/rounding.hpp"

#include <algorithm>
#include <set>

#include "planemf/errors.hpp"

namespace planemf {

std::vector<int> ChainLP::row_members(int r) const {
    return chain_indices(family, rows[r].u, rows[r].v);
}

ChainLpSolution greedy_chain_lp(const ChainLP& clp) {
    int nl = static_cast<int>(clp.family.size());
    int nr = static_cast<int>(clp.rows.size());
    for (const auto& row : clp.rows)
        if (row.rhs < 0) throw bad_parameter("chain lp rhs must be nonnegative");

    // static membership: member_rows[L] = rows whose chain slice contains L
    std::vector<std::vector<int>> members(nr);
    std::vector<std::vector<int>> member_rows(nl);
    for (int r = 0; r < nr; ++r) {
        members[r] = clp.row_members(r);
        for (int L : members[r]) member_rows[L].push_back(r);
    }

    std::vector<bool> col_active(nl, true), row_active(nr, true);
    std::vector<long long> b;
    for (const auto& row : clp.rows) b.push_back(row.rhs);

    ChainLpSolution sol;
    sol.x.assign(nl, 0);
    sol.y.assign(nr, 0);

    struct Step {
        int col, row;
        std::vector<int> active_rows_of_col;
    };
    std::vector<Step> steps;

    // order columns so that inclusion-minimal sets come first
    std::vector<int> col_order(nl);
    for (int i = 0; i < nl; ++i) col_order[i] = i;
    std::sort(col_order.begin(), col_order.end(), [&](int a, int b2) {
        if (clp.family[a].faces.size() != clp.family[b2].faces.size())
            return clp.family[a].faces.size() < clp.family[b2].faces.size();
        return clp.family[a] < clp.family[b2];
    });

    for (;;) {
        int L = -1;
        for (int c : col_order)
            if (col_active[c]) { L = c; break; }
        if (L == -1) break;
        // size order makes L inclusion-minimal among the active columns
        std::vector<int> R;
        for (int r : member_rows[L])
            if (row_active[r]) R.push_back(r);
        if (R.empty()) throw lp_unbounded("chain lp: variable in no constraint");
        int r0 = R[0];
        for (int r : R)
            if (b[r] < b[r0]) r0 = r;
        sol.x[L] = b[r0];
        for (int r : R) b[r] -= sol.x[L];
        steps.push_back({L, r0, R});
        row_active[r0] = false;
        for (int c : members[r0]) col_active[c] = false;
    }

    // dual on the way back: give the chosen row weight one unless a row
    // containing the step's set already carries one
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        bool covered = false;
        for (int r : it->active_rows_of_col)
            if (r != it->row && sol.y[r] == 1) covered = true;
        if (!covered) sol.y[it->row] = 1;
    }

    // certificates: primal feasibility, dual feasibility, equal values
    long long primal = 0;
    for (int c = 0; c < nl; ++c) {
        if (sol.x[c] < 0) throw internal_error("chain greedy: negative primal");
        primal += sol.x[c];
    }
    for (int r = 0; r < nr; ++r) {
        long long lhs = 0;
        for (int L : members[r]) lhs += sol.x[L];
        if (lhs > clp.rows[r].rhs) throw internal_error("chain greedy: primal infeasible");
    }
    long long dual = 0;
    for (int r = 0; r < nr; ++r) dual += sol.y[r] * clp.rows[r].rhs;
    for (int c = 0; c < nl; ++c) {
        long long cover = 0;
        for (int r : member_rows[c]) cover += sol.y[r];
        if (cover < 1) throw internal_error("chain greedy: dual infeasible");
    }
    if (primal != dual) throw internal_error("chain greedy: primal/dual mismatch");
    sol.value = primal;
    return sol;
}

ChainLpSolution solve_chain_lp_checked(const ChainLP& clp) {
    ChainLpSolution greedy = greedy_chain_lp(clp);
    LinearProgram lp;
    int nl = static_cast<int>(clp.family.size());
    for (int r = 0; r < static_cast<int>(clp.rows.size()); ++r) {
        std::vector<Rational> row(nl, Rational(0));
        for (int L : clp.row_members(r)) row[L] = Rational(1);
        lp.rows.push_back(std::move(row));
        lp.rhs.push_back(Rational(clp.rows[r].rhs));
    }
    if (nl > 0) {
        LpSolution exact = solve_max(lp);
        if (exact.value != Rational(greedy.value))
            throw internal_error("greedy and simplex disagree on a chain lp");
        for (const auto& xi : exact.x)
            if (!xi.is_integer())
                throw internal_error("chain lp vertex optimum is not integral");
    }
    return greedy;
}

ChainLP build_chain_lp(const Instance& inst, const DualMap& dm, const LaminarFlow& lf,
                       ChainRhs mode) {
    ChainLP clp;
    for (const auto& le : lf.entries) clp.family.push_back(le.shore);
    for (int e = 0; e < inst.plane.num_edges(); ++e) {
        if (!inst.is_supply(e)) continue;
        auto [u, v] = dm.dual_edges[e];
        if (u == v) continue;  // bridge edge: no cut of the family crosses it
        for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
            auto idx = chain_indices(clp.family, a, b);
            if (idx.empty()) continue;
            long long rhs;
            if (mode == ChainRhs::capacity) {
                rhs = inst.capacity[e];
            } else {
                Rational load;
                for (int i : idx) load += lf.entries[i].value;
                rhs = load.ceil().num_int64();
            }
            clp.rows.push_back({a, b, rhs});
        }
    }
    return clp;
}

Flow half_integer_round(const Instance& inst, const DualMap& dm, const LaminarFlow& lf) {
    ChainLP clp = build_chain_lp(inst, dm, lf, ChainRhs::capacity);
    ChainLpSolution sol = solve_chain_lp_checked(clp);
    Flow out;
    Rational half(1, 2);
    for (size_t i = 0; i < lf.entries.size(); ++i)
        if (sol.x[i] > 0) out.add(lf.entries[i].path, Rational(sol.x[i]) * half);
    if (out.value() * Rational(2) < lf.value())
        throw internal_error("half-integer rounding lost more than half");
    if (!out.is_half_integer()) throw internal_error("rounded flow is not half-integer");
    FeasibilityReport rep = check_feasible(inst, out);
    if (!rep.feasible) throw internal_error("half-integer rounding produced infeasible flow");
    return out;
}

Flow plus_one_round(const Instance& inst, const DualMap& dm, const LaminarFlow& lf) {
    ChainLP clp = build_chain_lp(inst, dm, lf, ChainRhs::ceil_load);
    ChainLpSolution sol = solve_chain_lp_checked(clp);
    Flow out;
    for (size_t i = 0; i < lf.entries.size(); ++i)
        if (sol.x[i] > 0) out.add(lf.entries[i].path, Rational(sol.x[i]));
    if (out.value() < lf.value()) throw internal_error("plus-one rounding lost value");
    if (!out.is_integer()) throw internal_error("plus-one flow is not integer");
    FeasibilityReport rep = check_feasible(inst, out);
    for (int e = 0; e < inst.plane.num_edges(); ++e) {
        if (!inst.is_supply(e)) continue;
        if (rep.load[e] > Rational(inst.capacity[e] + 1))
            throw internal_error("plus-one rounding exceeded c(e) + 1");
    }
    return out;
}

RefineResult refine_halves(const Instance& inst, const DualMap& dm, const LaminarFlow& lf) {
    RefineResult rr;
    rr.residual_capacity = inst.capacity;
    Rational half(1, 2);
    for (const auto& le : lf.entries) {
        if (!le.value.is_half_integer())
            throw bad_parameter("refine_halves needs a half-integer laminar flow");
        Rational fl = le.value.floor();
        if (fl.sign() > 0) {
            long long n = fl.num_int64();
            rr.integer_part.add(le.path, fl);
            for (int e : le.path.edges) {
                rr.residual_capacity[e] -= n;
                if (rr.residual_capacity[e] < 0)
                    throw capacity_underflow("integer part exceeds capacity");
            }
        }
        if (le.value - fl == half) {
            LaminarEntry cut = le;
            cut.value = half;
            rr.split.cuts.push_back(std::move(cut));
        }
    }

    // canonical slot assignment per supply edge: the (u, v) chain outermost
    // to innermost, then the (v, u) chain innermost to outermost, packed in
    // consecutive pairs
    std::vector<Shore> shores;
    for (const auto& c : rr.split.cuts) shores.push_back(c.shore);
    std::vector<std::vector<int>> cuts_on_edge(inst.plane.num_edges());
    for (int i = 0; i < static_cast<int>(rr.split.cuts.size()); ++i)
        for (int e : rr.split.cuts[i].path.edges) cuts_on_edge[e].push_back(i);

    rr.split.slots.assign(inst.plane.num_edges(), {});
    std::set<std::pair<int, int>> ixn;
    for (int e = 0; e < inst.plane.num_edges(); ++e) {
        if (cuts_on_edge[e].empty()) continue;
        auto [u, v] = dm.dual_edges[e];
        auto cu = chain_indices(shores, u, v);   // innermost first
        auto cv = chain_indices(shores, v, u);
        std::vector<int> order(cu.rbegin(), cu.rend());
        order.insert(order.end(), cv.begin(), cv.end());
        if (order.size() != cuts_on_edge[e].size())
            throw internal_error("slot assignment lost a cut");
        if (static_cast<long long>(order.size()) > 2 * rr.residual_capacity[e])
            throw internal_error("more than two cuts per capacity unit");
        for (size_t i = 0; i < order.size(); i += 2) {
            std::vector<int> slot{order[i]};
            if (i + 1 < order.size()) {
                slot.push_back(order[i + 1]);
                ixn.insert({std::min(order[i], order[i + 1]),
                            std::max(order[i], order[i + 1])});
            }
            rr.split.slots[e].push_back(std::move(slot));
        }
    }
    rr.split.intersection_edges.assign(ixn.begin(), ixn.end());
    return rr;
}

namespace {

struct MisSolver {
    std::vector<std::vector<bool>> adj;
    std::vector<int> best;

    void search(std::vector<int>& candidates, std::vector<int>& current) {
        if (current.size() + candidates.size() <= best.size()) return;  // bound
        if (candidates.empty()) {
            best = current;
            return;
        }
        // branch on the candidate of maximum degree within the candidate set
        int pick = candidates[0], pick_deg = -1;
        for (int v : candidates) {
            int d = 0;
            for (int w : candidates)
                if (adj[v][w]) ++d;
            if (d > pick_deg) {
                pick = v;
                pick_deg = d;
            }
        }
        if (pick_deg == 0) {  // candidates are pairwise independent
            std::vector<int> all = current;
            all.insert(all.end(), candidates.begin(), candidates.end());
            if (all.size() > best.size()) best = std::move(all);
            return;
        }
        // include
        std::vector<int> rest;
        for (int w : candidates)
            if (w != pick && !adj[pick][w]) rest.push_back(w);
        current.push_back(pick);
        search(rest, current);
        current.pop_back();
        // exclude
        std::vector<int> without;
        for (int w : candidates)
            if (w != pick) without.push_back(w);
        search(without, current);
    }
};

}  // namespace

std::vector<int> stable_set(int n, const std::vector<std::pair<int, int>>& edges, int target) {
    MisSolver solver;
    solver.adj.assign(n, std::vector<bool>(n, false));
    for (auto [a, b] : edges) {
        if (a == b) throw bad_parameter("stable_set expects a simple graph");
        solver.adj[a][b] = solver.adj[b][a] = true;
    }
    std::vector<int> candidates(n), current;
    for (int i = 0; i < n; ++i) candidates[i] = i;
    solver.search(candidates, current);
    std::sort(solver.best.begin(), solver.best.end());
    if (static_cast<int>(solver.best.size()) < target)
        throw target_unreachable("maximum stable set " + std::to_string(solver.best.size()) +
                                 " is below target " + std::to_string(target));
    return solver.best;
}

Flow integer_round(const Instance& inst, const DualMap& dm, const Flow& half_flow) {
    if (half_flow.is_integer()) return half_flow;
    if (!half_flow.is_half_integer())
        throw bad_parameter("integer_round needs a half-integer flow");

    LaminarFlow lf = laminarize(inst, dm, half_flow);
    RefineResult rr = refine_halves(inst, dm, lf);

    Flow out = rr.integer_part;
    if (!rr.split.cuts.empty()) {
        int nc = static_cast<int>(rr.split.cuts.size());
        int target = (nc + 3) / 4;
        std::vector<int> chosen = stable_set(nc, rr.split.intersection_edges, target);
        for (int i : chosen) out.add(rr.split.cuts[i].path, Rational(1));
    }

    FeasibilityReport rep = check_feasible(inst, out);
    if (!rep.feasible) throw internal_error("integer rounding produced an infeasible flow");
    if (!out.is_integer()) throw internal_error("integer rounding produced fractional values");
    if (out.value() * Rational(2) < half_flow.value())
        throw internal_error("integer rounding lost more than half");
    return out;
}

}  // namespace planemf
