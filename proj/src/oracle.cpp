#include "planemf/oracle.hpp"

#include <algorithm>

#include "planemf/errors.hpp"
#include "planemf/multicut.hpp"

namespace planemf {

MincutOracleResult exact_min_multicut(const Instance& inst) {
    auto supply = inst.supply_edges();
    int m = static_cast<int>(supply.size());
    if (m > 22) throw too_large("min multicut oracle limited to 22 supply edges");

    MincutOracleResult best;
    best.value = 0;
    for (int e : supply) best.value += inst.capacity[e];
    best.multicut = supply;  // Q = E always works

    for (unsigned long long mask = 0; mask < (1ull << m); ++mask) {
        long long cost = 0;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) cost += inst.capacity[supply[i]];
        if (cost >= best.value) continue;
        std::vector<int> q;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) q.push_back(supply[i]);
        if (verify_multicut(inst, q)) {
            best.value = cost;
            best.multicut = std::move(q);
        }
    }
    return best;
}

namespace {

struct IntFlowSearch {
    const Instance& inst;
    const PathSet& paths;
    std::vector<long long> residual;  // per edge
    std::vector<long long> mult;      // per path
    long long current = 0;
    long long best = 0;
    std::vector<long long> best_mult;
    long long nodes = 0;

    explicit IntFlowSearch(const Instance& i, const PathSet& p)
        : inst(i), paths(p), residual(i.capacity), mult(p.size(), 0), best_mult(p.size(), 0) {}

    // exact fractional optimum of the remaining paths under the residual
    // capacities; used as an admissible bound
    Rational fractional_bound(int from) const {
        auto sup = inst.supply_edges();
        std::vector<int> row_of(inst.plane.num_edges(), -1);
        for (size_t i = 0; i < sup.size(); ++i) row_of[sup[i]] = static_cast<int>(i);
        LinearProgram lp;
        int n = paths.size() - from;
        if (n == 0) return Rational(0);
        lp.rows.assign(sup.size(), std::vector<Rational>(n, Rational(0)));
        lp.rhs.resize(sup.size());
        for (size_t i = 0; i < sup.size(); ++i) lp.rhs[i] = Rational(residual[sup[i]]);
        for (int j = from; j < paths.size(); ++j)
            for (int e : paths.paths[j].edges) lp.rows[row_of[e]][j - from] = Rational(1);
        return solve_max(lp).value;
    }

    void search(int idx) {
        if (++nodes > 200000) throw too_large("integer flow oracle exceeded its node budget");
        if (current > best) {
            best = current;
            best_mult = mult;
        }
        if (idx == paths.size()) return;
        // cheap admissible bound first, the exact lp bound only when needed
        long long loose = current;
        for (int j = idx; j < paths.size(); ++j) loose += residual_fit(j);
        if (loose <= best) return;
        if (Rational(current) + fractional_bound(idx) <= Rational(best)) return;
        long long fit = residual_fit(idx);
        for (long long v = fit; v >= 0; --v) {
            mult[idx] = v;
            current += v;
            for (int e : paths.paths[idx].edges) residual[e] -= v;
            search(idx + 1);
            for (int e : paths.paths[idx].edges) residual[e] += v;
            current -= v;
            mult[idx] = 0;
        }
    }

    long long residual_fit(int idx) const {
        long long fit = -1;
        for (int e : paths.paths[idx].edges) {
            long long r = residual[e];
            if (fit == -1 || r < fit) fit = r;
        }
        return std::max<long long>(fit, 0);
    }
};

}  // namespace

FlowOracleResult exact_max_integer_flow(const Instance& inst, const PathSet& paths) {
    if (inst.total_capacity() > 120 || paths.size() > 40)
        throw too_large("integer flow oracle limited to small instances");
    // order paths by demand path-count, fewest options first
    PathSet ordered;
    ordered.by_demand.assign(inst.plane.num_edges(), {});
    std::vector<int> order(paths.size());
    for (int i = 0; i < paths.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return paths.by_demand[paths.paths[a].demand_edge].size() <
               paths.by_demand[paths.paths[b].demand_edge].size();
    });
    for (int i : order) ordered.paths.push_back(paths.paths[i]);
    for (int i = 0; i < ordered.size(); ++i)
        ordered.by_demand[ordered.paths[i].demand_edge].push_back(i);

    IntFlowSearch s(inst, ordered);
    s.search(0);
    FlowOracleResult res;
    res.value = Rational(s.best);
    for (int i = 0; i < ordered.size(); ++i)
        if (s.best_mult[i] > 0) res.flow.add(ordered.paths[i], Rational(s.best_mult[i]));
    return res;
}

FlowOracleResult exact_max_half_integer_flow(const Instance& inst, const PathSet& paths) {
    Instance doubled = inst;
    for (auto& c : doubled.capacity) c *= 2;
    FlowOracleResult r = exact_max_integer_flow(doubled, paths);
    FlowOracleResult out;
    out.value = r.value / Rational(2);
    Rational half(1, 2);
    for (const auto& fe : r.flow.entries) out.flow.add(fe.path, fe.value * half);
    return out;
}

}  // namespace planemf
