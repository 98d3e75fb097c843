#pragma once

#include <vector>

#include "planemf/flow_solver.hpp"
#include "planemf/instance.hpp"

namespace planemf {

/// Result of the moat-growing primal-dual run: the multicut, its dual-side
/// connector, the grown moat values, and the feasible flow extracted from
/// them. Guarantees c(Q) <= 2 |f| exactly.
struct MulticutRun {
    std::vector<int> multicut;                       // Q, supply edge ids
    std::vector<int> connector;                      // same ids read as dual edges
    std::vector<std::pair<Shore, Rational>> moats;   // y, on canonical shores
    Flow flow;
    std::vector<int> addition_order;                 // growth phase, before reverse delete
    long long multicut_capacity = 0;
};

/// 1 when exactly one demand dual edge crosses the face set, else 0.
int p_value(const Instance& inst, const DualMap& dm, const std::vector<bool>& in_set);

/// True when no demand dual edge is a bridge of (V*, Qstar union F*).
bool is_2connector(const Instance& inst, const DualMap& dm, const std::vector<int>& qstar);

/// Inclusion-minimal face sets S with p(S) = 1 whose supply boundary avoids
/// qstar: the leaf blocks of the bridge forest after contracting qstar.
/// Returned sets are pairwise disjoint.
std::vector<std::vector<int>> minimal_violated_sets(const Instance& inst, const DualMap& dm,
                                                    const std::vector<int>& qstar);

/// Uniform moat growing + reverse delete + flow extraction.
MulticutRun wgmv_multicut(const Instance& inst);

/// Flow built from a dual solution: one path per moat, inside the moat's
/// cut, valued by the moat.
Flow flow_from_dual(const Instance& inst, const DualMap& dm,
                    const std::vector<std::pair<Shore, Rational>>& y);

/// True when removing Q from the supply graph separates every demand pair.
bool verify_multicut(const Instance& inst, const std::vector<int>& q);

}  // namespace planemf
