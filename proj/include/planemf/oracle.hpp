#pragma once

#include <optional>
#include <vector>

#include "planemf/flow_solver.hpp"
#include "planemf/instance.hpp"

namespace planemf {

struct MincutOracleResult {
    long long value = 0;
    std::vector<int> multicut;
};

/// Minimum multicut by subset enumeration over the supply edges.
/// Throws too_large beyond 22 supply edges.
MincutOracleResult exact_min_multicut(const Instance& inst);

struct FlowOracleResult {
    Rational value;
    Flow flow;
};

/// Maximum integer multiflow by branch and bound over path multiplicities,
/// pruned with the exact fractional bound on the residual instance.
FlowOracleResult exact_max_integer_flow(const Instance& inst, const PathSet& paths);

/// Maximum half-integer multiflow: the integer maximum at doubled
/// capacities, halved.
FlowOracleResult exact_max_half_integer_flow(const Instance& inst, const PathSet& paths);

}  // namespace planemf
