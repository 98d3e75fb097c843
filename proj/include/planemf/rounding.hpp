#pragma once

#include <vector>

#include "planemf/laminar.hpp"

namespace planemf {

/// Packing LP over a laminar family where every constraint row is a chain
/// slice L(u, v) = { L : u in L, v not in L } with an integer right-hand
/// side. The coefficient matrix is a network matrix, so basic optima are
/// integral.
struct ChainLP {
    std::vector<Shore> family;  // laminar, distinct
    struct Row {
        int u, v;        // ordered dual vertex pair defining the chain slice
        long long rhs;   // >= 0
    };
    std::vector<Row> rows;

    std::vector<int> row_members(int r) const;  // indices into family, innermost first
};

struct ChainLpSolution {
    std::vector<long long> x;  // per family member, integral feasible
    std::vector<long long> y;  // per row, 0/1 dual
    long long value = 0;       // = sum x = sum rhs * y
};

/// Greedy primal-dual solver for the chain LP: repeatedly fixes an
/// inclusion-minimal set at the tightest remaining row. Returns matching
/// primal and dual certificates.
ChainLpSolution greedy_chain_lp(const ChainLP& clp);

/// Runs the greedy and the exact simplex on the same system, checks the two
/// optima agree and the simplex vertex is integral, and returns the greedy
/// solution.
ChainLpSolution solve_chain_lp_checked(const ChainLP& clp);

enum class ChainRhs {
    capacity,   // both rows of an edge get c(e)
    ceil_load,  // each row gets the rounded-up chain load of the input flow
};

ChainLP build_chain_lp(const Instance& inst, const DualMap& dm, const LaminarFlow& lf,
                       ChainRhs mode);

/// Half-integer rounding: value at least half the input, feasible for c.
Flow half_integer_round(const Instance& inst, const DualMap& dm, const LaminarFlow& lf);

/// Integer rounding into relaxed capacities: value at least the input,
/// per-edge load at most c(e) + 1.
Flow plus_one_round(const Instance& inst, const DualMap& dm, const LaminarFlow& lf);

/// The all-halves residue of a laminar half-integer flow plus its slot
/// structure on the capacity units of each supply edge.
struct HalfSplitStructure {
    std::vector<LaminarEntry> cuts;                    // every value exactly 1/2
    std::vector<std::vector<std::vector<int>>> slots;  // per edge: slots, each with <= 2 cut ids
    std::vector<std::pair<int, int>> intersection_edges;  // cut pairs sharing a slot
};

struct RefineResult {
    Flow integer_part;
    std::vector<long long> residual_capacity;  // per edge after integer part removal
    HalfSplitStructure split;
};

RefineResult refine_halves(const Instance& inst, const DualMap& dm, const LaminarFlow& lf);

/// Exact maximum independent set by branch and bound; throws
/// target_unreachable when even the optimum is below the target.
std::vector<int> stable_set(int n, const std::vector<std::pair<int, int>>& edges, int target);

/// Half-integer -> integer rounding at factor 1/2 via the stable-set step.
Flow integer_round(const Instance& inst, const DualMap& dm, const Flow& half_flow);

}  // namespace planemf
