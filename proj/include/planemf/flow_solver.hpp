#pragma once

#include <vector>

#include "planemf/instance.hpp"
#include "planemf/lp.hpp"

namespace planemf {

/// All simple supply paths between the endpoints of each demand edge,
/// canonicalized and deduplicated. Throws path_explosion past the cap.
PathSet enumerate_paths(const Instance& inst, int cap = 20000);

struct MaxFlowResult {
    Flow flow;
    Rational value;
    std::vector<Rational> edge_dual;  // per supply edge id of inst (0 elsewhere)
};

/// Exact fractional maximum over the enumerated paths, with the LP duality
/// certificate retained.
MaxFlowResult max_multiflow(const Instance& inst, const PathSet& paths);

struct FeasibilityReport {
    bool feasible = false;
    std::vector<Rational> load;   // per edge id (nonzero only on supply edges)
    std::vector<int> max_loaded;  // supply edges attaining the maximum load
    std::vector<int> violated;    // supply edges with load > capacity
};

/// Per-edge loads against capacities. Throws unknown_path if some entry is
/// not a valid supply path for its demand edge.
FeasibilityReport check_feasible(const Instance& inst, const Flow& f);

}  // namespace planemf
