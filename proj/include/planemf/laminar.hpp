#pragma once

#include <vector>

#include "planemf/flow_solver.hpp"
#include "planemf/instance.hpp"

namespace planemf {

/// One cut of a laminar flow: the shore, its weight, the unique demand edge
/// crossing it, and the supply path (the rest of the cut's primal circuit).
struct LaminarEntry {
    Shore shore;
    Rational value;  // > 0
    int demand_edge = -1;
    Path path;
};

struct LaminarFlow {
    std::vector<LaminarEntry> entries;  // sorted by shore, shores distinct

    Rational value() const;
    Flow to_flow() const;
    /// All entries with u inside and v outside, innermost first.
    std::vector<int> chain(int u, int v) const;
};

using WeightedShores = std::vector<std::pair<Shore, Rational>>;

/// Maps every positive-flow path's circuit through shore_from_cycle;
/// duplicate shores merge by summing weights.
WeightedShores flow_to_shores(const Instance& inst, const DualMap& dm, const Flow& f);

/// Iterated uncrossing: replaces crossing cuts until the family is laminar,
/// then shrinks every cut to the single circuit through its demand edge.
/// Value is preserved exactly and no dual edge load ever increases.
LaminarFlow uncross(const Instance& inst, const DualMap& dm, const WeightedShores& family);

/// Convenience: flow -> laminar flow of the same value (Lemma 1 pipeline).
LaminarFlow laminarize(const Instance& inst, const DualMap& dm, const Flow& f);

/// Indices of shores containing u but not v, sorted innermost first; the
/// result is checked to be a chain.
std::vector<int> chain_indices(const std::vector<Shore>& shores, int u, int v);

}  // namespace planemf
