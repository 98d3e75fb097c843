#pragma once

#include <cstdint>

#include "planemf/instance.hpp"

namespace planemf {

/// Ladder family: spine a_1..a_k with pendant b_i, unit capacities, demand
/// edges along the b row plus the nested (b_i, a_{i+2}) chords. Requires
/// k >= 3.
Instance gen_gk(int k);

/// Replaces every demand edge uv by a fresh vertex w, a demand edge uw and a
/// unit-capacity supply edge wv, subdividing in place.
Instance overline(const Instance& inst);

/// The four-cycle with both diagonals as demands, after the overline
/// transform; the classic integrality-gap-1/2 instance.
Instance gen_c4_2k2_overline();

/// Random planar instance for property tests: a connected sub-grid with
/// random capacities and up to six demand chords inserted inside faces.
/// Deterministic in the seed; instances are kept small enough that path
/// enumeration stays in the hundreds.
Instance gen_fuzz(uint64_t seed);

}  // namespace planemf
