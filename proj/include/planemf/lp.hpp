#pragma once

#include <vector>

#include "planemf/rational.hpp"

namespace planemf {

/// max sum(x)  s.t.  A x <= b, x >= 0, with b >= 0 (so x = 0 is feasible).
/// Every LP in this pipeline has an all-ones objective.
struct LinearProgram {
    std::vector<std::vector<Rational>> rows;  // A, one inner vector per constraint
    std::vector<Rational> rhs;                // b

    int num_rows() const { return static_cast<int>(rows.size()); }
    int num_cols() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
};

struct LpSolution {
    std::vector<Rational> x;     // basic primal optimum (a vertex)
    Rational value;              // = sum(x) = b . y, exactly
    std::vector<Rational> dual;  // y >= 0 with A^T y >= 1
};

/// Dense exact simplex, Bland's pivot rule, no floating point. The returned
/// solution carries its own optimality certificate: the solver verifies
/// primal feasibility, dual feasibility, and exact equality of the two
/// objective values before returning. Throws lp_unbounded.
LpSolution solve_max(const LinearProgram& lp);

}  // namespace planemf
