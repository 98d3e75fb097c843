#pragma once

#include <stdexcept>
#include <string>

namespace planemf {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// plane_core
struct euler_violation : error { using error::error; };
struct disconnected_graph : error { using error::error; };
struct malformed_rotation : error { using error::error; };
struct not_a_circuit : error { using error::error; };

// instance_io
struct syntax_error : error {
    int line;
    syntax_error(int line_, const std::string& what_)
        : error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};
struct bad_parameter : error { using error::error; };

// fractional_flow
struct path_explosion : error { using error::error; };
struct unknown_path : error { using error::error; };

// exact_lp
struct lp_unbounded : error { using error::error; };

// oracle
struct too_large : error { using error::error; };

// rounding
struct target_unreachable : error { using error::error; };
struct capacity_underflow : error { using error::error; };

// multicut
struct no_path_in_cut : error { using error::error; };

// invariant breakage that indicates a bug, never expected to fire
struct internal_error : error { using error::error; };

}  // namespace planemf
