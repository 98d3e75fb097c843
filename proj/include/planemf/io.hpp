#pragma once

#include <string>

#include "planemf/instance.hpp"

namespace planemf {

/// planemf v1 text format. Zero-capacity supply edges are dropped while
/// loading (edge ids are reassigned in file order over the kept edges).
Instance parse(const std::string& text);
std::string serialize(const Instance& inst);

/// Flow companion format: one line per path with the demand edge id, the
/// exact value and the vertex walk.
Flow parse_flow(const Instance& inst, const std::string& text);
std::string serialize_flow(const Instance& inst, const Flow& f);

Instance load_instance_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);
std::string read_file(const std::string& path);

}  // namespace planemf
