#pragma once

// Plain-text configuration files: one `key = value` per line, `#` comments,
// optional [section] headers for readability.  Unknown keys are errors; all
// diagnostics carry the file name and line number.

#include <string>
#include <variant>

#include "spinpair/experiments.hpp"

namespace spinpair {

using ParsedConfig = std::variant<Scenario, SweepSpec>;

ParsedConfig parse_config(const std::string& path);
ParsedConfig parse_config_text(const std::string& text,
                               const std::string& name = "<config>");

}  // namespace spinpair
