#pragma once

#include <string>

#include "attinit/experiment.hpp"

namespace attinit {

/// Render a spec as the key-value config text (sections [scenario], [filter]).
/// Doubles are written in shortest exact form, so parse(serialize(s)) == s.
std::string serialize_spec(const ExperimentSpec& spec);

/// Parse config text; unknown keys and malformed values throw ConfigError
/// naming the field. Fields not present keep their defaults.
ExperimentSpec parse_spec(const std::string& text);

/// Load a spec from a file (IoError when unreadable).
ExperimentSpec load_spec_file(const std::string& path);

/// Write a spec to a file.
void save_spec_file(const ExperimentSpec& spec, const std::string& path);

}  // namespace attinit
