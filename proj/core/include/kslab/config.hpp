#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "kslab/solver.hpp"

namespace kslab {

/// Flat key=value file: one pair per line, '#' starts a comment, blank lines
/// ignored. Parsing reports malformed lines with their line number.
std::map<std::string, std::string> parse_key_value_file(const std::filesystem::path& path);

/// Builds a SimConfig from a key=value file. Every field has a documented
/// key; an unrecognized key raises std::invalid_argument naming it.
SimConfig sim_config_from_file(const std::filesystem::path& path);

/// Writes every key with its resolved value, sorted, for reproducibility.
void write_resolved_config(const std::filesystem::path& path, const SimConfig& cfg);

}  // namespace kslab
