#pragma once

#include "tasirs/sim.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tasirs {

struct RunSpec {
    Scheme scheme = Scheme::TasOstbc;
    SimConfig config;
    std::string out_path;
};

using RunSpecEntry = std::pair<std::string, std::string>;

// Recognised keys, in canonical order:
//   scheme snr frames packets seed nt nr lt nref alpha phase lambda d out
// `snr` takes start:step:stop (inclusive) or a comma-separated list.
// `scheme` is required; everything else defaults. Later entries override
// earlier ones. Throws ValidationError naming the key on any problem.
RunSpec parse_runspec(const std::vector<RunSpecEntry>& entries);

// key=value lines; blank lines and lines starting with '#' are skipped.
RunSpec parse_runspec(std::string_view text);

// Splits config text into entries without interpreting them.
std::vector<RunSpecEntry> runspec_entries(std::string_view text);

// Expands start:step:stop. Throws ValidationError for step <= 0 or stop < start.
std::vector<double> expand_snr_range(std::string_view range);

// Canonical key=value lines for everything that determines the simulation
// (the output path is not included). Feeding them back through
// parse_runspec reproduces scheme and config exactly.
std::vector<std::string> format_runspec(Scheme scheme, const SimConfig& cfg);

// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

}  // namespace tasirs
