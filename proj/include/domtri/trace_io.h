#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "domtri/generators.h"

namespace domtri {

/// JSON sidecar for a BuildTrace:
///
///     {"format": "domtri-trace", "version": 1, "kind": "stacked"|"eulerian",
///      "steps": [{"face": [x, y, z], "inserted": [...], "pairs": [[a, x], ...]}]}
///
/// "pairs" is written for Eulerian steps and ignored on input (it is
/// implied by the order of "inserted").
std::string trace_to_json(const BuildTrace& trace);
BuildTrace trace_from_json(std::string_view text);

BuildTrace read_trace_file(const std::filesystem::path& path);
void write_trace_file(const std::filesystem::path& path, const BuildTrace& trace);

}  // namespace domtri
