#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "domtri/plane_graph.h"

namespace domtri {

/// Text format "PGR v1":
///
///     pgr 1 <n> <outer face walk>
///     <id>: <ccw neighbour list>      (n lines)
///
/// Lines starting with '#' and blank lines are ignored on input. Output is
/// canonical: ascending ids, rotations starting at their smallest neighbour,
/// outer walk at its smallest rotation, single spaces, '\n' line ends.
std::string to_pgr(const PlaneGraph& g);
PlaneGraph parse_pgr(std::string_view text);

PlaneGraph read_pgr_file(const std::filesystem::path& path);
void write_pgr_file(const std::filesystem::path& path, const PlaneGraph& g);

}  // namespace domtri
