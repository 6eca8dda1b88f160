#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "domtri/analysis.h"

namespace domtri {

enum class ReportFormat { Structured, Tabular };

/// Runtimes are written only with timings = true; otherwise the JSON omits
/// them and the table prints "-", so output is a pure function of the reports.
nlohmann::json report_to_json(const BoundReport& r, bool timings = false);
BoundReport report_from_json(const nlohmann::json& j);

/// JSON document {"format": "domtri-reports", "version": 1, "reports": [...]}.
std::string emit_structured(const std::vector<BoundReport>& reports, bool timings = false);
std::vector<BoundReport> parse_structured(std::string_view text);
std::vector<BoundReport> read_structured_file(const std::filesystem::path& path);

/// Tab-separated, one row per (graph, bound) pair, header
/// family n seed bound lhs rhs holds runtime_ms.
std::string emit_tabular(const std::vector<BoundReport>& reports, bool timings = false);

std::string emit(const std::vector<BoundReport>& reports, ReportFormat format, bool timings = false);
void emit_to_file(const std::vector<BoundReport>& reports, ReportFormat format, const std::filesystem::path& path,
                  bool timings = false);

}  // namespace domtri
