#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "fastsil/report.hpp"

namespace fastsil {

enum class ReportFormat { Csv, Jsonl };

std::optional<ReportFormat> parse_report_format(std::string_view name);

/// Shortest-form decimal with 17 significant digits; strtod round-trips the
/// exact bits.
std::string format_double17(double value);

/// Per-point rows (index, own, neighbour, a, b, s) followed by one summary
/// record (mean, metric, engine, shards, wall_time_ms). See docs/formats.md.
void write_report(const SilhouetteReport& report, std::ostream& out, ReportFormat format);
void write_report(const SilhouetteReport& report, const std::filesystem::path& path,
                  ReportFormat format);

}  // namespace fastsil
