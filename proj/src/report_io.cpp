#include "fastsil/report_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>

namespace fastsil {

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "jsonl") return ReportFormat::Jsonl;
  return std::nullopt;
}

std::string format_double17(double value) {
  char buffer[64];
  const auto result =
      std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::general, 17);
  return std::string(buffer, result.ptr);
}

namespace {

void write_csv(const SilhouetteReport& report, std::ostream& out) {
  out << "index,own_cluster,neighbour_cluster,a,b,s\n";
  for (size_t i = 0; i < report.scores.size(); ++i) {
    const PointScore& p = report.scores[i];
    out << i << ',' << p.own_cluster << ',' << p.neighbour_cluster << ','
        << format_double17(p.a) << ',' << format_double17(p.b) << ',' << format_double17(p.s)
        << '\n';
  }
  out << "# summary: mean=" << format_double17(report.mean) << " metric="
      << metric_name(report.metric) << " engine=" << engine_name(report.engine)
      << " shards=" << report.shards << " wall_time_ms=" << format_double17(report.wall_time_ms)
      << '\n';
}

void write_jsonl(const SilhouetteReport& report, std::ostream& out) {
  for (size_t i = 0; i < report.scores.size(); ++i) {
    const PointScore& p = report.scores[i];
    out << "{\"index\":" << i << ",\"own\":" << p.own_cluster
        << ",\"neighbour\":" << p.neighbour_cluster << ",\"a\":" << format_double17(p.a)
        << ",\"b\":" << format_double17(p.b) << ",\"s\":" << format_double17(p.s) << "}\n";
  }
  out << "{\"mean\":" << format_double17(report.mean) << ",\"metric\":\""
      << metric_name(report.metric) << "\",\"engine\":\"" << engine_name(report.engine)
      << "\",\"shards\":" << report.shards
      << ",\"wall_time_ms\":" << format_double17(report.wall_time_ms) << "}\n";
}

}  // namespace

void write_report(const SilhouetteReport& report, std::ostream& out, ReportFormat format) {
  if (format == ReportFormat::Csv) {
    write_csv(report, out);
  } else {
    write_jsonl(report, out);
  }
}

void write_report(const SilhouetteReport& report, const std::filesystem::path& path,
                  ReportFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_report(report, out, format);
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace fastsil
