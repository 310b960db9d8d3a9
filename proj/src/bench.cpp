#include "fastsil/bench.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>

#include "fastsil/blobs.hpp"
#include "fastsil/engine.hpp"
#include "fastsil/report_io.hpp"

namespace fastsil {

namespace {

void validate(const BenchConfig& config) {
  if (config.sizes.empty()) throw ValidationError("bench needs at least one size");
  if (config.engines.empty()) throw ValidationError("bench needs at least one engine");
  if (config.trials < 3) {
    throw ValidationError("bench records require >= 3 trials, got " +
                          std::to_string(config.trials));
  }
  if (config.shards < 1) throw ValidationError("bench needs shards >= 1");
  for (const Index n : config.sizes) {
    if (n < config.k) {
      throw ValidationError("bench size " + std::to_string(n) + " below k = " +
                            std::to_string(config.k));
    }
  }
}

}  // namespace

void print_bench_table_header(std::ostream& out) {
  out << std::setw(10) << "n" << std::setw(6) << "d" << std::setw(6) << "k" << std::setw(20)
      << "metric" << std::setw(8) << "engine" << std::setw(8) << "shards" << std::setw(14)
      << "best_ms" << std::setw(22) << "mean_silhouette" << '\n';
}

void print_bench_record(std::ostream& out, const BenchRecord& r) {
  out << std::setw(10) << r.n << std::setw(6) << r.d << std::setw(6) << r.k << std::setw(20)
      << metric_name(r.metric) << std::setw(8) << engine_name(r.engine) << std::setw(8)
      << r.shards << std::setw(14) << std::fixed << std::setprecision(3) << r.wall_time_ms
      << std::setw(22) << std::setprecision(12) << r.mean_silhouette << '\n';
  out.unsetf(std::ios::fixed);
}

std::vector<BenchRecord> run_bench(const BenchConfig& config, std::ostream* table) {
  validate(config);
  if (table) print_bench_table_header(*table);

  std::vector<BenchRecord> records;
  records.reserve(config.sizes.size() * config.engines.size());
  for (const Index n : config.sizes) {
    const Dataset ds = generate_blobs({.n = n,
                                       .d = config.d,
                                       .k = config.k,
                                       .spread = config.spread,
                                       .separation = config.separation,
                                       .seed = config.seed});
    for (const Engine engine : config.engines) {
      BenchRecord record{.n = n,
                         .d = config.d,
                         .k = config.k,
                         .metric = config.metric,
                         .engine = engine,
                         .shards = engine == Engine::Naive ? 1 : config.shards,
                         .wall_time_ms = 0.0,
                         .mean_silhouette = 0.0};
      for (int trial = 0; trial < config.trials; ++trial) {
        const SilhouetteReport report =
            compute_silhouette(ds, config.metric, engine, record.shards);
        if (trial == 0 || report.wall_time_ms < record.wall_time_ms) {
          record.wall_time_ms = report.wall_time_ms;
        }
        record.mean_silhouette = report.mean;  // deterministic across trials
      }
      records.push_back(record);
      if (table) print_bench_record(*table, record);
    }
  }
  return records;
}

void append_records_jsonl(std::span<const BenchRecord> records,
                          const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw IoError("cannot open '" + path.string() + "' for appending");
  for (const BenchRecord& r : records) {
    out << "{\"n\":" << r.n << ",\"d\":" << r.d << ",\"k\":" << r.k << ",\"metric\":\""
        << metric_name(r.metric) << "\",\"engine\":\"" << engine_name(r.engine)
        << "\",\"shards\":" << r.shards << ",\"wall_time_ms\":" << format_double17(r.wall_time_ms)
        << ",\"mean_silhouette\":" << format_double17(r.mean_silhouette) << "}\n";
  }
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

namespace {

struct PanelGeom {
  double x0, y0, width, height;  // plot area in px, y grows downward
};

std::string marker(Engine engine, double x, double y) {
  char buf[160];
  if (engine == Engine::Naive) {
    std::snprintf(buf, sizeof(buf), "<circle cx=\"%.1f\" cy=\"%.1f\" r=\"4\"/>", x, y);
  } else {
    std::snprintf(buf, sizeof(buf), "<rect x=\"%.1f\" y=\"%.1f\" width=\"7\" height=\"7\"/>",
                  x - 3.5, y - 3.5);
  }
  return buf;
}

const char* series_color(Engine engine) {
  return engine == Engine::Naive ? "#1f77b4" : "#d62728";
}

void write_panel(std::ostream& out, std::span<const BenchRecord> records, const PanelGeom& g,
                 bool log_scale, const std::string& id, const std::string& title) {
  double max_n = 1.0, min_t = 1e300, max_t = 1e-300;
  for (const auto& r : records) {
    max_n = std::max(max_n, static_cast<double>(r.n));
    min_t = std::min(min_t, std::max(1e-3, r.wall_time_ms / 1000.0));
    max_t = std::max(max_t, std::max(1e-3, r.wall_time_ms / 1000.0));
  }
  const double lo = log_scale ? std::floor(std::log10(min_t)) : 0.0;
  const double hi = log_scale ? std::ceil(std::log10(max_t) + 1e-9) : max_t * 1.08;
  const double span = std::max(1e-9, hi - lo);

  const auto sx = [&](double n) { return g.x0 + (n / (max_n * 1.05)) * g.width; };
  const auto sy = [&](double seconds) {
    const double v = log_scale ? std::log10(std::max(1e-3, seconds)) : seconds;
    return g.y0 + g.height - ((v - lo) / span) * g.height;
  };

  out << "<g id=\"" << id << "\">\n";
  out << "<text x=\"" << g.x0 + g.width / 2 << "\" y=\"" << g.y0 - 14
      << "\" text-anchor=\"middle\" font-size=\"13\">" << title << "</text>\n";
  // frame
  out << "<rect x=\"" << g.x0 << "\" y=\"" << g.y0 << "\" width=\"" << g.width << "\" height=\""
      << g.height << "\" fill=\"none\" stroke=\"#333\"/>\n";

  // x ticks: one per distinct size
  std::vector<double> xticks;
  for (const auto& r : records) {
    const double n = static_cast<double>(r.n);
    if (std::find(xticks.begin(), xticks.end(), n) == xticks.end()) xticks.push_back(n);
  }
  std::sort(xticks.begin(), xticks.end());
  for (const double n : xticks) {
    const double x = sx(n);
    out << "<line x1=\"" << x << "\" y1=\"" << g.y0 + g.height << "\" x2=\"" << x << "\" y2=\""
        << g.y0 + g.height + 5 << "\" stroke=\"#333\"/>\n";
    out << "<text x=\"" << x << "\" y=\"" << g.y0 + g.height + 18
        << "\" text-anchor=\"middle\" font-size=\"10\">" << static_cast<long long>(n)
        << "</text>\n";
  }
  out << "<text x=\"" << g.x0 + g.width / 2 << "\" y=\"" << g.y0 + g.height + 34
      << "\" text-anchor=\"middle\" font-size=\"12\">Dataset size (N)</text>\n";

  // y ticks
  const int yticks = log_scale ? static_cast<int>(hi - lo) : 5;
  for (int t = 0; t <= yticks; ++t) {
    const double v = lo + (span * t) / yticks;
    const double y = g.y0 + g.height - (static_cast<double>(t) / yticks) * g.height;
    out << "<line x1=\"" << g.x0 - 5 << "\" y1=\"" << y << "\" x2=\"" << g.x0 << "\" y2=\"" << y
        << "\" stroke=\"#333\"/>\n";
    char label[48];
    if (log_scale) {
      std::snprintf(label, sizeof(label), "1e%d", static_cast<int>(v));
    } else {
      std::snprintf(label, sizeof(label), "%.3g", v);
    }
    out << "<text x=\"" << g.x0 - 8 << "\" y=\"" << y + 3
        << "\" text-anchor=\"end\" font-size=\"10\">" << label << "</text>\n";
  }
  out << "<text x=\"" << g.x0 - 48 << "\" y=\"" << g.y0 + g.height / 2
      << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 " << g.x0 - 48 << " "
      << g.y0 + g.height / 2 << ")\">" << (log_scale ? "seconds (log10)" : "seconds")
      << "</text>\n";

  for (const Engine engine : {Engine::Naive, Engine::Fast}) {
    std::vector<const BenchRecord*> series;
    for (const auto& r : records) {
      if (r.engine == engine) series.push_back(&r);
    }
    if (series.empty()) continue;
    std::sort(series.begin(), series.end(),
              [](const BenchRecord* a, const BenchRecord* b) { return a->n < b->n; });
    out << "<g class=\"series series-" << engine_name(engine) << "\" fill=\""
        << series_color(engine) << "\" stroke=\"" << series_color(engine) << "\">\n";
    out << "<polyline fill=\"none\" points=\"";
    for (const auto* r : series) {
      out << sx(static_cast<double>(r->n)) << ',' << sy(r->wall_time_ms / 1000.0) << ' ';
    }
    out << "\"/>\n";
    for (const auto* r : series) {
      out << marker(engine, sx(static_cast<double>(r->n)), sy(r->wall_time_ms / 1000.0)) << '\n';
    }
    out << "</g>\n";
  }
  out << "</g>\n";
}

}  // namespace

void write_scaling_svg(std::span<const BenchRecord> records, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1020\" height=\"470\" "
         "viewBox=\"0 0 1020 470\" font-family=\"sans-serif\">\n";
  out << "<rect width=\"1020\" height=\"470\" fill=\"white\"/>\n";

  // legend
  out << "<g font-size=\"12\">"
      << "<circle cx=\"380\" cy=\"18\" r=\"4\" fill=\"" << series_color(Engine::Naive) << "\"/>"
      << "<text x=\"390\" y=\"22\">naive engine</text>"
      << "<rect x=\"500\" y=\"14\" width=\"7\" height=\"7\" fill=\"" << series_color(Engine::Fast)
      << "\"/>"
      << "<text x=\"513\" y=\"22\">fast engine</text></g>\n";

  write_panel(out, records, {70.0, 60.0, 380.0, 330.0}, false, "panel-linear", "Linear scale");
  write_panel(out, records, {580.0, 60.0, 380.0, 330.0}, true, "panel-log10",
              "Logarithmic scale (base 10)");
  out << "</svg>\n";
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace fastsil
