#include "fastsil/csv.hpp"

#include "fastsil/report_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

namespace fastsil {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view line, char delimiter) {
  std::vector<std::string_view> cells;
  size_t begin = 0;
  while (true) {
    const size_t pos = line.find(delimiter, begin);
    if (pos == std::string_view::npos) {
      cells.push_back(trim(line.substr(begin)));
      break;
    }
    cells.push_back(trim(line.substr(begin, pos - begin)));
    begin = pos + 1;
  }
  return cells;
}

bool parse_number(std::string_view cell, double& value) {
  const char* first = cell.data();
  const char* last = first + cell.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc{} && ptr == last && !cell.empty();
}

[[noreturn]] void fail(std::string_view name, size_t line, const std::string& what) {
  throw ValidationError(std::string(name) + ", line " + std::to_string(line) + ": " + what);
}

}  // namespace

Dataset read_csv_text(std::string_view text, const CsvSchema& schema, std::string_view name) {
  // Collect non-blank lines with their 1-based physical numbers.
  std::vector<std::pair<size_t, std::string_view>> lines;
  size_t line_no = 0;
  size_t begin = 0;
  while (begin <= text.size()) {
    const size_t pos = text.find('\n', begin);
    const size_t end = pos == std::string_view::npos ? text.size() : pos;
    ++line_no;
    const std::string_view raw = text.substr(begin, end - begin);
    if (!trim(raw).empty()) lines.emplace_back(line_no, raw);
    if (pos == std::string_view::npos) break;
    begin = pos + 1;
  }
  if (lines.empty()) throw ValidationError(std::string(name) + ": no data rows");

  const auto first_cells = split(lines.front().second, schema.delimiter);
  const size_t num_columns = first_cells.size();
  if (num_columns < 2) {
    fail(name, lines.front().first, "need at least one feature column plus the label column");
  }

  size_t label_col;
  if (!schema.label_name.empty()) {
    label_col = num_columns;  // resolved from the header below
  } else {
    const int idx = schema.label_index < 0 ? static_cast<int>(num_columns) + schema.label_index
                                           : schema.label_index;
    if (idx < 0 || static_cast<size_t>(idx) >= num_columns) {
      throw ValidationError(std::string(name) + ": label column " +
                            std::to_string(schema.label_index) + " outside the " +
                            std::to_string(num_columns) + " columns present");
    }
    label_col = static_cast<size_t>(idx);
  }

  bool has_header;
  if (!schema.label_name.empty()) {
    has_header = true;  // names only exist in a header
  } else if (schema.has_header.has_value()) {
    has_header = *schema.has_header;
  } else {
    // Auto-detect: a header is a first row whose feature cells are not all numbers.
    has_header = false;
    for (size_t c = 0; c < num_columns; ++c) {
      double ignored;
      if (c != label_col && !parse_number(first_cells[c], ignored)) {
        has_header = true;
        break;
      }
    }
  }

  if (!schema.label_name.empty()) {
    if (!has_header) {
      throw ValidationError(std::string(name) + ": label column by name requires a header row");
    }
    label_col = num_columns;
    for (size_t c = 0; c < num_columns; ++c) {
      if (first_cells[c] == schema.label_name) {
        label_col = c;
        break;
      }
    }
    if (label_col == num_columns) {
      throw ValidationError(std::string(name) + ": no header column named '" + schema.label_name +
                            "'");
    }
  }

  const size_t first_data = has_header ? 1 : 0;
  if (lines.size() <= first_data) throw ValidationError(std::string(name) + ": no data rows");

  const Index dims = static_cast<Index>(num_columns - 1);
  const Index n = static_cast<Index>(lines.size() - first_data);
  Matrix points(dims, n);
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(n));

  for (Index row = 0; row < n; ++row) {
    const auto& [physical, raw] = lines[first_data + static_cast<size_t>(row)];
    const auto cells = split(raw, schema.delimiter);
    if (cells.size() != num_columns) {
      fail(name, physical,
           "expected " + std::to_string(num_columns) + " columns, got " +
               std::to_string(cells.size()) + " (inconsistent dimensionality)");
    }
    Index l = 0;
    for (size_t c = 0; c < num_columns; ++c) {
      if (c == label_col) continue;
      double value;
      if (!parse_number(cells[c], value)) {
        fail(name, physical, "cannot parse '" + std::string(cells[c]) + "' as a number");
      }
      if (!std::isfinite(value)) {
        fail(name, physical, "non-finite feature value '" + std::string(cells[c]) + "'");
      }
      points(l++, row) = value;
    }
    const std::string_view label = cells[label_col];
    if (label.empty()) fail(name, physical, "empty label");
    labels.emplace_back(label);
  }

  return validate_and_densify(std::move(points), std::move(labels));
}

Dataset read_csv(const std::filesystem::path& path, const CsvSchema& schema) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed reading '" + path.string() + "'");
  return read_csv_text(buffer.str(), schema, path.string());
}

void write_points_csv(const Dataset& ds, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");

  for (Index l = 0; l < ds.dims(); ++l) out << 'f' << l << ',';
  out << "label\n";

  for (Index i = 0; i < ds.num_points(); ++i) {
    for (Index l = 0; l < ds.dims(); ++l) {
      out << format_double17(ds.points()(l, i)) << ',';
    }
    out << ds.cluster_names()[static_cast<size_t>(ds.label(i))] << '\n';
  }
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace fastsil
