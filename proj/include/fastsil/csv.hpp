#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "fastsil/dataset.hpp"

namespace fastsil {

/// Shape of a CSV dataset: one point per row, features as finite numbers,
/// plus one label column (any text). No quoting; blank lines are skipped.
struct CsvSchema {
  char delimiter = ',';
  /// Label column by position; -1 selects the last column. Ignored when
  /// label_name is set.
  int label_index = -1;
  /// Label column by header name; requires a header row.
  std::string label_name;
  /// Unset: auto-detect — the file has a header iff any feature cell of the
  /// first row does not parse as a number.
  std::optional<bool> has_header;
};

/// Parses and validates a dataset. Parse and per-row shape errors are
/// ValidationError with a 1-based line number; unreadable files are IoError.
Dataset read_csv(const std::filesystem::path& path, const CsvSchema& schema = {});

/// Same parser over in-memory text (the file name only decorates errors).
Dataset read_csv_text(std::string_view text, const CsvSchema& schema = {},
                      std::string_view name = "<string>");

/// Writes "f0,...,f{D-1},label" with 17-significant-digit features and the
/// original label names; read_csv of the result reproduces the dataset.
void write_points_csv(const Dataset& ds, const std::filesystem::path& path);

}  // namespace fastsil
