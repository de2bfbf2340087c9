#pragma once

#include <cstdint>
#include <fstream>
#include <memory>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace lpball::cli {

using Cell = std::variant<std::monostate, double, std::uint64_t, bool, std::string>;

enum class Format { csv, jsonl };

Format parse_format(const std::string& name);

/// Formats a double with 17 significant digits ("inf", "-inf", "nan" for
/// non-finite values).
std::string format_double(double value);

/// Writes rows with a fixed column set. CSV gets a header line; JSON-lines
/// writes one object per row with the same key order. Empty cells are
/// omitted from JSON and left blank in CSV.
class RowWriter {
 public:
  /// path "-" means standard output. Throws IoError when the file cannot be
  /// opened.
  RowWriter(const std::string& path, Format format, std::vector<std::string> columns);

  void write(const std::vector<Cell>& row);
  void finish();

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_;
  Format format_;
  std::vector<std::string> columns_;
  std::string path_;
  bool header_written_ = false;
};

}  // namespace lpball::cli
