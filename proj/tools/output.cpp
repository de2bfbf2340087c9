#include "output.hpp"

#include <cmath>
#include <iostream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "config.hpp"

namespace lpball::cli {

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "jsonl" || name == "json-lines" || name == "json") return Format::jsonl;
  throw ConfigError(fmt::format("field 'format': unknown output format '{}' (csv, jsonl)", name));
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", value);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render(const Cell& cell, Format format) {
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return {};
        } else if constexpr (std::is_same_v<T, double>) {
          const auto text = format_double(v);
          // JSON has no literal for non-finite numbers
          if (format == Format::jsonl && !std::isfinite(v)) return "\"" + text + "\"";
          return text;
        } else if constexpr (std::is_same_v<T, std::uint64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          return format == Format::csv ? csv_field(v) : nlohmann::json(v).dump();
        }
      },
      cell);
}

}  // namespace

RowWriter::RowWriter(const std::string& path, Format format, std::vector<std::string> columns)
    : out_(&std::cout), format_(format), columns_(std::move(columns)), path_(path) {
  if (path != "-" && !path.empty()) {
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) throw IoError(fmt::format("cannot open output file '{}'", path));
    out_ = file_.get();
  }
}

void RowWriter::write(const std::vector<Cell>& row) {
  if (row.size() != columns_.size()) {
    throw std::logic_error(fmt::format("row has {} cells, schema has {} columns", row.size(),
                                       columns_.size()));
  }
  std::string line;
  if (format_ == Format::csv) {
    if (!header_written_) {
      for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (i) line += ',';
        line += columns_[i];
      }
      line += '\n';
      header_written_ = true;
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += ',';
      line += render(row[i], format_);
    }
  } else {
    line += '{';
    bool first = true;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (std::holds_alternative<std::monostate>(row[i])) continue;
      if (!first) line += ',';
      first = false;
      line += fmt::format("\"{}\":{}", columns_[i], render(row[i], format_));
    }
    line += '}';
  }
  line += '\n';
  *out_ << line;
  if (!*out_) throw IoError(fmt::format("write to '{}' failed", path_.empty() ? "-" : path_));
}

void RowWriter::finish() {
  out_->flush();
  if (!*out_) throw IoError(fmt::format("write to '{}' failed", path_.empty() ? "-" : path_));
}

}  // namespace lpball::cli
