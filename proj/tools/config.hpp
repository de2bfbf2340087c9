#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpball::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KeySpec {
  std::string name;
  std::string default_value;  // serialized form
  bool list = false;
  std::string help;
};

/// Flat key = value configuration. Values are kept in serialized form so a
/// config round-trips exactly; typed accessors parse on demand and report the
/// field (and line, when read from a file) on failure.
class Config {
 public:
  explicit Config(std::vector<KeySpec> schema);

  const std::vector<KeySpec>& schema() const noexcept { return schema_; }

  /// Parses `key = value` lines; `#` starts a comment; lists are `[a, b, c]`.
  /// Unknown keys and malformed lines throw ConfigError with the line number.
  void merge_text(const std::string& text, const std::string& source = "<config>");
  void merge_file(const std::string& path);
  void set(const std::string& key, const std::string& value);

  /// One `key = value` line per schema key, in schema order.
  std::string serialize() const;

  bool operator==(const Config& other) const { return values_ == other.values_; }

  std::string get_string(const std::string& key) const;
  double get_double(const std::string& key) const;
  std::uint64_t get_uint(const std::string& key) const;
  bool get_bool(const std::string& key) const;
  std::vector<double> get_doubles(const std::string& key) const;
  std::vector<std::uint64_t> get_uints(const std::string& key) const;
  std::vector<std::string> get_strings(const std::string& key) const;

 private:
  const KeySpec& spec(const std::string& key) const;
  [[noreturn]] void fail(const std::string& key, const std::string& what) const;

  std::vector<KeySpec> schema_;
  std::map<std::string, std::string> values_;
  std::map<std::string, std::string> origin_;  // "file:line" for file values
};

/// Splits a serialized list (or a bare scalar) into items.
std::vector<std::string> split_list(const std::string& value);

double parse_double(const std::string& text);  // accepts inf / infinity

}  // namespace lpball::cli
