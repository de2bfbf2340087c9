#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <fmt/format.h>

namespace lpball::cli {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

// Canonical serialized form: lists as "[a, b]", scalars trimmed.
std::string canonical(const std::string& value, bool list) {
  const auto items = split_list(value);
  if (!list) {
    if (items.size() != 1) throw ConfigError("expected a single value, got a list");
    return items.front();
  }
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out + "]";
}

}  // namespace

std::vector<std::string> split_list(const std::string& value) {
  std::string body = trim(value);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw ConfigError(fmt::format("unterminated list '{}'", body));
    body = body.substr(1, body.size() - 2);
  }
  std::vector<std::string> items;
  std::stringstream stream(body);
  std::string item;
  while (std::getline(stream, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ConfigError(fmt::format("empty item in '{}'", trim(value)));
    items.push_back(item);
  }
  if (items.empty()) throw ConfigError("empty value");
  return items;
}

double parse_double(const std::string& text) {
  const std::string t = lower(trim(text));
  if (t == "inf" || t == "infinity" || t == "+inf") return std::numeric_limits<double>::infinity();
  double value = 0.0;
  const auto* first = t.data();
  const auto* last = t.data() + t.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || std::isnan(value)) {
    throw ConfigError(fmt::format("'{}' is not a number", text));
  }
  return value;
}

Config::Config(std::vector<KeySpec> schema) : schema_(std::move(schema)) {
  for (const auto& key : schema_) values_[key.name] = canonical(key.default_value, key.list);
}

const KeySpec& Config::spec(const std::string& key) const {
  const auto it = std::find_if(schema_.begin(), schema_.end(),
                               [&](const KeySpec& s) { return s.name == key; });
  if (it == schema_.end()) throw ConfigError(fmt::format("unknown key '{}'", key));
  return *it;
}

void Config::fail(const std::string& key, const std::string& what) const {
  const auto origin = origin_.find(key);
  if (origin != origin_.end()) {
    throw ConfigError(fmt::format("{}: field '{}': {}", origin->second, key, what));
  }
  throw ConfigError(fmt::format("field '{}': {}", key, what));
}

void Config::set(const std::string& key, const std::string& value) {
  const auto& s = spec(key);
  try {
    values_[key] = canonical(value, s.list);
  } catch (const ConfigError& e) {
    fail(key, e.what());
  }
  origin_.erase(key);
}

void Config::merge_text(const std::string& text, const std::string& source) {
  std::stringstream stream(text);
  std::string line;
  int number = 0;
  while (std::getline(stream, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto where = fmt::format("{}:{}", source, number);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(fmt::format("{}: expected 'key = value', got '{}'", where, line));
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      set(key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(fmt::format("{}: {}", where, e.what()));
    }
    origin_[key] = where;
  }
}

void Config::merge_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot read config file '{}'", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  merge_text(buffer.str(), path);
}

std::string Config::serialize() const {
  std::string out;
  for (const auto& key : schema_) {
    out += fmt::format("{} = {}\n", key.name, values_.at(key.name));
  }
  return out;
}

std::string Config::get_string(const std::string& key) const {
  spec(key);
  return values_.at(key);
}

double Config::get_double(const std::string& key) const {
  try {
    return parse_double(get_string(key));
  } catch (const ConfigError& e) {
    fail(key, e.what());
  }
}

std::uint64_t Config::get_uint(const std::string& key) const {
  const std::string text = get_string(key);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc() && ptr == text.data() + text.size()) return value;
  // accept 1e6-style integers
  try {
    const double d = parse_double(text);
    if (d >= 0.0 && d <= 1e18 && d == std::floor(d)) return static_cast<std::uint64_t>(d);
  } catch (const ConfigError&) {
  }
  fail(key, fmt::format("'{}' is not a non-negative integer", text));
}

bool Config::get_bool(const std::string& key) const {
  const std::string v = lower(get_string(key));
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  fail(key, fmt::format("'{}' is not a boolean", v));
}

std::vector<std::string> Config::get_strings(const std::string& key) const {
  return split_list(get_string(key));
}

std::vector<double> Config::get_doubles(const std::string& key) const {
  std::vector<double> out;
  try {
    for (const auto& item : get_strings(key)) out.push_back(parse_double(item));
  } catch (const ConfigError& e) {
    fail(key, e.what());
  }
  return out;
}

std::vector<std::uint64_t> Config::get_uints(const std::string& key) const {
  std::vector<std::uint64_t> out;
  for (const auto& item : get_strings(key)) {
    double d = 0.0;
    try {
      d = parse_double(item);
    } catch (const ConfigError& e) {
      fail(key, e.what());
    }
    if (!(d >= 0.0 && d <= 1e18 && d == std::floor(d))) {
      fail(key, fmt::format("'{}' is not a non-negative integer", item));
    }
    out.push_back(static_cast<std::uint64_t>(d));
  }
  return out;
}

}  // namespace lpball::cli
