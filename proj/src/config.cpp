// Copyright 2026 The nlasim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nlasim/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace nlasim {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(trim(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::optional<double> parse_number(std::string_view s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto r = std::from_chars(s.data(), end, v);
  if (r.ec != std::errc() || r.ptr != end || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<double> parse_real(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return parse_number(s);
  const auto num = parse_number(trim(s.substr(0, slash)));
  const auto den = parse_number(trim(s.substr(slash + 1)));
  if (!num || !den || *den == 0.0) return std::nullopt;
  return *num / *den;
}

std::optional<long long> parse_integer(std::string_view s) {
  long long v = 0;
  const auto* end = s.data() + s.size();
  const auto r = std::from_chars(s.data(), end, v);
  if (r.ec != std::errc() || r.ptr != end) return std::nullopt;
  return v;
}

std::string format_bound(const KeySpec& spec) {
  std::ostringstream os;
  os << (spec.min_open ? "(" : "[") << spec.min << ", " << spec.max << (spec.max_open ? ")" : "]");
  return os.str();
}

void check_range(double v, const KeySpec& spec, int line) {
  const bool low_ok = spec.min_open ? v > spec.min : v >= spec.min;
  const bool high_ok = spec.max_open ? v < spec.max : v <= spec.max;
  if (!low_ok || !high_ok) {
    std::ostringstream os;
    os << spec.name << " = " << v << " is outside " << format_bound(spec);
    throw ConfigError(os.str(), line, spec.name);
  }
}

Config::Value parse_value(std::string_view text, const KeySpec& spec, int line) {
  const auto bad = [&](const std::string& what) {
    return ConfigError(spec.name + ": expected " + what + ", got '" + std::string(text) + "'", line, spec.name);
  };
  switch (spec.kind) {
    case ValueKind::kReal: {
      const auto v = parse_real(text);
      if (!v) throw bad("a real number");
      check_range(*v, spec, line);
      return *v;
    }
    case ValueKind::kRealOrAuto: {
      if (text == "auto") return std::monostate{};
      const auto v = parse_real(text);
      if (!v) throw bad("a real number or 'auto'");
      check_range(*v, spec, line);
      return *v;
    }
    case ValueKind::kInteger: {
      const auto v = parse_integer(text);
      if (!v) throw bad("an integer");
      check_range(static_cast<double>(*v), spec, line);
      return *v;
    }
    case ValueKind::kBool: {
      if (text == "true" || text == "yes" || text == "1") return true;
      if (text == "false" || text == "no" || text == "0") return false;
      throw bad("true or false");
    }
    case ValueKind::kChoice: {
      if (std::find(spec.choices.begin(), spec.choices.end(), text) == spec.choices.end()) {
        std::string all;
        for (const auto& c : spec.choices) all += (all.empty() ? "" : "|") + c;
        throw bad("one of " + all);
      }
      return std::string(text);
    }
    case ValueKind::kRealList: {
      std::vector<double> out;
      for (auto item : split_list(text)) {
        const auto v = parse_real(item);
        if (!v) throw bad("a comma-separated list of real numbers");
        check_range(*v, spec, line);
        out.push_back(*v);
      }
      return out;
    }
    case ValueKind::kIntegerList: {
      std::vector<long long> out;
      for (auto item : split_list(text)) {
        const auto v = parse_integer(item);
        if (!v) throw bad("a comma-separated list of integers");
        check_range(static_cast<double>(*v), spec, line);
        out.push_back(*v);
      }
      return out;
    }
  }
  throw bad("a value");
}

const KeySpec* find_spec(const std::vector<KeySpec>& schema, std::string_view key) {
  for (const auto& s : schema)
    if (s.name == key) return &s;
  return nullptr;
}

}  // namespace

ConfigError::ConfigError(const std::string& message, int line, std::string key)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line),
      key_(std::move(key)) {}

Config Config::defaults(const std::vector<KeySpec>& schema) {
  Config c;
  for (const auto& spec : schema) c.values_[spec.name] = parse_value(spec.default_value, spec, 0);
  return c;
}

Config Config::parse(std::string_view text, const std::vector<KeySpec>& schema, const std::string& source) {
  Config c = defaults(schema);
  std::set<std::string> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(source + ": expected 'key = value', got '" + std::string(line) + "'", line_no);
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(source + ": missing key before '='", line_no);
    const KeySpec* spec = find_spec(schema, key);
    if (spec == nullptr) throw ConfigError(source + ": unknown key '" + key + "'", line_no, key);
    if (!seen.insert(key).second) throw ConfigError(source + ": duplicate key '" + key + "'", line_no, key);
    if (value.empty()) throw ConfigError(source + ": empty value for '" + key + "'", line_no, key);
    c.values_[key] = parse_value(value, *spec, line_no);
    c.explicit_keys_.push_back(key);
  }
  return c;
}

Config Config::load(const std::string& path, const std::vector<KeySpec>& schema) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), schema, path);
}

const Config::Value& Config::value(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw std::out_of_range("config key '" + key + "' is not in the schema");
  return it->second;
}

double Config::real(const std::string& key) const { return std::get<double>(value(key)); }
long long Config::integer(const std::string& key) const { return std::get<long long>(value(key)); }
bool Config::boolean(const std::string& key) const { return std::get<bool>(value(key)); }
const std::string& Config::choice(const std::string& key) const { return std::get<std::string>(value(key)); }
const std::vector<double>& Config::reals(const std::string& key) const {
  return std::get<std::vector<double>>(value(key));
}
const std::vector<long long>& Config::integers(const std::string& key) const {
  return std::get<std::vector<long long>>(value(key));
}
std::optional<double> Config::real_or_auto(const std::string& key) const {
  const Value& v = value(key);
  if (std::holds_alternative<std::monostate>(v)) return std::nullopt;
  return std::get<double>(v);
}

}  // namespace nlasim
