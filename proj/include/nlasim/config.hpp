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

#ifndef NLASIM_CONFIG_HPP
#define NLASIM_CONFIG_HPP

#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nlasim {

/// Malformed or out-of-range experiment configuration. line() is 0 for
/// problems not tied to a line (for example a bad default or a missing file).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& message, int line = 0, std::string key = {});
  int line() const { return line_; }
  const std::string& key() const { return key_; }

 private:
  int line_;
  std::string key_;
};

enum class ValueKind {
  kReal,
  kInteger,
  kBool,
  kChoice,
  kRealList,
  kIntegerList,
  /// A real number or the word "auto".
  kRealOrAuto,
};

/// One accepted key. Reals accept decimal or p/q fraction syntax; numeric
/// bounds apply to every element of a list.
struct KeySpec {
  std::string name;
  ValueKind kind;
  std::string default_value;
  std::string help;
  double min = -std::numeric_limits<double>::infinity();
  double max = std::numeric_limits<double>::infinity();
  bool min_open = false;
  bool max_open = false;
  std::vector<std::string> choices = {};
};

/// Flat `key = value` configuration with `#` comments, validated against a
/// schema at parse time.
class Config {
 public:
  using Value = std::variant<std::monostate, double, long long, bool, std::string, std::vector<double>,
                             std::vector<long long>>;

  static Config parse(std::string_view text, const std::vector<KeySpec>& schema,
                      const std::string& source = "<config>");
  static Config load(const std::string& path, const std::vector<KeySpec>& schema);
  /// All keys at their defaults.
  static Config defaults(const std::vector<KeySpec>& schema);

  double real(const std::string& key) const;
  long long integer(const std::string& key) const;
  bool boolean(const std::string& key) const;
  const std::string& choice(const std::string& key) const;
  const std::vector<double>& reals(const std::string& key) const;
  const std::vector<long long>& integers(const std::string& key) const;
  /// std::nullopt for "auto".
  std::optional<double> real_or_auto(const std::string& key) const;

  /// Keys set explicitly in the file (not defaulted).
  const std::vector<std::string>& explicit_keys() const { return explicit_keys_; }

 private:
  const Value& value(const std::string& key) const;

  std::map<std::string, Value> values_;
  std::vector<std::string> explicit_keys_;
};

}  // namespace nlasim

#endif  // NLASIM_CONFIG_HPP
