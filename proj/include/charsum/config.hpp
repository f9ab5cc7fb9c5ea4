#pragma once

// Flat key=value configuration files. One entry per line, '#' starts a
// comment, blank lines are ignored, keys and values are trimmed.

#include <map>
#include <optional>
#include <string>

namespace charsum {

class Config {
 public:
  Config() = default;

  static Config parse(const std::string& text);
  static Config load(const std::string& path);

  std::optional<std::string> get(const std::string& key) const;
  bool contains(const std::string& key) const { return values_.count(key) != 0; }
  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace charsum
