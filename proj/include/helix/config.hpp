#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Plain key = value run configuration ('#' starts a comment). Flags override
// file entries; every command serializes the resolved config next to its
// outputs so runs can be reproduced exactly.

namespace helix {

class Config {
 public:
  Config() = default;

  static Config from_file(const std::filesystem::path& path);
  static Config parse(const std::string& text, const std::string& origin = "<string>");

  void set(const std::string& key, std::string value);
  bool has(const std::string& key) const;

  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  std::uint64_t get_uint(const std::string& key, std::uint64_t fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<std::int64_t> get_int_list(const std::string& key,
                                         std::vector<std::int64_t> fallback) const;

  /// Keys sorted, one "key = value" per line.
  std::string serialize() const;

 private:
  std::optional<std::string> lookup(const std::string& key) const;
  std::map<std::string, std::string> entries_;
};

/// Shortest round-trippable decimal rendering of a double (printf %.17g).
std::string format_double(double v);

/// Comma-joined list rendering, e.g. "16,32,64".
std::string format_int_list(const std::vector<std::int64_t>& v);

}  // namespace helix
