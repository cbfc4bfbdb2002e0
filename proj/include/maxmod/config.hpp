#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxmod {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Plain sectioned key/value text:
//   [section]
//   key = value        # trailing comments with '#' or ';'
// Lists are comma separated.  Parse errors carry the line number.
class Config {
 public:
  static Config parse_string(const std::string& text);
  static Config parse_file(const std::string& path);

  bool has(const std::string& section, const std::string& key) const;
  std::string get_str(const std::string& section, const std::string& key) const;
  std::string get_str(const std::string& section, const std::string& key,
                      const std::string& fallback) const;
  double get_num(const std::string& section, const std::string& key) const;
  double get_num(const std::string& section, const std::string& key,
                 double fallback) const;
  int get_int(const std::string& section, const std::string& key,
              int fallback) const;
  std::vector<double> get_list(const std::string& section,
                               const std::string& key) const;

 private:
  std::map<std::string, std::map<std::string, std::string>> data_;
};

}  // namespace maxmod
