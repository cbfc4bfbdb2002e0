#include "maxmod/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace maxmod {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

Config Config::parse_string(const std::string& text) {
  Config c;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find_first_of("#;");
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        throw ConfigError("config line " + std::to_string(lineno) +
                          ": malformed section header");
      }
      section = trim(line.substr(1, line.size() - 2));
      c.data_[section];
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    }
    c.data_[section][key] = value;
  }
  return c;
}

Config Config::parse_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_string(ss.str());
}

bool Config::has(const std::string& section, const std::string& key) const {
  auto s = data_.find(section);
  return s != data_.end() && s->second.count(key) > 0;
}

std::string Config::get_str(const std::string& section, const std::string& key) const {
  auto s = data_.find(section);
  if (s == data_.end() || !s->second.count(key)) {
    throw ConfigError("config: missing [" + section + "] " + key);
  }
  return s->second.at(key);
}

std::string Config::get_str(const std::string& section, const std::string& key,
                            const std::string& fallback) const {
  return has(section, key) ? get_str(section, key) : fallback;
}

double Config::get_num(const std::string& section, const std::string& key) const {
  std::string v = get_str(section, key);
  char* end = nullptr;
  double x = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0') {
    throw ConfigError("config: [" + section + "] " + key + " is not a number: " + v);
  }
  return x;
}

double Config::get_num(const std::string& section, const std::string& key,
                       double fallback) const {
  return has(section, key) ? get_num(section, key) : fallback;
}

int Config::get_int(const std::string& section, const std::string& key,
                    int fallback) const {
  if (!has(section, key)) return fallback;
  double v = get_num(section, key);
  int i = static_cast<int>(v);
  if (v != i) throw ConfigError("config: [" + section + "] " + key + " must be an integer");
  return i;
}

std::vector<double> Config::get_list(const std::string& section,
                                     const std::string& key) const {
  std::string v = get_str(section, key);
  std::vector<double> out;
  std::istringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    char* end = nullptr;
    double x = std::strtod(item.c_str(), &end);
    if (end == item.c_str() || *end != '\0') {
      throw ConfigError("config: [" + section + "] " + key + " has a bad entry: " + item);
    }
    out.push_back(x);
  }
  if (out.empty()) throw ConfigError("config: [" + section + "] " + key + " is empty");
  return out;
}

}  // namespace maxmod
