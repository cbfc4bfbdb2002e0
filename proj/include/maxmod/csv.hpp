#pragma once

#include <string>
#include <vector>

namespace maxmod {

// %.17g formatting: repeated runs produce byte-identical output.
std::string fmt_g17(double v);

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void row(const std::vector<std::string>& fields);
  const std::string& str() const { return buf_; }
  void save(const std::string& path) const;

 private:
  std::string buf_;
  size_t columns_;
};

void write_text_file(const std::string& path, const std::string& content);

}  // namespace maxmod
