#include "maxmod/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace maxmod {

std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
  for (size_t i = 0; i < header.size(); ++i) {
    if (i) buf_ += ',';
    buf_ += header[i];
  }
  buf_ += '\n';
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  if (fields.size() != columns_) throw std::runtime_error("csv: column count mismatch");
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) buf_ += ',';
    buf_ += fields[i];
  }
  buf_ += '\n';
}

void CsvWriter::save(const std::string& path) const { write_text_file(path, buf_); }

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace maxmod
