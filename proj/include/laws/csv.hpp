#ifndef LAWS_CSV_HPP
#define LAWS_CSV_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "laws/common.hpp"

namespace laws {

// Minimal CSV writer: header row, comma separated, LF line endings.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(const std::vector<std::string>& row) {
    if (row.size() != header_.size()) throw error("csv row width mismatch");
    rows_.push_back(row);
  }

  std::string str() const {
    std::ostringstream os;
    write_line(os, header_);
    for (const auto& row : rows_) write_line(os, row);
    return os.str();
  }

  void write_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot open " + path + " for writing");
    out << str();
  }

 private:
  static void write_line(std::ostringstream& os, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ',';
      os << cells[i];
    }
    os << '\n';
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace laws

#endif
