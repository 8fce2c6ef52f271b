#pragma once

// Flat-file emitters shared by the modules and the CLI. Numbers are written
// with 17 significant digits so that every double round-trips exactly.

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace curvedwave::report {

std::string format_number(double x);
std::string format_number(long long x);
inline std::string format_number(int x) { return format_number(static_cast<long long>(x)); }

/// Comma-separated table with a single header row and LF line endings.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  /// Cells are already formatted; the count must match the header.
  void add_row(std::vector<std::string> cells);
  std::size_t rows() const noexcept { return rows_.size(); }
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Splits CSV text produced by CsvTable (no quoting) into rows of cells.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

}  // namespace curvedwave::report
