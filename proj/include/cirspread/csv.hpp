#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cirspread {

// Days since 1970-01-01 for an ISO date (YYYY-MM-DD).
int parse_date(const std::string& iso);
std::string format_date(int days);

// ACT/365.25 year-fraction between two day counts.
double year_fraction(int from_days, int to_days);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<int> line_numbers;  // 1-based source line per row
};

// Strict comma-separated reader: mandatory header, no quoting, every row
// must match the header width. Errors carry file name and line number.
CsvTable read_csv(const std::string& path);

struct CurveRow {
  int date;      // days since epoch
  double tenor;  // years
  double value;
};

// Reads `date,tenor_years,<value_column>` and groups rows by date,
// tenors ascending within each date.
std::map<int, std::vector<CurveRow>> read_curve_csv(
    const std::string& path, const std::string& value_column);

// FNV-1a 64-bit over a byte string; stable across runs and platforms.
std::uint64_t fnv1a64(const std::string& bytes);

std::uint64_t hash_file(const std::string& path);

}  // namespace cirspread
