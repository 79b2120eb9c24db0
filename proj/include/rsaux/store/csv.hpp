#ifndef RSAUX_STORE_CSV_HPP
#define RSAUX_STORE_CSV_HPP

#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsaux/store/atomic_file.hpp"

namespace rsaux::store {

/// Column names plus rows of numbers.
struct Series {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Shortest text that reads back to the same double (at most 17 significant
/// digits), independent of locale.
inline std::string formatNumber(double x) {
  char buf[32];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

inline std::string csvField(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

/// CSV text: header row, LF line endings, rows in the given order.
inline std::string formatSeries(const Series& s) {
  if (s.columns.empty()) throw std::invalid_argument("emitSeries: no columns");
  std::string out;
  for (std::size_t i = 0; i < s.columns.size(); ++i) out += (i ? "," : "") + csvField(s.columns[i]);
  out += "\n";
  for (std::size_t r = 0; r < s.rows.size(); ++r) {
    if (s.rows[r].size() != s.columns.size())
      throw std::invalid_argument("emitSeries: row " + std::to_string(r + 1) + " has " +
                                  std::to_string(s.rows[r].size()) + " values, expected " +
                                  std::to_string(s.columns.size()));
    for (std::size_t i = 0; i < s.rows[r].size(); ++i) out += (i ? "," : "") + formatNumber(s.rows[r][i]);
    out += "\n";
  }
  return out;
}

inline void emitSeries(const Series& s, const std::filesystem::path& path) { writeAtomically(path, formatSeries(s)); }

}  // namespace rsaux::store

#endif  // RSAUX_STORE_CSV_HPP
