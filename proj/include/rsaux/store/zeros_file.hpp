#ifndef RSAUX_STORE_ZEROS_FILE_HPP
#define RSAUX_STORE_ZEROS_FILE_HPP

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rsaux/store/atomic_file.hpp"
#include "rsaux/zeros/types.hpp"

namespace rsaux::store {

/// Fractional digits of each field in a zeros file.
inline constexpr int kFileWidth = 25;

struct parse_error : std::runtime_error {
  parse_error(const std::string& path, long line, const std::string& what)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + what), line_number(line) {}
  long line_number;
};

struct certification_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WriteOptions {
  /// Write zeros refined to fewer than 25 digits, zero-padding the fields.
  /// The header then records the true digit count and readers restore it.
  bool allow_uncertified = false;
};

namespace detail {

inline std::string fixedWidth(const Decimal& d) {
  if (d.places() >= kFileWidth) return d.truncated_to(kFileWidth).text();
  return d.text() + std::string(static_cast<std::size_t>(kFileWidth - d.places()), '0');
}

inline std::string formatDouble(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace detail

/// Renders a zero set in the file format:
///   '#' header lines with t_max, sigma_scan and digits,
///   then one "<beta> <gamma>" line per zero in ordinal order,
///   each field a signed decimal with exactly 25 fractional digits.
inline std::string formatZeros(const ZeroSet& zs, const WriteOptions& opt = {}) {
  zs.check_ordinals();
  int digits = kFileWidth;
  for (const auto& z : zs.zeros) digits = std::min(digits, z.digits);
  if (!zs.empty() && digits < kFileWidth && !opt.allow_uncertified)
    throw certification_error("writeZeros: zeros carry only " + std::to_string(digits) +
                              " certified digits, the file format needs " + std::to_string(kFileWidth));
  std::string out;
  out += "# zeros of R(s), beta gamma\n";
  out += "# t_max " + detail::formatDouble(zs.t_max) + "\n";
  out += "# sigma_scan " + detail::formatDouble(zs.sigma_scan) + "\n";
  out += "# digits " + std::to_string(zs.empty() ? kFileWidth : digits) + "\n";
  out += "# count " + std::to_string(zs.size()) + "\n";
  for (const auto& z : zs.zeros) out += detail::fixedWidth(z.beta) + " " + detail::fixedWidth(z.gamma) + "\n";
  return out;
}

inline void writeZeros(const ZeroSet& zs, const std::filesystem::path& path, const WriteOptions& opt = {}) {
  writeAtomically(path, formatZeros(zs, opt));
}

/// Parses a zeros file. Header keys t_max, sigma_scan and digits are
/// optional; without t_max the horizon is the largest gamma in the file.
inline ZeroSet parseZeros(std::istream& in, const std::string& name = "<input>") {
  ZeroSet zs;
  bool have_tmax = false;
  int digits = kFileWidth;
  std::string line;
  long lineno = 0;
  double max_gamma = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream hs(line.substr(1));
      std::string key;
      hs >> key;
      try {
        std::string value;
        hs >> value;
        if (key == "t_max") {
          zs.t_max = std::stod(value);
          have_tmax = true;
        } else if (key == "sigma_scan") {
          zs.sigma_scan = std::stod(value);
        } else if (key == "digits") {
          digits = std::stoi(value);
        }
      } catch (const std::exception&) {
        throw parse_error(name, lineno, "malformed header value for '" + key + "'");
      }
      continue;
    }
    const auto space = line.find(' ');
    if (space == std::string::npos || line.find(' ', space + 1) != std::string::npos)
      throw parse_error(name, lineno, "expected two fields separated by one space");
    const std::string b = line.substr(0, space), g = line.substr(space + 1);
    for (const auto* field : {&b, &g}) {
      if (!Decimal::valid(*field)) throw parse_error(name, lineno, "malformed decimal '" + *field + "'");
      if (Decimal(*field).places() != kFileWidth)
        throw parse_error(name, lineno, "field '" + *field + "' does not have " + std::to_string(kFileWidth) +
                                            " fractional digits");
    }
    Zero z;
    z.ordinal = static_cast<int>(zs.zeros.size() + 1);
    z.beta = Decimal(b);
    z.gamma = Decimal(g);
    z.digits = digits;
    max_gamma = std::max(max_gamma, z.g());
    zs.zeros.push_back(std::move(z));
  }
  if (!have_tmax) zs.t_max = max_gamma;
  for (auto& z : zs.zeros) z.outside_horizon = z.g() > zs.t_max;
  return zs;
}

inline ZeroSet readZeros(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path.string());
  return parseZeros(in, path.string());
}

}  // namespace rsaux::store

#endif  // RSAUX_STORE_ZEROS_FILE_HPP
