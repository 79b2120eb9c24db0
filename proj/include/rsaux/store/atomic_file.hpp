#ifndef RSAUX_STORE_ATOMIC_FILE_HPP
#define RSAUX_STORE_ATOMIC_FILE_HPP

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <system_error>

namespace rsaux::store {

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Writes `content` to a sibling temporary file and renames it over `path`,
/// so readers never observe a partially written file.
inline void writeAtomically(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw io_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw io_error("cannot move " + tmp.string() + " to " + path.string());
  }
}

}  // namespace rsaux::store

#endif  // RSAUX_STORE_ATOMIC_FILE_HPP
