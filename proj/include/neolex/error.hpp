#pragma once

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace neolex {

/// A file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  IoError(const std::string& what, std::string path)
      : std::runtime_error(what + ": " + path), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Opens a regular file for binary reading or throws IoError.
inline std::ifstream open_input(const std::filesystem::path& path,
                                const std::string& what) {
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec))
    throw IoError(what + " (is a directory)", path.string());
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(what, path.string());
  return in;
}

}  // namespace neolex
