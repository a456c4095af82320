#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace repeller::lab {

/// SHA-1 of "blob <size>\0<content>", as git hashes file contents.
std::string git_blob_hash(const std::string& content);
std::string file_hash(const std::filesystem::path& path);

/// REPELLER_LAB_CACHE if set, else ~/.cache/repeller-lab.
std::filesystem::path default_cache_dir();

/// Content-addressed result store: <dir>/<command>/<key>/ holds the output
/// files and a MANIFEST of their hashes plus the exit code.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// Copies the cached files into `out` when every file matches its manifest
  /// hash; returns the stored exit code. Any mismatch is a miss.
  std::optional<int> restore(const std::string& command, const std::string& key,
                             const std::filesystem::path& out) const;
  void store(const std::string& command, const std::string& key, const std::filesystem::path& out,
             const std::vector<std::string>& files, int exit_code) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace repeller::lab
