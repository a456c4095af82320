#include "lab/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <openssl/sha.h>

namespace repeller::lab {

namespace fs = std::filesystem;

std::string git_blob_hash(const std::string& content) {
  const std::string blob = "blob " + std::to_string(content.size()) + std::string(1, '\0') + content;
  unsigned char digest[SHA_DIGEST_LENGTH];
  SHA1(reinterpret_cast<const unsigned char*>(blob.data()), blob.size(), digest);
  std::string hex;
  char buf[3];
  for (unsigned char c : digest) {
    std::snprintf(buf, sizeof buf, "%02x", c);
    hex += buf;
  }
  return hex;
}

std::string file_hash(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return git_blob_hash(ss.str());
}

fs::path default_cache_dir() {
  if (const char* env = std::getenv("REPELLER_LAB_CACHE"); env && *env) return env;
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "repeller-lab";
  return fs::temp_directory_path() / "repeller-lab";
}

std::optional<int> ResultCache::restore(const std::string& command, const std::string& key,
                                        const fs::path& out) const {
  const fs::path entry = dir_ / command / key;
  std::ifstream manifest(entry / "MANIFEST");
  if (!manifest) return std::nullopt;
  int code = -1;
  std::vector<std::pair<std::string, std::string>> files;
  std::string line;
  while (std::getline(manifest, line)) {
    std::istringstream ls(line);
    std::string a, b;
    ls >> a >> b;
    if (a == "exit") {
      code = std::stoi(b);
    } else if (!a.empty()) {
      files.emplace_back(a, b);
    }
  }
  if (code < 0) return std::nullopt;
  for (const auto& [hash, name] : files)
    if (!fs::exists(entry / name) || file_hash(entry / name) != hash) return std::nullopt;
  fs::create_directories(out);
  for (const auto& [hash, name] : files)
    fs::copy_file(entry / name, out / name, fs::copy_options::overwrite_existing);
  return code;
}

void ResultCache::store(const std::string& command, const std::string& key, const fs::path& out,
                        const std::vector<std::string>& files, int exit_code) const {
  std::error_code ec;
  const fs::path entry = dir_ / command / key;
  fs::create_directories(entry, ec);
  if (ec) return;
  std::string manifest;
  for (const std::string& name : files) {
    fs::copy_file(out / name, entry / name, fs::copy_options::overwrite_existing, ec);
    if (ec) return;
    manifest += file_hash(entry / name) + " " + name + "\n";
  }
  manifest += "exit " + std::to_string(exit_code) + "\n";
  std::ofstream(entry / "MANIFEST") << manifest;
}

}  // namespace repeller::lab
