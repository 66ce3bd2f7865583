#include "origami/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace origami {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string content_key(const nlohmann::json& j) {
  std::ostringstream os;
  os << std::hex << fnv1a64(j.dump());
  return os.str();
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ResultCache::default_dir() {
  if (const char* env = std::getenv("ORIGAMI_VEECH_CACHE")) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
    return std::filesystem::path(xdg) / "origami-veech";
  if (const char* home = std::getenv("HOME"))
    return std::filesystem::path(home) / ".cache" / "origami-veech";
  return std::filesystem::temp_directory_path() / "origami-veech";
}

std::filesystem::path ResultCache::entry_path(const std::string& kind,
                                              const std::string& key) const {
  return dir_ / (kind + "-" + key + ".json");
}

std::optional<nlohmann::json> ResultCache::load(const std::string& kind,
                                                const std::string& key) const {
  std::ifstream in(entry_path(kind, key));
  if (!in) return std::nullopt;
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error&) {
    return std::nullopt;  // treat a torn entry as a miss
  }
}

void ResultCache::store(const std::string& kind, const std::string& key,
                        const nlohmann::json& value) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return;  // caching is best effort
  std::ofstream out(entry_path(kind, key));
  out << value.dump();
}

}  // namespace origami
