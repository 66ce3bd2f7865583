#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace origami {

std::uint64_t fnv1a64(std::string_view data);

// Hex content key of a JSON value (hash of its compact dump).
std::string content_key(const nlohmann::json& j);

// Content-addressed store of JSON results on disk. Entries are keyed by the
// hash of their input, so concurrent last-writer-wins is harmless.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  // ORIGAMI_VEECH_CACHE if set, otherwise $XDG_CACHE_HOME/origami-veech or
  // ~/.cache/origami-veech.
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const { return dir_; }
  std::optional<nlohmann::json> load(const std::string& kind, const std::string& key) const;
  void store(const std::string& kind, const std::string& key, const nlohmann::json& value) const;

 private:
  std::filesystem::path entry_path(const std::string& kind, const std::string& key) const;
  std::filesystem::path dir_;
};

}  // namespace origami
