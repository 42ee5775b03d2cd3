#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "geoposet/geoequiv.hpp"

namespace geoposet {

inline constexpr int kSchemaVersion = 1;

enum class Format { Json, Csv, Table };

Format parse_format(const std::string& text);

nlohmann::json class_table_to_json(const ClassTable& t);

/// Throws InputError on malformed input or when the members do not cover
/// S_n exactly once.
ClassTable class_table_from_json(const nlohmann::json& j);

std::string class_table_csv(const ClassTable& t);
std::string class_table_text(const ClassTable& t);
std::string render(const ClassTable& t, Format f);

/// Hex SHA-256 of `data`.
std::string sha256_hex(const std::string& data);

/// GEOPOSET_CACHE_DIR, else $XDG_CACHE_HOME/geoposet, else ~/.cache/geoposet.
std::filesystem::path default_cache_dir();

class ClassCache {
 public:
  explicit ClassCache(std::filesystem::path dir = default_cache_dir()) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path entry_path(int n) const;

  /// nullopt when the entry is missing, unreadable, from another schema, or
  /// fails its digest; `why` then says which.
  std::optional<ClassTable> load(int n, std::string* why = nullptr) const;

  /// Empty on success, otherwise the reason the write failed.
  std::string save(const ClassTable& t) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace geoposet
