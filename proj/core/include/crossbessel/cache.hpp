#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "crossbessel/coeff_table.hpp"
#include "crossbessel/elimination.hpp"

namespace crossbessel {

inline constexpr int kCacheFormatVersion = 1;
inline constexpr const char* kCacheFileName = "crossbessel-cache.json";
inline constexpr const char* kCacheDirEnv = "CROSSBESSEL_CACHE_DIR";

/// Coefficient quadruples and elimination certificates persisted between runs.
struct CacheFile {
  int format_version = kCacheFormatVersion;
  CoeffTable coeffs;
  std::vector<EliminationCertificate> certificates;
};

/// Hex SHA-256 of the serialized cache content (everything but the checksum).
std::string cache_checksum(const nlohmann::json& content);

nlohmann::json cache_to_json(const CacheFile& cache);

struct CacheLoad {
  CacheFile cache;
  bool loaded = false;
  std::string reason;  // why the file was rejected, when it was
};

/// Reads and re-verifies a cache file. Missing, corrupted, stale or
/// unverifiable files are reported through `loaded = false` with an empty
/// cache; this never throws for bad file content.
CacheLoad load_cache(const std::filesystem::path& file);

/// Writes atomically (temporary file in the same directory, then rename).
void save_cache(const std::filesystem::path& file, const CacheFile& cache);

/// --cache-dir flag if given, else $CROSSBESSEL_CACHE_DIR, else nothing.
std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag_value);

/// Returns the certificate for t from the cache, computing and appending it if absent.
const EliminationCertificate& cached_certificate(CacheFile& cache, const TripleIndex& t);

}  // namespace crossbessel
