#include "crossbessel/cache.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "crossbessel/error.hpp"
#include "crossbessel/serialization.hpp"

namespace crossbessel {

using nlohmann::json;

namespace {

json content_json(const CacheFile& cache) {
  json entries = json::array();
  for (const auto& [key, q] : cache.coeffs.entries()) entries.push_back(to_json(q));
  json certs = json::array();
  for (const auto& c : cache.certificates) certs.push_back(to_json(c));
  return {{"format_version", cache.format_version}, {"coeff_entries", entries}, {"certificates", certs}};
}

CacheLoad rejected(std::string reason) {
  CacheLoad out;
  out.reason = std::move(reason);
  return out;
}

}  // namespace

std::string cache_checksum(const json& content) {
  const std::string text = content.dump();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorKind::kFormat, "SHA-256 digest failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

json cache_to_json(const CacheFile& cache) {
  json j = content_json(cache);
  j["checksum"] = cache_checksum(j);
  return j;
}

CacheLoad load_cache(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return rejected("no cache file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    return rejected(std::string("unparsable cache: ") + e.what());
  }
  try {
    if (!j.is_object()) return rejected("cache root is not an object");
    if (j.at("format_version").get<int>() != kCacheFormatVersion) return rejected("format version mismatch");
    const std::string stored = j.at("checksum").get<std::string>();
    json content = j;
    content.erase("checksum");
    if (cache_checksum(content) != stored) return rejected("checksum mismatch");

    std::vector<CoeffQuad> quads;
    for (const auto& e : j.at("coeff_entries")) quads.push_back(coeff_quad_from_json(e));
    std::sort(quads.begin(), quads.end(),
              [](const CoeffQuad& a, const CoeffQuad& b) { return a.n != b.n ? a.n < b.n : a.m < b.m; });
    CacheLoad out;
    for (auto& q : quads) out.cache.coeffs.insert_verified(std::move(q));
    for (const auto& e : j.at("certificates")) {
      EliminationCertificate cert = certificate_from_json(e);
      const CertificateChecks recomputed = check_certificate(cert, out.cache.coeffs);
      if (!recomputed.all() || !(recomputed == cert.checks)) return rejected("certificate failed re-verification");
      out.cache.certificates.push_back(std::move(cert));
    }
    out.loaded = true;
    return out;
  } catch (const json::exception& e) {
    return rejected(std::string("malformed cache: ") + e.what());
  } catch (const Error& e) {
    return rejected(std::string("cache failed verification: ") + e.what());
  }
}

void save_cache(const std::filesystem::path& file, const CacheFile& cache) {
  namespace fs = std::filesystem;
  if (file.has_parent_path()) fs::create_directories(file.parent_path());
  std::random_device rd;
  fs::path tmp = file;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(ErrorKind::kFormat, "cannot write " + tmp.string());
    out << cache_to_json(cache).dump(1) << '\n';
    out.close();
    if (!out) {
      fs::remove(tmp);
      throw Error(ErrorKind::kFormat, "write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, file, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error(ErrorKind::kFormat, "cannot replace " + file.string() + ": " + ec.message());
  }
}

std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return std::filesystem::path(flag_value);
  if (const char* env = std::getenv(kCacheDirEnv); env != nullptr && *env != '\0') {
    return std::filesystem::path(env);
  }
  return std::nullopt;
}

const EliminationCertificate& cached_certificate(CacheFile& cache, const TripleIndex& t) {
  for (const auto& c : cache.certificates) {
    if (c.triple == t) return c;
  }
  cache.certificates.push_back(eliminate(t, cache.coeffs));
  return cache.certificates.back();
}

}  // namespace crossbessel
