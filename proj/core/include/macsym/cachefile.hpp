// Versioned JSON cache file for Macdonald and Green tables. A version
// mismatch ignores the file entirely; it is rebuilt on the next flush.
#pragma once

#include <json.hpp>

#include <string>

namespace macsym {

class CacheFile {
 public:
  static constexpr const char* kVersion = "macsym-cache-1";

  /// Entries object from the file; empty on a missing file, a parse error or
  /// a version mismatch (never partially read).
  static nlohmann::json load(const std::string& path);
  static bool save(const std::string& path, const nlohmann::json& entries);

  /// $MACSYM_CACHE when set, otherwise "macsym-cache.json".
  static std::string default_path();
};

}  // namespace macsym
