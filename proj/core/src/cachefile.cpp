#include "macsym/cachefile.hpp"

#include <cstdlib>
#include <fstream>

namespace macsym {

nlohmann::json CacheFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return nlohmann::json::object();
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return nlohmann::json::object();
  if (!j.contains("version") || j["version"] != kVersion)
    return nlohmann::json::object();
  if (!j.contains("entries") || !j["entries"].is_object())
    return nlohmann::json::object();
  return j["entries"];
}

bool CacheFile::save(const std::string& path, const nlohmann::json& entries) {
  nlohmann::json j{{"version", kVersion}, {"entries", entries}};
  std::ofstream out(path);
  if (!out) return false;
  out << j.dump();
  return static_cast<bool>(out);
}

std::string CacheFile::default_path() {
  if (const char* env = std::getenv("MACSYM_CACHE")) return env;
  return "macsym-cache.json";
}

}  // namespace macsym
