#include "nilorb/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace nilorb {

namespace {

std::string fnv1a64(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

std::string requestHash(const std::string& kind, SimpleType t, uint64_t seed) {
    return fnv1a64(kind + "|" + t.name() + "|" + std::to_string(seed) + "|v" +
                   std::to_string(kCacheSchemaVersion));
}

std::filesystem::path entryPath(const CacheConfig& cfg, const std::string& kind, SimpleType t) {
    std::string dir = cfg.dir.empty() ? resolveCacheDir() : cfg.dir;
    std::string file = kind + "-" + t.name() + ".v" + std::to_string(kCacheSchemaVersion) +
                       ".json";
    return std::filesystem::path(dir) / file;
}

}  // namespace

std::string resolveCacheDir() {
    if (const char* env = std::getenv("ORBITS_CACHE_DIR"); env && *env) return env;
    if (const char* home = std::getenv("HOME"); home && *home)
        return (std::filesystem::path(home) / ".cache" / "nilorb").string();
    return ".nilorb-cache";
}

std::optional<Json> cacheLoad(const CacheConfig& cfg, const std::string& kind, SimpleType t,
                              uint64_t seed) {
    if (!cfg.enabled) return std::nullopt;
    std::ifstream in(entryPath(cfg, kind, t));
    if (!in) return std::nullopt;
    Json entry;
    try {
        in >> entry;
    } catch (const Json::exception&) {
        return std::nullopt;
    }
    if (!entry.is_object()) return std::nullopt;
    if (entry.value("schemaVersion", -1) != kCacheSchemaVersion) return std::nullopt;
    if (entry.value("type", std::string()) != t.name()) return std::nullopt;
    if (entry.value("rank", -1) != t.rank) return std::nullopt;
    if (entry.value("contentHash", std::string()) != requestHash(kind, t, seed))
        return std::nullopt;
    if (!entry.contains("payload")) return std::nullopt;
    return entry["payload"];
}

void cacheStore(const CacheConfig& cfg, const std::string& kind, SimpleType t, uint64_t seed,
                const Json& payload) {
    if (!cfg.enabled) return;
    Json entry = Json::object();
    entry["schemaVersion"] = kCacheSchemaVersion;
    entry["type"] = t.name();
    entry["rank"] = t.rank;
    entry["contentHash"] = requestHash(kind, t, seed);
    entry["payload"] = payload;

    std::error_code ec;
    auto path = entryPath(cfg, kind, t);
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) return;
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << entry.dump(2) << "\n";
        if (!out) return;
    }
    std::filesystem::rename(tmp, path, ec);
}

}  // namespace nilorb
