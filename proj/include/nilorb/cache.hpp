#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "nilorb/report.hpp"

namespace nilorb {

// Bump when any payload field changes shape or meaning; stale files are
// recomputed and overwritten, never reused.
constexpr int kCacheSchemaVersion = 1;

struct CacheConfig {
    std::string dir;      // empty -> resolveCacheDir()
    bool enabled = true;  // --no-cache turns this off
};

// ORBITS_CACHE_DIR if set, otherwise $HOME/.cache/nilorb, otherwise
// ./.nilorb-cache.
std::string resolveCacheDir();

// Returns the stored payload when the file exists, carries the current
// schema version, and its content hash matches the request; anything else is
// a miss.
std::optional<Json> cacheLoad(const CacheConfig& cfg, const std::string& kind, SimpleType t,
                              uint64_t seed);

// Best effort: directory creation or write failures are swallowed (the cache
// is an accelerator, not a store of record).
void cacheStore(const CacheConfig& cfg, const std::string& kind, SimpleType t, uint64_t seed,
                const Json& payload);

}  // namespace nilorb
