#pragma once

#include <optional>
#include <string>

namespace psl {

/* Persistent value cache: one JSON manifest holding bernoulli / genbernoulli /
 * cohenH entries with per-entry checksums. Corrupt entries are dropped with a
 * warning and never trusted. The cache is advisory: deleting it changes
 * runtime only, never results. */
struct CacheManifest {
    static constexpr int kSchemaVersion = 1;

    // Load manifest entries into the process-wide value caches.
    // Returns the number of entries accepted.
    static long load(const std::string& path, bool verbose);

    // Write the current process-wide value caches back to the manifest.
    static void save(const std::string& path);

    static std::string checksum(const std::string& kind, const std::string& key,
                                const std::string& value);
};

// Resolve the cache directory: explicit flag if set, else the
// PADIC_SIEGEL_CACHE_DIR environment variable, else none.
std::optional<std::string> resolve_cache_dir(const std::optional<std::string>& flag);

} // namespace psl
