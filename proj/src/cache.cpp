#include "psl/cache.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>

#include "psl/lvalues.hpp"

namespace psl {

using nlohmann::json;

std::string CacheManifest::checksum(const std::string& kind, const std::string& key,
                                    const std::string& value) {
    // FNV-1a 64
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= '\x1f';
        h *= 1099511628211ull;
    };
    mix(kind);
    mix(key);
    mix(value);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

long CacheManifest::load(const std::string& path, bool verbose) {
    std::ifstream in(path);
    if (!in) return 0;
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "warning: unreadable cache manifest %s: %s\n", path.c_str(), e.what());
        return 0;
    }
    if (!j.is_object() || j.value("version", -1) != kSchemaVersion) {
        std::fprintf(stderr, "warning: cache manifest %s has wrong schema version, ignored\n",
                     path.c_str());
        return 0;
    }

    long accepted = 0;
    std::map<long, Rational> bernoulli_entries;
    for (const auto& e : j.value("entries", json::array())) {
        try {
            std::string kind = e.at("kind").get<std::string>();
            std::string key = e.at("key").get<std::string>();
            std::string value = e.at("value").get<std::string>();
            if (e.at("checksum").get<std::string>() != checksum(kind, key, value)) {
                std::fprintf(stderr, "warning: dropping corrupt cache entry %s:%s\n", kind.c_str(),
                             key.c_str());
                continue;
            }
            if (kind == "bernoulli") {
                bernoulli_entries[std::stol(key)] = Rational::parse(value);
            } else if (kind == "genbernoulli") {
                // keys are self-describing: chi:p:t:k:.. (cyclotomic) or disc:D:k:..
                if (key.rfind("chi:", 0) == 0) {
                    long p = std::stol(key.substr(4));
                    LValueCaches::global().store_gen(key, CyclotomicNumber::parse(p - 1, value));
                } else {
                    LValueCaches::global().store_rat(key, Rational::parse(value));
                }
            } else if (kind == "cohenH") {
                LValueCaches::global().store_rat(key, Rational::parse(value));
            } else {
                std::fprintf(stderr, "warning: unknown cache kind %s, ignored\n", kind.c_str());
                continue;
            }
            ++accepted;
        } catch (const std::exception& ex) {
            std::fprintf(stderr, "warning: dropping malformed cache entry: %s\n", ex.what());
        }
    }
    // Bernoulli entries are only usable as a contiguous prefix B_0..B_k.
    for (const auto& [k, v] : bernoulli_entries) BernoulliCache::global().offer(k, v);
    if (verbose) std::fprintf(stderr, "cache: loaded %ld entries from %s\n", accepted, path.c_str());
    return accepted;
}

void CacheManifest::save(const std::string& path) {
    json entries = json::array();
    BernoulliCache::global().snapshot([&entries](long k, const Rational& v) {
        std::string key = std::to_string(k), value = v.encode();
        entries.push_back({{"kind", "bernoulli"},
                           {"key", key},
                           {"value", value},
                           {"checksum", checksum("bernoulli", key, value)}});
    });
    LValueCaches::global().snapshot([&entries](const std::string& key, const std::string& value,
                                               bool /*cyclotomic*/) {
        std::string kind = key.rfind("H:", 0) == 0 ? "cohenH" : "genbernoulli";
        entries.push_back({{"kind", kind},
                           {"key", key},
                           {"value", value},
                           {"checksum", checksum(kind, key, value)}});
    });
    json j{{"version", kSchemaVersion}, {"entries", entries}};
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump(1) << "\n";
    }
    std::filesystem::rename(tmp, path);
}

std::optional<std::string> resolve_cache_dir(const std::optional<std::string>& flag) {
    if (flag && !flag->empty()) return flag;
    const char* env = std::getenv("PADIC_SIEGEL_CACHE_DIR");
    if (env && *env) return std::string(env);
    return std::nullopt;
}

} // namespace psl
