#pragma once

// Content-addressed polynomial store: one canonical-JSON file per family key,
// named by a short hash of the key string.  Puts are write-temp-then-rename,
// so concurrent builders of the same key race harmlessly — last rename wins
// and every candidate file holds the same bytes.

#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json_io.hpp"
#include "poly.hpp"

namespace umemura {

struct CacheConfig {
    std::filesystem::path dir;  // empty -> caching disabled
    bool enabled() const { return !dir.empty(); }
};

// UMEMURA_CACHE from the environment, overridden by an explicit --dir.
inline CacheConfig cache_config_from_env(const std::string& override_dir = {}) {
    CacheConfig cfg;
    if (!override_dir.empty()) {
        cfg.dir = override_dir;
    } else if (const char* env = std::getenv("UMEMURA_CACHE")) {
        cfg.dir = env;
    }
    return cfg;
}

struct FamilyKey {
    std::string family;        // GEN_SUM, GEN_DET, TODA_T, NOOU_U, ...
    std::vector<long> params;  // family-specific indices
};

inline std::string key_string(const FamilyKey& k) {
    std::ostringstream os;
    os << k.family << "(";
    for (std::size_t i = 0; i < k.params.size(); ++i) {
        if (i) os << ",";
        os << k.params[i];
    }
    os << ")";
    return os.str();
}

namespace detail_cache {

// FNV-1a; std::hash is not stable across runs, file names must be.
inline std::string short_hash(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

inline std::filesystem::path entry_path(const CacheConfig& cfg, const FamilyKey& key) {
    return cfg.dir / (short_hash(key_string(key)) + ".json");
}

}  // namespace detail_cache

inline std::optional<Poly> cache_get(const CacheConfig& cfg, const FamilyKey& key) {
    if (!cfg.enabled()) return std::nullopt;
    const std::filesystem::path path = detail_cache::entry_path(cfg, key);
    std::ifstream in(path);
    if (!in) return std::nullopt;  // cold cache
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        if (!j.is_object() || !j.contains("key") || j.at("key") != key_string(key))
            throw PolyDecodeError("cache entry key mismatch");
        return poly_from_json(j.at("poly"));
    } catch (const std::exception& e) {
        std::cerr << "warning: corrupt cache entry " << path.string() << " (" << e.what()
                  << "); recomputing\n";
        return std::nullopt;
    }
}

inline void cache_put(const CacheConfig& cfg, const FamilyKey& key, const Poly& p) {
    if (!cfg.enabled()) return;
    std::filesystem::create_directories(cfg.dir);
    const std::filesystem::path path = detail_cache::entry_path(cfg, key);
    nlohmann::ordered_json j;
    j["key"] = key_string(key);
    j["poly"] = poly_to_json(p);
    std::ostringstream tmp_name;
    tmp_name << "tmp-" << path.stem().string() << "-" << ::getpid();
    const std::filesystem::path tmp = cfg.dir / tmp_name.str();
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << j.dump() << "\n";
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw std::runtime_error("cache_put: cannot write " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);  // atomic on POSIX within one directory
}

// Fetch-or-build; corrupt or missing entries are rebuilt and overwritten.
inline Poly cached_family(const CacheConfig& cfg, const FamilyKey& key,
                          const std::function<Poly()>& build) {
    if (auto hit = cache_get(cfg, key)) return *hit;
    Poly p = build();
    cache_put(cfg, key, p);
    return p;
}

struct CacheStats {
    std::size_t entries = 0;
    std::uintmax_t bytes = 0;
};

inline CacheStats cache_stats(const CacheConfig& cfg) {
    CacheStats st;
    if (!cfg.enabled() || !std::filesystem::is_directory(cfg.dir)) return st;
    for (const auto& e : std::filesystem::directory_iterator(cfg.dir)) {
        if (!e.is_regular_file() || e.path().extension() != ".json") continue;
        ++st.entries;
        st.bytes += e.file_size();
    }
    return st;
}

inline std::size_t cache_clear(const CacheConfig& cfg) {
    std::size_t removed = 0;
    if (!cfg.enabled() || !std::filesystem::is_directory(cfg.dir)) return removed;
    for (const auto& e : std::filesystem::directory_iterator(cfg.dir)) {
        if (!e.is_regular_file() || e.path().extension() != ".json") continue;
        std::error_code ec;
        if (std::filesystem::remove(e.path(), ec)) ++removed;
    }
    return removed;
}

}  // namespace umemura
