#pragma once

// Optional binary on-disk cache for SieveTables, keyed by limit.
//
// Layout (little-endian):
//   magic[8] = "DNSIEVE1"
//   u64 limit
//   u64 spf_bytes, u64 dc_bytes
//   u64 fnv1a64 checksum over both payloads
//   spf payload, divisor_count payload
//
// Any mismatch (magic, version, lengths, checksum, truncation) is treated as
// corruption: the loader reports failure and callers rebuild.

#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>

#include "divnet/common.hpp"
#include "divnet/sieve.hpp"

namespace divnet {

inline constexpr char kSieveCacheMagic[8] = {'D', 'N', 'S', 'I', 'E', 'V', 'E', '1'};

inline std::filesystem::path sieve_cache_path(const std::filesystem::path& dir, u64 limit) {
    return dir / ("sieve_" + std::to_string(limit) + ".bin");
}

namespace detail {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

inline bool write_all(std::FILE* f, const void* data, std::size_t len) {
    return std::fwrite(data, 1, len, f) == len;
}

inline bool read_all(std::FILE* f, void* data, std::size_t len) {
    return std::fread(data, 1, len, f) == len;
}

}  // namespace detail

inline bool save_tables(const SieveTables& t, const std::filesystem::path& path) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
    const fs::path tmp = path.string() + ".tmp";
    {
        detail::FilePtr f(std::fopen(tmp.string().c_str(), "wb"));
        if (!f) return false;
        const u64 spf_bytes = t.spf.size() * sizeof(u32);
        const u64 dc_bytes = t.divisor_count.size() * sizeof(u16);
        u64 checksum = fnv1a64(t.spf.data(), static_cast<std::size_t>(spf_bytes));
        checksum = fnv1a64(t.divisor_count.data(), static_cast<std::size_t>(dc_bytes), checksum);
        if (!detail::write_all(f.get(), kSieveCacheMagic, sizeof(kSieveCacheMagic)) ||
            !detail::write_all(f.get(), &t.limit, sizeof(t.limit)) ||
            !detail::write_all(f.get(), &spf_bytes, sizeof(spf_bytes)) ||
            !detail::write_all(f.get(), &dc_bytes, sizeof(dc_bytes)) ||
            !detail::write_all(f.get(), &checksum, sizeof(checksum)) ||
            !detail::write_all(f.get(), t.spf.data(), static_cast<std::size_t>(spf_bytes)) ||
            !detail::write_all(f.get(), t.divisor_count.data(), static_cast<std::size_t>(dc_bytes))) {
            return false;
        }
    }
    fs::rename(tmp, path, ec);
    return !ec;
}

inline std::optional<SieveTables> load_tables(const std::filesystem::path& path, u64 expected_limit) {
    detail::FilePtr f(std::fopen(path.string().c_str(), "rb"));
    if (!f) return std::nullopt;
    char magic[8];
    u64 limit = 0, spf_bytes = 0, dc_bytes = 0, checksum = 0;
    if (!detail::read_all(f.get(), magic, sizeof(magic)) ||
        !detail::read_all(f.get(), &limit, sizeof(limit)) ||
        !detail::read_all(f.get(), &spf_bytes, sizeof(spf_bytes)) ||
        !detail::read_all(f.get(), &dc_bytes, sizeof(dc_bytes)) ||
        !detail::read_all(f.get(), &checksum, sizeof(checksum))) {
        return std::nullopt;
    }
    if (std::memcmp(magic, kSieveCacheMagic, sizeof(magic)) != 0) return std::nullopt;
    if (limit != expected_limit) return std::nullopt;
    if (spf_bytes != (limit + 1) * sizeof(u32) || dc_bytes != (limit + 1) * sizeof(u16)) {
        return std::nullopt;
    }
    SieveTables t;
    t.limit = limit;
    t.spf.resize(static_cast<std::size_t>(limit) + 1);
    t.divisor_count.resize(static_cast<std::size_t>(limit) + 1);
    if (!detail::read_all(f.get(), t.spf.data(), static_cast<std::size_t>(spf_bytes)) ||
        !detail::read_all(f.get(), t.divisor_count.data(), static_cast<std::size_t>(dc_bytes))) {
        return std::nullopt;
    }
    // Reject trailing garbage.
    if (std::fgetc(f.get()) != EOF) return std::nullopt;
    u64 actual = fnv1a64(t.spf.data(), static_cast<std::size_t>(spf_bytes));
    actual = fnv1a64(t.divisor_count.data(), static_cast<std::size_t>(dc_bytes), actual);
    if (actual != checksum) return std::nullopt;
    return t;
}

// Loads from cache_dir if a valid cache exists, otherwise builds and saves
// (best effort; an unwritable cache directory is not an error).
inline SieveTables load_or_build(u64 limit, const std::filesystem::path& cache_dir,
                                 const SieveOptions& opts = {}) {
    const auto path = sieve_cache_path(cache_dir, limit);
    if (auto cached = load_tables(path, limit)) return std::move(*cached);
    SieveTables t = build_tables(limit, opts);
    save_tables(t, path);
    return t;
}

}  // namespace divnet
