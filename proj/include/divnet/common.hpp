#pragma once

// Shared integer aliases, error types and small helpers used across divnet.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace divnet {

using u8 = std::uint8_t;
using u16 = std::uint16_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// A request exceeded a configured memory/size budget.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// A graph query addressed a node in the removed set.
struct RemovedNodeError : std::invalid_argument {
    explicit RemovedNodeError(const std::string& what) : std::invalid_argument(what) {}
};

// Not enough observations to run a statistical procedure.
struct InsufficientDataError : std::runtime_error {
    explicit InsufficientDataError(const std::string& what) : std::runtime_error(what) {}
};

// Data admits no meaningful fit (e.g. zero-variance tail at the support edge).
struct DegenerateDataError : std::runtime_error {
    explicit DegenerateDataError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid command-line/run configuration.
struct UsageError : std::invalid_argument {
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

inline std::string u128_to_string(u128 x) {
    if (x == 0) return "0";
    std::string s;
    while (x != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
        x /= 10;
    }
    return std::string(s.rbegin(), s.rend());
}

inline std::string i128_to_string(i128 x) {
    if (x < 0) return "-" + u128_to_string(static_cast<u128>(-x));
    return u128_to_string(static_cast<u128>(x));
}

// Exact within the 2^64 range used here; large magnitudes lose only the
// precision double itself cannot hold.
inline double u128_to_double(u128 x) {
    constexpr double k2p64 = 18446744073709551616.0;
    return static_cast<double>(static_cast<u64>(x >> 64)) * k2p64 +
           static_cast<double>(static_cast<u64>(x));
}

inline double i128_to_double(i128 x) {
    return x < 0 ? -u128_to_double(static_cast<u128>(-x)) : u128_to_double(static_cast<u128>(x));
}

// FNV-1a 64-bit, used for file integrity checks in manifests and the sieve cache.
inline u64 fnv1a64(const void* data, std::size_t len, u64 seed = 14695981039346656037ull) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    u64 h = seed;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

inline u64 fnv1a64(std::string_view s) { return fnv1a64(s.data(), s.size()); }

}  // namespace divnet
