#pragma once

// Number-theoretic kernels: smallest-prime-factor / divisor-count sieves,
// factorization, divisor enumeration and the divisor summatory function.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "divnet/common.hpp"

namespace divnet {

struct SieveOptions {
    // Memory guard: the tables cost ~6 bytes per index. The default budget
    // admits limit = 2^26 (~400 MB transient, ~400 MB resident).
    u64 max_limit = u64{1} << 26;
};

// Immutable lookup tables for 1..limit. Safe to share across threads once built.
struct SieveTables {
    u64 limit = 0;
    std::vector<u32> spf;            // smallest prime factor; spf[1] = 1
    std::vector<u16> divisor_count;  // d(i); d(n) < 2^16 for every n < 10^20

    bool is_prime(u64 n) const { return n >= 2 && spf[static_cast<std::size_t>(n)] == n; }
};

// Linear sieve producing spf and d(i) in one pass. d(i*p) is maintained
// incrementally from the exponent of spf(i), so no index is ever factorized.
inline SieveTables build_tables(u64 limit, const SieveOptions& opts = {}) {
    if (limit == 0) throw CapacityError("build_tables: limit must be >= 1");
    if (limit > opts.max_limit) {
        throw CapacityError("build_tables: limit " + std::to_string(limit) +
                            " exceeds budget " + std::to_string(opts.max_limit));
    }
    SieveTables t;
    t.limit = limit;
    const std::size_t n = static_cast<std::size_t>(limit);
    t.spf.assign(n + 1, 0);
    t.divisor_count.assign(n + 1, 0);
    t.spf[0] = 0;
    t.spf[1] = 1;  // sentinel: keeps factorization loops special-case free
    t.divisor_count[1] = 1;
    if (limit == 1) return t;

    std::vector<u32> primes;
    primes.reserve(static_cast<std::size_t>(1.3 * static_cast<double>(limit) /
                                            std::max(1.0, std::log(static_cast<double>(limit)))) +
                   16);
    std::vector<u8> spf_exp(n + 1, 0);  // exponent of spf(i) in i
    for (u64 i = 2; i <= limit; ++i) {
        const std::size_t si = static_cast<std::size_t>(i);
        if (t.spf[si] == 0) {
            t.spf[si] = static_cast<u32>(i);
            t.divisor_count[si] = 2;
            spf_exp[si] = 1;
            primes.push_back(static_cast<u32>(i));
        }
        const u32 spf_i = t.spf[si];
        for (u32 p : primes) {
            if (p > spf_i) break;
            const u64 ip = i * p;
            if (ip > limit) break;
            const std::size_t sip = static_cast<std::size_t>(ip);
            t.spf[sip] = p;
            if (p == spf_i) {
                const u32 e = spf_exp[si];
                spf_exp[sip] = static_cast<u8>(e + 1);
                t.divisor_count[sip] =
                    static_cast<u16>(t.divisor_count[si] / (e + 1) * (e + 2));
                break;  // p == spf(i): larger primes would repeat factors
            }
            spf_exp[sip] = 1;
            t.divisor_count[sip] = static_cast<u16>(t.divisor_count[si] * 2);
        }
    }
    return t;
}

struct PrimePower {
    u64 prime = 0;
    u32 exponent = 0;
    bool operator==(const PrimePower&) const = default;
};

struct Factorization {
    u64 n = 1;
    std::vector<PrimePower> prime_powers;  // strictly increasing primes; empty iff n == 1

    // s(n) = prod (exponent + 1), the divisor count.
    u64 s() const {
        u64 acc = 1;
        for (const auto& pp : prime_powers) acc *= pp.exponent + 1;
        return acc;
    }
    // Number of distinct prime factors.
    std::size_t distinct_primes() const { return prime_powers.size(); }
};

inline void check_in_range(u64 n, const SieveTables& t, const char* who) {
    if (n == 0 || n > t.limit) {
        throw std::out_of_range(std::string(who) + ": n = " + std::to_string(n) +
                                " outside [1, " + std::to_string(t.limit) + "]");
    }
}

inline Factorization factorize(u64 n, const SieveTables& t) {
    check_in_range(n, t, "factorize");
    Factorization f;
    f.n = n;
    while (n > 1) {
        const u64 p = t.spf[static_cast<std::size_t>(n)];
        u32 e = 0;
        do {
            n /= p;
            ++e;
        } while (n % p == 0);
        f.prime_powers.push_back({p, e});
    }
    return f;
}

// All divisors of n in ascending order (includes 1 and n).
inline std::vector<u64> divisors(u64 n, const SieveTables& t) {
    const Factorization f = factorize(n, t);
    std::vector<u64> ds{1};
    ds.reserve(static_cast<std::size_t>(t.divisor_count[static_cast<std::size_t>(n)]));
    for (const auto& pp : f.prime_powers) {
        const std::size_t base = ds.size();
        u64 pe = 1;
        for (u32 k = 1; k <= pp.exponent; ++k) {
            pe *= pp.prime;
            for (std::size_t b = 0; b < base; ++b) ds.push_back(ds[b] * pe);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

// D(x) = sum_{j=1..x} floor(x/j), evaluated in O(sqrt x) by grouping equal
// quotient blocks (hyperbola method).
inline u64 divisor_summatory(u64 x) {
    u64 total = 0;
    for (u64 j = 1; j <= x;) {
        const u64 v = x / j;
        const u64 j_hi = x / v;  // largest j' with the same quotient v
        total += v * (j_hi - j + 1);
        j = j_hi + 1;
    }
    return total;
}

}  // namespace divnet
