#pragma once
// Segmented sieve of Eratosthenes with an additive omega table.
//
// build_sieve(X) returns every prime p <= X together with a byte array
// omega[0..X] holding the number of distinct prime divisors of each index
// (omega(n) <= 15 for n < 2^62, so one byte each). Construction works in
// cache-sized segments: peak scratch is O(sqrt X) base primes plus one
// segment bitmap, while the omega array itself is the O(X) output.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "modnt.hpp"

namespace lws {

struct SieveTable {
    u64 limit = 0;                // table covers 0..limit inclusive
    std::vector<u32> primes;      // ascending primes <= limit
    std::vector<u8> omega;        // omega[n] = #distinct prime divisors

    bool is_prime(u64 n) const {
        if (n > limit) throw std::out_of_range("SieveTable::is_prime: beyond table limit");
        return std::binary_search(primes.begin(), primes.end(), static_cast<u32>(n));
    }
};

inline SieveTable build_sieve(u64 X, std::size_t segment_bytes = 512 * 1024) {
    if (X < 2) throw std::invalid_argument("build_sieve: limit must be >= 2");
    if (X > (u64(1) << 31)) throw std::invalid_argument("build_sieve: limit must be <= 2^31");
    if (segment_bytes < 64) segment_bytes = 64;

    SieveTable t;
    t.limit = X;
    t.omega.assign(static_cast<std::size_t>(X) + 1, 0);

    // base primes up to sqrt(X) by a plain sieve (O(sqrt X) scratch)
    u64 root = 1;
    while ((root + 1) * (root + 1) <= X) ++root;
    std::vector<u8> small(static_cast<std::size_t>(root) + 1, 1);
    std::vector<u32> base;
    for (u64 i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        base.push_back(static_cast<u32>(i));
        for (u64 j = i * i; j <= root; j += i) small[j] = 0;
    }

    // pass 1: collect all primes <= X, one segment at a time
    const u64 seg = segment_bytes;
    std::vector<u8> mark(seg);
    for (u64 lo = 2; lo <= X; lo += seg) {
        u64 hi = std::min(X + 1, lo + seg);  // [lo, hi)
        std::fill(mark.begin(), mark.begin() + (hi - lo), u8(1));
        for (u32 q : base) {
            u64 q64 = q;
            if (q64 * q64 >= hi) break;
            u64 start = std::max(q64 * q64, ((lo + q64 - 1) / q64) * q64);
            for (u64 m = start; m < hi; m += q64) mark[m - lo] = 0;
        }
        for (u64 n = lo; n < hi; ++n)
            if (mark[n - lo]) t.primes.push_back(static_cast<u32>(n));
    }

    // pass 2: omega by the additive sieve. Primes up to the segment length are
    // walked per segment for locality; larger primes touch <= X/p entries each
    // and are walked directly.
    std::size_t split = 0;
    while (split < t.primes.size() && t.primes[split] < seg) ++split;
    for (u64 lo = 2; lo <= X; lo += seg) {
        u64 hi = std::min(X + 1, lo + seg);
        for (std::size_t i = 0; i < split; ++i) {
            u64 q = t.primes[i];
            if (q >= hi) break;
            u64 start = std::max(q, ((lo + q - 1) / q) * q);
            for (u64 m = start; m < hi; m += q) ++t.omega[m];
        }
    }
    for (std::size_t i = split; i < t.primes.size(); ++i) {
        u64 q = t.primes[i];
        for (u64 m = q; m <= X; m += q) ++t.omega[m];
    }
    return t;
}

// Primes strictly between lo and hi (both ends exclusive).
inline std::vector<u64> primes_in(const SieveTable& t, u64 lo, u64 hi) {
    if (hi > t.limit + 1)
        throw std::out_of_range("primes_in: range exceeds table limit");
    std::vector<u64> out;
    auto it = std::upper_bound(t.primes.begin(), t.primes.end(), lo);
    for (; it != t.primes.end() && static_cast<u64>(*it) < hi; ++it)
        out.push_back(*it);
    return out;
}

// Index range [first, last) into t.primes for primes strictly inside (lo, hi).
inline std::pair<std::size_t, std::size_t> prime_index_range(const SieveTable& t, u64 lo, u64 hi) {
    auto b = std::upper_bound(t.primes.begin(), t.primes.end(), lo);
    auto e = b;
    while (e != t.primes.end() && static_cast<u64>(*e) < hi) ++e;
    return {static_cast<std::size_t>(b - t.primes.begin()),
            static_cast<std::size_t>(e - t.primes.begin())};
}

} // namespace lws
