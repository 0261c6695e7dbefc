#pragma once
// Modular number theory over word-sized integers.
//
//   legendre(a, p)  Legendre symbol (a/p) for odd prime p, computed by the
//                   binary Jacobi algorithm (quadratic reciprocity descent);
//                   legendre_via_euler gives the independent a^((p-1)/2) route
//                   used for cross-validation.
//   factorize(n)    trial-division factorization with derived omega / mu /
//                   phi / radical / W(n) = 2^omega.
//   squarefree_divisors(n)  all (d, mu(d)) with d | n squarefree.
//
// Primality is decided by a deterministic Miller-Rabin witness set that is
// exact for every 64-bit input; no probabilistic answers anywhere.

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace lws {

using u8 = std::uint8_t;
using u32 = std::uint32_t;

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

inline u64 powmod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin: this witness set decides primality exactly for
// all n < 3.3e24, in particular for every 64-bit integer.
inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// An odd prime modulus 3 <= p < 2^62, validated once at construction so the
// hot paths can skip re-checking.
struct PrimeModulus {
    u64 p;

    explicit PrimeModulus(u64 p_) : p(p_) {
        if (p < 3 || p >= (u64(1) << 62))
            throw std::invalid_argument("PrimeModulus: need an odd prime in [3, 2^62)");
        if (p % 2 == 0 || !is_prime_u64(p))
            throw std::invalid_argument("PrimeModulus: " + std::to_string(p) + " is not an odd prime");
    }
};

// Jacobi symbol (a/n) for odd n >= 1. Binary algorithm: strip factors of two
// with the (2/n) rule, then flip by quadratic reciprocity. O(log a log n) word
// operations; this is the search hot path.
inline int jacobi(u64 a, u64 n) {
    if (n == 0 || n % 2 == 0)
        throw std::invalid_argument("jacobi: modulus must be odd and positive");
    a %= n;
    int s = 1;
    while (a != 0) {
        int z = __builtin_ctzll(a);
        a >>= z;
        // (2/n) = -1 iff n = 3,5 mod 8; applied z times
        if ((z & 1) && (n % 8 == 3 || n % 8 == 5)) s = -s;
        // reciprocity: both odd now
        if ((a & 3) == 3 && (n & 3) == 3) s = -s;
        u64 t = a;
        a = n % t;
        n = t;
    }
    return n == 1 ? s : 0;
}

inline u64 reduce_mod(i64 a, u64 p) {
    i64 r = a % static_cast<i64>(p);
    if (r < 0) r += static_cast<i64>(p);
    return static_cast<u64>(r);
}

// Legendre symbol (a/p): fast route.
inline int legendre(i64 a, const PrimeModulus& p) {
    return jacobi(reduce_mod(a, p.p), p.p);
}

// Independent slow route via Euler's criterion a^((p-1)/2) mod p; used to
// cross-validate the Jacobi implementation and by the witness validator.
inline int legendre_via_euler(i64 a, const PrimeModulus& p) {
    u64 r = powmod(reduce_mod(a, p.p), (p.p - 1) / 2, p.p);
    if (r == 0) return 0;
    if (r == 1) return 1;
    if (r == p.p - 1) return -1;
    throw std::logic_error("legendre_via_euler: impossible residue");
}

// n = prod q_i^{e_i} with q_1 < q_2 < ...; derived multiplicative data.
struct FactoredNat {
    u64 n = 1;
    std::vector<std::pair<u64, u32>> factors;

    unsigned omega() const { return static_cast<unsigned>(factors.size()); }
    bool squarefree() const {
        for (auto& [q, e] : factors)
            if (e > 1) return false;
        return true;
    }
    int mu() const {
        if (!squarefree()) return 0;
        return (omega() % 2 == 0) ? 1 : -1;
    }
    u64 phi() const {
        u64 r = 1;
        for (auto& [q, e] : factors) {
            r *= q - 1;
            for (u32 i = 1; i < e; ++i) r *= q;
        }
        return r;
    }
    u64 rad() const {
        u64 r = 1;
        for (auto& [q, e] : factors) r *= q;
        return r;
    }
    // W(n) = 2^omega(n) = number of squarefree divisors
    u64 W() const { return u64(1) << omega(); }
};

// Trial division, optionally seeded with a precomputed ascending prime list
// (the sieve's). Falls back to a 6k+-1 wheel past the list; the remaining
// cofactor after dividing out everything below its square root is prime.
inline FactoredNat factorize(u64 n, std::span<const u32> primes = {}) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    if (n >= (u64(1) << 62)) throw std::invalid_argument("factorize: n must be < 2^62");
    FactoredNat f;
    f.n = n;
    u64 m = n;
    auto take = [&](u64 q) {
        u32 e = 0;
        while (m % q == 0) {
            m /= q;
            ++e;
        }
        if (e > 0) f.factors.emplace_back(q, e);
    };
    u64 next = 2;
    for (u32 q : primes) {
        if (static_cast<u64>(q) * q > m) break;
        take(q);
        next = static_cast<u64>(q) + 1;
    }
    if (m > 1) {
        if (next <= 2) {
            take(2);
            next = 3;
        }
        if (next <= 3) {
            take(3);
            next = 5;
        }
        // continue on the 6k+-1 wheel from the first candidate >= next
        u64 d = next + (next % 2 == 0 ? 1 : 0);
        if (d % 3 == 0) d += 2;
        while (d * d <= m) {
            take(d);
            d += 2;
            if (d % 3 == 0) d += 2;
        }
        if (m > 1) f.factors.emplace_back(m, 1);
    }
    return f;
}

// All squarefree divisors of n with their Moebius values, sorted by divisor.
// There are exactly W(n) = 2^omega(n) of them.
inline std::vector<std::pair<u64, int>> squarefree_divisors(const FactoredNat& f) {
    std::vector<std::pair<u64, int>> out;
    unsigned k = f.omega();
    out.reserve(std::size_t(1) << k);
    for (u64 mask = 0; mask < (u64(1) << k); ++mask) {
        u64 d = 1;
        int mu = 1;
        for (unsigned i = 0; i < k; ++i) {
            if (mask & (u64(1) << i)) {
                d *= f.factors[i].first;
                mu = -mu;
            }
        }
        out.emplace_back(d, mu);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::pair<u64, int>> squarefree_divisors(u64 n) {
    return squarefree_divisors(factorize(n));
}

// Every divisor of n, ascending.
inline std::vector<u64> all_divisors(const FactoredNat& f) {
    std::vector<u64> out{1};
    for (const auto& [q, e] : f.factors) {
        std::size_t base = out.size();
        u64 pe = 1;
        for (u32 j = 0; j < e; ++j) {
            pe *= q;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<u64> all_divisors(u64 n) { return all_divisors(factorize(n)); }

} // namespace lws
