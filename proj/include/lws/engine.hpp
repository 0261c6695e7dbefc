#pragma once
// Exhaustive witness search over prime ranges.
//
// A witness for (p, sigma) is an integer a with
//
//   2 <= a <= (p-1)/2,  gcd(a, p+1) = 1,  legendre(a(a-1), p) = sigma.
//
// Since p+1 is even, coprimality forces a odd, and b = p+1-a satisfies
// b(b-1) = (p+1-a)(p-a) == a(a-1) (mod p) with gcd(b, p+1) = gcd(a, p+1), so
// witnesses come in symbol-preserving pairs reflected around (p+1)/2; the
// smaller element of each pair lies in [3, (p-1)/2] and the scan below visits
// ascending odd a only, skipping multiples of the odd prime divisors of p+1
// (divisibility tests against at most 8 primes; no per-candidate gcd).
//
// search() runs this scan over every prime in a range, in fixed-size chunks
// of the prime index space. Each chunk factors the p+1 values of its primes
// with a small segmented sieve (walking 2q, 2q^2, ... over the even numbers
// of the chunk's span), so the per-prime cost is a handful of divisibility
// tests plus one Jacobi symbol per candidate a. Chunks produce partial
// reports that merge associatively in chunk order, making the final report
// identical for every thread count.

#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "modnt.hpp"
#include "sieve.hpp"

namespace lws {

struct WitnessRecord {
    u64 p;
    int sigma;
    u64 a;
};

enum class SearchMode { full, paper };

inline const char* mode_name(SearchMode m) { return m == SearchMode::full ? "full" : "paper"; }

namespace detail {

// Ascending odd-a scan for both signs at once; out[0] holds the minimal
// witness for sigma = +1, out[1] for sigma = -1 (0 = none found).
inline void scan_both(u64 p, const u64* oddfac, int nfac, u64 out[2]) {
    out[0] = out[1] = 0;
    const u64 half = (p - 1) / 2;
    for (u64 a = 3; a <= half; a += 2) {
        bool skip = false;
        for (int i = 0; i < nfac; ++i)
            if (a % oddfac[i] == 0) {
                skip = true;
                break;
            }
        if (skip) continue;
        int s = jacobi(mulmod(a, a - 1, p), p);
        if (s == 1) {
            if (!out[0]) {
                out[0] = a;
                if (out[1]) return;
            }
        } else if (s == -1) {
            if (!out[1]) {
                out[1] = a;
                if (out[0]) return;
            }
        }
    }
}

} // namespace detail

// Minimal witness in [2, (p-1)/2], or nullopt if none exists.
inline std::optional<WitnessRecord> witness(const PrimeModulus& pm, int sigma) {
    if (sigma != 1 && sigma != -1) throw std::invalid_argument("witness: sigma must be +1 or -1");
    if (pm.p <= 13) throw std::invalid_argument("witness: requires p > 13");
    FactoredNat fn = factorize(pm.p + 1);
    u64 oddfac[16];
    int nfac = 0;
    for (const auto& [q, e] : fn.factors)
        if (q > 2) oddfac[nfac++] = q;
    u64 out[2];
    detail::scan_both(pm.p, oddfac, nfac, out);
    u64 a = sigma == 1 ? out[0] : out[1];
    if (!a) return std::nullopt;
    return WitnessRecord{pm.p, sigma, a};
}

// Independent validation of a witness record using modnt primitives only
// (Euler-criterion route for the symbol, plain gcd for coprimality).
inline bool validate_witness(const WitnessRecord& w) {
    if (!is_prime_u64(w.p) || w.p <= 13) return false;
    if (w.a < 2 || w.a > (w.p - 1) / 2) return false;
    if (std::gcd(w.a, w.p + 1) != 1) return false;
    PrimeModulus pm(w.p);
    return legendre_via_euler(static_cast<i64>(mulmod(w.a, w.a - 1, w.p)), pm) == w.sigma;
}

struct SearchReport {
    u64 lo = 0;
    u64 hi = 0;
    SearchMode mode = SearchMode::full;
    u64 primes_checked = 0;
    std::vector<u64> counterexamples;        // p with a missing witness, ascending
    std::optional<WitnessRecord> max_min_witness;
    u64 elapsed_ms = 0;                       // excluded from determinism comparisons
    std::map<u32, u64> omega_histogram;       // omega(p+1) -> #primes checked
    u32 threads = 1;
};

namespace detail {

struct PartialReport {
    u64 checked = 0;
    std::vector<u64> cex;
    std::optional<WitnessRecord> maxmin;
    std::map<u32, u64> hist;
};

// Strict "better" order for the max-min-witness record: larger a wins, then
// smaller p, then sigma = +1. Total order on distinct (p, sigma) pairs, so
// the merged maximum is independent of merge order.
inline bool better(const WitnessRecord& cand, const WitnessRecord& cur) {
    if (cand.a != cur.a) return cand.a > cur.a;
    if (cand.p != cur.p) return cand.p < cur.p;
    return cand.sigma > cur.sigma;
}

inline void consider(std::optional<WitnessRecord>& best, const WitnessRecord& cand) {
    if (!best || better(cand, *best)) best = cand;
}

// Distinct odd prime factors of p+1 for every prime in one chunk, via a
// segmented walk over the even numbers of the chunk's integer span.
struct ChunkFactors {
    std::vector<u64> prod;                  // product of odd prime powers hit
    std::vector<std::array<u64, 9>> fac;    // distinct odd primes (count in [8])
    u64 base = 0;                           // first even value covered

    void build(const SieveTable& t, std::size_t i0, std::size_t i1) {
        u64 A = static_cast<u64>(t.primes[i0]) + 1;      // even
        u64 B = static_cast<u64>(t.primes[i1 - 1]) + 1;  // even, inclusive
        base = A;
        std::size_t slots = static_cast<std::size_t>((B - A) / 2) + 1;
        prod.assign(slots, 1);
        fac.assign(slots, {});
        for (std::size_t bi = 1; bi < t.primes.size(); ++bi) { // skip 2
            u64 q = t.primes[bi];
            if (q * q > B) break;
            // distinct-prime pass: even multiples of q are multiples of 2q
            u64 step = 2 * q;
            for (u64 m = ((A + step - 1) / step) * step; m <= B; m += step) {
                std::size_t s = static_cast<std::size_t>((m - A) / 2);
                auto& f = fac[s];
                f[++f[0]] = q;
                prod[s] *= q;
            }
            // valuation passes: one extra factor of q per power level
            for (u64 pe = q * q; pe <= B; pe *= q) {
                u64 pstep = 2 * pe;
                for (u64 m = ((A + pstep - 1) / pstep) * pstep; m <= B; m += pstep)
                    prod[static_cast<std::size_t>((m - A) / 2)] *= q;
            }
        }
    }

    // Odd distinct primes of n = p+1 (appends the large cofactor if any).
    int get(u64 n, u64 out[9]) const {
        std::size_t s = static_cast<std::size_t>((n - base) / 2);
        const auto& f = fac[s];
        int cnt = static_cast<int>(f[0]);
        for (int i = 0; i < cnt; ++i) out[i] = f[i + 1];
        u64 odd = n >> __builtin_ctzll(n);
        u64 cof = odd / prod[s];
        if (cof > 1) out[cnt++] = cof;
        return cnt;
    }
};

} // namespace detail

// Exhaustive search over primes in the exclusive range (lo, hi).
//   full  mode: every prime 13 < p, lo < p < hi.
//   paper mode: primes 13 < p < min(hi, 7*10^7) with 6 <= omega(p+1) <= 8,
//               plus primes 13 < p < min(hi, 9*10^6) with omega(p+1) <= 5;
//               omega(p+1) >= 9 is excluded (covered by the closed-form bounds).
// threads = 0 selects hardware concurrency. The report is deterministic
// (field-for-field, elapsed_ms aside) for every thread count.
inline SearchReport search(u64 lo, u64 hi, SearchMode mode, const SieveTable& table,
                           u32 threads = 1) {
    if (hi > table.limit)
        throw std::invalid_argument("search: hi exceeds the sieve table limit");
    if (lo >= hi) throw std::invalid_argument("search: need lo < hi");
    if (threads == 0) {
        unsigned hc = std::thread::hardware_concurrency();
        threads = hc ? hc : 1;
    }
    auto t_start = std::chrono::steady_clock::now();

    constexpr u64 kPaperHi = 70000000;   // omega 6..8 cutoff
    constexpr u64 kPaperLoOmega = 9000000; // omega <= 5 cutoff

    auto [i0, i1] = prime_index_range(table, std::max<u64>(lo, 13), hi);
    SearchReport rep;
    rep.lo = lo;
    rep.hi = hi;
    rep.mode = mode;
    rep.threads = threads;

    if (i0 >= i1) {
        rep.elapsed_ms = 0;
        return rep;
    }

    // fixed-size chunks so partial reports are independent of thread count
    constexpr std::size_t kChunk = 4096;
    std::size_t nchunks = (i1 - i0 + kChunk - 1) / kChunk;
    std::vector<detail::PartialReport> parts(nchunks);
    std::atomic<std::size_t> next{0};

    auto worker = [&]() {
        detail::ChunkFactors cf;
        for (;;) {
            std::size_t ci = next.fetch_add(1);
            if (ci >= nchunks) return;
            std::size_t a0 = i0 + ci * kChunk;
            std::size_t a1 = std::min(i1, a0 + kChunk);
            cf.build(table, a0, a1);
            detail::PartialReport& pr = parts[ci];
            for (std::size_t i = a0; i < a1; ++i) {
                u64 p = table.primes[i];
                if (p <= 13) continue;
                u32 om = table.omega[p + 1];
                if (mode == SearchMode::paper) {
                    if (om >= 9) continue;
                    if (om >= 6 ? p >= kPaperHi : p >= kPaperLoOmega) continue;
                }
                ++pr.checked;
                ++pr.hist[om];
                u64 oddfac[9];
                int nfac = cf.get(p + 1, oddfac);
                u64 out[2];
                detail::scan_both(p, oddfac, nfac, out);
                if (!out[0] || !out[1]) pr.cex.push_back(p);
                if (out[0]) detail::consider(pr.maxmin, {p, 1, out[0]});
                if (out[1]) detail::consider(pr.maxmin, {p, -1, out[1]});
            }
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (u32 t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (const detail::PartialReport& pr : parts) {
        rep.primes_checked += pr.checked;
        rep.counterexamples.insert(rep.counterexamples.end(), pr.cex.begin(), pr.cex.end());
        if (pr.maxmin) detail::consider(rep.max_min_witness, *pr.maxmin);
        for (const auto& [om, cnt] : pr.hist) rep.omega_histogram[om] += cnt;
    }
    rep.elapsed_ms = static_cast<u64>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                          std::chrono::steady_clock::now() - t_start)
                                          .count());
    return rep;
}

} // namespace lws
