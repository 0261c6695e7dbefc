#pragma once
// Exact sieve quantities for the witness-counting argument.
//
// Everything revolves around the symbol chi(a) = legendre(a(a-1), p) and the
// divisors d of p+1:
//
//   N(d)    = #{ 1 < a < p : d | a, chi(a) = sigma }          (direct count)
//   eta sum = sum_{m=0}^{floor(p/d)} sigma * legendre(dm(dm-1), p)
//   M(d)    = #{ 1 < a < p : d | a }  =  floor((p-1)/d)  for d >= 2,
//             but p-2 at d = 1 (the floor formula overcounts by the excluded
//             endpoint a = 1; every profile here uses the exact M(d))
//   xi(d)   = N(d) - (p+1)/(2d)                        (exact rational)
//
// The doubled identity 2*N(d) = M(d) + eta_sum is an integer identity (the
// symbol never vanishes for 1 < a < p) and is re-checked on every profile
// construction. Inclusion-exclusion over squarefree d | p+1 then gives
//
//   count_sigma(p, sigma) = sum mu(d) N(d) = phi(p+1)/2 + sum mu(d) xi(d),
//
// which this module computes by three independent routes and compares
// exactly. The refined count F(k) restricts the gcd condition to k | p+1.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "guards.hpp"
#include "modnt.hpp"
#include "rational.hpp"

namespace lws {

// sigma * legendre(dm(dm-1), p) for one term of the eta sum.
inline int eta(const PrimeModulus& pm, int sigma, u64 d, u64 m) {
    if (sigma != 1 && sigma != -1) throw std::invalid_argument("eta: sigma must be +1 or -1");
    if (d == 0 || (pm.p + 1) % d != 0) throw std::invalid_argument("eta: d must divide p+1");
    u64 a = (d * m) % pm.p;
    u64 am1 = a == 0 ? pm.p - 1 : a - 1;
    return sigma * legendre(static_cast<i64>(mulmod(a, am1, pm.p)), pm);
}

struct CharSumProfile {
    u64 p;
    int sigma;
    u64 d;
    u64 N_d;      // direct count
    i64 eta_sum;  // independent character-sum route
    u64 M_d;      // exact multiples count over (1, p)
    Rat xi_d;     // N(d) - (p+1)/(2d)
};

inline CharSumProfile profile(const PrimeModulus& pm, int sigma, u64 d) {
    if (sigma != 1 && sigma != -1) throw std::invalid_argument("profile: sigma must be +1 or -1");
    if (d == 0 || (pm.p + 1) % d != 0) throw std::invalid_argument("profile: d must divide p+1");
    const u64 p = pm.p;

    u64 n = 0;
    for (u64 a = (d == 1 ? 2 : d); a < p; a += d) {
        if (legendre(static_cast<i64>(mulmod(a, a - 1, p)), pm) == sigma) ++n;
    }

    i64 esum = 0;
    for (u64 m = 0; m <= p / d; ++m) esum += eta(pm, sigma, d, m);

    u64 m_d = (d == 1) ? p - 2 : (p - 1) / d;

    // self-check: the doubled identity must hold exactly
    if (static_cast<i64>(2 * n) != static_cast<i64>(m_d) + esum)
        throw std::logic_error("profile: identity 2N(d) = M(d) + eta_sum violated");

    Rat xi = Rat(static_cast<i64>(n)) - Rat(static_cast<i64>(p + 1), static_cast<i64>(2 * d));
    return {p, sigma, d, n, esum, m_d, xi};
}

// |eta_sum| with the sigma factor stripped (same magnitude for both signs).
inline u64 eta_sum_abs(const PrimeModulus& pm, u64 d) {
    i64 esum = 0;
    for (u64 m = 0; m <= pm.p / d; ++m) esum += eta(pm, 1, d, m);
    return static_cast<u64>(esum < 0 ? -esum : esum);
}

struct CountSigmaReport {
    u64 p;
    int sigma;
    u64 direct;    // enumeration with gcd(a, p+1) = 1
    i64 mobius;    // sum of mu(d) N(d) over squarefree d | p+1
    Rat count1;    // phi(p+1)/2 + sum mu(d) xi(d), exact
    bool agree;    // all three routes coincide
};

inline CountSigmaReport count_sigma_report(const PrimeModulus& pm, int sigma) {
    if (sigma != 1 && sigma != -1)
        throw std::invalid_argument("count_sigma: sigma must be +1 or -1");
    const u64 p = pm.p;
    const u64 n1 = p + 1;

    u64 direct = 0;
    for (u64 a = 2; a < p; ++a) {
        if (std::gcd(a, n1) != 1) continue;
        if (legendre(static_cast<i64>(mulmod(a, a - 1, p)), pm) == sigma) ++direct;
    }

    FactoredNat fn = factorize(n1);
    i64 mobius = 0;
    Rat xs(0);
    for (const auto& [d, mu] : squarefree_divisors(fn)) {
        CharSumProfile pr = profile(pm, sigma, d);
        mobius += static_cast<i64>(mu) * static_cast<i64>(pr.N_d);
        xs = xs + Rat(mu) * pr.xi_d;
    }
    Rat count1 = Rat(static_cast<i64>(fn.phi()), 2) + xs;

    bool agree = mobius >= 0 && static_cast<u64>(mobius) == direct && count1.is_integer() &&
                 count1 == Rat(static_cast<i64>(direct));
    return {p, sigma, direct, mobius, count1, agree};
}

// The count itself; throws if the three routes ever disagree.
inline u64 count_sigma(const PrimeModulus& pm, int sigma) {
    CountSigmaReport r = count_sigma_report(pm, sigma);
    if (!r.agree) throw std::logic_error("count_sigma: direct/Mobius/rational routes disagree");
    return r.direct;
}

// F(k) = #{ 1 < a < p : gcd(a,k) = 1, chi(a) = sigma } for k | p+1,
// computed directly and as sum_{d | k squarefree} mu(d) N(d).
inline u64 refined_F(const PrimeModulus& pm, int sigma, u64 k) {
    if (k == 0 || (pm.p + 1) % k != 0) throw std::invalid_argument("refined_F: k must divide p+1");
    const u64 p = pm.p;

    u64 direct = 0;
    for (u64 a = 2; a < p; ++a) {
        if (std::gcd(a, k) != 1) continue;
        if (legendre(static_cast<i64>(mulmod(a, a - 1, p)), pm) == sigma) ++direct;
    }

    i64 mobius = 0;
    for (const auto& [d, mu] : squarefree_divisors(factorize(k)))
        mobius += static_cast<i64>(mu) * static_cast<i64>(profile(pm, sigma, d).N_d);

    if (mobius < 0 || static_cast<u64>(mobius) != direct)
        throw std::logic_error("refined_F: direct and Mobius routes disagree");
    return direct;
}

// The sieve inequality sqrt(p)/(log p + 1) > (s+1) 2^{l+1} / (delta * prod(1 - 1/q_j))
// where q_1 < ... < q_l are the l smallest distinct primes of p+1, the p_i are
// the remaining s distinct primes, and delta = 1 - sum 1/p_i (exact rational).
struct SieveCondition {
    u64 p;
    u32 l;
    u32 s;
    Rat delta;
    bool delta_positive;
    std::optional<Rat> rhs; // absent when delta <= 0
    double lhs;             // sqrt(p)/(log p + 1)
    Cmp verdict;            // guarded comparison lhs vs rhs
    bool holds;             // delta_positive && verdict == Cmp::Greater
};

inline SieveCondition sieve_condition(const PrimeModulus& pm, u32 l) {
    FactoredNat fn = factorize(pm.p + 1);
    if (l > fn.omega())
        throw std::invalid_argument("sieve_condition: l exceeds omega(p+1)");
    u32 s = fn.omega() - l;

    Rat delta(1);
    for (u32 i = l; i < fn.omega(); ++i)
        delta = delta - Rat(1, static_cast<i64>(fn.factors[i].first));

    SieveCondition sc{pm.p, l, s, delta, delta.positive(), std::nullopt,
                      std::sqrt(static_cast<double>(pm.p)) /
                          (std::log(static_cast<double>(pm.p)) + 1.0),
                      Cmp::Indeterminate, false};
    if (!sc.delta_positive) return sc;

    Rat prod(1);
    for (u32 j = 0; j < l; ++j) {
        i64 qj = static_cast<i64>(fn.factors[j].first);
        prod = prod * Rat(qj - 1, qj);
    }
    Rat rhs = Rat(static_cast<i64>(s) + 1) * Rat(i64(1) << (l + 1)) / (delta * prod);
    sc.rhs = rhs;
    sc.verdict = guarded_cmp(sc.lhs, rhs.to_double());
    sc.holds = (sc.verdict == Cmp::Greater);
    return sc;
}

} // namespace lws
