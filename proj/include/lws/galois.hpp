#pragma once
// Empirical Galois-group evidence by specialization: factor-degree
// statistics of f(t0, X) over F_q for sampled t0, cross-checked pointwise
// against the discriminant.
//
// For a squarefree specialization the multiset of irreducible-factor
// degrees is the cycle type of a Frobenius element; its permutation parity
// is (-1)^{n - #factors}, and Stickelberger's criterion says the parity is
// even exactly when Disc(f)(t0) is a square in F_q. Every sample is checked
// against that criterion, and against Disc(f)(t0) = 0 <=> not squarefree;
// a single violation marks the whole report incoherent.
//
// The verdict vocabulary is deliberately "consistent_with": observing a
// transposition-type or an n-cycle is evidence, not proof.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "field.hpp"
#include "poly.hpp"
#include "polyring.hpp"

namespace lws {

struct DegreeSeq {
    bool squarefree = false;
    std::vector<u32> degrees; // ascending; empty when not squarefree
};

// Distinct-degree splitting: gcd(f, X^{q^i} - X) captures the product of
// all irreducible factors of degree dividing i; processing i = 1, 2, ...
// in order makes each gcd exactly the degree-i part.
template <class K>
DegreeSeq degree_sequence(const Poly<K>& f) {
    const K& k = f.k;
    int n = f.deg();
    if (n < 1) throw std::invalid_argument("degree_sequence: need degree >= 1");
    if (!k.eq(f.lc(), k.one())) throw std::invalid_argument("degree_sequence: need monic input");

    DegreeSeq out;
    Poly<K> fp = poly_derivative(f);
    if (fp.zero()) return out; // f = g(X^p), never squarefree
    if (poly_gcd(f, fp).deg() > 0) return out;
    out.squarefree = true;

    u64 q = k.size();
    Poly<K> fstar = f;
    Poly<K> x = poly_x(k);
    Poly<K> h = poly_mod(x, fstar);
    for (u32 i = 1; static_cast<int>(2 * i) <= fstar.deg(); ++i) {
        h = poly_powmod(h, q, fstar);
        Poly<K> d = poly_gcd(fstar, h - x);
        if (d.deg() > 0) {
            u32 cnt = static_cast<u32>(d.deg()) / i;
            for (u32 c = 0; c < cnt; ++c) out.degrees.push_back(i);
            fstar = poly_divexact(fstar, d);
            if (fstar.deg() == 0) break;
            h = poly_mod(h, fstar);
        }
    }
    if (fstar.deg() > 0) out.degrees.push_back(static_cast<u32>(fstar.deg()));
    std::sort(out.degrees.begin(), out.degrees.end());
    return out;
}

// permutation parity of the cycle type: (-1)^{n - #cycles}; true = odd
inline bool cycle_type_odd(u32 n, const std::vector<u32>& degrees) {
    return ((n - degrees.size()) & 1u) != 0;
}

inline std::string seq_key(const std::vector<u32>& degrees) {
    std::string s;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(degrees[i]);
    }
    return s;
}

enum class GaloisVerdict { consistent_with_Sn, consistent_with_An, inconclusive };

inline const char* verdict_name(GaloisVerdict v) {
    switch (v) {
        case GaloisVerdict::consistent_with_Sn: return "consistent_with_Sn";
        case GaloisVerdict::consistent_with_An: return "consistent_with_An";
        default: return "inconclusive";
    }
}

struct EvidenceReport {
    u64 p = 0;
    u64 q = 0;
    u32 n = 0;
    u64 seed = 0;
    u32 requested = 0;
    u32 squarefree_count = 0;
    u32 skipped = 0; // non-squarefree specializations
    std::map<std::vector<u32>, u32> histogram;
    bool found_transposition_type = false;
    bool found_p_cycle_type = false;
    bool found_n_cycle = false;
    bool odd_type_seen = false;
    bool disc_is_monomial = false;
    bool disc_square = false;
    bool coherent = true; // parity/zero checks vs discriminant, all samples
    GaloisVerdict verdict = GaloisVerdict::inconclusive;
};

namespace detail {

inline bool is_transposition_type(u32 n, const std::vector<u32>& d) {
    if (d.size() != static_cast<std::size_t>(n) - 1) return false;
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
        if (d[i] != 1) return false;
    return d.back() == 2;
}

inline bool is_p_cycle_type(u64 p, const std::vector<u32>& d) {
    u32 seen = 0;
    for (u32 v : d) {
        if (v == p)
            ++seen;
        else if (v != 1)
            return false;
    }
    return seen == 1;
}

} // namespace detail

// Draw num_samples values t0 in F_q (uniform, seeded, portable across
// platforms via rejection sampling), factor f(t0, X), and accumulate
// cycle-type statistics plus pointwise discriminant checks.
template <class K>
EvidenceReport sample_evidence(const BivarPoly& f, const K& k, u32 num_samples, u64 seed) {
    if (!f.monic_in_x()) throw std::invalid_argument("sample_evidence: f must be monic in X");
    if (f.degx() < 2) throw std::invalid_argument("sample_evidence: need X-degree >= 2");
    if (num_samples < 1) throw std::invalid_argument("sample_evidence: need num_samples >= 1");
    if (k.characteristic() != f.fld.p)
        throw std::invalid_argument("sample_evidence: field characteristic mismatch");
    if (k.characteristic() == 2)
        throw std::invalid_argument("sample_evidence: parity criterion needs odd characteristic");

    EvidenceReport rep;
    rep.p = f.fld.p;
    rep.q = k.size();
    rep.n = static_cast<u32>(f.degx());
    rep.seed = seed;
    rep.requested = num_samples;

    Poly<Fp> disc = discriminant_x(f);
    std::optional<ScaledMonomial> mono = as_monomial(disc);
    rep.disc_is_monomial = mono.has_value();
    rep.disc_square = mono && is_square_in_FqT(*mono, rep.q);
    Poly<K> disc_k = specialize_coeff(disc, k);

    std::mt19937_64 rng(seed);
    const u64 bound = rep.q;
    const u64 limit = UINT64_MAX - UINT64_MAX % bound; // multiple of bound
    for (u32 s = 0; s < num_samples; ++s) {
        u64 r;
        do {
            r = rng();
        } while (r >= limit);
        auto t0 = k.element_from_index(r % bound);

        Poly<K> u = specialize(f, k, t0);
        DegreeSeq ds = degree_sequence(u);
        auto dval = poly_eval(disc_k, t0);

        // Disc(f)(t0) = 0 exactly when the specialization is not squarefree
        if (k.is_zero(dval) == ds.squarefree) rep.coherent = false;

        if (!ds.squarefree) {
            ++rep.skipped;
            continue;
        }
        ++rep.squarefree_count;
        ++rep.histogram[ds.degrees];

        bool odd = cycle_type_odd(rep.n, ds.degrees);
        rep.odd_type_seen = rep.odd_type_seen || odd;
        rep.found_transposition_type =
            rep.found_transposition_type || detail::is_transposition_type(rep.n, ds.degrees);
        rep.found_p_cycle_type =
            rep.found_p_cycle_type || detail::is_p_cycle_type(rep.p, ds.degrees);
        rep.found_n_cycle =
            rep.found_n_cycle || (ds.degrees.size() == 1 && ds.degrees[0] == rep.n);

        // Stickelberger: even parity <=> Disc(f)(t0) is a nonzero square
        bool sq = k.eq(k.pow(dval, (rep.q - 1) / 2), k.one());
        if (sq == odd) rep.coherent = false;
    }

    if (rep.coherent && rep.disc_is_monomial) {
        if (rep.disc_square && !rep.odd_type_seen && rep.squarefree_count > 0)
            rep.verdict = GaloisVerdict::consistent_with_An;
        else if (!rep.disc_square && rep.odd_type_seen)
            rep.verdict = GaloisVerdict::consistent_with_Sn;
    }
    return rep;
}

} // namespace lws
