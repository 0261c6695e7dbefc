#pragma once
// The extension field F_q, q = p^nu, as F_p[y]/(g) for a canonical modulus g.
//
// g is chosen as the numerically least monic irreducible of degree nu: scan
// v = 0, 1, 2, ... and take g = y^nu + sum a_i y^i where the a_i are the
// base-p digits of v (a_i = i-th digit). This makes the construction fully
// deterministic, so test vectors and seeded sampling are reproducible.
//
// Elements are coefficient vectors of length nu (little-endian over F_p).
// This representation favors clarity over speed; the extension field is used
// for cross-checks and small-field sampling, never on a hot path.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "field.hpp"
#include "poly.hpp"

namespace lws {

struct Fq {
    using Elem = std::vector<u64>;
    u64 p = 0;
    u32 nu = 0;
    u64 q = 0;                 // p^nu
    std::vector<u64> modulus;  // monic, degree nu, coefficients in F_p

    Fq(u64 p_, u32 nu_) : p(p_), nu(nu_) {
        Fp base(p_);
        if (nu == 0) throw std::invalid_argument("Fq: extension degree must be >= 1");
        q = 1;
        for (u32 i = 0; i < nu; ++i) {
            if (q > (u64(1) << 20) / p)
                throw std::invalid_argument("Fq: field size p^nu must be <= 2^20");
            q *= p;
        }
        // numerically least monic irreducible of degree nu
        for (u64 v = 0; v < q; ++v) {
            std::vector<u64> cs(nu + 1, 0);
            u64 t = v;
            for (u32 i = 0; i < nu; ++i) {
                cs[i] = t % p;
                t /= p;
            }
            cs[nu] = 1;
            Poly<Fp> cand(base, cs);
            if (poly_is_irreducible(cand)) {
                modulus = std::move(cs);
                return;
            }
        }
        throw std::logic_error("Fq: no irreducible modulus found"); // unreachable
    }

    Fp base() const { return Fp(p); }

    Elem zero() const { return Elem(nu, 0); }
    Elem one() const { Elem e(nu, 0); e[0] = 1 % p; return e; }
    bool is_zero(const Elem& a) const {
        for (u64 x : a)
            if (x) return false;
        return true;
    }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const {
        Elem r(nu);
        for (u32 i = 0; i < nu; ++i) {
            u64 s = a[i] + b[i];
            r[i] = s >= p ? s - p : s;
        }
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r(nu);
        for (u32 i = 0; i < nu; ++i) r[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p - b[i];
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r(nu);
        for (u32 i = 0; i < nu; ++i) r[i] = a[i] ? p - a[i] : 0;
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        Fp base_(p);
        Poly<Fp> pa(base_, std::vector<u64>(a)), pb(base_, std::vector<u64>(b));
        Poly<Fp> pm(base_, std::vector<u64>(modulus));
        Poly<Fp> pr = poly_mod(pa * pb, pm);
        return pad(pr);
    }
    Elem pow(Elem a, u64 e) const {
        Elem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            e >>= 1;
            if (e) a = mul(a, a);
        }
        return r;
    }
    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw std::domain_error("Fq::inv: division by zero");
        return pow(a, q - 2);
    }
    Elem from_int(i64 v) const {
        Elem e(nu, 0);
        e[0] = reduce_mod(v, p);
        return e;
    }
    u64 size() const { return q; }
    u64 characteristic() const { return p; }
    Elem element_from_index(u64 idx) const {
        idx %= q;
        Elem e(nu);
        for (u32 i = 0; i < nu; ++i) {
            e[i] = idx % p;
            idx /= p;
        }
        return e;
    }
    u64 index_of(const Elem& a) const {
        u64 idx = 0;
        for (u32 i = nu; i-- > 0;) idx = idx * p + a[i];
        return idx;
    }
    bool same_field(const Fq& o) const { return p == o.p && nu == o.nu; }

private:
    Elem pad(const Poly<Fp>& pr) const {
        Elem e(nu, 0);
        for (std::size_t i = 0; i < pr.c.size(); ++i) e[i] = pr.c[i];
        return e;
    }
};

} // namespace lws
