#pragma once
// Univariate polynomial arithmetic over an abstract field context K.
//
// Poly<K> keeps coefficients little-endian (c[i] multiplies X^i) with the
// invariant that the top coefficient is nonzero; the zero polynomial has an
// empty coefficient vector and degree -1. Everything here is exact field
// arithmetic: division with remainder, monic gcd, modular exponentiation,
// derivative, evaluation, Newton interpolation, the Euclidean resultant
//
//   Res(A,B) = (-1)^{deg A * deg B} * lc(B)^{deg A - deg R} * Res(B, R),
//   Res(A, b) = b^{deg A}   for constant b,
//
// and Rabin irreducibility (X^{q^n} = X mod f, gcd(X^{q^{n/t}} - X, f) = 1
// for every prime t | n).

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "field.hpp"

namespace lws {

template <class K>
struct Poly {
    using Elem = typename K::Elem;
    K k;
    std::vector<Elem> c; // c[i] * X^i; empty <=> zero polynomial

    explicit Poly(const K& k_) : k(k_) {}
    Poly(const K& k_, std::vector<Elem> cs) : k(k_), c(std::move(cs)) { trim(); }

    void trim() {
        while (!c.empty() && k.is_zero(c.back())) c.pop_back();
    }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool zero() const { return c.empty(); }
    Elem lc() const {
        if (zero()) throw std::domain_error("Poly::lc: zero polynomial");
        return c.back();
    }
    Elem coeff(std::size_t i) const { return i < c.size() ? c[i] : k.zero(); }
};

template <class K>
Poly<K> poly_const(const K& k, typename K::Elem e) {
    Poly<K> r(k);
    if (!k.is_zero(e)) r.c = {e};
    return r;
}

template <class K>
Poly<K> poly_x(const K& k) {
    Poly<K> r(k);
    r.c = {k.zero(), k.one()};
    return r;
}

// Convenience constructor from small integers (reduced into the field).
template <class K>
Poly<K> poly_of(const K& k, const std::vector<i64>& coeffs) {
    Poly<K> r(k);
    r.c.reserve(coeffs.size());
    for (i64 v : coeffs) r.c.push_back(k.from_int(v));
    r.trim();
    return r;
}

template <class K>
bool poly_eq(const Poly<K>& a, const Poly<K>& b) {
    if (a.c.size() != b.c.size()) return false;
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (!a.k.eq(a.c[i], b.c[i])) return false;
    return true;
}

template <class K>
Poly<K> operator+(const Poly<K>& a, const Poly<K>& b) {
    Poly<K> r(a.k);
    r.c.resize(std::max(a.c.size(), b.c.size()), a.k.zero());
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.k.add(a.coeff(i), b.coeff(i));
    r.trim();
    return r;
}

template <class K>
Poly<K> operator-(const Poly<K>& a, const Poly<K>& b) {
    Poly<K> r(a.k);
    r.c.resize(std::max(a.c.size(), b.c.size()), a.k.zero());
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.k.sub(a.coeff(i), b.coeff(i));
    r.trim();
    return r;
}

template <class K>
Poly<K> poly_neg(const Poly<K>& a) {
    Poly<K> r = a;
    for (auto& e : r.c) e = a.k.neg(e);
    return r;
}

template <class K>
Poly<K> poly_scale(const Poly<K>& a, typename K::Elem s) {
    Poly<K> r(a.k);
    if (a.k.is_zero(s)) return r;
    r.c.reserve(a.c.size());
    for (const auto& e : a.c) r.c.push_back(a.k.mul(e, s));
    r.trim();
    return r;
}

template <class K>
Poly<K> operator*(const Poly<K>& a, const Poly<K>& b) {
    Poly<K> r(a.k);
    if (a.zero() || b.zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, a.k.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.k.is_zero(a.c[i])) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = a.k.add(r.c[i + j], a.k.mul(a.c[i], b.c[j]));
    }
    r.trim();
    return r;
}

// Quotient and remainder: A = Q*B + R with deg R < deg B. Field division.
template <class K>
std::pair<Poly<K>, Poly<K>> poly_divmod(const Poly<K>& a, const Poly<K>& b) {
    if (b.zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
    Poly<K> q(a.k), r = a;
    if (a.deg() < b.deg()) return {q, r};
    const auto& k = a.k;
    auto inv_lb = k.inv(b.lc());
    q.c.assign(static_cast<std::size_t>(a.deg() - b.deg()) + 1, k.zero());
    while (!r.zero() && r.deg() >= b.deg()) {
        std::size_t shift = static_cast<std::size_t>(r.deg() - b.deg());
        auto coef = k.mul(r.lc(), inv_lb);
        q.c[shift] = coef;
        for (std::size_t i = 0; i < b.c.size(); ++i)
            r.c[shift + i] = k.sub(r.c[shift + i], k.mul(coef, b.c[i]));
        r.trim();
    }
    q.trim();
    return {q, r};
}

template <class K>
Poly<K> poly_mod(const Poly<K>& a, const Poly<K>& b) { return poly_divmod(a, b).second; }
template <class K>
Poly<K> poly_div(const Poly<K>& a, const Poly<K>& b) { return poly_divmod(a, b).first; }

// Exact division; throws if the remainder is nonzero (internal invariant).
template <class K>
Poly<K> poly_divexact(const Poly<K>& a, const Poly<K>& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.zero()) throw std::logic_error("poly_divexact: division was not exact");
    return q;
}

template <class K>
Poly<K> poly_monic(const Poly<K>& a) {
    if (a.zero()) return a;
    return poly_scale(a, a.k.inv(a.lc()));
}

// Monic gcd.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.zero()) {
        Poly<K> r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

template <class K>
Poly<K> poly_derivative(const Poly<K>& a) {
    Poly<K> r(a.k);
    if (a.deg() < 1) return r;
    r.c.reserve(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i)
        r.c.push_back(a.k.mul(a.c[i], a.k.from_int(static_cast<i64>(i))));
    r.trim();
    return r;
}

template <class K>
typename K::Elem poly_eval(const Poly<K>& a, typename K::Elem x) {
    auto acc = a.k.zero();
    for (std::size_t i = a.c.size(); i-- > 0;)
        acc = a.k.add(a.k.mul(acc, x), a.c[i]);
    return acc;
}

// base^e mod m by square-and-multiply.
template <class K>
Poly<K> poly_powmod(Poly<K> base, u64 e, const Poly<K>& m) {
    Poly<K> r = poly_const(base.k, base.k.one());
    base = poly_mod(base, m);
    while (e) {
        if (e & 1) r = poly_mod(r * base, m);
        base = poly_mod(base * base, m);
        e >>= 1;
    }
    return r;
}

// Plain power (small exponents).
template <class K>
Poly<K> poly_pow(const Poly<K>& base, u64 e) {
    Poly<K> r = poly_const(base.k, base.k.one());
    Poly<K> b = base;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

// Euclidean resultant of two polynomials over the field K.
template <class K>
typename K::Elem poly_resultant(Poly<K> a, Poly<K> b) {
    const K k = a.k;
    if (a.zero() || b.zero()) return k.zero();
    auto res = k.one();
    while (b.deg() > 0) {
        Poly<K> r = poly_mod(a, b);
        if (r.zero()) return k.zero();
        if ((a.deg() & 1) && (b.deg() & 1)) res = k.neg(res);
        res = k.mul(res, k.pow(b.lc(), static_cast<u64>(a.deg() - r.deg())));
        a = std::move(b);
        b = std::move(r);
    }
    // b is a nonzero constant: Res(a, b0) = b0^deg(a)
    return k.mul(res, k.pow(b.c[0], static_cast<u64>(a.deg())));
}

// Newton interpolation through (xs[i], ys[i]); the xs must be distinct.
template <class K>
Poly<K> poly_interpolate(const K& k, const std::vector<typename K::Elem>& xs,
                         const std::vector<typename K::Elem>& ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw std::invalid_argument("poly_interpolate: need equally many points, at least one");
    std::size_t n = xs.size();
    std::vector<typename K::Elem> dd = ys; // divided differences, in place
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            auto den = k.sub(xs[i], xs[i - j]);
            if (k.is_zero(den))
                throw std::invalid_argument("poly_interpolate: repeated x coordinate");
            dd[i] = k.mul(k.sub(dd[i], dd[i - 1]), k.inv(den));
        }
    Poly<K> r = poly_const(k, dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        // r <- r*(X - xs[i]) + dd[i]
        Poly<K> lin(k);
        lin.c = {k.neg(xs[i]), k.one()};
        lin.trim();
        r = r * lin + poly_const(k, dd[i]);
    }
    return r;
}

// Rabin's irreducibility test over K with q = #K.
template <class K>
bool poly_is_irreducible(const Poly<K>& f_in) {
    const K& k = f_in.k;
    int n = f_in.deg();
    if (n <= 0) return false;
    if (n == 1) return true;
    Poly<K> f = poly_monic(f_in);
    u64 q = k.size();
    // checkpoints n/t for each distinct prime t | n, visited in ascending order
    std::vector<int> targets;
    int m = n;
    for (int t = 2; t * t <= m; ++t)
        if (m % t == 0) {
            targets.push_back(n / t);
            while (m % t == 0) m /= t;
        }
    if (m > 1) targets.push_back(n / m);
    std::sort(targets.begin(), targets.end());

    Poly<K> x = poly_x(k);
    Poly<K> h = poly_mod(x, f); // X^{q^0}
    int steps = 0;
    for (int target : targets) {
        while (steps < target) {
            h = poly_powmod(h, q, f);
            ++steps;
        }
        Poly<K> g = poly_gcd(h - x, f);
        if (g.deg() != 0) return false;
    }
    while (steps < n) {
        h = poly_powmod(h, q, f);
        ++steps;
    }
    return poly_eq(h, poly_mod(x, f));
}

} // namespace lws
