#pragma once
// Bivariate polynomials f(T, X) over F_p, resultants in X, discriminants,
// and the explicit one-parameter families whose discriminants certify
// Galois realizations.
//
// Representation: cx[i] in F_p[T] is the coefficient of X^i (little-endian
// in X, tight at the top). Two independent resultant strategies are kept
// deliberately separate so they can cross-check each other:
//
//   * evaluation-interpolation: Res_X(f,g)(t0) = Res(f(t0,X), g(t0,X))
//     whenever neither leading X-coefficient vanishes at t0; evaluate at
//     deg bound + 1 good points and interpolate. Needs p large enough.
//   * fraction-free subresultant PRS directly over F_p[T] (Cohen's
//     sub-resultant algorithm with content extraction), which works for
//     every p, in particular p = 3, 5, 7 where the families live.
//
// Disc(f) = (-1)^{n(n-1)/2} Res_X(f, dclass f/dX) for monic f of X-degree n.
//
// The text format for polynomials is a sum of terms c*T^j*X^i with '+'/'-'
// separators and '^' powers; parse_bivar accepts any such expression with
// parentheses and '*' products, emit_bivar prints the canonical form
// (descending X, then descending T, coefficients as canonical residues).

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"
#include "modnt.hpp"
#include "poly.hpp"

namespace lws {

struct BivarPoly {
    Fp fld;
    std::vector<Poly<Fp>> cx; // cx[i] multiplies X^i; empty <=> zero

    explicit BivarPoly(const Fp& k) : fld(k) {}

    void trim() {
        while (!cx.empty() && cx.back().zero()) cx.pop_back();
    }
    bool zero() const { return cx.empty(); }
    int degx() const { return static_cast<int>(cx.size()) - 1; }
    int degt() const {
        int d = -1;
        for (const auto& c : cx) d = std::max(d, c.deg());
        return d;
    }
    Poly<Fp> coeff_x(std::size_t i) const {
        return i < cx.size() ? cx[i] : Poly<Fp>(fld);
    }
    bool monic_in_x() const {
        return !zero() && cx.back().deg() == 0 && cx.back().c[0] == 1 % fld.p;
    }
};

inline BivarPoly bivar_zero(const Fp& k) { return BivarPoly(k); }

inline BivarPoly bivar_const(const Fp& k, const Poly<Fp>& tpoly) {
    BivarPoly r(k);
    if (!tpoly.zero()) r.cx = {tpoly};
    return r;
}

inline BivarPoly bivar_int(const Fp& k, i64 v) { return bivar_const(k, poly_of(k, {v})); }

inline BivarPoly bivar_x(const Fp& k) {
    BivarPoly r(k);
    r.cx = {Poly<Fp>(k), poly_const(k, k.one())};
    return r;
}

inline BivarPoly bivar_t(const Fp& k) {
    BivarPoly r(k);
    r.cx = {poly_of(k, {0, 1})};
    return r;
}

inline BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r(a.fld);
    std::size_t n = std::max(a.cx.size(), b.cx.size());
    r.cx.reserve(n);
    for (std::size_t i = 0; i < n; ++i) r.cx.push_back(a.coeff_x(i) + b.coeff_x(i));
    r.trim();
    return r;
}

inline BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r(a.fld);
    std::size_t n = std::max(a.cx.size(), b.cx.size());
    r.cx.reserve(n);
    for (std::size_t i = 0; i < n; ++i) r.cx.push_back(a.coeff_x(i) - b.coeff_x(i));
    r.trim();
    return r;
}

inline BivarPoly bivar_neg(const BivarPoly& a) {
    BivarPoly r(a.fld);
    r.cx.reserve(a.cx.size());
    for (const auto& c : a.cx) r.cx.push_back(poly_neg(c));
    return r;
}

inline BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r(a.fld);
    if (a.zero() || b.zero()) return r;
    r.cx.assign(a.cx.size() + b.cx.size() - 1, Poly<Fp>(a.fld));
    for (std::size_t i = 0; i < a.cx.size(); ++i) {
        if (a.cx[i].zero()) continue;
        for (std::size_t j = 0; j < b.cx.size(); ++j)
            r.cx[i + j] = r.cx[i + j] + a.cx[i] * b.cx[j];
    }
    r.trim();
    return r;
}

inline BivarPoly bivar_pow(const BivarPoly& base, u64 e) {
    BivarPoly r = bivar_int(base.fld, 1);
    BivarPoly b = base;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

inline BivarPoly derivative_x(const BivarPoly& a) {
    BivarPoly r(a.fld);
    if (a.degx() < 1) return r;
    r.cx.reserve(a.cx.size() - 1);
    for (std::size_t i = 1; i < a.cx.size(); ++i)
        r.cx.push_back(poly_scale(a.cx[i], a.fld.from_int(static_cast<i64>(i))));
    r.trim();
    return r;
}

// Embed a polynomial over F_p into a polynomial over K (same characteristic).
template <class K>
Poly<K> specialize_coeff(const Poly<Fp>& tp, const K& k) {
    Poly<K> r(k);
    r.c.reserve(tp.c.size());
    for (u64 v : tp.c) r.c.push_back(k.from_int(static_cast<i64>(v)));
    r.trim();
    return r;
}

/// Specialize T := t0 into a univariate polynomial in X over any field K of
// the same characteristic (the F_p coefficients embed as constants).
template <class K>
Poly<K> specialize(const BivarPoly& f, const K& k, const typename K::Elem& t0) {
    if (k.characteristic() != f.fld.p)
        throw std::invalid_argument("specialize: field characteristic mismatch");
    Poly<K> r(k);
    r.c.reserve(f.cx.size());
    for (const auto& ct : f.cx) {
        // Horner in K with embedded coefficients
        auto acc = k.zero();
        for (std::size_t i = ct.c.size(); i-- > 0;)
            acc = k.add(k.mul(acc, t0), k.from_int(static_cast<i64>(ct.c[i])));
        r.c.push_back(acc);
    }
    r.trim();
    return r;
}

inline u64 eval_bivar(const BivarPoly& f, u64 t0, u64 x0) {
    Fp k = f.fld;
    u64 acc = 0;
    for (std::size_t i = f.cx.size(); i-- > 0;)
        acc = k.add(k.mul(acc, x0 % k.p), poly_eval(f.cx[i], t0 % k.p));
    return acc;
}

// ---------------------------------------------------------------- parsing

namespace detail {

struct BivarParser {
    const std::string& s;
    std::size_t i = 0;
    Fp k;

    BivarParser(const std::string& text, const Fp& fld) : s(text), k(fld) {}

    void skip_ws() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse_bivar: " + what + " at position " +
                                    std::to_string(i));
    }

    u64 parse_uint() {
        skip_ws();
        if (i >= s.size() || s[i] < '0' || s[i] > '9') fail("expected number");
        u64 v = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
            if (v > (UINT64_MAX - 9) / 10) fail("number too large");
            v = v * 10 + static_cast<u64>(s[i] - '0');
            ++i;
        }
        return v;
    }

    BivarPoly parse_atom() {
        char c = peek();
        if (c == '(') {
            ++i;
            BivarPoly e = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (c == 'T') {
            ++i;
            return bivar_t(k);
        }
        if (c == 'X') {
            ++i;
            return bivar_x(k);
        }
        if (c >= '0' && c <= '9')
            return bivar_int(k, static_cast<i64>(parse_uint() % k.p));
        fail("expected atom");
    }

    BivarPoly parse_factor() {
        BivarPoly a = parse_atom();
        if (eat('^')) {
            u64 e = parse_uint();
            if (e > 4096) fail("exponent too large");
            return bivar_pow(a, e);
        }
        return a;
    }

    BivarPoly parse_term() {
        BivarPoly a = parse_factor();
        while (eat('*')) a = a * parse_factor();
        return a;
    }

    BivarPoly parse_expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        BivarPoly acc = parse_term();
        if (neg) acc = bivar_neg(acc);
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++i;
                acc = acc + parse_term();
            } else if (c == '-') {
                ++i;
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }
};

} // namespace detail

inline BivarPoly parse_bivar(const std::string& text, const Fp& k) {
    detail::BivarParser ps(text, k);
    BivarPoly r = ps.parse_expr();
    ps.skip_ws();
    if (ps.i != text.size()) ps.fail("trailing input");
    return r;
}

// Canonical form: terms descending in X then descending in T, canonical
// residue coefficients, explicit '*' between factors.
inline std::string emit_bivar(const BivarPoly& f) {
    if (f.zero()) return "0";
    std::string out;
    for (std::size_t ii = f.cx.size(); ii-- > 0;) {
        const Poly<Fp>& ct = f.cx[ii];
        for (std::size_t jj = ct.c.size(); jj-- > 0;) {
            u64 coef = ct.c[jj];
            if (coef == 0) continue;
            std::string term;
            if (coef != 1 || (ii == 0 && jj == 0)) term = std::to_string(coef);
            if (jj > 0) {
                if (!term.empty()) term += "*";
                term += "T";
                if (jj > 1) term += "^" + std::to_string(jj);
            }
            if (ii > 0) {
                if (!term.empty()) term += "*";
                term += "X";
                if (ii > 1) term += "^" + std::to_string(ii);
            }
            if (!out.empty()) out += " + ";
            out += term;
        }
    }
    return out;
}

// ------------------------------------------------------------- resultants

enum class ResultantStrategy { automatic, interpolation, subresultant };

namespace detail {

// pseudo-remainder over F_p[T]: lc(B)^{degA-degB+1} * A = Q*B + R
inline std::vector<Poly<Fp>> xp_prem(std::vector<Poly<Fp>> r, const std::vector<Poly<Fp>>& b) {
    const Poly<Fp>& d = b.back();
    int e = static_cast<int>(r.size()) - static_cast<int>(b.size()) + 1;
    auto trim = [](std::vector<Poly<Fp>>& v) {
        while (!v.empty() && v.back().zero()) v.pop_back();
    };
    trim(r);
    while (!r.empty() && r.size() >= b.size()) {
        Poly<Fp> lr = r.back();
        std::size_t shift = r.size() - b.size();
        // r <- d*r - lr * X^shift * b
        for (auto& c : r) c = c * d;
        for (std::size_t i = 0; i < b.size(); ++i)
            r[shift + i] = r[shift + i] - lr * b[i];
        trim(r);
        --e;
    }
    if (e > 0) {
        Poly<Fp> dd = poly_pow(d, static_cast<u64>(e));
        for (auto& c : r) c = c * dd;
    }
    return r;
}

inline Poly<Fp> xp_content(const std::vector<Poly<Fp>>& v, const Fp& k) {
    Poly<Fp> g(k);
    for (const auto& c : v) g = poly_gcd(g, c);
    return g; // monic, or zero for the zero polynomial
}

} // namespace detail

// Fraction-free subresultant PRS resultant over F_p[T]; works for every p.
inline Poly<Fp> resultant_subresultant(const BivarPoly& fa, const BivarPoly& fb) {
    const Fp k = fa.fld;
    if (fa.zero() || fb.zero())
        throw std::invalid_argument("resultant_x: zero polynomial");
    std::vector<Poly<Fp>> A = fa.cx, B = fb.cx;
    bool s_neg = false;
    if (A.size() < B.size()) {
        std::swap(A, B);
        if (((A.size() - 1) & 1) && ((B.size() - 1) & 1)) s_neg = !s_neg;
    }
    if (B.size() == 1) {
        // Res(A, b) = b^{deg A}
        Poly<Fp> r = poly_pow(B[0], static_cast<u64>(A.size() - 1));
        return s_neg ? poly_neg(r) : r;
    }

    Poly<Fp> ca = detail::xp_content(A, k), cb = detail::xp_content(B, k);
    for (auto& c : A) c = poly_divexact(c, ca);
    for (auto& c : B) c = poly_divexact(c, cb);
    Poly<Fp> t = poly_pow(ca, static_cast<u64>(B.size() - 1)) *
                 poly_pow(cb, static_cast<u64>(A.size() - 1));

    Poly<Fp> g = poly_const(k, k.one());
    Poly<Fp> h = poly_const(k, k.one());
    for (;;) {
        int dA = static_cast<int>(A.size()) - 1;
        int dB = static_cast<int>(B.size()) - 1;
        int delta = dA - dB;
        if ((dA & 1) && (dB & 1)) s_neg = !s_neg;
        std::vector<Poly<Fp>> R = detail::xp_prem(A, B);
        A = std::move(B);
        Poly<Fp> denom = g * poly_pow(h, static_cast<u64>(delta));
        B.clear();
        B.reserve(R.size());
        for (auto& c : R) B.push_back(poly_divexact(c, denom));
        while (!B.empty() && B.back().zero()) B.pop_back();
        if (B.empty()) return Poly<Fp>(k); // common factor of positive degree
        g = A.back();
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = poly_divexact(poly_pow(g, static_cast<u64>(delta)),
                              poly_pow(h, static_cast<u64>(delta - 1)));
        if (B.size() == 1) break;
    }
    int dA = static_cast<int>(A.size()) - 1; // >= 1
    Poly<Fp> hout = dA == 1 ? B[0]
                            : poly_divexact(poly_pow(B[0], static_cast<u64>(dA)),
                                            poly_pow(h, static_cast<u64>(dA - 1)));
    Poly<Fp> res = t * hout;
    return s_neg ? poly_neg(res) : res;
}

// Evaluation-interpolation resultant over any field K containing F_p with
// enough elements; the workhorse for large p and the independent cross-check
// (over an extension field) for small p.
template <class K>
Poly<K> resultant_interpolation_over(const BivarPoly& fa, const BivarPoly& fb, const K& k) {
    if (fa.zero() || fb.zero())
        throw std::invalid_argument("resultant_x: zero polynomial");
    int D = fa.degx() * std::max(fb.degt(), 0) + fb.degx() * std::max(fa.degt(), 0);
    std::size_t need = static_cast<std::size_t>(D) + 1;
    Poly<K> lcf = specialize_coeff(fa.cx.back(), k);
    Poly<K> lcg = specialize_coeff(fb.cx.back(), k);
    std::vector<typename K::Elem> xs, ys;
    xs.reserve(need);
    ys.reserve(need);
    for (u64 idx = 0; idx < k.size() && xs.size() < need; ++idx) {
        auto t0 = k.element_from_index(idx);
        // leading coefficients must not vanish for degrees to be preserved
        auto lf = poly_eval(lcf, t0);
        auto lg = poly_eval(lcg, t0);
        if (k.is_zero(lf) || k.is_zero(lg)) continue;
        Poly<K> uf = specialize(fa, k, t0), ug = specialize(fb, k, t0);
        xs.push_back(t0);
        ys.push_back(poly_resultant(uf, ug));
    }
    if (xs.size() < need)
        throw std::invalid_argument("resultant_x: field too small for interpolation strategy");
    return poly_interpolate(k, xs, ys);
}

inline Poly<Fp> resultant_x(const BivarPoly& fa, const BivarPoly& fb,
                            ResultantStrategy strat = ResultantStrategy::automatic) {
    if (fa.zero() || fb.zero())
        throw std::invalid_argument("resultant_x: zero polynomial");
    const Fp& k = fa.fld;
    // constant-in-X edges: Res(c, g) = c^{deg g}, Res(f, c) = c^{deg f}
    if (fa.degx() == 0) return poly_pow(fa.cx[0], static_cast<u64>(fb.degx()));
    if (fb.degx() == 0) return poly_pow(fb.cx[0], static_cast<u64>(fa.degx()));

    if (strat == ResultantStrategy::automatic) {
        int D = fa.degx() * std::max(fb.degt(), 0) + fb.degx() * std::max(fa.degt(), 0);
        u64 bad = static_cast<u64>(std::max(fa.cx.back().deg(), 0)) +
                  static_cast<u64>(std::max(fb.cx.back().deg(), 0));
        strat = (k.p >= static_cast<u64>(D) + 1 + bad) ? ResultantStrategy::interpolation
                                                       : ResultantStrategy::subresultant;
    }
    if (strat == ResultantStrategy::interpolation)
        return resultant_interpolation_over(fa, fb, k);
    return resultant_subresultant(fa, fb);
}

// Disc(f) = (-1)^{n(n-1)/2} Res_X(f, f') for monic f of X-degree n >= 2.
inline Poly<Fp> discriminant_x(const BivarPoly& f,
                               ResultantStrategy strat = ResultantStrategy::automatic) {
    if (!f.monic_in_x())
        throw std::invalid_argument("discriminant_x: polynomial must be monic in X");
    int n = f.degx();
    if (n < 2) throw std::invalid_argument("discriminant_x: need X-degree >= 2");
    BivarPoly fx = derivative_x(f);
    if (fx.zero()) return Poly<Fp>(f.fld);
    Poly<Fp> r = resultant_x(f, fx, strat);
    if (n % 4 == 2 || n % 4 == 3) r = poly_neg(r); // (-1)^{n(n-1)/2}
    return r;
}

// ------------------------------------------------- monomial discriminants

struct ScaledMonomial {
    u64 p;
    u64 c; // nonzero residue
    u32 m; // exponent: c * T^m
};

inline std::optional<ScaledMonomial> as_monomial(const Poly<Fp>& tp) {
    if (tp.zero()) return std::nullopt;
    std::optional<ScaledMonomial> r;
    for (std::size_t j = 0; j < tp.c.size(); ++j) {
        if (tp.c[j] == 0) continue;
        if (r) return std::nullopt; // second nonzero term
        r = ScaledMonomial{tp.k.p, tp.c[j], static_cast<u32>(j)};
    }
    return r;
}

// Is c*T^m a square in F_q(T), q = p^nu?  True iff m is even and
// c^{(q-1)/2} = 1 in F_q. Since c lies in the prime field, the power can be
// taken in F_p directly. (Equivalent closed form: legendre(c,p)^nu = 1.)
inline bool is_square_in_FqT(const ScaledMonomial& mono, u64 q) {
    u64 nu = 0, t = q;
    while (t > 1 && t % mono.p == 0) {
        t /= mono.p;
        ++nu;
    }
    if (t != 1 || nu == 0) throw std::invalid_argument("is_square_in_FqT: q must be a power of p");
    if (mono.m % 2 != 0) return false;
    if (mono.c % mono.p == 0) throw std::invalid_argument("is_square_in_FqT: c must be nonzero");
    return powmod(mono.c % mono.p, (q - 1) / 2, mono.p) == 1 % mono.p;
}

// --------------------------------------------------------------- families

// Degree-(p+1) family X^p(X-1) - T*V(X) with three textual variants of V;
// the target is Disc = (-1)^{(p+1)/2} * (4/243) * T^{p+2}.
struct NewFamilyVariant {
    std::string shape;     // the factor pattern of V
    std::string poly_text; // canonical form of the full polynomial
    Poly<Fp> disc;
    std::optional<ScaledMonomial> mono;
    bool matches;
};

struct NewFamilyReport {
    u64 p;
    ScaledMonomial expected;
    std::vector<NewFamilyVariant> variants;
    std::optional<std::size_t> first_match;
    bool any_match;
};

inline NewFamilyReport disc_family_new(u64 p_in) {
    PrimeModulus pm(p_in); // validates prime
    if (p_in <= 3) throw std::invalid_argument("disc_family_new: requires p > 3");
    Fp k(p_in);
    const u64 p = p_in;

    u64 c43 = k.mul(4 % p, k.inv(3 % p));
    u64 sign_flip = ((p + 1) / 2) % 2; // (-1)^{(p+1)/2}
    u64 ce = k.mul(4 % p, k.inv(243 % p));
    if (sign_flip) ce = k.neg(ce);
    ScaledMonomial expected{p, ce, static_cast<u32>(p + 2)};

    BivarPoly X = bivar_x(k);
    BivarPoly lead = bivar_pow(X, p) * (X - bivar_int(k, 1));
    BivarPoly xm4 = X - bivar_int(k, 4);
    BivarPoly xmc = X - bivar_const(k, poly_const(k, c43));

    struct Def {
        const char* shape;
        u64 e4;  // exponent of (X-4)
        u64 ec;  // exponent of (X-4/3)
    };
    const Def defs[3] = {{"(X-4)^(p-1)*(X-4/3)", p - 1, 1},
                         {"(X-4)^(p-2)*(X-4/3)", p - 2, 1},
                         {"(X-4)^(p-2)*(X-4/3)^2", p - 2, 2}};

    NewFamilyReport rep{p, expected, {}, std::nullopt, false};
    for (std::size_t vi = 0; vi < 3; ++vi) {
        BivarPoly V = bivar_pow(xm4, defs[vi].e4) * bivar_pow(xmc, defs[vi].ec);
        BivarPoly f = lead - bivar_t(k) * V;
        Poly<Fp> disc = discriminant_x(f);
        std::optional<ScaledMonomial> mono = as_monomial(disc);
        bool match = mono && mono->c == expected.c && mono->m == expected.m;
        if (match && !rep.first_match) rep.first_match = vi;
        rep.any_match = rep.any_match || match;
        rep.variants.push_back({defs[vi].shape, emit_bivar(f), disc, mono, match});
    }
    return rep;
}

// Degree-(p+1) family (X+1)(X + a/(a-1))^p - s X^a, s standing for the
// monomial T^{-a(p+1-a)}; the closed form for the discriminant is
// (-1)^{(p+1)/2} a^{pa-p+a} / (a-1)^{pa-2p+a-1} * s^{p+1}.
struct MtrReport {
    u64 p;
    u64 a;
    u64 b; // a/(a-1) mod p
    std::string poly_text;
    Poly<Fp> disc; // in s
    ScaledMonomial expected;
    std::optional<ScaledMonomial> mono;
    bool matches;
};

inline MtrReport disc_family_mtr(u64 p_in, u64 a) {
    PrimeModulus pm(p_in);
    const u64 p = p_in;
    if (p <= 5) throw std::invalid_argument("disc_family_mtr: requires p > 5");
    if (a < 2 || a > (p - 1) / 2)
        throw std::invalid_argument("disc_family_mtr: need 2 <= a <= (p-1)/2");
    if (std::gcd(a, p + 1) != 1)
        throw std::invalid_argument("disc_family_mtr: need gcd(a, p+1) = 1");
    Fp k(p);

    u64 b = k.mul(a % p, k.inv((a - 1) % p));
    BivarPoly X = bivar_x(k);
    BivarPoly f = (X + bivar_int(k, 1)) * bivar_pow(X + bivar_const(k, poly_const(k, b)), p) -
                  bivar_t(k) * bivar_pow(X, a);

    u64 e1 = p * a - p + a;
    u64 e2 = p * a - 2 * p + a - 1;
    u64 c = k.mul(powmod(a % p, e1, p), k.inv(powmod((a - 1) % p, e2, p)));
    if (((p + 1) / 2) % 2) c = k.neg(c);
    ScaledMonomial expected{p, c, static_cast<u32>(p + 1)};

    Poly<Fp> disc = discriminant_x(f);
    std::optional<ScaledMonomial> mono = as_monomial(disc);
    bool match = mono && mono->c == expected.c && mono->m == expected.m;
    return {p, a, b, emit_bivar(f), disc, expected, mono, match};
}

// ---------------------------------------------------------- realizations

enum class GroupEvidence { none, symmetric, alternating };

inline const char* group_evidence_name(GroupEvidence g) {
    switch (g) {
        case GroupEvidence::symmetric: return "symmetric";
        case GroupEvidence::alternating: return "alternating";
        default: return "none";
    }
}

// Hypothesis check for the monomial-discriminant realization lemma:
// n >= p > 2, p does not divide n, Disc(f) = c T^m with m <= p-1; then
// clause "transposition_route" (m odd, symmetric evidence) or
// "alternating_route" (n >= 5, alternating evidence) applies. The cert
// reports hypothesis status only; it never asserts the group itself.
struct RealizationCert {
    u64 p;
    u32 n;
    bool hyp_range;         // n >= p > 2
    bool hyp_p_ndiv_n;      // p does not divide n
    bool disc_monomial;
    std::optional<ScaledMonomial> disc;
    bool hyp_m_le_p_minus_1;
    bool m_odd;
    enum class Clause { none, transposition_route, alternating_route } clause;
    bool hypotheses_ok;
    std::string reason; // first failed hypothesis, empty when all hold
};

inline const char* clause_name(RealizationCert::Clause c) {
    switch (c) {
        case RealizationCert::Clause::transposition_route: return "transposition_route";
        case RealizationCert::Clause::alternating_route: return "alternating_route";
        default: return "none";
    }
}

inline RealizationCert realization_cert(const BivarPoly& f, u32 n, u64 p,
                                        GroupEvidence evidence) {
    if (f.degx() < 0 || static_cast<u32>(f.degx()) != n)
        throw std::invalid_argument("realization_cert: n does not match deg_X(f)");
    if (f.fld.p != p) throw std::invalid_argument("realization_cert: p does not match the field");
    if (!f.monic_in_x())
        throw std::invalid_argument("realization_cert: polynomial must be monic in X");

    RealizationCert rc{};
    rc.p = p;
    rc.n = n;
    rc.clause = RealizationCert::Clause::none;
    rc.hyp_range = n >= p && p > 2;
    rc.hyp_p_ndiv_n = n % p != 0;
    Poly<Fp> d = discriminant_x(f);
    rc.disc = as_monomial(d);
    rc.disc_monomial = rc.disc.has_value();
    rc.hyp_m_le_p_minus_1 = rc.disc && rc.disc->m <= p - 1;
    rc.m_odd = rc.disc && rc.disc->m % 2 == 1;
    rc.hypotheses_ok = rc.hyp_range && rc.hyp_p_ndiv_n && rc.disc_monomial && rc.hyp_m_le_p_minus_1;

    if (!rc.hyp_range)
        rc.reason = "need n >= p > 2";
    else if (!rc.hyp_p_ndiv_n)
        rc.reason = "p divides n";
    else if (!rc.disc_monomial)
        rc.reason = "discriminant is not of the form c*T^m";
    else if (!rc.hyp_m_le_p_minus_1)
        rc.reason = "monomial exponent m exceeds p-1";

    if (rc.hypotheses_ok) {
        if (rc.m_odd && evidence == GroupEvidence::symmetric)
            rc.clause = RealizationCert::Clause::transposition_route;
        else if (n >= 5 && evidence == GroupEvidence::alternating)
            rc.clause = RealizationCert::Clause::alternating_route;
    }
    return rc;
}

// The five explicit small-characteristic realizations: polynomial text,
// expected monomial discriminant, and the group evidence for each.
struct CatalogEntry {
    u64 p;
    u32 n;
    const char* poly_text;
    u64 disc_c; // expected Disc = disc_c * T^disc_m
    u32 disc_m;
    GroupEvidence evidence;
    const char* group_label;
};

inline const std::array<CatalogEntry, 5>& realization_catalog() {
    static const std::array<CatalogEntry, 5> cat = {{
        {3, 4, "X^4 + X + T", 1, 3, GroupEvidence::symmetric, "S4"},
        {5, 6, "X^6 + X^5 + 3*X^3 + T*X + T", 4, 3, GroupEvidence::symmetric, "S6"},
        {7, 8, "X^8 + 3*X^2 + T*X - 2", 4, 2, GroupEvidence::alternating, "A8"},
        {11, 12, "X^12 + X^3 + 3*X^2 + (T + 4)*X + 1", 2, 3, GroupEvidence::symmetric, "S12"},
        {13, 14, "X^14 + 7*X^3 + 10*X^2 + (9*T^2 + 7)*X + 1", 12, 6, GroupEvidence::alternating,
         "A14"},
    }};
    return cat;
}

inline const CatalogEntry& catalog_entry(u64 p) {
    for (const auto& e : realization_catalog())
        if (e.p == p) return e;
    throw std::invalid_argument("catalog_entry: no entry for this characteristic");
}

} // namespace lws
