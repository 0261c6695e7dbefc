#pragma once
// Exact rational arithmetic on 128-bit integers.
//
// Used wherever a result must be certified with zero tolerance: sieve-density
// ratios such as 1 - sum(1/p_i), excess terms xi(d) = N(d) - (p+1)/(2d), and
// the inclusion-exclusion identity count = phi(p+1)/2 + sum mu(d) xi(d).
// All operations reduce to lowest terms and throw on 128-bit overflow rather
// than silently wrapping.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lws {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

namespace detail {

inline i128 abs128(i128 x) { return x < 0 ? -x : x; }

inline i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("rational: 128-bit multiply overflow");
    return r;
}

inline i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("rational: 128-bit add overflow");
    return r;
}

inline std::string i128_to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    u128 x = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    std::string s;
    while (x > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
        x /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

} // namespace detail

// Always stored reduced with positive denominator.
struct Rat {
    i128 num = 0;
    i128 den = 1;

    Rat() = default;
    Rat(i64 n) : num(n), den(1) {}                       // NOLINT: implicit by design
    Rat(i128 n, i128 d) : num(n), den(d) { reduce(); }

    static Rat frac(i64 n, i64 d) { return Rat(i128(n), i128(d)); }

    void reduce() {
        if (den == 0) throw std::domain_error("rational: zero denominator");
        if (num == 0) {
            den = 1;
            return;
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        i128 g = detail::gcd128(num, den);
        num /= g;
        den /= g;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        // cross-reduce first so intermediates stay small
        i128 g = detail::gcd128(a.den, b.den);
        i128 da = a.den / g, db = b.den / g;
        i128 n = detail::checked_add(detail::checked_mul(a.num, db),
                                     detail::checked_mul(b.num, da));
        i128 d = detail::checked_mul(a.den, db);
        return {n, d};
    }
    friend Rat operator-(const Rat& a) { return {-a.num, a.den}; }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        i128 g1 = detail::gcd128(a.num, b.den);
        i128 g2 = detail::gcd128(b.num, a.den);
        i128 n = detail::checked_mul(a.num / g1, b.num / g2);
        i128 d = detail::checked_mul(a.den / g2, b.den / g1);
        return {n, d};
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::domain_error("rational: division by zero");
        return a * Rat{b.den, b.num};
    }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        // exact: compare a.num*b.den vs b.num*a.den (checked)
        return detail::checked_mul(a.num, b.den) < detail::checked_mul(b.num, a.den);
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    bool is_integer() const { return den == 1; }
    bool positive() const { return num > 0; }

    double to_double() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }
    long double to_long_double() const {
        return static_cast<long double>(num) / static_cast<long double>(den);
    }

    std::string str() const {
        std::string s = detail::i128_to_string(num);
        if (den != 1) s += "/" + detail::i128_to_string(den);
        return s;
    }
};

} // namespace lws
