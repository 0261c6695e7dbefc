#pragma once
// The prime field F_p as a lightweight context object.
//
// Polynomial code is templated on a field context K providing:
//   K::Elem, zero(), one(), is_zero, eq, add, sub, neg, mul, inv, pow,
//   from_int (any i64 -> canonical element), size() (= #K),
//   characteristic(), element_from_index (bijection [0,#K) -> K).
// Fp is the prime-field model; fq.hpp adds the extension-field model.

#include <cstdint>
#include <stdexcept>

#include "modnt.hpp"

namespace lws {

struct Fp {
    using Elem = u64;
    u64 p;

    explicit Fp(u64 p_) : p(p_) {
        if (p < 2 || p >= (u64(1) << 62) || !is_prime_u64(p))
            throw std::invalid_argument("Fp: characteristic must be a prime in [2, 2^62)");
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p ? s - p : s; }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem mul(Elem a, Elem b) const { return mulmod(a, b, p); }
    Elem pow(Elem a, u64 e) const { return powmod(a, e, p); }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("Fp::inv: division by zero");
        return powmod(a, p - 2, p);
    }
    Elem from_int(i64 v) const { return reduce_mod(v, p); }
    u64 size() const { return p; }
    u64 characteristic() const { return p; }
    Elem element_from_index(u64 idx) const { return idx % p; }
    u64 index_of(Elem a) const { return a; }
    bool same_field(const Fp& o) const { return p == o.p; }
};

} // namespace lws
