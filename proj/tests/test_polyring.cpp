// Bivariate algebra over F_p[T]: parser/emitter, the two independent
// resultant strategies, discriminants, and the monomial-discriminant
// families with their realization certificates.

#include <catch_amalgamated.hpp>

#include <random>

#include "lws/fq.hpp"
#include "lws/polyring.hpp"

using namespace lws;

namespace {

bool bivar_eq(const BivarPoly& a, const BivarPoly& b) {
    if (a.cx.size() != b.cx.size()) return false;
    for (std::size_t i = 0; i < a.cx.size(); ++i)
        if (!poly_eq(a.cx[i], b.cx[i])) return false;
    return true;
}

BivarPoly random_bivar(const Fp& k, int dx, int dt, std::mt19937_64& rng) {
    BivarPoly f(k);
    for (int i = 0; i <= dx; ++i) {
        Poly<Fp> c(k);
        for (int j = 0; j <= dt; ++j) c.c.push_back(rng() % k.p);
        c.trim();
        f.cx.push_back(c);
    }
    if (f.cx.back().zero()) f.cx.back() = poly_const(k, k.one());
    f.trim();
    return f;
}

// discriminant of a monic univariate polynomial, for cross-checking that
// Disc commutes with specialization
template <class K>
typename K::Elem univar_disc(const Poly<K>& f) {
    const K& k = f.k;
    int n = f.deg();
    Poly<K> fp = poly_derivative(f);
    auto r = fp.zero() ? k.zero() : poly_resultant(f, fp);
    if (n % 4 == 2 || n % 4 == 3) r = k.neg(r);
    return r;
}

// collapse a polynomial over F_{p^nu} whose coefficients all lie in the
// prime field back down to a polynomial over F_p
Poly<Fp> descend(const Poly<Fq>& f, const Fp& k) {
    Poly<Fp> out(k);
    for (const auto& e : f.c) {
        for (std::size_t d = 1; d < e.size(); ++d) REQUIRE(e[d] == 0);
        out.c.push_back(e.empty() ? 0 : e[0]);
    }
    out.trim();
    return out;
}

} // namespace

TEST_CASE("parser handles grammar and rejects malformed input", "[polyring]") {
    Fp k(7);
    CHECK(emit_bivar(parse_bivar("X^4 + X + T", k)) == "X^4 + X + T");
    CHECK(emit_bivar(parse_bivar("T + X", k)) == "X + T");      // canonical order
    CHECK(emit_bivar(parse_bivar("2*X*T", k)) == "2*T*X");      // coefficient first
    CHECK(emit_bivar(parse_bivar("X - X", k)) == "0");
    CHECK(emit_bivar(parse_bivar("-X + 9", k)) == "6*X + 2");   // residues canonicalized
    CHECK(emit_bivar(parse_bivar("(T + 4)*X", k)) == "T*X + 4*X");
    CHECK(emit_bivar(parse_bivar("(X + T)^2", k)) == "X^2 + 2*T*X + T^2");
    CHECK(emit_bivar(parse_bivar("X*(X + 1) - T", k)) == "X^2 + X + 6*T");

    CHECK_THROWS_AS(parse_bivar("X^", k), std::invalid_argument);
    CHECK_THROWS_AS(parse_bivar("3*", k), std::invalid_argument);
    CHECK_THROWS_AS(parse_bivar("((X)", k), std::invalid_argument);
    CHECK_THROWS_AS(parse_bivar("X 3", k), std::invalid_argument); // trailing input
    CHECK_THROWS_AS(parse_bivar("", k), std::invalid_argument);
    CHECK_THROWS_AS(parse_bivar("Y", k), std::invalid_argument);

    // error messages carry a position
    try {
        parse_bivar("X + )", k);
        FAIL("expected parse error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("emit/parse round-trips on random polynomials", "[polyring]") {
    Fp k(11);
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 50; ++iter) {
        BivarPoly f = random_bivar(k, 3, 2, rng);
        BivarPoly g = parse_bivar(emit_bivar(f), k);
        REQUIRE(bivar_eq(f, g));
        REQUIRE(emit_bivar(g) == emit_bivar(f)); // emission is stable
    }
}

TEST_CASE("all catalog polynomials parse to their canonical emission", "[polyring]") {
    for (const CatalogEntry& e : realization_catalog()) {
        Fp k(e.p);
        BivarPoly f = parse_bivar(e.poly_text, k);
        REQUIRE(f.degx() == static_cast<int>(e.n));
        REQUIRE(f.monic_in_x());
        // round-trip through the canonical form preserves the polynomial
        REQUIRE(bivar_eq(parse_bivar(emit_bivar(f), k), f));
    }
}

TEST_CASE("evaluation is a homomorphism on bivariate polynomials", "[polyring]") {
    Fp k(101);
    std::mt19937_64 rng(77);
    for (int iter = 0; iter < 50; ++iter) {
        BivarPoly f = random_bivar(k, 3, 2, rng);
        BivarPoly g = random_bivar(k, 2, 3, rng);
        u64 t = rng() % 101, x = rng() % 101;
        REQUIRE(eval_bivar(f + g, t, x) == k.add(eval_bivar(f, t, x), eval_bivar(g, t, x)));
        REQUIRE(eval_bivar(f * g, t, x) == k.mul(eval_bivar(f, t, x), eval_bivar(g, t, x)));
    }
}

TEST_CASE("specialization embeds into extension fields", "[polyring]") {
    Fp k(3);
    Fq f9(3, 2);
    BivarPoly f = parse_bivar("X^2 + T*X + 2", k);
    // at t0 in the prime subfield, Fq specialization matches Fp specialization
    for (u64 t0 = 0; t0 < 3; ++t0) {
        Poly<Fp> a = specialize(f, k, t0);
        Poly<Fq> b = specialize(f, f9, f9.from_int(static_cast<i64>(t0)));
        REQUIRE(poly_eq(descend(b, k), a));
    }
}

TEST_CASE("resultant of X^2 - T and X^2 - T - 1 over F_5 is 1", "[polyring]") {
    Fp k(5);
    BivarPoly f = parse_bivar("X^2 - T", k);
    BivarPoly g = parse_bivar("X^2 - T - 1", k);
    Poly<Fp> expect = poly_const(k, 1);
    CHECK(poly_eq(resultant_x(f, g, ResultantStrategy::interpolation), expect));
    CHECK(poly_eq(resultant_x(f, g, ResultantStrategy::subresultant), expect));
    CHECK(poly_eq(resultant_x(f, g), expect));
}

TEST_CASE("resultant against a linear X-factor evaluates at X = a", "[polyring]") {
    Fp k(13);
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 30; ++iter) {
        u64 a = rng() % 13;
        BivarPoly linear = bivar_x(k) - bivar_int(k, static_cast<i64>(a));
        BivarPoly g = random_bivar(k, 2, 2, rng);
        // g(T, a) as a polynomial in T
        Poly<Fp> at_a(k);
        u64 ai = 1;
        for (const auto& ct : g.cx) {
            at_a = at_a + poly_scale(ct, ai);
            ai = k.mul(ai, a);
        }
        Poly<Fp> via_sub = resultant_subresultant(linear, g);
        REQUIRE(poly_eq(via_sub, at_a));
    }
}

TEST_CASE("both resultant strategies agree on random inputs", "[polyring]") {
    std::mt19937_64 rng(2024);
    Fp big(10007);
    for (int iter = 0; iter < 100; ++iter) {
        BivarPoly f = random_bivar(big, 1 + static_cast<int>(rng() % 4),
                                   static_cast<int>(rng() % 3), rng);
        BivarPoly g = random_bivar(big, 1 + static_cast<int>(rng() % 4),
                                   static_cast<int>(rng() % 3), rng);
        Poly<Fp> a = resultant_interpolation_over(f, g, big);
        Poly<Fp> b = resultant_subresultant(f, g);
        REQUIRE(poly_eq(a, b));
    }
}

TEST_CASE("subresultant at small p agrees with extension-field interpolation", "[polyring]") {
    // over F_5 the interpolation strategy cannot run directly (too few
    // points), but it can run over F_{5^3}; descending the result gives an
    // independent check of the subresultant chain at exactly the field
    // sizes the discriminant families use.
    std::mt19937_64 rng(555);
    Fp k(5);
    Fq f125(5, 3);
    for (int iter = 0; iter < 25; ++iter) {
        BivarPoly f = random_bivar(k, 1 + static_cast<int>(rng() % 3),
                                   static_cast<int>(rng() % 3), rng);
        BivarPoly g = random_bivar(k, 1 + static_cast<int>(rng() % 3),
                                   static_cast<int>(rng() % 3), rng);
        Poly<Fp> direct = resultant_subresultant(f, g);
        Poly<Fq> lifted = resultant_interpolation_over(f, g, f125);
        REQUIRE(poly_eq(descend(lifted, k), direct));
    }
}

TEST_CASE("bivariate resultant is multiplicative", "[polyring]") {
    std::mt19937_64 rng(99);
    for (u64 p : {7ull, 10007ull}) {
        Fp k(p);
        for (int iter = 0; iter < 15; ++iter) {
            BivarPoly f = random_bivar(k, 2, 1, rng);
            BivarPoly g = random_bivar(k, 2, 1, rng);
            BivarPoly h = random_bivar(k, 1, 1, rng);
            Poly<Fp> lhs = resultant_x(f, g * h);
            Poly<Fp> rhs = resultant_x(f, g) * resultant_x(f, h);
            REQUIRE(poly_eq(lhs, rhs));
        }
    }
}

TEST_CASE("resultant commutes with specialization at good points", "[polyring]") {
    Fp k(1009);
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 20; ++iter) {
        // monic in X, so every specialization point preserves the degrees
        BivarPoly f = random_bivar(k, 3, 2, rng);
        BivarPoly g = random_bivar(k, 2, 2, rng);
        f.cx.back() = poly_const(k, k.one());
        g.cx.back() = poly_const(k, k.one());
        Poly<Fp> res = resultant_x(f, g);
        for (int pt = 0; pt < 10; ++pt) {
            u64 t0 = rng() % 1009;
            REQUIRE(poly_eval(res, t0) ==
                    poly_resultant(specialize(f, k, t0), specialize(g, k, t0)));
        }
    }
}

TEST_CASE("resultant edge cases", "[polyring]") {
    Fp k(7);
    BivarPoly z(k);
    CHECK_THROWS_AS(resultant_x(z, bivar_x(k)), std::invalid_argument);
    // constant in X: Res(c, g) = c^{deg_X g}
    BivarPoly c = bivar_const(k, poly_of(k, {0, 1})); // the constant-in-X polynomial T
    BivarPoly g = parse_bivar("X^3 + T*X + 1", k);
    Poly<Fp> r = resultant_x(c, g);
    REQUIRE(poly_eq(r, poly_of(k, {0, 0, 0, 1}))); // T^3
}

TEST_CASE("discriminant of a quadratic is b^2 - 4c", "[polyring]") {
    Fp k(13);
    // X^2 + T X + (T + 3): b = T, c = T + 3
    BivarPoly f = parse_bivar("X^2 + T*X + T + 3", k);
    Poly<Fp> d = discriminant_x(f);
    Poly<Fp> expect = poly_of(k, {static_cast<i64>(13 - 12), static_cast<i64>(13 - 4), 1});
    // T^2 - 4T - 12 = T^2 + 9T + 1 over F_13
    REQUIRE(poly_eq(d, expect));

    // numeric spot: Disc(X^2 + 3X + 1) = 9 - 4 = 5 over F_7
    Fp k7(7);
    BivarPoly g = parse_bivar("X^2 + 3*X + 1", k7);
    REQUIRE(poly_eq(discriminant_x(g), poly_const(k7, 5)));
}

TEST_CASE("discriminant rejects bad inputs and handles zero derivative", "[polyring]") {
    Fp k(7);
    CHECK_THROWS_AS(discriminant_x(parse_bivar("2*X^2 + 1", k)), std::invalid_argument);
    CHECK_THROWS_AS(discriminant_x(parse_bivar("X + 1", k)), std::invalid_argument);
    // f = X^7 - T over F_7: f' = 0, discriminant degenerates to zero
    BivarPoly f = parse_bivar("X^7 - T", k);
    CHECK(discriminant_x(f).zero());
}

TEST_CASE("discriminant commutes with specialization", "[polyring]") {
    Fp k(101);
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 20; ++iter) {
        BivarPoly f = random_bivar(k, 4, 2, rng);
        f.cx.back() = poly_const(k, k.one()); // monic
        Poly<Fp> d = discriminant_x(f);
        for (u64 t0 = 0; t0 < 8; ++t0)
            REQUIRE(poly_eval(d, t0) == univar_disc(specialize(f, k, t0)));
    }
}

TEST_CASE("the five catalog discriminants reproduce exactly", "[polyring]") {
    struct Expect {
        u64 p;
        u64 c;
        u32 m;
    };
    const Expect ex[5] = {{3, 1, 3}, {5, 4, 3}, {7, 4, 2}, {11, 2, 3}, {13, 12, 6}};
    for (std::size_t i = 0; i < 5; ++i) {
        const CatalogEntry& e = realization_catalog()[i];
        REQUIRE(e.p == ex[i].p);
        Fp k(e.p);
        BivarPoly f = parse_bivar(e.poly_text, k);
        Poly<Fp> d = discriminant_x(f);
        std::optional<ScaledMonomial> mono = as_monomial(d);
        INFO("p=" << e.p << " f=" << e.poly_text << " disc=" << emit_bivar(bivar_const(k, d)));
        REQUIRE(mono.has_value());
        CHECK(mono->c == ex[i].c);
        CHECK(mono->m == ex[i].m);
        CHECK(mono->c == e.disc_c);
        CHECK(mono->m == e.disc_m);
    }
}

TEST_CASE("catalog discriminant at p = 3 cross-checked over F_9", "[polyring]") {
    // direct interpolation needs more than 3 points, so lift to F_9
    Fp k(3);
    Fq f9(3, 2);
    BivarPoly f = parse_bivar("X^4 + X + T", k);
    BivarPoly fx = derivative_x(f);
    Poly<Fq> lifted = resultant_interpolation_over(f, fx, f9);
    Poly<Fp> res = descend(lifted, k);
    // n = 4: (-1)^{n(n-1)/2} = +1, so Disc = Res directly
    REQUIRE(poly_eq(res, discriminant_x(f)));
}

TEST_CASE("monomial recognition", "[polyring]") {
    Fp k(7);
    CHECK_FALSE(as_monomial(poly_of(k, {1, 0, 0, 4})).has_value()); // 4T^3 + 1
    CHECK_FALSE(as_monomial(Poly<Fp>(k)).has_value());              // zero
    auto m0 = as_monomial(poly_const(k, 5));
    REQUIRE(m0.has_value());
    CHECK(m0->c == 5);
    CHECK(m0->m == 0);
    auto m3 = as_monomial(poly_of(k, {0, 0, 0, 4}));
    REQUIRE(m3.has_value());
    CHECK(m3->c == 4);
    CHECK(m3->m == 3);
}

TEST_CASE("squareness of c T^m in F_q(T)", "[polyring]") {
    CHECK(is_square_in_FqT({7, 4, 2}, 7));        // 4T^2 = (2T)^2
    CHECK_FALSE(is_square_in_FqT({7, 4, 3}, 7));  // odd exponent
    CHECK(is_square_in_FqT({13, 12, 6}, 13));     // -1 is a QR mod 13
    CHECK_FALSE(is_square_in_FqT({11, 2, 4}, 11)); // 2 is not a QR mod 11
    CHECK(is_square_in_FqT({11, 2, 4}, 121));      // ... but is a square in F_121
    CHECK_THROWS_AS(is_square_in_FqT({7, 4, 2}, 10), std::invalid_argument);

    // closed form: c is a square in F_{p^nu} iff legendre(c,p) = 1 or nu even
    for (u64 p : {3ull, 5ull, 7ull, 11ull, 13ull}) {
        PrimeModulus pm(p);
        u64 q = 1;
        for (u32 nu = 1; nu <= 3; ++nu) {
            q *= p;
            for (u64 c = 1; c < p; ++c) {
                bool expect = legendre(static_cast<i64>(c), pm) == 1 || nu % 2 == 0;
                REQUIRE(is_square_in_FqT({p, c, 2}, q) == expect);
                REQUIRE_FALSE(is_square_in_FqT({p, c, 1}, q));
            }
        }
    }
}

TEST_CASE("degree-(p+1) family with the three textual variants", "[polyring]") {
    // frozen direct computations: only (X-4)^{p-2}(X-4/3)^2 gives the
    // monomial (-1)^{(p+1)/2} (4/243) T^{p+2}, for every p
    struct Expect {
        u64 p;
        u64 c;
        u32 m;
        const char* discA;
        const char* discB;
    };
    const Expect ex[] = {
        {5, 2, 7, "2*T^7 + T^6 + T^5", "3*T^7 + 4*T^5"},
        {7, 5, 9, "T^9 + T^8 + 3*T^7", "3*T^9 + 2*T^8 + 5*T^7"},
        {11, 4, 13, "10*T^13 + 7*T^12 + 8*T^11", "9*T^13 + 8*T^11"},
        {13, 1, 15, "7*T^15 + 3*T^14 + 8*T^13", "2*T^15 + 3*T^14 + 10*T^13"},
    };
    for (const auto& e : ex) {
        NewFamilyReport rep = disc_family_new(e.p);
        INFO("p=" << e.p);
        REQUIRE(rep.variants.size() == 3);
        CHECK(rep.expected.c == e.c);
        CHECK(rep.expected.m == e.m);
        Fp k(e.p);
        CHECK(emit_bivar(bivar_const(k, rep.variants[0].disc)) == e.discA);
        CHECK(emit_bivar(bivar_const(k, rep.variants[1].disc)) == e.discB);
        CHECK_FALSE(rep.variants[0].matches);
        CHECK_FALSE(rep.variants[1].matches);
        CHECK(rep.variants[2].matches); // (X-4)^{p-2}(X-4/3)^2
        REQUIRE(rep.first_match.has_value());
        CHECK(*rep.first_match == 2);
        CHECK(rep.any_match);
        // the matching variant's discriminant is exactly the monomial
        auto mono = rep.variants[2].mono;
        REQUIRE(mono.has_value());
        CHECK(mono->c == e.c);
        CHECK(mono->m == e.m);
    }
    CHECK_THROWS_AS(disc_family_new(3), std::invalid_argument);
    CHECK_THROWS_AS(disc_family_new(4), std::invalid_argument);
}

TEST_CASE("two-point family matches its closed discriminant formula", "[polyring]") {
    struct Case {
        u64 p, a, b, c;
        u32 m;
    };
    const Case cases[] = {{7, 3, 5, 5, 8}, {11, 5, 4, 4, 12}, {13, 3, 8, 7, 14}};
    for (const auto& cs : cases) {
        MtrReport r = disc_family_mtr(cs.p, cs.a);
        INFO("p=" << cs.p << " a=" << cs.a);
        CHECK(r.b == cs.b);
        REQUIRE(r.mono.has_value());
        CHECK(r.mono->c == cs.c);
        CHECK(r.mono->m == cs.m);
        CHECK(r.expected.c == cs.c);
        CHECK(r.expected.m == cs.m);
        CHECK(r.matches);
    }
    CHECK_THROWS_AS(disc_family_mtr(5, 2), std::invalid_argument);  // p too small
    CHECK_THROWS_AS(disc_family_mtr(13, 2), std::invalid_argument); // gcd(2,14) = 2
    CHECK_THROWS_AS(disc_family_mtr(11, 6), std::invalid_argument); // a > (p-1)/2
}

TEST_CASE("realization certificates across the catalog", "[polyring]") {
    using Clause = RealizationCert::Clause;
    struct Expect {
        u64 p;
        bool ok;
        Clause clause;
    };
    const Expect ex[5] = {
        {3, false, Clause::none}, // m = 3 > p-1 = 2: hypotheses fail
        {5, true, Clause::transposition_route},
        {7, true, Clause::alternating_route},
        {11, true, Clause::transposition_route},
        {13, true, Clause::alternating_route},
    };
    for (std::size_t i = 0; i < 5; ++i) {
        const CatalogEntry& e = realization_catalog()[i];
        Fp k(e.p);
        BivarPoly f = parse_bivar(e.poly_text, k);
        RealizationCert cert = realization_cert(f, e.n, e.p, e.evidence);
        INFO("p=" << e.p);
        CHECK(cert.hypotheses_ok == ex[i].ok);
        CHECK(cert.clause == ex[i].clause);
        if (!ex[i].ok) CHECK(cert.reason == "monomial exponent m exceeds p-1");
        CHECK(cert.hyp_range);
        CHECK(cert.hyp_p_ndiv_n);
        CHECK(cert.disc_monomial);
    }
}

TEST_CASE("certificate clause requires matching group evidence", "[polyring]") {
    Fp k(5);
    BivarPoly f = parse_bivar(catalog_entry(5).poly_text, k);
    // m = 3 is odd: the transposition route needs symmetric evidence
    CHECK(realization_cert(f, 6, 5, GroupEvidence::none).clause == RealizationCert::Clause::none);
    CHECK(realization_cert(f, 6, 5, GroupEvidence::alternating).clause ==
          RealizationCert::Clause::alternating_route); // n >= 5 path still applies
    CHECK(realization_cert(f, 6, 5, GroupEvidence::symmetric).clause ==
          RealizationCert::Clause::transposition_route);
    CHECK_THROWS_AS(realization_cert(f, 7, 5, GroupEvidence::none), std::invalid_argument);
}

TEST_CASE("bivariate construction blocks", "[polyring]") {
    Fp k(5);
    BivarPoly x = bivar_x(k), t = bivar_t(k);
    CHECK(emit_bivar(bivar_pow(x + t, 2)) == "X^2 + 2*T*X + T^2");
    CHECK(emit_bivar(derivative_x(bivar_pow(x, 5))) == "0"); // 5X^4 = 0 over F_5
    CHECK(emit_bivar(derivative_x(bivar_pow(x, 3) * t)) == "3*T*X^2");
    CHECK(bivar_zero(k).zero());
    CHECK(parse_bivar("X^3 + 1", k).monic_in_x());
    CHECK_FALSE(parse_bivar("T*X^3 + 1", k).monic_in_x());
    CHECK(parse_bivar("X^2 + T^4", k).degt() == 4);
}
