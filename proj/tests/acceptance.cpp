// Acceptance gate: ten numbered criteria, one verdict line each.
//
// Usage: lws-acceptance [--criterion N]
//
// Every criterion recomputes its claim from scratch through the library and
// prints exactly one "[PASS]"/"[FAIL]" line (plus indented evidence lines
// where the sub-results matter). The process exits 0 only if every criterion
// it ran passed. Nothing here is allowed to fudge a verdict: criterion 2
// reports what the formulas actually give, and currently fails two of its
// five sub-checks; the evidence lines show the honest numbers.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lws/bounds.hpp"
#include "lws/charsum.hpp"
#include "lws/engine.hpp"
#include "lws/fq.hpp"
#include "lws/galois.hpp"
#include "lws/modnt.hpp"
#include "lws/polyring.hpp"
#include "lws/sieve.hpp"

using namespace lws;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
    std::vector<std::string> evidence;
};

const SieveTable& big_table() {
    static SieveTable t = build_sieve(1000000);
    return t;
}

// ---------------------------------------------------------------- 1
Outcome criterion_bound_table() {
    struct Row {
        u32 n, l, s;
        const char* R;
        const char* L;
    };
    static const Row expect[12] = {
        {1, 0, 1, "8.000", "0.835"},        {2, 1, 1, "24.000", "0.877"},
        {3, 1, 2, "51.428", "1.244"},       {4, 1, 3, "98.823", "2.283"},
        {5, 2, 3, "169.541", "5.495"},      {6, 2, 4, "245.242", "15.322"},
        {7, 2, 5, "334.504", "50.519"},     {8, 2, 6, "444.614", "182.262"},
        {9, 2, 7, "574.201", "738.575"},    {10, 2, 8, "720.253", "3409.625"},
        {11, 2, 9, "896.738", "16571.694"}, {12, 2, 10, "1097.213", "88920.402"},
    };
    std::vector<BoundRow> rows = bounds_table(12);
    Outcome out;
    out.pass = rows.size() == 12;
    for (std::size_t i = 0; i < rows.size() && out.pass; ++i) {
        const Row& e = expect[i];
        const BoundRow& r = rows[i];
        if (r.n != e.n || r.l != e.l || r.s != e.s || r.R_str != e.R || r.L_str != e.L) {
            out.pass = false;
            out.detail = "first mismatch at n = " + std::to_string(r.n) + ": got (" +
                         std::to_string(r.l) + "," + std::to_string(r.s) + "," + r.R_str + "," +
                         r.L_str + ")";
        }
    }
    if (out.pass) out.detail = "all 12 rows match, truncated to 3 decimals";
    return out;
}

// ---------------------------------------------------------------- 2
Outcome criterion_thresholds() {
    ThresholdReport t = verify_thresholds();
    Outcome out;
    char buf[256];
    auto sub = [&](bool ok, const std::string& text) {
        out.evidence.push_back(std::string("[") + (ok ? "ok" : "contradicted") + "] " + text);
    };

    std::snprintf(buf, sizeof buf, "f(7e7) in (464.1, 464.2): computed f(7e7) = %.6f", t.f_7e7);
    sub(t.f7e7_in_bracket, buf);
    std::snprintf(buf, sizeof buf, "f(7e7) > 445: computed f(7e7) = %.6f", t.f_7e7);
    sub(t.f7e7_gt_445.holds(), buf);
    std::snprintf(buf, sizeof buf, "f(9e6) in (177.9, 178.0): computed f(9e6) = %.6f", t.f_9e6);
    sub(t.f9e6_in_bracket, buf);
    std::snprintf(buf, sizeof buf, "f(9e6) > max best-R over n <= 5 (%s ~ %.3f)",
                  t.max_best_R_n_le_5.str().c_str(), t.max_best_R_n_le_5.to_double());
    sub(t.f9e6_gt_maxR5.holds(), buf);
    std::snprintf(buf, sizeof buf, "max best-R over n <= 8 within 0.001 of 444.614 (exact %s)",
                  t.max_best_R_n_le_8.str().c_str());
    sub(t.maxR8_near_444_614, buf);
    std::snprintf(buf, sizeof buf,
                  "f first exceeds that max near x = %.0f, above the 7e7 cutoff",
                  t.first_x_exceeding_maxR8);
    out.evidence.push_back(buf);

    out.pass = t.all_pass;
    out.detail = out.pass ? "all threshold comparisons hold"
                          : "the bracketed claims do not match the computed values";
    return out;
}

// ---------------------------------------------------------------- 3
Outcome criterion_large_omega() {
    LargeOmegaReport r = check_large_omega_lemma();
    Outcome out;
    out.pass = r.all_pass;
    std::ostringstream os;
    os << "N0 = " << r.N0 << ", phi(N0) = " << r.phi_N0 << "; margins "
       << r.sixth_root.verdict_str() << "/" << r.phi_vs_pow23.verdict_str() << "/"
       << r.phi_vs_sqrt.verdict_str() << "/" << r.growth_at_11.verdict_str();
    out.detail = os.str();
    return out;
}

// ---------------------------------------------------------------- 4
Outcome criterion_sieve_identities() {
    const SieveTable& t = big_table();
    std::vector<u64> pool;
    for (u32 q : t.primes) {
        if (q > 13 && q < 100000) pool.push_back(q);
    }
    std::mt19937_64 rng(20240601);
    Outcome out;
    out.pass = true;
    u64 profiles = 0;
    for (int i = 0; i < 50 && out.pass; ++i) {
        u64 p = pool[rng() % pool.size()];
        PrimeModulus pm(p);
        for (int sigma : {1, -1}) {
            for (u64 d : all_divisors(p + 1)) {
                CharSumProfile pr = profile(pm, sigma, d); // identity-checked inside
                if (2 * static_cast<i64>(pr.N_d) !=
                    static_cast<i64>(pr.M_d) + pr.eta_sum) { // and re-checked here
                    out.pass = false;
                    out.detail = "count identity failed at p = " + std::to_string(p) +
                                 ", d = " + std::to_string(d);
                    break;
                }
                ++profiles;
            }
            if (!out.pass) break;
            CountSigmaReport cr = count_sigma_report(pm, sigma);
            if (!cr.agree) {
                out.pass = false;
                out.detail = "counting routes disagree at p = " + std::to_string(p) +
                             ", sigma = " + std::to_string(sigma);
                break;
            }
        }
    }
    if (out.pass)
        out.detail = "50 random primes below 10^5, both signs, " + std::to_string(profiles) +
                     " divisor profiles integer-exact; all three counting routes agree";
    return out;
}

// ---------------------------------------------------------------- 5
Outcome criterion_weil_bound() {
    const SieveTable& t = big_table();
    Outcome out;
    out.pass = true;
    u64 pairs = 0;
    for (u32 q : t.primes) {
        if (q < 13) continue;
        if (q >= 10000) break;
        PrimeModulus pm(q);
        double bound = 2.0 * std::sqrt(static_cast<double>(q)) *
                           (std::log(static_cast<double>(q)) + 1.0) -
                       2.0;
        for (u64 d : all_divisors(q + 1)) {
            u64 s = eta_sum_abs(pm, d);
            ++pairs;
            if (static_cast<double>(s) > bound) {
                out.pass = false;
                out.detail = "violation at p = " + std::to_string(q) +
                             ", d = " + std::to_string(d) + ": |sum| = " + std::to_string(s);
                return out;
            }
        }
    }
    out.detail = "no violation over " + std::to_string(pairs) +
                 " (p, d) pairs, all divisors of p+1, 13 <= p < 10^4";
    return out;
}

// ---------------------------------------------------------------- 6
Outcome criterion_search_desk_scale() {
    const SieveTable& t = big_table();
    SearchReport one = search(13, 1000000, SearchMode::full, t, 1);
    SearchReport two = search(13, 1000000, SearchMode::full, t, 2);
    Outcome out;
    bool same = one.primes_checked == two.primes_checked &&
                one.counterexamples == two.counterexamples &&
                one.omega_histogram == two.omega_histogram &&
                one.max_min_witness.has_value() == two.max_min_witness.has_value();
    if (same && one.max_min_witness) {
        same = one.max_min_witness->p == two.max_min_witness->p &&
               one.max_min_witness->sigma == two.max_min_witness->sigma &&
               one.max_min_witness->a == two.max_min_witness->a;
    }
    out.pass = one.counterexamples.empty() && same;
    std::ostringstream os;
    os << one.primes_checked << " primes below 10^6, " << one.counterexamples.size()
       << " counterexamples";
    if (one.max_min_witness)
        os << "; largest minimal witness a = " << one.max_min_witness->a << " at p = "
           << one.max_min_witness->p;
    os << "; 1-thread and 2-thread reports " << (same ? "identical" : "DIFFER");
    out.detail = os.str();
    return out;
}

// ---------------------------------------------------------------- 7
Outcome criterion_catalog_discs() {
    struct Expect {
        u64 p, c;
        u32 m;
    };
    static const Expect expect[5] = {{3, 1, 3}, {5, 4, 3}, {7, 4, 2}, {11, 2, 3}, {13, 12, 6}};
    Outcome out;
    out.pass = true;
    for (const Expect& e : expect) {
        const CatalogEntry& entry = catalog_entry(e.p);
        Fp k(e.p);
        BivarPoly f = parse_bivar(entry.poly_text, k);
        std::optional<ScaledMonomial> mono = as_monomial(discriminant_x(f));
        bool ok = mono && mono->c == e.c && mono->m == e.m;
        std::ostringstream os;
        os << "[" << (ok ? "ok" : "mismatch") << "] p = " << e.p << ": Disc(" << entry.poly_text
           << ")";
        if (mono)
            os << " = " << mono->c << "*T^" << mono->m;
        else
            os << " is not a monomial";
        out.evidence.push_back(os.str());
        out.pass = out.pass && ok;
    }
    out.detail = out.pass ? "all five discriminants are the expected monomials"
                          : "at least one discriminant differs";
    return out;
}

// ---------------------------------------------------------------- 8
Outcome criterion_two_point_family() {
    static const std::pair<u64, u64> cases[3] = {{7, 3}, {11, 5}, {13, 3}};
    Outcome out;
    out.pass = true;
    for (auto [p, a] : cases) {
        MtrReport r = disc_family_mtr(p, a);
        std::ostringstream os;
        os << "[" << (r.matches ? "ok" : "mismatch") << "] (p, a) = (" << p << ", " << a
           << "): direct " << emit_bivar(bivar_const(Fp(p), r.disc)) << " vs closed form "
           << r.expected.c << "*T^" << r.expected.m;
        out.evidence.push_back(os.str());
        out.pass = out.pass && r.matches;
    }
    out.detail = out.pass ? "direct discriminant equals the closed formula at all three points"
                          : "closed formula mismatch";
    return out;
}

// ---------------------------------------------------------------- 9
Outcome criterion_new_family() {
    Outcome out;
    out.pass = true;
    std::optional<std::size_t> common;
    for (u64 p : {5ull, 7ull, 11ull, 13ull}) {
        NewFamilyReport r = disc_family_new(p);
        std::ostringstream os;
        if (r.first_match) {
            os << "[ok] p = " << p << ": variant \"" << r.variants[*r.first_match].shape
               << "\" gives " << r.expected.c << "*T^" << r.expected.m;
            if (!common)
                common = r.first_match;
            else if (*common != *r.first_match) {
                out.pass = false;
                os << " (different variant than the other primes)";
            }
        } else {
            out.pass = false;
            os << "[mismatch] p = " << p << ": no variant matches";
        }
        out.evidence.push_back(os.str());
    }
    out.detail = out.pass ? "one variant produces the target monomial for every p"
                          : "no single variant covers all four primes";
    return out;
}

// ---------------------------------------------------------------- 10
Outcome criterion_cycle_statistics() {
    constexpr u64 kSeed = 20240801;
    Outcome out;
    out.pass = true;
    auto line = [&](bool ok, const std::string& text) {
        out.evidence.push_back(std::string("[") + (ok ? "ok" : "contradicted") + "] " + text);
        out.pass = out.pass && ok;
    };

    {
        Fp k(7);
        EvidenceReport r = sample_evidence(parse_bivar(catalog_entry(7).poly_text, k), k, 200,
                                           kSeed);
        line(!r.odd_type_seen && r.disc_square && r.squarefree_count > 0,
             "degree-8 family over F_7: every sampled parity even, discriminant a square (" +
                 std::to_string(r.squarefree_count) + " squarefree samples)");
        line(r.coherent, "degree-8 family over F_7: pointwise parity/discriminant coherence");
    }
    {
        Fp k(5);
        EvidenceReport r = sample_evidence(parse_bivar(catalog_entry(5).poly_text, k), k, 200,
                                           kSeed);
        line(r.odd_type_seen && !r.disc_square,
             "degree-6 family over F_5: odd parity observed, discriminant not a square");
        line(r.coherent, "degree-6 family over F_5: pointwise parity/discriminant coherence");
    }
    {
        Fp k(3);
        EvidenceReport r = sample_evidence(parse_bivar(catalog_entry(3).poly_text, k), k, 200,
                                           kSeed);
        bool both = r.histogram.count({4}) == 1 && r.histogram.count({1, 3}) == 1;
        line(both, "quartic family over F_3: both the {4} and the {1,3} cycle types observed");
        line(r.coherent, "quartic family over F_3: pointwise parity/discriminant coherence");
    }
    {
        Fp k3(3);
        Fq f9(3, 2);
        EvidenceReport r = sample_evidence(parse_bivar(catalog_entry(3).poly_text, k3), f9, 200,
                                           kSeed);
        line(r.coherent, "quartic family sampled over F_9: coherence away from the prime field");
    }
    {
        Fp k5(5);
        Fq f25(5, 2);
        EvidenceReport r = sample_evidence(parse_bivar(catalog_entry(5).poly_text, k5), f25, 200,
                                           kSeed);
        line(r.coherent, "degree-6 family sampled over F_25: coherence away from the prime field");
    }

    out.detail = out.pass ? "all seeded sampling runs match the discriminant predictions"
                          : "a sampling run contradicts its discriminant prediction";
    return out;
}

struct Criterion {
    int id;
    const char* label;
    Outcome (*run)();
};

static const Criterion kCriteria[] = {
    {1, "twelve-row bound table reproduces the frozen values", criterion_bound_table},
    {2, "growth-threshold comparisons at the two search cutoffs", criterion_thresholds},
    {3, "thirteen-prime totient margins", criterion_large_omega},
    {4, "exact sieve identities at 50 random primes", criterion_sieve_identities},
    {5, "character-sum bound for every divisor below 10^4", criterion_weil_bound},
    {6, "exhaustive witness search to 10^6, thread-invariant", criterion_search_desk_scale},
    {7, "catalog discriminants are the expected monomials", criterion_catalog_discs},
    {8, "two-point family matches its closed discriminant formula", criterion_two_point_family},
    {9, "one shifted-factor variant works for every p", criterion_new_family},
    {10, "sampled cycle types match the discriminant predictions", criterion_cycle_statistics},
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
            if (only < 1 || only > 10) {
                std::fprintf(stderr, "usage: %s [--criterion N]  (N in 1..10)\n", argv[0]);
                return 2;
            }
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
            return 2;
        }
    }

    bool all = true;
    for (const Criterion& c : kCriteria) {
        if (only && c.id != only) continue;
        Outcome o = c.run();
        std::printf("[%s] criterion %d: %s — %s\n", o.pass ? "PASS" : "FAIL", c.id, c.label,
                    o.detail.c_str());
        for (const std::string& e : o.evidence) std::printf("    %s\n", e.c_str());
        std::fflush(stdout);
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
