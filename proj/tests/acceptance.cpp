/* Acceptance suite: one line per criterion, exit 0 only if every criterion
 * passes. Identities are exact, so every comparison is exact coefficient
 * equality; the stated runtime budgets are enforced here as well. */

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qident/combinatorics.hpp"
#include "qident/harness.hpp"
#include "qident/identities.hpp"

using namespace qident;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
    void require(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
};

bool sides_match(Outcome& out, const IdentitySides& sides, int T, const std::string& label) {
    auto mismatch = first_mismatch(sides.lhs, sides.rhs, T);
    if (mismatch) {
        out.fail(label + " mismatch at q^" + std::to_string(mismatch->exponent) + ": lhs " +
                 mismatch->lhs.str() + " vs rhs " + mismatch->rhs.str());
        return false;
    }
    return true;
}

bool series_match(Outcome& out, const QSeries& f, const QSeries& g, int T,
                  const std::string& label) {
    auto mismatch = first_mismatch(f, g, T);
    if (mismatch) {
        out.fail(label + " mismatch at q^" + std::to_string(mismatch->exponent) + ": " +
                 mismatch->lhs.str() + " vs " + mismatch->rhs.str());
        return false;
    }
    return true;
}

std::vector<std::pair<Symbol, Int>> bind_all_z(int r, int value) {
    std::vector<std::pair<Symbol, Int>> out;
    for (int j = 1; j <= r; ++j) out.emplace_back(Symbol::z(j), value);
    return out;
}

/* ---- criterion bodies ---------------------------------------------- */

Outcome criterion_sylvester() {
    Outcome out;
    const auto t0 = Clock::now();
    const auto sides = build_sylvester(60);
    sides_match(out, sides, 60, "sylvester T=60");
    const double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    out.require(elapsed < 5.0, "runtime " + std::to_string(elapsed) + " s exceeds 5 s");
    return out;
}

Outcome criterion_pentagonal() {
    Outcome out;
    const auto t0 = Clock::now();
    const int T = 100;
    const auto sides = build_pentagonal(T);
    const QSeries two_sided = pentagonal_two_sided(T);
    sides_match(out, sides, T, "one-sided form");
    series_match(out, sides.lhs, two_sided, T, "two-sided form");
    // nonzero coefficients exactly at generalized pentagonal numbers, sign (-1)^k
    std::vector<int> expected(T, 0);
    expected[0] = 1;
    for (int k = 1; (3 * k * k - k) / 2 < T; ++k) {
        const int sign = k % 2 == 0 ? 1 : -1;
        expected[(3 * k * k - k) / 2] += sign;
        if ((3 * k * k + k) / 2 < T) expected[(3 * k * k + k) / 2] += sign;
    }
    for (int n = 0; n < T; ++n) {
        if (sides.lhs[n] != MultiPoly(expected[n])) {
            out.fail("coefficient of q^" + std::to_string(n) + " is " + sides.lhs[n].str() +
                     ", expected " + std::to_string(expected[n]));
            break;
        }
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    out.require(elapsed < 2.0, "runtime " + std::to_string(elapsed) + " s exceeds 2 s");
    return out;
}

Outcome criterion_theta() {
    Outcome out;
    const auto t0 = Clock::now();
    sides_match(out, build_theta_gauss(100), 100, "Gauss theta T=100");
    const double gauss = std::chrono::duration<double>(Clock::now() - t0).count();
    out.require(gauss < 5.0, "Gauss runtime " + std::to_string(gauss) + " s exceeds 5 s");
    const auto t1 = Clock::now();
    sides_match(out, build_theta_jacobi(100), 100, "Jacobi theta T=100");
    const double jacobi = std::chrono::duration<double>(Clock::now() - t1).count();
    out.require(jacobi < 5.0, "Jacobi runtime " + std::to_string(jacobi) + " s exceeds 5 s");
    return out;
}

Outcome criterion_alladi() {
    Outcome out;
    const auto t0 = Clock::now();
    for (const auto& [r, T] : std::vector<std::pair<int, int>>{{1, 40}, {2, 30}, {3, 20}}) {
        sides_match(out, build_alladi(r, T), T,
                    "alladi r=" + std::to_string(r) + " T=" + std::to_string(T));
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    out.require(elapsed < 60.0, "runtime " + std::to_string(elapsed) + " s exceeds 60 s");
    return out;
}

Outcome criterion_overpartition() {
    Outcome out;
    const auto t0 = Clock::now();
    for (const auto& [r, T] : std::vector<std::pair<int, int>>{{1, 30}, {2, 20}}) {
        sides_match(out, build_overpartition_cft(r, T), T,
                    "overpartition r=" + std::to_string(r) + " T=" + std::to_string(T));
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    out.require(elapsed < 120.0, "runtime " + std::to_string(elapsed) + " s exceeds 120 s");
    return out;
}

Outcome criterion_specializations() {
    Outcome out;
    // (a) z = 0 reduction and the classical Cauchy form, T = 30
    for (int r : {1, 2}) {
        const auto over = build_overpartition_cft(r, 30);
        const auto cauchy = build_cauchy_multi(r, 30);
        series_match(out, substitute(over.lhs, bind_all_z(r, 0)), cauchy.lhs, 30,
                     "(a) z=0 lhs r=" + std::to_string(r));
        series_match(out, substitute(over.rhs, bind_all_z(r, 0)), cauchy.rhs, 30,
                     "(a) z=0 rhs r=" + std::to_string(r));
        sides_match(out, cauchy, 30, "(a) multi-Cauchy r=" + std::to_string(r));
    }
    {
        const auto cauchy1 = build_cauchy_multi(1, 30);
        series_match(out, cauchy1.lhs, cauchy_classical_rhs(30), 30, "(a) classical Cauchy");
    }
    // (b) z = 1 at r = 1 is the Dousse-Kim display, T = 60; a = -1 gives (1.3)
    {
        const auto over = build_overpartition_cft(1, 60);
        const auto dk = build_dousse_kim(60);
        series_match(out, substitute(over.lhs, bind_all_z(1, 1)), dk.lhs, 60, "(b) z=1 lhs");
        series_match(out, substitute(over.rhs, bind_all_z(1, 1)), dk.rhs, 60, "(b) z=1 rhs");
        sides_match(out, dk, 60, "(b) dousse_kim T=60");
        const auto gauss = build_theta_gauss(60);
        const std::vector<std::pair<Symbol, Int>> neg = {{Symbol::a(1), -1}};
        series_match(out, substitute(dk.lhs, neg), gauss.lhs, 60, "(b) a=-1 lhs");
        series_match(out, substitute(dk.rhs, neg), gauss.rhs, 60, "(b) a=-1 rhs");
    }
    // (c) ped matches at (1,40) and (2,24); a=-1, z=1, r=1 gives (1.4)
    for (const auto& [r, T] : std::vector<std::pair<int, int>>{{1, 40}, {2, 24}}) {
        sides_match(out, build_ped(r, T), T,
                    "(c) ped r=" + std::to_string(r) + " T=" + std::to_string(T));
    }
    {
        const auto ped = build_ped(1, 40);
        const auto jacobi = build_theta_jacobi(40);
        const std::vector<std::pair<Symbol, Int>> bind = {{Symbol::a(1), -1}, {Symbol::z(1), 1}};
        series_match(out, substitute(ped.lhs, bind), jacobi.lhs, 40, "(c) a=-1,z=1 lhs");
        series_match(out, substitute(ped.rhs, bind), jacobi.rhs, 40, "(c) a=-1,z=1 rhs");
    }
    // (d) strict limit of both overpartition-identity sides at r = 2, T = 20
    {
        const auto over = build_overpartition_cft(2, 20);
        const auto alladi = build_alladi(2, 20);
        series_match(out, strict_limit_series(over.lhs), alladi.lhs, 20, "(d) limit lhs");
        series_match(out, strict_limit_series(over.rhs), alladi.rhs, 20, "(d) limit rhs");
    }
    return out;
}

Outcome criterion_y_refinement() {
    Outcome out;
    for (const auto& [r, T] : std::vector<std::pair<int, int>>{{1, 40}, {2, 24}}) {
        const auto sides = build_alladi_y(r, T);
        sides_match(out, sides, T,
                    "alladi_y r=" + std::to_string(r) + " T=" + std::to_string(T));
        const auto alladi = build_alladi(r, T);
        const std::vector<std::pair<Symbol, Int>> y1 = {{Symbol::y(), 1}};
        series_match(out, substitute(sides.lhs, y1), alladi.lhs, T, "y=1 lhs");
        series_match(out, substitute(sides.rhs, y1), alladi.rhs, T, "y=1 rhs");
        // total a-degree of every lhs monomial equals its y-degree
        for (int n = 0; n < T && out.pass; ++n) {
            for (const auto& [m, c] : sides.lhs[n].terms()) {
                int adeg = 0;
                for (int j = 1; j <= r; ++j) adeg += m.exponent(Symbol::a(j));
                if (adeg != m.exponent(Symbol::y())) {
                    out.fail("monomial " + m.str() + " at q^" + std::to_string(n) +
                             " has a-degree " + std::to_string(adeg) + " but y-degree " +
                             std::to_string(m.exponent(Symbol::y())));
                    break;
                }
            }
        }
    }
    return out;
}

Outcome criterion_oracle() {
    Outcome out;
    for (int r : {1, 2}) {
        const OracleReport strict = run_oracle(PartitionKind::strict, r, 12);
        out.require(strict.pass, "strict oracle r=" + std::to_string(r) + " failed at n=" +
                                     std::to_string(strict.first_mismatch_n));
        const OracleReport over = run_oracle(PartitionKind::over, r, 10);
        out.require(over.pass, "over oracle r=" + std::to_string(r) + " failed at n=" +
                                   std::to_string(over.first_mismatch_n));
    }
    const OracleReport counts = run_oracle(PartitionKind::over, 1, 10);
    const char* expected[] = {"1", "2", "4", "8", "14", "24", "40", "64", "100", "154", "232"};
    for (int n = 0; n <= 10; ++n) {
        if (counts.rows[static_cast<std::size_t>(n)].count != expected[n]) {
            out.fail("overpartition count at n=" + std::to_string(n) + " is " +
                     counts.rows[static_cast<std::size_t>(n)].count + ", expected " +
                     expected[n]);
        }
    }
    return out;
}

Outcome criterion_stratification() {
    Outcome out;
    const int T = 11;
    for (int n = 1; n <= 10; ++n) {
        for (int N = 1; N * N <= n; ++N) {
            const MultiPoly strict_stratum = durfee_stratified_poly(PartitionKind::strict, 2, n, N);
            const MultiPoly strict_term = alladi_rhs_term(2, N, T)[n];
            if (strict_stratum != strict_term) {
                out.fail("strict stratum n=" + std::to_string(n) + " N=" + std::to_string(N) +
                         ": oracle " + strict_stratum.str() + " vs term " + strict_term.str());
            }
            const MultiPoly over_stratum = durfee_stratified_poly(PartitionKind::over, 2, n, N);
            const MultiPoly over_term = overpartition_rhs_term(2, N, T)[n];
            if (over_stratum != over_term) {
                out.fail("over stratum n=" + std::to_string(n) + " N=" + std::to_string(N) +
                         ": oracle " + over_stratum.str() + " vs term " + over_term.str());
            }
        }
    }
    return out;
}

Outcome criterion_lemmas() {
    Outcome out;
    const LemmaReport report = verify_over_lemmas(6, 15);
    for (const auto& check : report.checks) {
        if (!check.pass) {
            out.fail(check.lemma + " i=" + std::to_string(check.parts_bound) +
                     " first mismatch at n=" + std::to_string(check.first_mismatch_n) + ": " +
                     check.enumerated + " vs " + check.closed_form);
        }
    }
    return out;
}

Outcome criterion_bijection() {
    Outcome out;
    long checked = 0;
    for (int n = 1; n <= 10 && out.pass; ++n) {
        for (const auto& p : enum_strict(2, n)) {
            const BlockDecomposition d = durfee_decompose(p);
            if (!(recompose(d) == p)) out.fail("strict round-trip failed on " + format_partition(p));
            if (d.weight() != p.weight()) out.fail("weight violated on " + format_partition(p));
            ++checked;
        }
    }
    for (int n = 1; n <= 8 && out.pass; ++n) {
        for (const auto& p : enum_over(2, n)) {
            const BlockDecomposition d = durfee_decompose(p);
            if (!(recompose(d) == p)) out.fail("over round-trip failed on " + format_partition(p));
            if (d.weight() != p.weight()) out.fail("weight violated on " + format_partition(p));
            ++checked;
        }
    }
    if (out.pass) out.detail = std::to_string(checked) + " decompositions";
    return out;
}

MultiPoly random_poly(std::mt19937& rng) {
    static const Symbol symbols[] = {Symbol::a(1), Symbol::z(1), Symbol::a(2), Symbol::z(2),
                                     Symbol::y()};
    std::uniform_int_distribution<int> coeff(-9, 9);
    MultiPoly p;
    const int terms = static_cast<int>(rng() % 7);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        const int k = static_cast<int>(rng() % 4);
        for (int s = 0; s < k; ++s)
            m = m.times(Monomial::of(symbols[rng() % 5], static_cast<int>(rng() % 5)));
        p += MultiPoly::term(m, coeff(rng));
    }
    return p;
}

QSeries random_series(std::mt19937& rng, int order, bool unit) {
    QSeries s(order);
    std::uniform_int_distribution<int> coeff(-3, 3);
    static const Symbol symbols[] = {Symbol::a(1), Symbol::z(1), Symbol::a(2)};
    for (int n = 0; n < order; ++n) {
        MultiPoly p;
        const int terms = static_cast<int>(rng() % 3);
        for (int t = 0; t < terms; ++t) {
            Monomial m;
            if (rng() % 2) m = Monomial::of(symbols[rng() % 3], 1 + static_cast<int>(rng() % 2));
            p += MultiPoly::term(m, coeff(rng));
        }
        s[n] = p;
    }
    if (unit) s[0] = MultiPoly(1);
    return s;
}

Outcome criterion_properties() {
    Outcome out;
    std::mt19937 rng(987654321);

    int ring_failures = 0;
    for (int i = 0; i < 200; ++i) {
        const MultiPoly p = random_poly(rng);
        const MultiPoly q = random_poly(rng);
        const MultiPoly r = random_poly(rng);
        const bool ok = p + q == q + p && (p + q) + r == p + (q + r) && p * q == q * p &&
                        (p * q) * r == p * (q * r) && p * (q + r) == p * q + p * r &&
                        p + MultiPoly() == p && p * MultiPoly(1) == p;
        ring_failures += !ok;
    }
    out.require(ring_failures == 0,
                std::to_string(ring_failures) + "/200 ring-law cases failed");

    int series_failures = 0;
    for (int i = 0; i < 200; ++i) {
        const QSeries f = random_series(rng, 7, false);
        const QSeries g = random_series(rng, 7, false);
        const QSeries h = random_series(rng, 7, false);
        const bool ok = equal_upto(mul(f, g), mul(g, f), 7) &&
                        equal_upto(mul(mul(f, g), h), mul(f, mul(g, h)), 7) &&
                        equal_upto(add(f, g), add(g, f), 7) &&
                        equal_upto(mul(f, QSeries::one(7)), f, 7);
        series_failures += !ok;
    }
    out.require(series_failures == 0,
                std::to_string(series_failures) + "/200 series-law cases failed");

    int inverse_failures = 0;
    for (int i = 0; i < 200; ++i) {
        const QSeries f = random_series(rng, 7, true);
        inverse_failures += !equal_upto(mul(f, unit_inv(f)), QSeries::one(7), 7);
    }
    out.require(inverse_failures == 0,
                std::to_string(inverse_failures) + "/200 unit-inverse cases failed");

    // one extra outer N-term contributes nothing, for every multi-dimensional
    // builder, randomized over (r, T)
    struct Builder {
        const char* name;
        QSeries (*term)(int, int, int);
        bool ped_bound;
    };
    const Builder builders[] = {{"alladi", alladi_rhs_term, false},
                                {"overpartition_cft", overpartition_rhs_term, false},
                                {"cauchy_multi", cauchy_rhs_term, false},
                                {"ped", ped_rhs_term, true},
                                {"alladi_y", alladi_y_rhs_term, false}};
    int term_failures = 0;
    for (int i = 0; i < 200; ++i) {
        const Builder& b = builders[i % 5];
        const int r = 1 + static_cast<int>(rng() % 3);
        const int T = 2 + static_cast<int>(rng() % 15);
        int N = 1;
        while ((b.ped_bound ? 2 * N * N - N : N * N) < T) ++N;
        term_failures += !b.term(r, N, T).is_zero();
    }
    out.require(term_failures == 0,
                std::to_string(term_failures) + "/200 extra-term cases failed");
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* label;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "Sylvester identity, T=60, runtime < 5 s", criterion_sylvester},
        {2, "pentagonal number theorem, both forms, T=100, runtime < 2 s", criterion_pentagonal},
        {3, "Gauss and Jacobi theta identities, T=100, runtime < 5 s each", criterion_theta},
        {4, "Alladi identity, (r,T) = (1,40),(2,30),(3,20), runtime < 60 s", criterion_alladi},
        {5, "overpartition identity, (r,T) = (1,30),(2,20), runtime < 120 s",
         criterion_overpartition},
        {6, "specializations: z=0 Cauchy, z=1 Dousse-Kim, ped, strict limit",
         criterion_specializations},
        {7, "y-refinement: exact match, y=1 reduction, a-degree = y-degree",
         criterion_y_refinement},
        {8, "oracle equivalence: strict n<=12, over n<=10, frozen counts", criterion_oracle},
        {9, "Durfee stratification vs outer-sum N-terms, r=2, n<=10", criterion_stratification},
        {10, "overpartition counting lemmas, i<=6, T=15", criterion_lemmas},
        {11, "decompose/recompose bijection and weight conservation", criterion_bijection},
        {12, "property suites, >= 200 randomized cases each", criterion_properties},
    };

    bool all_pass = true;
    for (const auto& criterion : criteria) {
        const auto t0 = Clock::now();
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& e) {
            outcome.fail(std::string("exception: ") + e.what());
        }
        const double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
        std::printf("[%s] criterion %2d: %s (%.2f s)%s%s\n", outcome.pass ? "PASS" : "FAIL",
                    criterion.id, criterion.label, elapsed, outcome.detail.empty() ? "" : " - ",
                    outcome.detail.c_str());
        std::fflush(stdout);
        all_pass = all_pass && outcome.pass;
    }
    std::printf("%s\n", all_pass ? "acceptance: all criteria passed"
                                 : "acceptance: FAILURES present");
    return all_pass ? 0 : 1;
}
