// Acceptance suite: one pass/fail line per criterion, exit code = number
// of failed criteria.  Each criterion carries its own wall-clock budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "symdisc/cli.hpp"
#include "symdisc/oracle.hpp"

using namespace symdisc;

namespace {

struct Check {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct Rng {
    unsigned long long s;
    explicit Rng(unsigned long long seed) : s(seed * 0x9e3779b97f4a7c15ULL + 1) {}
    unsigned long long next() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return s >> 13;
    }
    Rational rat() {
        long num = static_cast<long>(next() % 19) - 9;
        unsigned long den = next() % 8 + 1;
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    Rational nonzero() {
        Rational q = rat();
        while (q == 0) q = rat();
        return q;
    }
    std::vector<Rational> cpoint(unsigned r) {
        std::vector<Rational> cv{nonzero()};
        for (size_t i = 1; i < enumerate_partitions(r).size(); ++i) cv.push_back(rat());
        return cv;
    }
};

SymmetricForm form_at(unsigned n, unsigned r, const std::vector<Rational>& cv) {
    SymmetricForm f;
    f.n = n;
    f.r = r;
    auto ps = enumerate_partitions(r);
    for (size_t i = 0; i < ps.size(); ++i) f.coeffs[ps[i]] = cv[i];
    return f;
}

// ---- criterion 1: r = 2 closed form -----------------------------------

Check criterion1() {
    Check c;
    MultiPoly c2 = MultiPoly::variable(2, 0);
    MultiPoly c11 = MultiPoly::variable(2, 1);
    for (unsigned n = 1; n <= 12; ++n) {
        auto d = discriminant_symbolic(n, 2);
        c.require(d.cr_exponent == n - 1, "C2 exponent != n-1 at n=" + std::to_string(n));
        c.require(d.factors.size() == 1, "factor count at n=" + std::to_string(n));
        if (d.factors.size() == 1) {
            c.require(d.factors[0].poly == c2 + Rational(n) * c11,
                      "factor != C2 + n C11 at n=" + std::to_string(n));
            c.require(d.factors[0].exponent == 1, "factor exponent at n=" + std::to_string(n));
        }
        c.require(d.alpha == 1, "alpha != 1 at n=" + std::to_string(n));
        c.require(d.total_degree() == discriminant_degree(n, 2),
                  "degree accounting at n=" + std::to_string(n));
    }
    return c;
}

// ---- criterion 2: r = 3 closed forms ----------------------------------

Check criterion2() {
    Check c;
    Rng rng(102);
    for (unsigned n = 2; n <= 8; ++n) {
        auto d = discriminant_symbolic(n, 3);
        long beta = (static_cast<long>(n) - 3) * (1L << (n - 1)) + 2;
        c.require(d.cr_exponent == static_cast<unsigned long>(beta),
                  "beta != (n-3)2^(n-1)+2 at n=" + std::to_string(n));
        auto cf = closed_form_r3(n, R3Variant::product);
        auto bf = closed_form_r3(n, R3Variant::b_form);
        for (int t = 0; t < 5; ++t) {
            auto cv = rng.cpoint(3);
            Rational e = evaluate(d, cv);
            c.require(e == evaluate(cf, cv), "engine != explicit product at n=" + std::to_string(n));
            c.require(e == evaluate(bf, cv), "engine != B-parameter product at n=" + std::to_string(n));
        }
    }
    return c;
}

// ---- criterion 3: n = 20 flagship -------------------------------------

Check criterion3() {
    Check c;
    auto cf = closed_form_r3(20, R3Variant::product);
    c.require(cf.cr_exponent == 8912896, "C3 exponent != 8912896");
    const std::vector<unsigned long> expected_exps = {1,     20,    190,    1140,
                                                      4845,  15504, 38760,  77520,
                                                      125970, 167960, 92378};
    c.require(cf.factors.size() == expected_exps.size(), "factor class count != 11");
    for (size_t i = 0; i < cf.factors.size() && i < expected_exps.size(); ++i)
        c.require(cf.factors[i].exponent == expected_exps[i],
                  "class exponent mismatch at index " + std::to_string(i));

    // Transcribed display: C3^8912896 * prod over m of
    //   a_m C111 C3^2 + b_m C21^3 + c_m C21^2 C3 + 20 C21 C3^2 + C3^3.
    struct Fac { Rational a, b, cc; unsigned long e; };
    const std::vector<Fac> fixture = {
        {400, 0, 0, 1},
        {324, Rational(1520, 27), Rational(76, 3), 20},
        {256, Rational(320, 3), 48, 190},
        {196, Rational(1360, 9), 68, 1140},
        {144, Rational(5120, 27), Rational(256, 3), 4845},
        {100, Rational(2000, 9), 100, 15504},
        {64, Rational(2240, 9), 112, 38760},
        {36, Rational(7280, 27), Rational(364, 3), 77520},
        {16, Rational(2560, 9), 128, 125970},
        {4, Rational(880, 3), 132, 167960},
        {0, Rational(8000, 27), Rational(400, 3), 92378},
    };
    auto d = discriminant_symbolic(20, 3);
    const std::vector<std::vector<Rational>> points = {
        {Rational(3, 2), Rational(-1, 3), Rational(2, 5)},
        {Rational(1), Rational(2, 7), Rational(-3, 4)},
    };
    for (const auto& cv : points) {
        const Rational &c3 = cv[0], &c21 = cv[1], &c111 = cv[2];
        Rational fix = rational_pow(c3, 8912896);
        for (const auto& f : fixture)
            fix *= rational_pow(f.a * c111 * c3 * c3 + f.b * rational_pow(c21, 3)
                                    + f.cc * c21 * c21 * c3 + 20 * c21 * c3 * c3
                                    + rational_pow(c3, 3),
                                f.e);
        c.require(evaluate(d, cv) == fix, "engine != transcribed display at a rational point");
        c.require(evaluate(cf, cv) == fix, "closed form != transcribed display at a rational point");
    }
    return c;
}

// ---- criterion 4: r = 3 oracle equivalence ----------------------------

Check criterion4() {
    Check c;
    Rng rng(104);
    for (int t = 0; t < 10; ++t) {
        auto cv = rng.cpoint(3);
        SymmetricForm f = form_at(3, 3, cv);
        Rational eng = *discriminant(f).value;
        c.require(eng == hessian_disc_3var(GenericCubic3::from_poly(expand(f))),
                  "D_{3|3} != ternary determinant oracle");
    }
    for (int t = 0; t < 10; ++t) {
        auto cv = rng.cpoint(3);
        SymmetricForm f = form_at(2, 3, cv);
        Rational eng = *discriminant(f).value;
        c.require(eng == sylvester_disc_2var(expand(f)).constant_value(),
                  "D_{2|3} != gradient resultant oracle");
    }
    return c;
}

// ---- criterion 5: r = 4 -----------------------------------------------

Rational printed_24(const std::vector<Rational>& cv) {
    const Rational &C4 = cv[0], &C31 = cv[1], &C22 = cv[2], &C211 = cv[3], &C1111 = cv[4];
    Rational q = -16 * C1111 * C22 - 8 * C1111 * C4 + 4 * C211 * C211 + 12 * C211 * C31
               + 8 * C211 * C4 + 9 * C31 * C31 + 8 * C31 * C22 + 16 * C31 * C4
               + 8 * C22 * C4 + 8 * C4 * C4;
    return Rational(1, 64) * C4 * C4 * (8 * C1111 + 4 * C211 + 2 * C31 + 2 * C22 + C4)
         * (2 * C22 + C4) * q * q;
}

Check criterion5(Check& characterization) {
    Check c;
    Rng rng(105);
    // 5a: the two-variable quartic against the printed product.
    for (int t = 0; t < 5; ++t) {
        auto cv = rng.cpoint(4);
        Rational eng = *discriminant(form_at(2, 4, cv)).value;
        Rational printed = printed_24(cv);
        c.require(eng == printed, "D_{2|4} != printed product (see characterization line)");
        characterization.require(printed == cv[0] * cv[0] * eng,
                                 "printed D_{2|4} != C4^2 * engine value");
        characterization.require(
            eng == sylvester_disc_2var(expand(form_at(2, 4, cv))).constant_value(),
            "engine D_{2|4} != gradient resultant oracle");
    }
    // 5b: four variables against the Macaulay oracle.
    for (int t = 0; t < 5; ++t) {
        auto cv = rng.cpoint(4);
        Rational eng = *discriminant(form_at(4, 4, cv)).value;
        c.require(eng == gradient_macaulay_disc(expand(form_at(4, 4, cv))),
                  "D_{4|4} != Macaulay oracle");
    }
    // 5c: total coefficient degree of the symbolic result.
    c.require(discriminant_symbolic(4, 4).total_degree() == 108, "deg D_{4|4} != 108");
    return c;
}

// ---- criterion 6: interpolated quartic family -------------------------

Check criterion6() {
    Check c;
    bool threw = false;
    try {
        c.require(berwald_moor_check() == 0, "family discriminant != 0 symbolically");
        c.require(berwald_moor_check(Rational(5, 3), Rational(-7, 2)) == 0,
                  "family discriminant != 0 at a sample point");
    } catch (const Error& e) {
        threw = true;
        c.require(false, std::string("threw: ") + e.what());
    }
    (void)threw;
    return c;
}

// ---- criterion 7: antisymmetric forms ---------------------------------

Check criterion7() {
    Check c;
    for (unsigned n : {3u, 4u}) {
        auto res = antisymmetric_discriminant(n, 4, nullptr);
        c.require(res.value == 0, "antisymmetric n=" + std::to_string(n) + " != 0");
    }
    Rng rng(107);
    for (unsigned r : {3u, 4u, 5u}) {
        auto cv = rng.cpoint(r - 1);
        SymmetricForm stilde = form_at(2, r - 1, cv);
        auto res = antisymmetric_discriminant(2, r, &stilde);
        MultiPoly st = expand(stilde);
        Rational s11 = st.eval({Rational(1), Rational(1)});
        Rational inner = sylvester_disc_2var(st).constant_value();
        c.require(res.value == s11 * s11 * inner,
                  "n=2 reduction identity fails at r=" + std::to_string(r));
    }
    return c;
}

// ---- criterion 8: structural suite ------------------------------------

Check criterion8() {
    Check c;
    Rng rng(108);
    // Normalization.
    for (auto [n, r] : std::vector<std::pair<unsigned, unsigned>>{
             {3, 2}, {6, 3}, {3, 4}, {4, 4}, {2, 5}}) {
        std::vector<Rational> fermat(enumerate_partitions(r).size(), 0);
        fermat[0] = 1;
        c.require(evaluate(discriminant_symbolic(n, r), fermat) == 1,
                  "Fermat normalization fails");
    }
    // Scaling covariance.
    for (auto [n, r] : std::vector<std::pair<unsigned, unsigned>>{{4, 3}, {3, 4}}) {
        auto d = discriminant_symbolic(n, r);
        auto cv = rng.cpoint(r);
        Rational lambda(-5, 7);
        std::vector<Rational> scaled;
        for (const auto& q : cv) scaled.push_back(lambda * q);
        Integer deg = discriminant_degree(n, r);
        c.require(evaluate(d, scaled) ==
                      rational_pow_signed(lambda, static_cast<long>(mpz_get_ui(deg.get_mpz_t())))
                          * evaluate(d, cv),
                  "scaling covariance fails");
    }
    // C_r = 0 short-circuit.
    {
        SymmetricForm f = form_at(3, 3, {Rational(0), Rational(2), Rational(-1)});
        auto d = discriminant(f);
        c.require(d.zero && d.value && *d.value == 0, "C_r = 0 short-circuit fails");
    }
    // Grouped-exponent integrality (construction throws on non-integers).
    for (unsigned r = 2; r <= 4; ++r)
        for (unsigned n = 1; n <= 12; ++n) {
            try {
                auto d = discriminant_symbolic(n, r);
                for (const auto& f : d.factors)
                    c.require(f.exponent >= 1, "zero exponent");
            } catch (const Error& e) {
                c.require(false, std::string("exponent integrality: ") + e.what());
            }
        }
    // Divided-difference recurrences.
    for (unsigned r : {4u, 5u}) {
        Composition m{{2, 1, 1}};
        while (m.parts.size() < r - 1) m.parts.push_back(0);
        auto ps = specialize_symbolic(r, m);
        DividedTower t = build_tower(ps, static_cast<unsigned>(ps.size()));
        for (const auto& [subset, entry] : t.entries) {
            if (subset.size() < 2) continue;
            std::vector<unsigned> head(subset.begin(), subset.end() - 1);
            std::vector<unsigned> tail(subset.begin() + 1, subset.end());
            MultiPoly ydiff = MultiPoly::variable(entry.nvars(), subset.front())
                            - MultiPoly::variable(entry.nvars(), subset.back());
            c.require(entry * ydiff == t.at(head) - t.at(tail), "tower recurrence fails");
        }
    }
    // Resultant degree accounting.
    c.require(resultant_degree({2}) == 1, "degree formula v=1");
    c.require(resultant_degree({3, 2}) == 5, "degree formula v=2");
    c.require(resultant_degree({3, 2, 1}) == 11, "degree formula v=3");
    for (auto [n, r] : std::vector<std::pair<unsigned, unsigned>>{{5, 3}, {4, 4}, {12, 3}})
        c.require(discriminant_symbolic(n, r).total_degree() == discriminant_degree(n, r),
                  "total degree accounting fails");
    return c;
}

} // namespace

int main() {
    struct Item {
        std::string name;
        double budget_s;
        std::function<Check()> fn;
    };
    Check characterization;
    std::vector<Item> items = {
        {"criterion 1 (r=2 closed form, n=1..12)", 1.0, criterion1},
        {"criterion 2 (r=3 closed forms, n=2..8)", 10.0, criterion2},
        {"criterion 3 (n=20 flagship display)", 30.0, criterion3},
        {"criterion 4 (r=3 oracle equivalence)", 5.0, criterion4},
        {"criterion 5 (r=4 checks)", 600.0, [&] { return criterion5(characterization); }},
        {"criterion 6 (interpolated quartic family)", 60.0, criterion6},
        {"criterion 7 (antisymmetric forms)", 10.0, criterion7},
        {"criterion 8 (structural suite)", 120.0, criterion8},
    };
    int failures = 0;
    for (auto& item : items) {
        auto t0 = std::chrono::steady_clock::now();
        Check c;
        try {
            c = item.fn();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > item.budget_s) {
            c.ok = false;
            if (c.detail.empty()) c.detail = "time budget exceeded";
        }
        std::printf("%-45s %s (%.2f s)%s%s\n", item.name.c_str(), c.ok ? "PASS" : "FAIL",
                    secs, c.detail.empty() ? "" : " -- ", c.detail.c_str());
        if (!c.ok) ++failures;
    }
    std::printf("%-45s %s%s%s\n", "characterization (printed D_{2|4} offset)",
                characterization.ok ? "PASS" : "FAIL",
                characterization.detail.empty() ? "" : " -- ",
                characterization.detail.c_str());
    if (!characterization.ok) ++failures;
    return failures;
}
