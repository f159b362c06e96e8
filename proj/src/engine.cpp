#include "symdisc/engine.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <thread>

namespace symdisc {

Composition CompositionClass::representative() const {
    Composition m;
    m.parts = nonzero_parts;
    m.parts.resize(nonzero_parts.size() + zeros, 0u);
    return m;
}

Integer FactoredDiscriminant::total_degree() const {
    Integer total = cr_exponent;
    for (const auto& f : factors)
        total += Integer(f.exponent) * std::max(f.poly.total_degree(), 0);
    return total;
}

Integer discriminant_degree(unsigned n, unsigned r) {
    Integer d;
    mpz_ui_pow_ui(d.get_mpz_t(), r - 1, n - 1);
    return d * n;
}

Rational composition_multiplicity(const Composition& m, unsigned r) {
    if (m.parts.size() != r - 1) throw DomainError("composition has wrong length");
    unsigned n = m.n();
    Rational mult(factorial(m.zero_count()) * factorial(n), factorial(r - 1));
    for (unsigned p : m.parts) mult /= Rational(factorial(p));
    mult.canonicalize();
    return mult;
}

std::vector<CompositionClass> composition_classes(unsigned n, unsigned r) {
    // Partitions of n into at most r-1 positive parts, largest-first.
    std::vector<CompositionClass> out;
    std::vector<unsigned> cur;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned rem, unsigned maxpart) {
        if (rem == 0) {
            out.push_back(CompositionClass{cur, static_cast<unsigned>(r - 1 - cur.size())});
            return;
        }
        if (cur.size() == r - 1) return;
        for (unsigned p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

// Grouped exponent of a class: the per-composition multiplicity summed
// over all ordered arrangements of the class.
static unsigned long class_exponent(const CompositionClass& cls, unsigned n, unsigned r) {
    Rational per = composition_multiplicity(cls.representative(), r);
    // Arrangements of the multiset {nonzero parts, zeros} over r-1 slots.
    Rational count(factorial(r - 1), factorial(cls.zeros));
    unsigned run = 1;
    for (size_t i = 1; i <= cls.nonzero_parts.size(); ++i) {
        if (i < cls.nonzero_parts.size() &&
            cls.nonzero_parts[i] == cls.nonzero_parts[i - 1]) {
            ++run;
        } else {
            count /= Rational(factorial(run));
            run = 1;
        }
    }
    count.canonicalize();
    return to_ulong_exact(per * count);
}

// The factor polynomial of one class, symbolic in the C-variables.
static MultiPoly class_factor(const CompositionClass& cls, unsigned r) {
    Composition rep = cls.representative();
    unsigned v = static_cast<unsigned>(cls.nonzero_parts.size());
    auto firsts = specialize_symbolic(r, rep);
    auto tower = build_tower(firsts, v);
    auto sums = level_sums(tower);
    HomoSystem sys;
    sys.polys = sums;
    sys.yvars = v;
    for (unsigned k = 0; k < v; ++k) sys.degrees.push_back(r - 1 - k);
    MultiPoly prim(firsts[0].nvars());
    if (v <= 3) {
        prim = chain_resultant(sys).primitive;
    } else {
        // Beyond r = 4 the triangular chain is not implemented; fall back
        // to the Macaulay construction (experimental regime).
        prim = primitive_part(macaulay(sys)).second;
    }
    return drop_prefix_vars(prim, v);
}

// Fix alpha so the whole product evaluates to 1 at the Fermat point
// (C_(r) = 1, all other coefficients 0).
static void finalize_alpha(FactoredDiscriminant& d) {
    unsigned p = static_cast<unsigned>(enumerate_partitions(d.r).size());
    std::vector<Rational> fermat(p, 0);
    fermat[0] = 1; // partition (r) is first in the canonical order
    Rational prod = 1;
    for (const auto& f : d.factors)
        prod *= rational_pow(f.poly.eval(fermat), f.exponent);
    if (prod == 0) throw Error("Internal", "factor vanishes at the Fermat point");
    d.alpha = Rational(1) / prod;
}

static std::once_flag cache_flag;
static std::mutex cache_mutex;
static std::map<std::pair<unsigned, unsigned>, FactoredDiscriminant>* sym_cache;

FactoredDiscriminant discriminant_symbolic(unsigned n, unsigned r, unsigned threads) {
    if (r < 2 || n < 1) throw DomainError("need r >= 2 and n >= 1");
    std::call_once(cache_flag, [] {
        sym_cache = new std::map<std::pair<unsigned, unsigned>, FactoredDiscriminant>;
    });
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = sym_cache->find({n, r});
        if (it != sym_cache->end()) return it->second;
    }
    FactoredDiscriminant d;
    d.n = n;
    d.r = r;
    d.unproven_regime = n < r;
    auto classes = composition_classes(n, r);
    d.factors.resize(classes.size());
    // Each class is independent; compute them concurrently and assemble
    // in canonical class order.
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < classes.size(); i = next.fetch_add(1)) {
            DiscriminantFactor f;
            f.cls = classes[i];
            f.poly = class_factor(classes[i], r);
            f.exponent = class_exponent(classes[i], n, r);
            d.factors[i] = std::move(f);
        }
    };
    if (threads <= 1 || classes.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        unsigned count = std::min<size_t>(threads, classes.size());
        for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    // beta is what the total degree n(r-1)^(n-1) leaves for C_r.
    Integer beta = discriminant_degree(n, r);
    for (const auto& f : d.factors)
        beta -= Integer(f.exponent) * std::max(f.poly.total_degree(), 0);
    if (beta < 0 || !beta.fits_ulong_p())
        throw Error("Internal", "degree accounting failed");
    d.cr_exponent = beta.get_ui();
    finalize_alpha(d);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        sym_cache->emplace(std::make_pair(n, r), d);
    }
    return d;
}

Rational evaluate(const FactoredDiscriminant& d, const std::vector<Rational>& cvals) {
    if (d.zero) return 0;
    unsigned p = static_cast<unsigned>(enumerate_partitions(d.r).size());
    if (cvals.size() != p) throw VarCountMismatch("need one value per partition");
    if (cvals[0] == 0) return 0; // C_(r) = 0: critical point at a root of unity
    Rational total = d.alpha * rational_pow(cvals[0], d.cr_exponent);
    for (const auto& f : d.factors)
        total *= rational_pow(f.poly.eval(cvals), f.exponent);
    return total;
}

FactoredDiscriminant discriminant(const SymmetricForm& form, unsigned threads) {
    if (form.r < 2) throw DomainError("degree must be at least 2");
    auto partitions = enumerate_partitions(form.r);
    std::vector<Rational> cvals;
    for (const auto& y : partitions) cvals.push_back(form.coeff(y));
    if (cvals[0] == 0) {
        // C_(r) = 0 forces a critical point with root-of-unity coordinates.
        FactoredDiscriminant d;
        d.n = form.n;
        d.r = form.r;
        d.zero = true;
        d.unproven_regime = form.n < form.r;
        d.value = Rational(0);
        return d;
    }
    FactoredDiscriminant d = discriminant_symbolic(form.n, form.r, threads);
    for (auto& f : d.factors) f.value = f.poly.eval(cvals);
    d.value = evaluate(d, cvals);
    return d;
}

FactoredDiscriminant closed_form_r2(unsigned n) {
    if (n < 1) throw DomainError("need n >= 1");
    FactoredDiscriminant d;
    d.n = n;
    d.r = 2;
    d.unproven_regime = n < 2;
    // C2 + n C11, the single critical-point class (n).
    MultiPoly f(2);
    f.set_coeff({1, 0}, 1);
    f.set_coeff({0, 1}, Rational(n));
    d.factors.push_back({CompositionClass{{n}, 0}, f, 1, std::nullopt});
    d.cr_exponent = n - 1;
    finalize_alpha(d);
    return d;
}

// C-space helpers for the cubic closed forms (variables C3, C21, C111).
static MultiPoly c3_mono(unsigned a, unsigned b, unsigned c, const Rational& coef) {
    MultiPoly p(3);
    p.set_coeff({a, b, c}, coef);
    return p;
}

FactoredDiscriminant closed_form_r3(unsigned n, R3Variant variant) {
    if (n < 1) throw DomainError("need n >= 1");
    FactoredDiscriminant d;
    d.n = n;
    d.r = 3;
    d.unproven_regime = n < 3;
    // Exponent of C3: (n-3) 2^(n-1); for n < 3 it is negative and the
    // C3^2 inside the m = 0 (resp. k = 0) factor cancels it.
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, n - 1);
    Integer e3 = Integer(static_cast<long>(n) - 3) * two_pow;
    bool strip = n < 3;
    if (strip) e3 += 2;
    if (e3 < 0 || !e3.fits_ulong_p()) throw Error("Internal", "C3 exponent out of range");
    d.cr_exponent = e3.get_ui();

    Rational nn(n);
    if (variant == R3Variant::product) {
        // Factor pairs {m, n-m}:
        //   4 m(n-m) (C21^3 n/27 + C21^2 C3/3 - C111 C3^2)
        //     + C3^2 (C3 + n C21 + n^2 C111)
        MultiPoly t = c3_mono(0, 3, 0, nn / 27) + c3_mono(1, 2, 0, Rational(1, 3)) -
                      c3_mono(2, 0, 1, 1);
        MultiPoly u = c3_mono(1, 0, 0, 1) + c3_mono(0, 1, 0, nn) + c3_mono(0, 0, 1, nn * nn);
        MultiPoly c3sq = c3_mono(2, 0, 0, 1);
        for (unsigned m = 0; 2 * m <= n; ++m) {
            MultiPoly raw(3);
            if (m == 0) {
                raw = strip ? u : c3sq * u;
            } else {
                raw = Rational(4 * m * (n - m)) * t + c3sq * u;
            }
            Rational e(binomial(n, m));
            if (m == 0)
                e = 1;
            else if (2 * m == n)
                e /= 2;
            auto [scale, prim] = primitive_part(raw);
            DiscriminantFactor f;
            f.cls = m == 0 ? CompositionClass{{n}, 1}
                           : CompositionClass{{n - m, m}, 0};
            f.poly = prim;
            f.exponent = to_ulong_exact(e);
            d.factors.push_back(std::move(f));
        }
    } else {
        // Reparametrized product over k = 0..n-1 in
        //   B1 = n^2 C111 + n C21 + C3, B2 = n C21 + 3 C3, B3 = C3:
        //   ((n-2k)/n)^2 B1 B3^2 + 4k(n-k)/(27 n^2) B2^3
        // The relative weight of the two terms follows from
        // f = 4k(n-k) (B2^3/(27 n^2) - B1 B3^2/n^2) + B1 B3^2; any other
        // weighting fails the cross-check against the per-class product.
        MultiPoly b1 = c3_mono(1, 0, 0, 1) + c3_mono(0, 1, 0, nn) + c3_mono(0, 0, 1, nn * nn);
        MultiPoly b2 = c3_mono(1, 0, 0, 3) + c3_mono(0, 1, 0, nn);
        MultiPoly b3sq = c3_mono(2, 0, 0, 1);
        for (unsigned k = 0; k < n; ++k) {
            Rational w1 = Rational(static_cast<long>(n) - 2 * static_cast<long>(k), n);
            w1 *= w1;
            w1.canonicalize();
            Rational w2(4 * k * (n - k), 27 * n * n);
            w2.canonicalize();
            MultiPoly head = strip ? b1 : b1 * b3sq;
            MultiPoly raw = (k == 0) ? w1 * head
                                     : w1 * (b1 * b3sq) + w2 * (b2 * b2 * b2);
            auto [scale, prim] = primitive_part(raw);
            DiscriminantFactor f;
            f.cls = k == 0 ? CompositionClass{{n}, 1}
                           : CompositionClass{{std::max(n - k, k), std::min(n - k, k)}, 0};
            f.poly = prim;
            f.exponent = to_ulong_exact(Rational(binomial(n - 1, k)));
            d.factors.push_back(std::move(f));
        }
    }
    finalize_alpha(d);
    return d;
}

AntisymResult antisymmetric_discriminant(unsigned n, unsigned r,
                                         const SymmetricForm* stilde) {
    if (n > 2) return {Rational(0), "vanishes-for-n>2"};
    if (n < 2) throw DomainError("antisymmetric forms need n >= 2");
    if (stilde == nullptr)
        throw DomainError("n = 2 reduction needs the symmetric cofactor");
    if (stilde->n != 2 || stilde->r != r - 1)
        throw DomainError("cofactor must have 2 variables and degree r-1");
    MultiPoly t = expand(*stilde);
    Rational s11 = t.eval({Rational(1), Rational(1)});
    Rational inner;
    if (r - 1 == 1) {
        // Degree-1 cofactor: a linear form is non-degenerate iff nonzero.
        inner = t.is_zero() ? 0 : 1;
    } else {
        inner = *discriminant(*stilde).value;
    }
    return {s11 * s11 * inner, "n2-reduction"};
}

// C-values of the interpolating quartic family, as polynomials in (u, v).
static std::vector<MultiPoly> berwald_moor_cvalues() {
    auto uv = [](const Rational& cu, const Rational& cv) {
        MultiPoly p(2);
        p.set_coeff({1, 0}, cu);
        p.set_coeff({0, 1}, cv);
        return p;
    };
    return {
        uv(0, Rational(-1, 4)),                // C4
        uv(0, Rational(1, 3)),                 // C31
        uv(Rational(1, 4), Rational(1, 8)),    // C22
        uv(Rational(-1, 2), Rational(-1, 4)),  // C211
        uv(Rational(1, 4), Rational(1, 24)),   // C1111
    };
}

Rational berwald_moor_check() {
    FactoredDiscriminant d = discriminant_symbolic(4, 4);
    auto cv = berwald_moor_cvalues();
    std::map<unsigned, MultiPoly> assign;
    for (unsigned i = 0; i < 5; ++i) assign.emplace(i, cv[i]);
    for (const auto& f : d.factors)
        if (f.poly.substitute(assign).is_zero()) return 0;
    throw Error("Internal", "no factor vanishes on the quartic family");
}

Rational berwald_moor_check(const Rational& u, const Rational& v) {
    auto cv = berwald_moor_cvalues();
    auto partitions = enumerate_partitions(4);
    SymmetricForm form;
    form.n = 4;
    form.r = 4;
    for (size_t i = 0; i < partitions.size(); ++i)
        form.coeffs[partitions[i]] = cv[i].eval({u, v});
    return *discriminant(form).value;
}

} // namespace symdisc
