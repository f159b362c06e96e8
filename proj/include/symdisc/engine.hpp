/*
 * engine.hpp
 * ----------
 * Assembly of the fully factored discriminant of a symmetric form:
 * one primitive factor per critical-point class, a grouped integer
 * exponent for each, a power of C_r fixed by total-degree accounting,
 * and a global rational scale alpha fixed so that the Fermat form
 * x_1^r + ... + x_n^r has discriminant exactly 1.
 *
 * Also: the closed forms for r = 2 and r = 3, the reduction of
 * antisymmetric forms, and the Berwald-Moor quartic family check.
 */
#pragma once

#include <optional>

#include "symdisc/critstruct.hpp"
#include "symdisc/resultants.hpp"

namespace symdisc {

// A class of critical-point types: the multiset of nonzero block sizes
// plus the count of zero slots.  All ordered compositions in one class
// share one factor polynomial.
struct CompositionClass {
    std::vector<unsigned> nonzero_parts; // non-increasing
    unsigned zeros = 0;

    // A representative ordered composition (nonzero parts first).
    Composition representative() const;
    auto operator<=>(const CompositionClass&) const = default;
};

struct DiscriminantFactor {
    CompositionClass cls;
    // Primitive polynomial in the P(r) coefficient variables
    // (enumerate_partitions order).
    MultiPoly poly;
    unsigned long exponent = 0;
    // Set when the discriminant was requested for a concrete form: the
    // factor polynomial evaluated at its coefficients.
    std::optional<Rational> value;
};

struct FactoredDiscriminant {
    unsigned n = 0;
    unsigned r = 0;
    Rational alpha = 1;              // global scale
    unsigned long cr_exponent = 0;   // beta, the power of C_r
    std::vector<DiscriminantFactor> factors;
    bool unproven_regime = false;    // n < r: stated without proof
    bool zero = false;               // C_r = 0 short-circuit
    std::optional<Rational> value;   // full product, numeric runs only

    // beta + sum of exponent * deg(factor); equals n(r-1)^(n-1).
    Integer total_degree() const;
};

// n(r-1)^(n-1), the total degree of the discriminant (exact).
Integer discriminant_degree(unsigned n, unsigned r);

// The exponent contribution of one ordered composition:
// #_M! / (r-1)! * n! / (M_1! ... M_{r-1}!).  Summed over the orbit of a
// class this is a positive integer.
Rational composition_multiplicity(const Composition& m, unsigned r);

// All canonical composition classes for (n, r): multisets of at most
// r-1 positive parts summing to n, with zeros = (r-1) - #parts.
std::vector<CompositionClass> composition_classes(unsigned n, unsigned r);

// The factored discriminant with symbolic coefficients.  `threads` > 1
// evaluates composition classes concurrently; assembly order is
// canonical either way.
FactoredDiscriminant discriminant_symbolic(unsigned n, unsigned r, unsigned threads = 1);

// Discriminant of a concrete form: the symbolic factorization evaluated
// at its coefficients.  If C_(r) = 0 the form has a nonzero critical
// point and the result is zero outright.
FactoredDiscriminant discriminant(const SymmetricForm& form, unsigned threads = 1);

// Evaluate the assembled product at concrete coefficient values (one per
// partition of r, enumerate_partitions order).
Rational evaluate(const FactoredDiscriminant& d, const std::vector<Rational>& cvals);

// Closed form for r = 2: C2^(n-1) (C2 + n C11).
FactoredDiscriminant closed_form_r2(unsigned n);

enum class R3Variant { product, b_form };

// Closed form for r = 3: the explicit product over factor pairs
// {m, n-m}, or its reparametrized variant in B1 = n^2 C111 + n C21 + C3,
// B2 = n C21 + 3 C3, B3 = C3.  Both multiply out to the same polynomial.
FactoredDiscriminant closed_form_r3(unsigned n, R3Variant variant = R3Variant::product);

struct AntisymResult {
    Rational value = 0;
    std::string code; // "vanishes-for-n>2" or "n2-reduction"
};

// Discriminant of the antisymmetric form (x_i - x_j alternating) of
// degree r built from the symmetric cofactor `stilde` of degree r-1:
// identically zero for n > 2; for n = 2 it is stilde(1,1)^2 times the
// two-variable discriminant of stilde.
AntisymResult antisymmetric_discriminant(unsigned n, unsigned r,
                                         const SymmetricForm* stilde);

// The quartic family u (sum_{i<j} x_i x_j)^2 + v x1 x2 x3 x4: its
// discriminant is identically zero in (u, v).  Returns the value at the
// given point (always 0); throws if the symbolic check ever failed.
Rational berwald_moor_check();
Rational berwald_moor_check(const Rational& u, const Rational& v);

} // namespace symdisc
