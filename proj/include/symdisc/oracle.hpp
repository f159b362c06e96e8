/*
 * oracle.hpp
 * ----------
 * Independent brute-force discriminants of small generic forms, used to
 * verify the factored results: a Sylvester resultant of the gradient for
 * two variables, the classical 6x6 determinant for ternary cubics, and
 * a Macaulay-matrix route for up to four variables.  All three are
 * calibrated so the Fermat form x_1^d + ... + x_n^d gives exactly 1.
 */
#pragma once

#include "symdisc/resultants.hpp"

namespace symdisc {

// A generic ternary cubic, stored through the ten coefficients of
//   S = S111 x1^3 + 3 S112 x1^2 x2 + 3 S113 x1^2 x3 + 3 S122 x1 x2^2
//     + 6 S123 x1 x2 x3 + 3 S133 x1 x3^2 + S222 x2^3 + 3 S223 x2^2 x3
//     + 3 S233 x2 x3^2 + S333 x3^3.
struct GenericCubic3 {
    Rational s111, s112, s113, s122, s123, s133, s222, s223, s233, s333;

    static GenericCubic3 from_poly(const MultiPoly& p);
    MultiPoly to_poly() const;
};

// Discriminant of a homogeneous bivariate form of degree >= 2: the
// Sylvester resultant of its two partial derivatives, divided by its
// value on the Fermat form of the same degree.  The input may carry
// extra (coefficient) variables after the first two.
MultiPoly sylvester_disc_2var(const MultiPoly& s);

// Discriminant of a ternary cubic via the classical 6x6 determinant
// whose rows are the S-coefficients and the coefficients H_ijk of the
// 3x3 Hessian determinant, Fermat-calibrated.
Rational hessian_disc_3var(const GenericCubic3& c);

// Discriminant of a homogeneous form in up to four variables: the
// Macaulay resultant of its gradient system, Fermat-calibrated.
Rational gradient_macaulay_disc(const MultiPoly& s, size_t budget = 2000);

} // namespace symdisc
