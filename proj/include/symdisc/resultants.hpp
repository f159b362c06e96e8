/*
 * resultants.hpp
 * --------------
 * Exact resultants of the small homogeneous systems the tower produces:
 * Sylvester determinants for two bivariate forms, a linear-elimination
 * chain for triangular-degree systems ending in a linear form, and a
 * Macaulay-matrix construction used as an independent cross-check.
 *
 * Every polynomial lives in a ring whose first `yvars` variables are the
 * eliminated ones; the remaining variables (symbolic coefficients) pass
 * through into the result.
 */
#pragma once

#include <vector>

#include "symdisc/multipoly.hpp"

namespace symdisc {

// A square homogeneous system: v polynomials in the first v variables of
// a common ring, with declared degrees d_1..d_v.
struct HomoSystem {
    std::vector<MultiPoly> polys;
    std::vector<unsigned> degrees;
    unsigned yvars = 0;  // == polys.size()

    void validate() const;
};

// Degree of the resultant in the coefficients of the system:
// d_1*...*d_v * (1/d_1 + ... + 1/d_v), always an integer.
unsigned long resultant_degree(const std::vector<unsigned>& degrees);

// Sylvester resultant of two homogeneous forms in the first two ring
// variables, of declared degrees df and dg.  Row layout: dg rows of f's
// coefficient list (descending powers of the first variable), then df
// rows of g's.  The result has zero exponents on the two eliminated
// variables.
MultiPoly sylvester(const MultiPoly& f, const MultiPoly& g, unsigned df, unsigned dg);

// Convenience overload taking the declared degrees from the inputs.
MultiPoly sylvester(const MultiPoly& f, const MultiPoly& g);

struct ScaledPoly {
    Rational scale;      // scale * primitive == the raw resultant
    MultiPoly primitive; // integer coprime coefficients, positive leading term
};

// Resultant of a triangular system with degrees (r-1, r-2, ..., r-v),
// v <= 3: the single coefficient for v=1, a Sylvester determinant for
// v=2, and for v=3 elimination of the linear form followed by Sylvester
// with the known extraneous power of the pivot coefficient divided out.
// Throws ZeroLinearForm if the linear equation is identically zero.
ScaledPoly chain_resultant(const HomoSystem& sys);

// Macaulay resultant: determinant of the degree-D coefficient matrix
// (D = sum(d_i - 1) + 1) divided by its extraneous minor.  On a singular
// minor the variables are permuted and the construction retried; if every
// ordering fails, NeedsPerturbation is thrown.  `budget` caps the matrix
// dimension.
MultiPoly macaulay(const HomoSystem& sys, size_t budget = 2000);

} // namespace symdisc
