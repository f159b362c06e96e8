/*
 * multipoly.hpp
 * -------------
 * Sparse multivariate polynomials over the exact rationals.
 *
 * A polynomial in n variables is a map from dense exponent vectors
 * (length n, one entry per variable) to nonzero rational coefficients.
 * Terms are kept in graded lexicographic order, largest first, so the
 * leading term is always terms().begin() and printed output is canonical.
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symdisc/rational.hpp"

namespace symdisc {

using Expo = std::vector<unsigned>;

// Orders exponent vectors by total degree, ties broken lexicographically,
// with the *largest* monomial first.
struct GradedLexDesc {
    bool operator()(const Expo& a, const Expo& b) const;
};

class MultiPoly {
public:
    using TermMap = std::map<Expo, Rational, GradedLexDesc>;

    // The zero polynomial in `nvars` variables.
    explicit MultiPoly(unsigned nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(unsigned nvars, const Rational& c);
    static MultiPoly variable(unsigned nvars, unsigned index, unsigned power = 1);

    unsigned nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    // Total degree; -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;

    // Degree in a subset of the variables (the first `k`).
    int degree_in_prefix(unsigned k) const;

    // Coefficient of a monomial (zero if absent).
    Rational coeff(const Expo& e) const;
    void set_coeff(const Expo& e, const Rational& c);

    // Value of a polynomial with no remaining variables / only a constant
    // term; throws DomainError if non-constant.
    Rational constant_value() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
    friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
    friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
    friend MultiPoly operator*(const Rational& c, MultiPoly p);
    bool operator==(const MultiPoly& rhs) const;

    MultiPoly pow(unsigned long e) const;
    MultiPoly derivative(unsigned var) const;

    // Exact evaluation at a rational point (one value per variable).
    Rational eval(const std::vector<Rational>& point) const;

    // Simultaneous substitution.  Every replacement polynomial must live in
    // a common ring of `target_nvars` variables.  Variables without an
    // assignment map to the same-index variable of the target ring, which
    // therefore must exist.
    MultiPoly substitute(const std::map<unsigned, MultiPoly>& assign) const;

    // Canonical text, graded-lex term order, e.g. "3*x0^2*x1 - 1/2".
    std::string str(const std::vector<std::string>& names) const;
    std::string str() const;

private:
    unsigned nvars_ = 0;
    TermMap terms_;
};

// Exact quotient num/den; throws InexactDivision if den does not divide num.
MultiPoly exact_divide(const MultiPoly& num, const MultiPoly& den);

// Splits p != 0 as scale * primitive where primitive has integer coprime
// coefficients and positive leading coefficient.  Returns {scale, primitive}.
std::pair<Rational, MultiPoly> primitive_part(const MultiPoly& p);

// Determinant of a square matrix of polynomials (Bareiss fraction-free
// elimination; all intermediate divisions are exact).
MultiPoly det_polymatrix(const std::vector<std::vector<MultiPoly>>& m);

// Determinant of a square rational matrix (fraction arithmetic).
Rational det_rational(std::vector<std::vector<Rational>> m);

// The coefficient of the monomial `prefix` in the first `prefix.size()`
// variables, as a polynomial in the full ring with zero exponents there.
MultiPoly coeff_of_prefix(const MultiPoly& p, const Expo& prefix);

// Remove the first `k` variables (all exponents there must be zero).
MultiPoly drop_prefix_vars(const MultiPoly& p, unsigned k);

// Re-embed a polynomial into a ring with `k` extra leading variables.
MultiPoly prepend_vars(const MultiPoly& p, unsigned k);

} // namespace symdisc
