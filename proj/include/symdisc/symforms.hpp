/*
 * symforms.hpp
 * ------------
 * Symmetric homogeneous forms written in the power-sum basis.
 *
 * A degree-r symmetric form in n variables is a rational linear
 * combination, indexed by the partitions of r, of products of power sums:
 * the partition (y_1, ..., y_l) contributes the monomial p_{y_1}*...*p_{y_l}
 * with p_k = x_1^k + ... + x_n^k.
 */
#pragma once

#include <map>
#include <string>
#include <vector>

#include "symdisc/multipoly.hpp"

namespace symdisc {

// A partition of a positive integer: parts in non-increasing order.
struct Partition {
    std::vector<unsigned> parts;

    unsigned weight() const;
    // Canonical CSV key, e.g. "2,1,1".
    std::string key() const;
    // Compact key usable as an identifier when all parts are single
    // digits, e.g. "211"; falls back to underscores otherwise.
    std::string compact_key() const;
    // Accepts both the CSV form "2,1,1" and the compact digit form "211".
    static Partition parse(const std::string& text);

    auto operator<=>(const Partition&) const = default;
};

// All partitions of r, largest-first lexicographically:
// (r), (r-1,1), ..., (1,...,1).  This fixed order also numbers the
// coefficient variables everywhere else in the library.
std::vector<Partition> enumerate_partitions(unsigned r);

// Variable names for the coefficient ring of degree r, in the same order:
// "C4", "C31", "C22", ...
std::vector<std::string> coefficient_names(unsigned r);

// A symmetric form: n, r, and one rational coefficient per partition of r.
// Missing partitions mean a zero coefficient.
struct SymmetricForm {
    unsigned n = 0;
    unsigned r = 0;
    std::map<Partition, Rational> coeffs;

    Rational coeff(const Partition& y) const;
};

// Expansion into the ordinary monomial ring in x_1..x_n.
MultiPoly expand(const SymmetricForm& s);

// The gradient (dS/dx_1, ..., dS/dx_n) in the monomial ring.
std::vector<MultiPoly> gradient(const SymmetricForm& s);

// Each gradient component factors through the single variable it
// differentiates: dS/dx_i = sum_k W_k * x_i^(r-1-k) where every W_k is
// itself symmetric.  W_0 = r * C_(r) is constant.
struct GradientDecomposition {
    unsigned n = 0;
    unsigned r = 0;
    // w[k] for k = 0..r-1, as polynomials in x_1..x_n.
    std::vector<MultiPoly> w;
};

GradientDecomposition w_decompose(const SymmetricForm& s);

} // namespace symdisc
