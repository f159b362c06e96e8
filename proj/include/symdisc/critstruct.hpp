/*
 * critstruct.hpp
 * --------------
 * Critical-point typing and the divided-difference tower.
 *
 * A nonzero critical point of a symmetric form can be arranged into blocks
 * of equal coordinates; the block sizes form a composition
 * M = (M_1, ..., M_{r-1}) of n.  Substituting block value y_a for each
 * block collapses the n gradient equations to v = #nonzero(M) distinct
 * polynomial conditions P^(i) in y_1..y_v.  Successive divided differences
 * of those conditions build the tower P^(ij), P^(ijk), ... whose level
 * sums feed the per-type resultants.
 */
#pragma once

#include <map>
#include <vector>

#include "symdisc/symforms.hpp"

namespace symdisc {

// An ordered tuple (M_1, ..., M_{r-1}) of non-negative integers summing
// to n; types the critical points of a degree-r form in n variables.
struct Composition {
    std::vector<unsigned> parts;

    unsigned n() const;                       // sum of parts
    unsigned zero_count() const;              // #_M
    std::vector<unsigned> nonzero_parts() const;

    auto operator<=>(const Composition&) const = default;
};

// The variable layout used throughout the tower when coefficients are
// symbolic: first the v block variables y_1..y_v, then one variable per
// partition of r in enumerate_partitions order.  Numeric mode drops the
// C block and keeps only y_1..y_v.

// Specialized gradient conditions P^(i), one per nonzero part of m, with
// the form's coefficients substituted as fixed rationals.  Uses the
// power-sum collapse p_k -> sum_a M_a y_a^k; never expands over n
// variables.
std::vector<MultiPoly> specialize(const SymmetricForm& form, const Composition& m);

// Same conditions with the C_Y carried as extra symbolic variables
// (v + P(r) variables total).
std::vector<MultiPoly> specialize_symbolic(unsigned r, const Composition& m);

// The divided-difference tower over v first-level entries.  Keys are
// strictly increasing index subsets of {0..v-1}; level k entries are
// homogeneous of degree r-k in the y-variables.
struct DividedTower {
    unsigned v = 0;
    unsigned yvars = 0;  // leading y-variable count of the underlying ring
    std::map<std::vector<unsigned>, MultiPoly> entries;

    const MultiPoly& at(const std::vector<unsigned>& subset) const;
};

// Build all levels by the recurrence
//   P^(i_1..i_k) = (P^(i_1..i_{k-1}) - P^(i_2..i_k)) / (y_{i_1} - y_{i_k}),
// verifying every division exact.  `yvars` says how many leading
// variables of the ring are y-variables (the rest are coefficient
// variables and ride along untouched).
DividedTower build_tower(const std::vector<MultiPoly>& firsts, unsigned yvars);

// The level sums sum_i P^(i), sum_{i<j} P^(ij), ..., of degrees
// r-1, r-2, ..., r-v.
std::vector<MultiPoly> level_sums(const DividedTower& t);

} // namespace symdisc
