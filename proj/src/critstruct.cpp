#include "symdisc/critstruct.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace symdisc {

unsigned Composition::n() const {
    return std::accumulate(parts.begin(), parts.end(), 0u);
}

unsigned Composition::zero_count() const {
    return static_cast<unsigned>(std::count(parts.begin(), parts.end(), 0u));
}

std::vector<unsigned> Composition::nonzero_parts() const {
    std::vector<unsigned> nz;
    for (unsigned p : parts)
        if (p > 0) nz.push_back(p);
    return nz;
}

// Specialized power sum: p_k collapses to sum_a M_a y_a^k.
static MultiPoly collapsed_power_sum(const std::vector<unsigned>& mz, unsigned nvars,
                                     unsigned k) {
    MultiPoly p(nvars);
    for (unsigned a = 0; a < mz.size(); ++a)
        p += Rational(mz[a]) * MultiPoly::variable(nvars, a, k);
    return p;
}

// Shared body of specialize/specialize_symbolic.  `coeff_of` supplies C_Y
// as a polynomial of the target ring (a constant in numeric mode, a
// variable in symbolic mode).
static std::vector<MultiPoly> specialize_impl(
    unsigned r, const Composition& m, unsigned nvars,
    const std::function<MultiPoly(size_t)>& coeff_of) {
    auto nz = m.nonzero_parts();
    if (nz.empty()) throw DomainError("all-zero composition");
    unsigned v = static_cast<unsigned>(nz.size());
    auto partitions = enumerate_partitions(r);

    std::vector<MultiPoly> out(v, MultiPoly(nvars));
    for (unsigned b = 0; b < v; ++b) {
        // dS/dx at a block-b coordinate: each part Y_j of each partition
        // differentiates to Y_j y_b^{Y_j - 1} times the collapsed cofactor.
        for (size_t yi = 0; yi < partitions.size(); ++yi) {
            const auto& y = partitions[yi];
            MultiPoly c = coeff_of(yi);
            if (c.is_zero()) continue;
            MultiPoly contrib(nvars);
            for (size_t j = 0; j < y.parts.size(); ++j) {
                MultiPoly t = Rational(y.parts[j]) *
                              MultiPoly::variable(nvars, b, y.parts[j] - 1);
                for (size_t j2 = 0; j2 < y.parts.size(); ++j2)
                    if (j2 != j) t = t * collapsed_power_sum(nz, nvars, y.parts[j2]);
                contrib += t;
            }
            out[b] += c * contrib;
        }
    }
    return out;
}

std::vector<MultiPoly> specialize(const SymmetricForm& form, const Composition& m) {
    if (m.n() != form.n) throw DomainError("composition does not sum to n");
    auto partitions = enumerate_partitions(form.r);
    unsigned v = static_cast<unsigned>(m.nonzero_parts().size());
    return specialize_impl(form.r, m, v, [&](size_t yi) {
        return MultiPoly::constant(v, form.coeff(partitions[yi]));
    });
}

std::vector<MultiPoly> specialize_symbolic(unsigned r, const Composition& m) {
    unsigned v = static_cast<unsigned>(m.nonzero_parts().size());
    unsigned p = static_cast<unsigned>(enumerate_partitions(r).size());
    unsigned nvars = v + p;
    return specialize_impl(r, m, nvars, [&](size_t yi) {
        return MultiPoly::variable(nvars, v + static_cast<unsigned>(yi));
    });
}

const MultiPoly& DividedTower::at(const std::vector<unsigned>& subset) const {
    auto it = entries.find(subset);
    if (it == entries.end()) throw DomainError("tower entry missing");
    return it->second;
}

DividedTower build_tower(const std::vector<MultiPoly>& firsts, unsigned yvars) {
    DividedTower t;
    t.v = static_cast<unsigned>(firsts.size());
    t.yvars = yvars;
    if (t.v == 0) throw DomainError("empty tower");
    unsigned nvars = firsts[0].nvars();
    for (unsigned i = 0; i < t.v; ++i) t.entries[{i}] = firsts[i];
    // Level k from level k-1: contiguous-subset recurrence extended to all
    // increasing subsets (entries are symmetric in their index subset).
    std::vector<std::vector<unsigned>> prev;
    for (unsigned i = 0; i < t.v; ++i) prev.push_back({i});
    for (unsigned k = 2; k <= t.v; ++k) {
        std::vector<std::vector<unsigned>> cur;
        // All increasing k-subsets of {0..v-1}.
        std::vector<unsigned> s(k);
        std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned start) {
            if (pos == k) { cur.push_back(s); return; }
            for (unsigned i = start; i < t.v; ++i) { s[pos] = i; rec(pos + 1, i + 1); }
        };
        rec(0, 0);
        for (const auto& sub : cur) {
            std::vector<unsigned> head(sub.begin(), sub.end() - 1);
            std::vector<unsigned> tail(sub.begin() + 1, sub.end());
            MultiPoly diff = t.at(head) - t.at(tail);
            MultiPoly den = MultiPoly::variable(nvars, sub.front()) -
                            MultiPoly::variable(nvars, sub.back());
            t.entries[sub] = exact_divide(diff, den);
        }
        prev = std::move(cur);
    }
    return t;
}

std::vector<MultiPoly> level_sums(const DividedTower& t) {
    unsigned nvars = t.entries.begin()->second.nvars();
    std::vector<MultiPoly> sums(t.v, MultiPoly(nvars));
    for (const auto& [sub, p] : t.entries) sums[sub.size() - 1] += p;
    return sums;
}

} // namespace symdisc
