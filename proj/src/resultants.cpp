#include "symdisc/resultants.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace symdisc {

void HomoSystem::validate() const {
    if (polys.size() != degrees.size() || polys.size() != yvars)
        throw DomainError("system is not square");
    if (yvars == 0) throw DomainError("empty system");
    for (size_t i = 0; i < polys.size(); ++i) {
        if (polys[i].nvars() < yvars)
            throw VarCountMismatch("polynomial ring too small for the system");
        if (degrees[i] == 0) throw DomainError("zero declared degree");
        if (polys[i].degree_in_prefix(yvars) > static_cast<int>(degrees[i]))
            throw DomainError("polynomial exceeds its declared degree");
    }
}

unsigned long resultant_degree(const std::vector<unsigned>& degrees) {
    // prod(d) * sum(1/d) = sum over i of prod_{j != i} d_j.
    Integer total = 0;
    for (size_t i = 0; i < degrees.size(); ++i) {
        Integer t = 1;
        for (size_t j = 0; j < degrees.size(); ++j)
            if (j != i) t *= degrees[j];
        total += t;
    }
    if (!total.fits_ulong_p()) throw DomainError("resultant degree overflows");
    return total.get_ui();
}

// Coefficient list of a homogeneous bivariate form, descending in the
// first variable: index j holds the coefficient of y1^(d-j) y2^j.
static std::vector<MultiPoly> homo_coeff_list(const MultiPoly& f, unsigned d) {
    std::vector<MultiPoly> c;
    for (unsigned j = 0; j <= d; ++j) c.push_back(coeff_of_prefix(f, {d - j, j}));
    return c;
}

MultiPoly sylvester(const MultiPoly& f, const MultiPoly& g, unsigned df, unsigned dg) {
    if (f.nvars() != g.nvars()) throw VarCountMismatch("sylvester operands");
    if (f.nvars() < 2) throw VarCountMismatch("need at least two variables");
    unsigned nv = f.nvars();
    auto a = homo_coeff_list(f, df);
    auto b = homo_coeff_list(g, dg);
    unsigned N = df + dg;
    std::vector<std::vector<MultiPoly>> m(N, std::vector<MultiPoly>(N, MultiPoly(nv)));
    for (unsigned i = 0; i < dg; ++i)
        for (unsigned j = 0; j <= df; ++j) m[i][i + j] = a[j];
    for (unsigned i = 0; i < df; ++i)
        for (unsigned j = 0; j <= dg; ++j) m[dg + i][i + j] = b[j];
    return det_polymatrix(m);
}

MultiPoly sylvester(const MultiPoly& f, const MultiPoly& g) {
    int df = f.degree_in_prefix(2), dg = g.degree_in_prefix(2);
    if (df < 1 || dg < 1) throw DomainError("sylvester needs positive degrees");
    return sylvester(f, g, static_cast<unsigned>(df), static_cast<unsigned>(dg));
}

// Rename variables i <-> j (used to move the elimination pivot last).
static MultiPoly swap_vars(const MultiPoly& p, unsigned i, unsigned j) {
    if (i == j) return p;
    MultiPoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        Expo ne = e;
        std::swap(ne[i], ne[j]);
        r.set_coeff(ne, c);
    }
    return r;
}

ScaledPoly chain_resultant(const HomoSystem& sys) {
    sys.validate();
    unsigned v = sys.yvars;
    if (v > 3) throw DomainError("chain elimination implemented for v <= 3");
    MultiPoly raw(sys.polys[0].nvars());
    if (v == 1) {
        raw = coeff_of_prefix(sys.polys[0], {sys.degrees[0]});
    } else if (v == 2) {
        raw = sylvester(sys.polys[0], sys.polys[1], sys.degrees[0], sys.degrees[1]);
    } else {
        if (sys.degrees[2] != 1) throw DomainError("last polynomial must be linear");
        unsigned nv = sys.polys[0].nvars();
        MultiPoly L = sys.polys[2];
        std::vector<MultiPoly> a;
        for (unsigned i = 0; i < 3; ++i) a.push_back(coeff_of_prefix(L, {i == 0, i == 1, i == 2}));
        // Pivot: nonzero coefficient with the graded-lex largest leading
        // monomial; ties go to the smallest index.
        int pivot = -1;
        GradedLexDesc before;
        for (unsigned i = 0; i < 3; ++i) {
            if (a[i].is_zero()) continue;
            if (pivot < 0 ||
                before(a[i].terms().begin()->first, a[pivot].terms().begin()->first))
                pivot = static_cast<int>(i);
        }
        if (pivot < 0) throw ZeroLinearForm("linear form vanishes identically");
        // Move the pivot variable to slot 2, then parametrize the plane
        // a1*y1 + a2*y2 + a3*y3 = 0 as (y1, y2, y3) <- (a3 y1, a3 y2,
        // -a1 y1 - a2 y2); the Sylvester determinant then carries the
        // known extraneous factor a3^(d1*d2).
        MultiPoly f = swap_vars(sys.polys[0], static_cast<unsigned>(pivot), 2);
        MultiPoly g = swap_vars(sys.polys[1], static_cast<unsigned>(pivot), 2);
        std::swap(a[pivot], a[2]);
        std::map<unsigned, MultiPoly> plane = {
            {0, a[2] * MultiPoly::variable(nv, 0)},
            {1, a[2] * MultiPoly::variable(nv, 1)},
            {2, -(a[0] * MultiPoly::variable(nv, 0)) - a[1] * MultiPoly::variable(nv, 1)},
        };
        MultiPoly syl = sylvester(f.substitute(plane), g.substitute(plane),
                                  sys.degrees[0], sys.degrees[1]);
        raw = exact_divide(syl, a[2].pow(static_cast<unsigned long>(sys.degrees[0]) *
                                         sys.degrees[1]));
    }
    if (raw.is_zero()) return {Rational(0), raw};
    auto [scale, prim] = primitive_part(raw);
    return {scale, prim};
}

// All monomials of total degree d in v variables, deterministic order.
static std::vector<Expo> monomials_of_degree(unsigned v, unsigned d) {
    std::vector<Expo> out;
    Expo cur(v, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned rem) {
        if (pos + 1 == v) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (unsigned e = rem; e + 1 > 0; --e) { // descending: lex order
            cur[pos] = e;
            rec(pos + 1, rem - e);
        }
    };
    rec(0, d);
    return out;
}

MultiPoly macaulay(const HomoSystem& sys, size_t budget) {
    sys.validate();
    unsigned v = sys.yvars;
    if (v > 4) throw DomainError("macaulay implemented for v <= 4");
    unsigned nv = sys.polys[0].nvars();
    unsigned D = 1;
    for (unsigned d : sys.degrees) D += d - 1;
    auto mons = monomials_of_degree(v, D);
    if (mons.size() > budget)
        throw BudgetExceeded("Macaulay dimension " + std::to_string(mons.size()) +
                             " exceeds budget " + std::to_string(budget));
    std::map<Expo, size_t> col;
    for (size_t i = 0; i < mons.size(); ++i) col[mons[i]] = i;
    // Monomials divisible by x_i^{d_i} for two or more i index the
    // extraneous minor; this set does not depend on the ordering below.
    std::vector<bool> in_minor(mons.size());
    std::vector<size_t> minor_idx;
    for (size_t m = 0; m < mons.size(); ++m) {
        unsigned hits = 0;
        for (unsigned i = 0; i < v; ++i)
            if (mons[m][i] >= sys.degrees[i]) ++hits;
        if (hits >= 2) {
            in_minor[m] = true;
            minor_idx.push_back(m);
        }
    }
    std::vector<unsigned> order(v);
    std::iota(order.begin(), order.end(), 0u);
    std::vector<std::vector<unsigned>> orders;
    do {
        orders.push_back(order);
    } while (std::next_permutation(order.begin(), order.end()));
    for (const auto& ord : orders) {
        // Row for monomial m: pick the first index (in this ordering) whose
        // degree bound m covers, and multiply that polynomial by the
        // cofactor monomial.
        std::vector<std::vector<MultiPoly>> big(
            mons.size(), std::vector<MultiPoly>(mons.size(), MultiPoly(nv)));
        for (size_t m = 0; m < mons.size(); ++m) {
            unsigned pick = v;
            for (unsigned oi = 0; oi < v; ++oi)
                if (mons[m][ord[oi]] >= sys.degrees[ord[oi]]) { pick = ord[oi]; break; }
            // Degree D = sum(d_i - 1) + 1 guarantees some index qualifies.
            Expo shift = mons[m];
            shift[pick] -= sys.degrees[pick];
            for (const auto& [e, c] : sys.polys[pick].terms()) {
                Expo ye(v), rest(nv, 0);
                for (unsigned i = 0; i < v; ++i) ye[i] = e[i] + shift[i];
                for (unsigned i = v; i < nv; ++i) rest[i] = e[i];
                auto& cell = big[m][col.at(ye)];
                cell.set_coeff(rest, cell.coeff(rest) + c);
            }
        }
        std::vector<std::vector<MultiPoly>> small(
            minor_idx.size(), std::vector<MultiPoly>(minor_idx.size(), MultiPoly(nv)));
        for (size_t i = 0; i < minor_idx.size(); ++i)
            for (size_t j = 0; j < minor_idx.size(); ++j)
                small[i][j] = big[minor_idx[i]][minor_idx[j]];
        MultiPoly minor_det = minor_idx.empty() ? MultiPoly::constant(nv, 1)
                                                : det_polymatrix(small);
        if (minor_det.is_zero()) continue; // singular minor: next ordering
        MultiPoly full_det = det_polymatrix(big);
        return exact_divide(full_det, minor_det);
    }
    throw NeedsPerturbation("extraneous minor singular for every variable ordering");
}

} // namespace symdisc
