#include "symdisc/oracle.hpp"

#include <map>
#include <mutex>

namespace symdisc {

namespace {

std::mutex calib_mutex;

// Fermat form x_1^d + ... + x_n^d in an n-variable ring.
MultiPoly fermat_form(unsigned n, unsigned d) {
    MultiPoly f(n);
    for (unsigned i = 0; i < n; ++i) f += MultiPoly::variable(n, i, d);
    return f;
}

// Raw (uncalibrated) gradient resultant via Sylvester, two variables.
MultiPoly sylvester_disc_raw(const MultiPoly& s, unsigned d) {
    return sylvester(s.derivative(0), s.derivative(1), d - 1, d - 1);
}

Rational sylvester_calibration(unsigned d) {
    static std::map<unsigned, Rational> cache;
    std::lock_guard<std::mutex> lock(calib_mutex);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    Rational c = sylvester_disc_raw(fermat_form(2, d), d).constant_value();
    if (c == 0) throw Error("Internal", "degenerate Fermat calibration");
    cache.emplace(d, c);
    return c;
}

} // namespace

MultiPoly sylvester_disc_2var(const MultiPoly& s) {
    int d = s.degree_in_prefix(2);
    if (d < 2) throw DomainError("need degree >= 2");
    MultiPoly raw = sylvester_disc_raw(s, static_cast<unsigned>(d));
    return (Rational(1) / sylvester_calibration(static_cast<unsigned>(d))) * raw;
}

GenericCubic3 GenericCubic3::from_poly(const MultiPoly& p) {
    if (p.nvars() != 3) throw VarCountMismatch("ternary cubic expected");
    auto pick = [&](unsigned a, unsigned b, unsigned c, unsigned mult) -> Rational {
        return p.coeff({a, b, c}) / mult;
    };
    GenericCubic3 g;
    g.s111 = pick(3, 0, 0, 1);
    g.s112 = pick(2, 1, 0, 3);
    g.s113 = pick(2, 0, 1, 3);
    g.s122 = pick(1, 2, 0, 3);
    g.s123 = pick(1, 1, 1, 6);
    g.s133 = pick(1, 0, 2, 3);
    g.s222 = pick(0, 3, 0, 1);
    g.s223 = pick(0, 2, 1, 3);
    g.s233 = pick(0, 1, 2, 3);
    g.s333 = pick(0, 0, 3, 1);
    return g;
}

MultiPoly GenericCubic3::to_poly() const {
    MultiPoly p(3);
    p.set_coeff({3, 0, 0}, s111);
    p.set_coeff({2, 1, 0}, 3 * s112);
    p.set_coeff({2, 0, 1}, 3 * s113);
    p.set_coeff({1, 2, 0}, 3 * s122);
    p.set_coeff({1, 1, 1}, 6 * s123);
    p.set_coeff({1, 0, 2}, 3 * s133);
    p.set_coeff({0, 3, 0}, s222);
    p.set_coeff({0, 2, 1}, 3 * s223);
    p.set_coeff({0, 1, 2}, 3 * s233);
    p.set_coeff({0, 0, 3}, s333);
    return p;
}

namespace {

Rational hessian_disc_raw(const GenericCubic3& c) {
    MultiPoly s = c.to_poly();
    // Hessian determinant, a ternary cubic itself.
    std::vector<std::vector<MultiPoly>> hess(3, std::vector<MultiPoly>(3, MultiPoly(3)));
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j) hess[i][j] = s.derivative(i).derivative(j);
    GenericCubic3 h = GenericCubic3::from_poly(det_polymatrix(hess));
    std::vector<std::vector<Rational>> m = {
        {c.s111, c.s112, c.s113, c.s122, c.s123, c.s133},
        {c.s112, c.s122, c.s123, c.s222, c.s223, c.s233},
        {c.s113, c.s123, c.s133, c.s223, c.s233, c.s333},
        {h.s111, h.s112, h.s113, h.s122, h.s123, h.s133},
        {h.s112, h.s122, h.s123, h.s222, h.s223, h.s233},
        {h.s113, h.s123, h.s133, h.s223, h.s233, h.s333},
    };
    return det_rational(std::move(m));
}

Rational hessian_calibration() {
    static Rational cached = 0;
    static bool have = false;
    std::lock_guard<std::mutex> lock(calib_mutex);
    if (!have) {
        GenericCubic3 fermat;
        fermat.s111 = fermat.s222 = fermat.s333 = 1;
        cached = hessian_disc_raw(fermat);
        if (cached == 0) throw Error("Internal", "degenerate Fermat calibration");
        have = true;
    }
    return cached;
}

Rational macaulay_disc_raw(const MultiPoly& s, size_t budget) {
    unsigned n = s.nvars();
    unsigned d = static_cast<unsigned>(s.total_degree());
    HomoSystem sys;
    sys.yvars = n;
    for (unsigned i = 0; i < n; ++i) {
        sys.polys.push_back(s.derivative(i));
        sys.degrees.push_back(d - 1);
    }
    return macaulay(sys, budget).constant_value();
}

Rational macaulay_calibration(unsigned n, unsigned d, size_t budget) {
    static std::map<std::pair<unsigned, unsigned>, Rational> cache;
    std::lock_guard<std::mutex> lock(calib_mutex);
    auto it = cache.find({n, d});
    if (it != cache.end()) return it->second;
    Rational c = macaulay_disc_raw(fermat_form(n, d), budget);
    if (c == 0) throw Error("Internal", "degenerate Fermat calibration");
    cache.emplace(std::make_pair(n, d), c);
    return c;
}

} // namespace

Rational hessian_disc_3var(const GenericCubic3& c) {
    return hessian_disc_raw(c) / hessian_calibration();
}

Rational gradient_macaulay_disc(const MultiPoly& s, size_t budget) {
    unsigned n = s.nvars();
    if (n < 2 || n > 4) throw DomainError("oracle covers 2 <= n <= 4");
    if (s.total_degree() < 2 || !s.is_homogeneous())
        throw DomainError("need a homogeneous form of degree >= 2");
    unsigned d = static_cast<unsigned>(s.total_degree());
    return macaulay_disc_raw(s, budget) / macaulay_calibration(n, d, budget);
}

} // namespace symdisc
