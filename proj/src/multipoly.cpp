#include "symdisc/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace symdisc {

// ---------------------------------------------------------------------------
// Rational helpers
// ---------------------------------------------------------------------------

Rational parse_rational(const std::string& text) {
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_int(text)) throw ParseError("not a rational literal: '" + text + "'");
        return Rational(mpz_class(text));
    }
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw ParseError("not a rational literal: '" + text + "'");
    mpz_class d(den);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    Rational q(mpz_class(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

Rational rational_pow(const Rational& q, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
    return r; // q canonical => q^e canonical
}

Rational rational_pow_signed(const Rational& q, long e) {
    if (e >= 0) return rational_pow(q, static_cast<unsigned long>(e));
    if (q == 0) throw DomainError("negative power of zero");
    return rational_pow(Rational(1) / q, static_cast<unsigned long>(-e));
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

unsigned long to_ulong_exact(const Rational& q) {
    if (q.get_den() != 1 || q < 0 || !q.get_num().fits_ulong_p())
        throw NonIntegralExponent("expected a non-negative integer, got " + to_string(q));
    return q.get_num().get_ui();
}

// ---------------------------------------------------------------------------
// Term ordering
// ---------------------------------------------------------------------------

static unsigned expo_degree(const Expo& e) {
    return std::accumulate(e.begin(), e.end(), 0u);
}

bool GradedLexDesc::operator()(const Expo& a, const Expo& b) const {
    unsigned da = expo_degree(a), db = expo_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

// ---------------------------------------------------------------------------
// Construction and queries
// ---------------------------------------------------------------------------

MultiPoly MultiPoly::constant(unsigned nvars, const Rational& c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_[Expo(nvars, 0)] = c;
    return p;
}

MultiPoly MultiPoly::variable(unsigned nvars, unsigned index, unsigned power) {
    if (index >= nvars) throw DomainError("variable index out of range");
    MultiPoly p(nvars);
    Expo e(nvars, 0);
    e[index] = power;
    if (power == 0) {
        p.terms_[Expo(nvars, 0)] = 1;
    } else {
        p.terms_[e] = 1;
    }
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && expo_degree(terms_.begin()->first) == 0);
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(expo_degree(terms_.begin()->first));
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = expo_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (expo_degree(e) != d) return false;
    return true;
}

int MultiPoly::degree_in_prefix(unsigned k) const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (unsigned i = 0; i < k && i < e.size(); ++i) s += static_cast<int>(e[i]);
        d = std::max(d, s);
    }
    return d;
}

Rational MultiPoly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::set_coeff(const Expo& e, const Rational& c) {
    if (e.size() != nvars_) throw VarCountMismatch("exponent vector length != nvars");
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = c;
}

Rational MultiPoly::constant_value() const {
    if (!is_constant()) throw DomainError("polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

// ---------------------------------------------------------------------------
// Arithmetic
// ---------------------------------------------------------------------------

static void check_same_ring(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() != b.nvars())
        throw VarCountMismatch("operands have " + std::to_string(a.nvars()) + " and " +
                               std::to_string(b.nvars()) + " variables");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    check_same_ring(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    check_same_ring(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
    check_same_ring(lhs, rhs);
    MultiPoly r(lhs.nvars_);
    Expo e(lhs.nvars_);
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (unsigned i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_.emplace(e, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

MultiPoly operator*(const Rational& c, MultiPoly p) {
    if (c == 0) return MultiPoly(p.nvars_);
    for (auto& [e, v] : p.terms_) v *= c;
    return p;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
    return nvars_ == rhs.nvars_ && terms_ == rhs.terms_;
}

MultiPoly MultiPoly::pow(unsigned long e) const {
    MultiPoly base = *this;
    MultiPoly acc = MultiPoly::constant(nvars_, 1);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

MultiPoly MultiPoly::derivative(unsigned var) const {
    if (var >= nvars_) throw DomainError("variable index out of range");
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Expo d = e;
        d[var] -= 1;
        r.terms_[d] = c * e[var];
    }
    return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    if (point.size() != nvars_)
        throw VarCountMismatch("evaluation point has wrong length");
    // Memoize per-variable power ladders; exponents repeat heavily.
    std::vector<std::vector<Rational>> powers(nvars_, {Rational(1)});
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (unsigned i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            auto& lad = powers[i];
            while (lad.size() <= e[i]) lad.push_back(lad.back() * point[i]);
            t *= lad[e[i]];
        }
        total += t;
    }
    return total;
}

MultiPoly MultiPoly::substitute(const std::map<unsigned, MultiPoly>& assign) const {
    unsigned target = nvars_;
    for (const auto& [v, rep] : assign) {
        if (v >= nvars_) throw DomainError("substitution for nonexistent variable");
        target = rep.nvars();
    }
    for (const auto& [v, rep] : assign)
        if (rep.nvars() != target)
            throw VarCountMismatch("replacement polynomials live in different rings");
    if (target != nvars_) {
        // All variables must then be assigned explicitly.
        for (const auto& [e, c] : terms_)
            for (unsigned i = 0; i < nvars_; ++i)
                if (e[i] > 0 && !assign.count(i))
                    throw VarCountMismatch("unassigned variable in cross-ring substitution");
    }
    // Power ladders for assigned variables, computed on demand.
    std::map<unsigned, std::vector<MultiPoly>> ladders;
    MultiPoly total(target);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = MultiPoly::constant(target, c);
        for (unsigned i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            auto it = assign.find(i);
            if (it == assign.end()) {
                t = t * MultiPoly::variable(target, i, e[i]);
            } else {
                auto& lad = ladders[i];
                if (lad.empty()) lad = {MultiPoly::constant(target, 1)};
                while (lad.size() <= e[i]) lad.push_back(lad.back() * it->second);
                t = t * lad[e[i]];
            }
        }
        total += t;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    if (names.size() != nvars_)
        throw VarCountMismatch("need one name per variable");
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string vars;
        for (unsigned i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names[i];
            if (e[i] > 1) vars += "^" + std::to_string(e[i]);
        }
        if (vars.empty()) {
            out << to_string(a);
        } else if (a == 1) {
            out << vars;
        } else {
            out << to_string(a) << "*" << vars;
        }
    }
    return out.str();
}

std::string MultiPoly::str() const {
    std::vector<std::string> names;
    for (unsigned i = 0; i < nvars_; ++i) names.push_back("x" + std::to_string(i));
    return str(names);
}

// ---------------------------------------------------------------------------
// Exact division, content, determinants
// ---------------------------------------------------------------------------

MultiPoly exact_divide(const MultiPoly& num, const MultiPoly& den) {
    check_same_ring(num, den);
    if (den.is_zero()) throw InexactDivision("division by the zero polynomial");
    if (den.is_constant()) return (Rational(1) / den.constant_value()) * num;
    MultiPoly q(num.nvars());
    MultiPoly rem = num;
    const auto& dlead = *den.terms().begin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().begin();
        Expo diff(rem.nvars());
        for (unsigned i = 0; i < diff.size(); ++i) {
            if (rlead.first[i] < dlead.first[i])
                throw InexactDivision("leading term not divisible");
            diff[i] = rlead.first[i] - dlead.first[i];
        }
        MultiPoly t(num.nvars());
        t.set_coeff(diff, rlead.second / dlead.second);
        q += t;
        rem -= t * den;
    }
    return q;
}

std::pair<Rational, MultiPoly> primitive_part(const MultiPoly& p) {
    if (p.is_zero()) throw DomainError("primitive part of zero");
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational scale(num_gcd, den_lcm);
    scale.canonicalize();
    if (p.terms().begin()->second < 0) scale = -scale;
    MultiPoly prim = (Rational(1) / scale) * p;
    return {scale, prim};
}

MultiPoly det_polymatrix(const std::vector<std::vector<MultiPoly>>& m) {
    size_t n = m.size();
    if (n == 0) throw DomainError("empty matrix");
    unsigned nv = m[0][0].nvars();
    for (const auto& row : m) {
        if (row.size() != n) throw DomainError("matrix is not square");
        for (const auto& p : row)
            if (p.nvars() != nv) throw VarCountMismatch("mixed rings in matrix");
    }
    // Fast path: all entries constant.
    bool all_const = true;
    for (const auto& row : m)
        for (const auto& p : row)
            if (!p.is_constant()) { all_const = false; break; }
    if (all_const) {
        std::vector<std::vector<Rational>> num(n, std::vector<Rational>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) num[i][j] = m[i][j].constant_value();
        return MultiPoly::constant(nv, det_rational(std::move(num)));
    }
    // Bareiss fraction-free elimination.
    auto a = m;
    int sign = 1;
    MultiPoly prev = MultiPoly::constant(nv, 1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && a[piv][k].is_zero()) ++piv;
            if (piv == n) return MultiPoly(nv);
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = exact_divide(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
        prev = a[k][k];
    }
    MultiPoly det = a[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

Rational det_rational(std::vector<std::vector<Rational>> m) {
    size_t n = m.size();
    if (n == 0) throw DomainError("empty matrix");
    // Clear denominators row by row, then run integer Bareiss elimination;
    // intermediate entries stay bounded (they are minors of the scaled
    // matrix) and every division is exact.
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    Rational row_scale = 1;
    for (size_t i = 0; i < n; ++i) {
        Integer lcm = 1;
        for (size_t j = 0; j < n; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m[i][j].get_den().get_mpz_t());
        row_scale *= Rational(lcm);
        for (size_t j = 0; j < n; ++j) {
            Rational v = m[i][j] * Rational(lcm);
            a[i][j] = v.get_num();
        }
    }
    int sign = 1;
    Integer prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Integer t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rational det = Rational(a[n - 1][n - 1]) / row_scale;
    return sign < 0 ? -det : det;
}

// ---------------------------------------------------------------------------
// Variable-prefix utilities
// ---------------------------------------------------------------------------

MultiPoly coeff_of_prefix(const MultiPoly& p, const Expo& prefix) {
    unsigned k = static_cast<unsigned>(prefix.size());
    if (k > p.nvars()) throw VarCountMismatch("prefix longer than variable list");
    MultiPoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        bool match = true;
        for (unsigned i = 0; i < k; ++i)
            if (e[i] != prefix[i]) { match = false; break; }
        if (!match) continue;
        Expo rest = e;
        for (unsigned i = 0; i < k; ++i) rest[i] = 0;
        r.set_coeff(rest, r.coeff(rest) + c);
    }
    return r;
}

MultiPoly drop_prefix_vars(const MultiPoly& p, unsigned k) {
    if (k > p.nvars()) throw VarCountMismatch("dropping more variables than exist");
    MultiPoly r(p.nvars() - k);
    for (const auto& [e, c] : p.terms()) {
        for (unsigned i = 0; i < k; ++i)
            if (e[i] != 0)
                throw DomainError("dropped variable still occurs");
        r.set_coeff(Expo(e.begin() + k, e.end()), c);
    }
    return r;
}

MultiPoly prepend_vars(const MultiPoly& p, unsigned k) {
    MultiPoly r(p.nvars() + k);
    for (const auto& [e, c] : p.terms()) {
        Expo ne(p.nvars() + k, 0);
        std::copy(e.begin(), e.end(), ne.begin() + k);
        r.set_coeff(ne, c);
    }
    return r;
}

} // namespace symdisc
