#include "symdisc/symforms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace symdisc {

unsigned Partition::weight() const {
    return std::accumulate(parts.begin(), parts.end(), 0u);
}

std::string Partition::key() const {
    std::string s;
    for (unsigned p : parts) {
        if (!s.empty()) s += ",";
        s += std::to_string(p);
    }
    return s;
}

std::string Partition::compact_key() const {
    bool digits = std::all_of(parts.begin(), parts.end(), [](unsigned p) { return p < 10; });
    std::string s;
    for (unsigned p : parts) {
        if (!digits && !s.empty()) s += "_";
        s += std::to_string(p);
    }
    return s;
}

Partition Partition::parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty partition key");
    std::vector<unsigned> parts;
    if (text.find(',') != std::string::npos) {
        std::istringstream in(text);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) {
                    return std::isdigit(static_cast<unsigned char>(c));
                }))
                throw ParseError("bad partition key '" + text + "'");
            parts.push_back(static_cast<unsigned>(std::stoul(tok)));
        }
    } else {
        // Compact digit form: one part per character.
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("bad partition key '" + text + "'");
            parts.push_back(static_cast<unsigned>(c - '0'));
        }
    }
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == 0) throw ParseError("partition parts must be positive in '" + text + "'");
        if (i > 0 && parts[i] > parts[i - 1])
            throw ParseError("partition parts must be non-increasing in '" + text + "'");
    }
    return Partition{parts};
}

std::vector<Partition> enumerate_partitions(unsigned r) {
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    // Depth-first with non-increasing parts produces lexicographically
    // descending order: (r), (r-1,1), ..., (1,...,1).
    auto rec = [&](auto&& self, unsigned rem, unsigned maxpart) -> void {
        if (rem == 0) {
            out.push_back(Partition{cur});
            return;
        }
        for (unsigned p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, r, r);
    return out;
}

std::vector<std::string> coefficient_names(unsigned r) {
    std::vector<std::string> names;
    for (const auto& y : enumerate_partitions(r)) names.push_back("C" + y.compact_key());
    return names;
}

Rational SymmetricForm::coeff(const Partition& y) const {
    auto it = coeffs.find(y);
    return it == coeffs.end() ? Rational(0) : it->second;
}

// p_k = x_1^k + ... + x_n^k in the n-variable monomial ring.
static MultiPoly power_sum(unsigned n, unsigned k) {
    MultiPoly p(n);
    for (unsigned i = 0; i < n; ++i) p += MultiPoly::variable(n, i, k);
    return p;
}

MultiPoly expand(const SymmetricForm& s) {
    MultiPoly total(s.n);
    for (const auto& [y, c] : s.coeffs) {
        if (y.weight() != s.r) throw DomainError("partition weight != form degree");
        MultiPoly term = MultiPoly::constant(s.n, c);
        for (unsigned part : y.parts) term = term * power_sum(s.n, part);
        total += term;
    }
    return total;
}

std::vector<MultiPoly> gradient(const SymmetricForm& s) {
    MultiPoly f = expand(s);
    std::vector<MultiPoly> g;
    for (unsigned i = 0; i < s.n; ++i) g.push_back(f.derivative(i));
    return g;
}

GradientDecomposition w_decompose(const SymmetricForm& s) {
    GradientDecomposition d;
    d.n = s.n;
    d.r = s.r;
    d.w.assign(s.r, MultiPoly(s.n));
    // dS/dx_i collects, for each partition term and each part equal to
    // r - k, the part times the product of the remaining power sums; that
    // cofactor is independent of i and becomes W_k.
    for (const auto& [y, c] : s.coeffs) {
        if (y.weight() != s.r) throw DomainError("partition weight != form degree");
        for (size_t j = 0; j < y.parts.size(); ++j) {
            unsigned k = s.r - y.parts[j];
            MultiPoly cof = MultiPoly::constant(s.n, c * y.parts[j]);
            for (size_t j2 = 0; j2 < y.parts.size(); ++j2)
                if (j2 != j) cof = cof * power_sum(s.n, y.parts[j2]);
            d.w[k] += cof;
        }
    }
    return d;
}

} // namespace symdisc
