#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symdisc/symforms.hpp"

using namespace symdisc;

namespace {

MultiPoly power_sum_poly(unsigned n, unsigned k) {
    MultiPoly p(n);
    for (unsigned i = 0; i < n; ++i) p += MultiPoly::variable(n, i, k);
    return p;
}

SymmetricForm generic_form(unsigned n, unsigned r) {
    SymmetricForm f;
    f.n = n;
    f.r = r;
    int c = 1;
    for (const auto& y : enumerate_partitions(r)) {
        Rational q(2 * c + 1, c);
        q.canonicalize();
        f.coeffs[y] = (c % 2 ? q : -q);
        ++c;
    }
    return f;
}

} // namespace

TEST_CASE("partition enumeration order") {
    auto p3 = enumerate_partitions(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0].key() == "3");
    CHECK(p3[1].key() == "2,1");
    CHECK(p3[2].key() == "1,1,1");

    auto p4 = enumerate_partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0].key() == "4");
    CHECK(p4[1].key() == "3,1");
    CHECK(p4[2].key() == "2,2");
    CHECK(p4[3].key() == "2,1,1");
    CHECK(p4[4].key() == "1,1,1,1");

    CHECK(enumerate_partitions(1).size() == 1);
    CHECK(enumerate_partitions(5).size() == 7);
    CHECK(enumerate_partitions(8).size() == 22);
}

TEST_CASE("partition parsing and keys") {
    CHECK(Partition::parse("2,1,1").key() == "2,1,1");
    CHECK(Partition::parse("211").key() == "2,1,1");
    CHECK(Partition::parse("4").weight() == 4);
    CHECK(Partition::parse("3,1").compact_key() == "31");
    CHECK_THROWS_AS(Partition::parse("1,2"), ParseError);   // increasing
    CHECK_THROWS_AS(Partition::parse("0,1"), ParseError);   // zero part
    CHECK_THROWS_AS(Partition::parse(""), ParseError);
    CHECK_THROWS_AS(Partition::parse("a"), ParseError);
}

TEST_CASE("coefficient names") {
    CHECK(coefficient_names(3) == std::vector<std::string>{"C3", "C21", "C111"});
    CHECK(coefficient_names(4) ==
          std::vector<std::string>{"C4", "C31", "C22", "C211", "C1111"});
}

TEST_CASE("expansion in the power-sum basis") {
    SymmetricForm f;
    f.n = 2;
    f.r = 3;
    Rational c3(5, 3), c21(-2), c111(7, 4);
    f.coeffs[Partition::parse("3")] = c3;
    f.coeffs[Partition::parse("2,1")] = c21;
    f.coeffs[Partition::parse("1,1,1")] = c111;
    MultiPoly expected = c3 * power_sum_poly(2, 3)
                       + c21 * (power_sum_poly(2, 2) * power_sum_poly(2, 1))
                       + c111 * power_sum_poly(2, 1).pow(3);
    CHECK(expand(f) == expected);
    CHECK(expand(f).is_homogeneous());
    CHECK(expand(f).total_degree() == 3);
}

TEST_CASE("expansion is symmetric under variable swap") {
    SymmetricForm f = generic_form(3, 4);
    MultiPoly s = expand(f);
    MultiPoly x0 = MultiPoly::variable(3, 0);
    MultiPoly x1 = MultiPoly::variable(3, 1);
    CHECK(s.substitute({{0, x1}, {1, x0}}) == s);
}

TEST_CASE("gradient satisfies the Euler identity") {
    for (unsigned n : {2u, 3u}) {
        for (unsigned r : {2u, 3u, 4u}) {
            SymmetricForm f = generic_form(n, r);
            auto g = gradient(f);
            REQUIRE(g.size() == n);
            MultiPoly acc(n);
            for (unsigned i = 0; i < n; ++i)
                acc += MultiPoly::variable(n, i) * g[i];
            CHECK(acc == Rational(r) * expand(f));
        }
    }
}

TEST_CASE("gradient components factor through one variable") {
    // dS/dx_i = sum_k W_k x_i^(r-1-k) with symmetric W_k and W_0 = r C_(r).
    for (unsigned n : {2u, 3u, 4u}) {
        for (unsigned r : {2u, 3u, 4u}) {
            SymmetricForm f = generic_form(n, r);
            auto dec = w_decompose(f);
            REQUIRE(dec.w.size() == r);
            CHECK(dec.w[0] == MultiPoly::constant(n, Rational(r) * f.coeff(enumerate_partitions(r)[0])));
            auto g = gradient(f);
            for (unsigned i = 0; i < n; ++i) {
                MultiPoly acc(n);
                for (unsigned k = 0; k < r; ++k)
                    acc += dec.w[k] * MultiPoly::variable(n, i).pow(r - 1 - k);
                CHECK(acc == g[i]);
            }
        }
    }
}

TEST_CASE("missing coefficients read as zero") {
    SymmetricForm f;
    f.n = 2;
    f.r = 3;
    f.coeffs[Partition::parse("3")] = 1;
    CHECK(f.coeff(Partition::parse("2,1")) == 0);
    CHECK(expand(f) == power_sum_poly(2, 3));
}
