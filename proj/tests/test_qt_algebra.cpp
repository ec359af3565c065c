#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pbmac/io.hpp"
#include "test_support.hpp"

using namespace pbmac;
using namespace pbmac::testing;

TEST_CASE("scalar arithmetic on small rational functions") {
    const QtScalar a = frac(omqt(0, 1), omqt(1, 1));            // (1-t)/(1-qt)
    const QtScalar b = QtScalar::t() * a;                       // t(1-t)/(1-qt)
    const QtScalar sum = a + b;
    CHECK(sum == frac(omqt(0, 1) * (QtPoly::one() + QtPoly::var_t()), omqt(1, 1)));
    CHECK(sum == frac(QtPoly::one() - QtPoly::term(1, 0, 2), omqt(1, 1)));

    CHECK(a * a.inverse() == QtScalar::one());
    CHECK(frac(omqt(0, 1), omqt(1, 1)) * frac(omqt(1, 1), omqt(0, 1)) == QtScalar::one());

    std::mt19937 rng(3);
    const QtScalar x = random_scalar(rng);
    CHECK((x - x).is_zero());
    CHECK((x - x) == QtScalar::zero());
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_WITH_AS(QtScalar::one() / QtScalar::zero(), "zero divisor", std::domain_error);
    CHECK_THROWS_AS(QtScalar::zero().inverse(), std::domain_error);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(17);
    for (int k = 0; k < 60; ++k) {
        const QtScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == QtScalar::one());
    }
}

TEST_CASE("canonical form: equality iff cross-multiplication agrees") {
    std::mt19937 rng(5);
    for (int k = 0; k < 60; ++k) {
        const QtScalar a = random_scalar(rng), b = random_scalar(rng);
        const bool cross = (a.num() * b.den()) == (b.num() * a.den());
        CHECK((a == b) == cross);
        // Common factors reduce away.
        QtPoly g = random_qt_poly(rng, 2, 2);
        if (g.is_zero()) continue;
        CHECK(QtScalar(a.num() * g, a.den() * g) == a);
    }
}

TEST_CASE("canonical invariants: reduced, sign-normalized, zero as 0/1") {
    std::mt19937 rng(11);
    for (int k = 0; k < 40; ++k) {
        const QtScalar a = random_scalar(rng);
        CHECK(qt_gcd(a.num(), a.den()).is_one());
        CHECK(a.den().leading_coeff() > 0);
    }
    const QtScalar z = frac(QtPoly(), omqt(1, 1));
    CHECK(z.num().is_zero());
    CHECK(z.den().is_one());
}

TEST_CASE("invert_qt clears q -> 1/q, t -> 1/t") {
    const QtScalar one_minus_t_scalar(omqt(0, 1));
    CHECK(one_minus_t_scalar.invert_qt() ==
          frac(QtPoly::var_t() - QtPoly::one(), QtPoly::var_t()));
    CHECK(QtScalar::one().invert_qt() == QtScalar::one());
    CHECK(frac(QtPoly::one(), omqt(1, 1)).invert_qt() ==
          frac(QtPoly::term(1, 1, 1), QtPoly::term(1, 1, 1) - QtPoly::one()));
}

TEST_CASE("invert_qt is an involution") {
    std::mt19937 rng(23);
    for (int k = 0; k < 50; ++k) {
        const QtScalar a = random_scalar(rng);
        CHECK(a.invert_qt().invert_qt() == a);
    }
}

TEST_CASE("specialization") {
    using S = QtScalar::Subst;
    CHECK(frac(omqt(0, 1), omqt(1, 2)).specialize(S::Zero, S::Keep) == QtScalar(omqt(0, 1)));
    CHECK(frac(QtPoly::var_t(), omqt(1, 1)).specialize(S::Zero, S::Zero) == QtScalar::zero());
    CHECK_THROWS_WITH_AS(frac(QtPoly::one(), QtPoly::var_q()).specialize(S::Zero, S::Keep),
                         "pole at specialization", std::domain_error);
}

TEST_CASE("polynomial arithmetic") {
    const XPolynomial x1 = XPolynomial::variable(3, 1);
    const XPolynomial x2 = XPolynomial::variable(3, 2);
    CHECK(x1 * x2 == x_monomial({1, 1, 0}));
    CHECK((x1 - x1).is_zero());
    CHECK_THROWS_AS(x1 + XPolynomial::variable(2, 1), std::invalid_argument);

    std::mt19937 rng(9);
    const XPolynomial f = random_polynomial(rng, 3, 3, 5);
    CHECK(f - f == XPolynomial::zero(3));
}

TEST_CASE("variable swaps") {
    CHECK(x_monomial({2, 1, 0}).swap_vars(1) == x_monomial({1, 2, 0}));
    CHECK(x_monomial({1, 1, 0}).swap_vars(1) == x_monomial({1, 1, 0}));
    CHECK_THROWS_AS(x_monomial({1, 1}).swap_vars(2), std::out_of_range);

    std::mt19937 rng(31);
    for (int k = 0; k < 20; ++k) {
        const XPolynomial f = random_polynomial(rng, 3, 4, 6);
        for (int i = 1; i < 3; ++i) CHECK(f.swap_vars(i).swap_vars(i) == f);
    }
}

TEST_CASE("symmetry detection") {
    CHECK(x_monomial({1, 1}).symmetric_in(1));
    CHECK_FALSE(x_monomial({1, 0}).symmetric_in(1));
}

TEST_CASE("divided difference") {
    const int n = 2;
    CHECK(XPolynomial::variable(n, 1).divided_difference(1) == XPolynomial::one(n));
    CHECK(x_monomial({2, 0}).divided_difference(1) ==
          x_monomial({1, 0}) + x_monomial({0, 1}));
    CHECK(x_monomial({1, 1}).divided_difference(1).is_zero());

    std::mt19937 rng(41);
    for (int k = 0; k < 30; ++k) {
        const XPolynomial f = random_polynomial(rng, 4, 5, 6);
        for (int i = 1; i < 4; ++i)
            CHECK(f.divided_difference(i).divided_difference(i).is_zero());
    }
}

TEST_CASE("substitution") {
    const int n = 3;
    const XPolynomial x1 = XPolynomial::variable(n, 1);
    std::vector<VarImage> imgs(n);
    for (int i = 0; i < n; ++i) imgs[i] = {QtScalar::one(), i + 1};

    imgs[0] = {QtScalar::q_power(-1), 3};
    CHECK(x1.substitute(imgs) ==
          x_monomial({0, 0, 1}, QtScalar::q_power(-1)));

    std::vector<VarImage> identity(n);
    for (int i = 0; i < n; ++i) identity[i] = {QtScalar::one(), i + 1};
    std::mt19937 rng(53);
    const XPolynomial f = random_polynomial(rng, n, 3, 5);
    CHECK(f.substitute(identity) == f);

    std::vector<VarImage> swap12 = identity;
    swap12[0].target = 2;
    swap12[1].target = 1;
    CHECK((x1 * XPolynomial::variable(n, 2)).substitute(swap12) ==
          x1 * XPolynomial::variable(n, 2));
}

TEST_CASE("coefficient extraction") {
    const XPolynomial f = x_monomial({1, 0, 2});
    CHECK(f.coefficient({1, 0, 2}) == QtScalar::one());
    CHECK(f.coefficient({0, 1, 0}).is_zero());
}

TEST_CASE("canonical JSON is stable and ordered") {
    XPolynomial f(2);
    f.add_term({0, 2}, frac(omqt(0, 1), omqt(1, 1)));
    f.add_term({1, 0}, QtScalar(2));
    const std::string once = to_json(f);
    CHECK(once == to_json(f));
    // Leading (graded-lex largest) term first.
    CHECK(once.find("[0,2]") < once.find("[1,0]"));
}
