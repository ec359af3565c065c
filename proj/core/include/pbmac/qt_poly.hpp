#pragma once

/*
 * qt_poly.hpp
 * -----------
 * Integer polynomials in the two parameters q and t.
 *
 * A QtPoly is a sparse map from exponent pairs (a, b) to arbitrary-precision
 * integer coefficients, representing sum c * q^a * t^b.  Exponents are
 * non-negative and stored coefficients are never zero.  Terms are kept in
 * graded lexicographic order on (a, b): total degree first, then a, then b.
 *
 * These polynomials are the numerator/denominator building blocks of the
 * rational coefficient field Q(q, t); see qt_scalar.hpp.
 */

#include <map>
#include <string>

#include "pbmac/bigint.hpp"

namespace pbmac {

struct QtExp {
    int q = 0;
    int t = 0;
    friend bool operator==(const QtExp&, const QtExp&) = default;
};

// Graded-lex: total degree, then q-exponent, then t-exponent.
struct QtExpLess {
    bool operator()(const QtExp& a, const QtExp& b) const {
        const int da = a.q + a.t, db = b.q + b.t;
        if (da != db) return da < db;
        if (a.q != b.q) return a.q < b.q;
        return a.t < b.t;
    }
};

class QtPoly {
public:
    using TermMap = std::map<QtExp, BigInt, QtExpLess>;

    QtPoly() = default;

    static QtPoly constant(BigInt c);
    static QtPoly one() { return constant(1); }
    static QtPoly term(BigInt c, int q_exp, int t_exp);
    static QtPoly var_q() { return term(1, 1, 0); }
    static QtPoly var_t() { return term(1, 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    // Single term c*q^a*t^b (and nonzero).
    bool is_monomial() const { return terms_.size() == 1; }

    const TermMap& terms() const { return terms_; }
    int degree_q() const;
    int degree_t() const;

    // Coefficient of the graded-lex largest term; zero polynomial -> 0.
    BigInt leading_coeff() const;

    void add_term(const QtExp& e, const BigInt& c);

    QtPoly operator-() const;
    friend QtPoly operator+(const QtPoly& a, const QtPoly& b);
    friend QtPoly operator-(const QtPoly& a, const QtPoly& b);
    friend QtPoly operator*(const QtPoly& a, const QtPoly& b);
    friend bool operator==(const QtPoly&, const QtPoly&) = default;

    // Substitute 0 or 1 for a parameter (Keep leaves it alone).
    enum class Subst { Keep, Zero, One };
    QtPoly substitute(Subst q_sub, Subst t_sub) const;

    // q^(A-a) t^(B-b) mirror of every term, with A, B at least the degrees.
    // Used to clear denominators after q -> 1/q, t -> 1/t.
    QtPoly mirrored(int q_deg, int t_deg) const;

private:
    TermMap terms_;
};

// GCD over Z[q,t], computed by a primitive pseudo-remainder sequence with q
// as the outer variable.  Result has positive graded-lex leading coefficient;
// gcd(0, 0) = 0.
QtPoly qt_gcd(const QtPoly& a, const QtPoly& b);

// Exact quotient a / b; throws std::domain_error if b is zero or the
// division leaves a remainder.
QtPoly qt_exact_div(const QtPoly& a, const QtPoly& b);

}  // namespace pbmac
