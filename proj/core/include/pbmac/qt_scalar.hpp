#pragma once

/*
 * qt_scalar.hpp
 * -------------
 * Exact elements of the rational function field Q(q, t).
 *
 * Every QtScalar is kept in canonical form: the fraction num/den is reduced
 * (their gcd is a unit), the denominator is nonzero and its graded-lex
 * leading coefficient is positive, and zero is stored as 0/1.  Equality of
 * canonical forms is plain structural equality.
 */

#include "pbmac/qt_poly.hpp"

namespace pbmac {

class QtScalar {
public:
    using Subst = QtPoly::Subst;

    QtScalar() : num_(), den_(QtPoly::one()) {}
    QtScalar(int c) : num_(QtPoly::constant(c)), den_(QtPoly::one()) {}
    explicit QtScalar(QtPoly p) : num_(std::move(p)), den_(QtPoly::one()) {}
    QtScalar(QtPoly num, QtPoly den);

    static QtScalar zero() { return QtScalar(); }
    static QtScalar one() { return QtScalar(1); }
    static QtScalar q() { return QtScalar(QtPoly::var_q()); }
    static QtScalar t() { return QtScalar(QtPoly::var_t()); }
    static QtScalar q_power(int k);  // q^k, k may be negative
    static QtScalar t_power(int k);
    // c * q^a * t^b with a, b >= 0
    static QtScalar term(BigInt c, int a, int b) { return QtScalar(QtPoly::term(std::move(c), a, b)); }

    const QtPoly& num() const { return num_; }
    const QtPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer_poly() const { return den_.is_one(); }

    QtScalar operator-() const;
    friend QtScalar operator+(const QtScalar& a, const QtScalar& b);
    friend QtScalar operator-(const QtScalar& a, const QtScalar& b);
    friend QtScalar operator*(const QtScalar& a, const QtScalar& b);
    // Throws std::domain_error("zero divisor") when b is zero.
    friend QtScalar operator/(const QtScalar& a, const QtScalar& b);
    QtScalar& operator+=(const QtScalar& b) { return *this = *this + b; }
    QtScalar& operator-=(const QtScalar& b) { return *this = *this - b; }
    QtScalar& operator*=(const QtScalar& b) { return *this = *this * b; }
    QtScalar& operator/=(const QtScalar& b) { return *this = *this / b; }
    friend bool operator==(const QtScalar&, const QtScalar&) = default;

    QtScalar inverse() const;

    // The image under q -> 1/q, t -> 1/t, cleared back to a fraction of
    // polynomials with non-negative exponents.  An involution.
    QtScalar invert_qt() const;

    // Exact substitution of 0 or 1 for q and/or t.  Throws
    // std::domain_error("pole at specialization") if the denominator
    // vanishes under the substitution.
    QtScalar specialize(Subst q_sub, Subst t_sub) const;

    QtScalar pow(int k) const;  // k may be negative for nonzero scalars

private:
    void reduce();

    QtPoly num_;
    QtPoly den_;
};

inline QtScalar one_minus_t() { return QtScalar(QtPoly::one() - QtPoly::var_t()); }

}  // namespace pbmac
