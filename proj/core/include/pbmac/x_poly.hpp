#pragma once

/*
 * x_poly.hpp
 * ----------
 * Multivariate polynomials in x_1..x_n over Q(q, t).
 *
 * The universal value type of the library.  Monomials are exponent vectors
 * of fixed length n, ordered graded-lexicographically; stored coefficients
 * are never the zero scalar, so equality is structural.
 */

#include <functional>
#include <map>
#include <random>
#include <vector>

#include "pbmac/qt_scalar.hpp"

namespace pbmac {

using Monomial = std::vector<int>;

// Graded-lex: total degree, then componentwise from position 1.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }
};

// One variable's image under a simultaneous substitution: x_i maps to
// factor * x_target, or to the constant factor when target is 0.
struct VarImage {
    QtScalar factor;
    int target = 0;
};

class XPolynomial {
public:
    using TermMap = std::map<Monomial, QtScalar, MonomialLess>;

    explicit XPolynomial(int n) : n_(n) {}

    static XPolynomial zero(int n) { return XPolynomial(n); }
    static XPolynomial constant(int n, const QtScalar& c);
    static XPolynomial one(int n) { return constant(n, QtScalar::one()); }
    static XPolynomial monomial(Monomial m, QtScalar c = QtScalar::one());
    static XPolynomial variable(int n, int i);  // x_i, 1-based

    int var_count() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;

    void add_term(const Monomial& m, const QtScalar& c);

    XPolynomial operator-() const;
    friend XPolynomial operator+(const XPolynomial& a, const XPolynomial& b);
    friend XPolynomial operator-(const XPolynomial& a, const XPolynomial& b);
    friend XPolynomial operator*(const XPolynomial& a, const XPolynomial& b);
    XPolynomial& operator+=(const XPolynomial& b) { return *this = *this + b; }
    XPolynomial& operator-=(const XPolynomial& b) { return *this = *this - b; }
    friend bool operator==(const XPolynomial&, const XPolynomial&) = default;

    XPolynomial scaled(const QtScalar& c) const;

    // Exchange x_i and x_{i+1} in every monomial; 1 <= i < n.
    XPolynomial swap_vars(int i) const;
    bool symmetric_in(int i) const;

    // Divided difference (f - s_i f)/(x_i - x_{i+1}), computed monomial by
    // monomial through the telescoping identity
    //   (x^a y^b - x^b y^a)/(x - y) = sum_{k=b}^{a-1} x^k y^{a+b-1-k},  a > b,
    // so no division ever takes place.
    XPolynomial divided_difference(int i) const;

    // Simultaneous substitution x_i -> images[i-1]; images must cover all n
    // variables.
    XPolynomial substitute(const std::vector<VarImage>& images) const;

    // Relabel variables by a bijection pos -> target (x_i -> x_{target(i)}).
    XPolynomial permute_vars(const std::vector<int>& target) const;

    XPolynomial map_coefficients(const std::function<QtScalar(const QtScalar&)>& f) const;
    XPolynomial specialize(QtScalar::Subst q_sub, QtScalar::Subst t_sub) const;

    QtScalar coefficient(const Monomial& m) const;

private:
    void check_index(int i) const;

    int n_ = 0;
    TermMap terms_;
};

// Pseudo-random polynomial with `terms` monomials of per-variable degree at
// most max_degree and small c q^a t^b coefficients; deterministic in rng.
XPolynomial random_polynomial(std::mt19937& rng, int n, int max_degree, int terms);

}  // namespace pbmac
