#include "pbmac/x_poly.hpp"

#include <numeric>
#include <stdexcept>

namespace pbmac {

XPolynomial XPolynomial::constant(int n, const QtScalar& c) {
    XPolynomial p(n);
    p.add_term(Monomial(n, 0), c);
    return p;
}

XPolynomial XPolynomial::monomial(Monomial m, QtScalar c) {
    XPolynomial p(static_cast<int>(m.size()));
    p.add_term(m, c);
    return p;
}

XPolynomial XPolynomial::variable(int n, int i) {
    if (i < 1 || i > n) throw std::out_of_range("variable index out of range");
    Monomial m(n, 0);
    m[i - 1] = 1;
    return monomial(std::move(m));
}

int XPolynomial::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
    return d;
}

void XPolynomial::add_term(const Monomial& m, const QtScalar& c) {
    if (static_cast<int>(m.size()) != n_) throw std::invalid_argument("arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

XPolynomial XPolynomial::operator-() const {
    XPolynomial r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

XPolynomial operator+(const XPolynomial& a, const XPolynomial& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("arity mismatch");
    XPolynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

XPolynomial operator-(const XPolynomial& a, const XPolynomial& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("arity mismatch");
    XPolynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

XPolynomial operator*(const XPolynomial& a, const XPolynomial& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("arity mismatch");
    XPolynomial r(a.n_);
    Monomial m(a.n_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (int k = 0; k < a.n_; ++k) m[k] = ma[k] + mb[k];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

XPolynomial XPolynomial::scaled(const QtScalar& c) const {
    XPolynomial r(n_);
    if (c.is_zero()) return r;
    for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
    return r;
}

void XPolynomial::check_index(int i) const {
    if (i < 1 || i >= n_) throw std::out_of_range("operator index out of range");
}

XPolynomial XPolynomial::swap_vars(int i) const {
    check_index(i);
    XPolynomial r(n_);
    for (const auto& [m, c] : terms_) {
        Monomial sm = m;
        std::swap(sm[i - 1], sm[i]);
        r.terms_.emplace(std::move(sm), c);
    }
    return r;
}

bool XPolynomial::symmetric_in(int i) const {
    check_index(i);
    return swap_vars(i) == *this;
}

XPolynomial XPolynomial::divided_difference(int i) const {
    check_index(i);
    XPolynomial r(n_);
    for (const auto& [m, c] : terms_) {
        const int a = m[i - 1], b = m[i];
        if (a == b) continue;
        Monomial nm = m;
        if (a > b) {
            for (int k = b; k <= a - 1; ++k) {
                nm[i - 1] = k;
                nm[i] = a + b - 1 - k;
                r.add_term(nm, c);
            }
        } else {
            for (int k = a; k <= b - 1; ++k) {
                nm[i - 1] = k;
                nm[i] = a + b - 1 - k;
                r.add_term(nm, -c);
            }
        }
    }
    return r;
}

XPolynomial XPolynomial::substitute(const std::vector<VarImage>& images) const {
    if (static_cast<int>(images.size()) != n_) throw std::invalid_argument("arity mismatch");
    XPolynomial r(n_);
    Monomial nm(n_);
    for (const auto& [m, c] : terms_) {
        QtScalar coeff = c;
        std::fill(nm.begin(), nm.end(), 0);
        for (int k = 0; k < n_ && !coeff.is_zero(); ++k) {
            if (m[k] == 0) continue;
            const VarImage& img = images[k];
            coeff = coeff * img.factor.pow(m[k]);
            if (img.target != 0) {
                if (img.target < 1 || img.target > n_)
                    throw std::out_of_range("substitution target out of range");
                nm[img.target - 1] += m[k];
            }
        }
        r.add_term(nm, coeff);
    }
    return r;
}

XPolynomial XPolynomial::permute_vars(const std::vector<int>& target) const {
    if (static_cast<int>(target.size()) != n_) throw std::invalid_argument("arity mismatch");
    XPolynomial r(n_);
    Monomial nm(n_);
    for (const auto& [m, c] : terms_) {
        for (int k = 0; k < n_; ++k) nm[target[k] - 1] = m[k];
        r.terms_.emplace(nm, c);
    }
    return r;
}

XPolynomial XPolynomial::map_coefficients(
    const std::function<QtScalar(const QtScalar&)>& f) const {
    XPolynomial r(n_);
    for (const auto& [m, c] : terms_) r.add_term(m, f(c));
    return r;
}

XPolynomial XPolynomial::specialize(QtScalar::Subst q_sub, QtScalar::Subst t_sub) const {
    return map_coefficients([&](const QtScalar& c) { return c.specialize(q_sub, t_sub); });
}

QtScalar XPolynomial::coefficient(const Monomial& m) const {
    if (static_cast<int>(m.size()) != n_) throw std::invalid_argument("arity mismatch");
    auto it = terms_.find(m);
    return it == terms_.end() ? QtScalar::zero() : it->second;
}

XPolynomial random_polynomial(std::mt19937& rng, int n, int max_degree, int terms) {
    std::uniform_int_distribution<int> exp_dist(0, max_degree);
    std::uniform_int_distribution<int> coeff_dist(-3, 3);
    std::uniform_int_distribution<int> qt_dist(0, 2);
    XPolynomial p(n);
    for (int k = 0; k < terms; ++k) {
        Monomial m(n);
        for (int& e : m) e = exp_dist(rng);
        int c = coeff_dist(rng);
        if (c == 0) c = 1;
        p.add_term(m, QtScalar::term(c, qt_dist(rng), qt_dist(rng)));
    }
    return p;
}

}  // namespace pbmac
