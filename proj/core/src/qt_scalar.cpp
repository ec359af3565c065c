#include "pbmac/qt_scalar.hpp"

#include <stdexcept>

namespace pbmac {

QtScalar::QtScalar(QtPoly num, QtPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero divisor");
    reduce();
}

void QtScalar::reduce() {
    if (num_.is_zero()) {
        den_ = QtPoly::one();
        return;
    }
    if (!den_.is_one()) {
        QtPoly g = qt_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = qt_exact_div(num_, g);
            den_ = qt_exact_div(den_, g);
        }
    }
    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QtScalar QtScalar::q_power(int k) {
    if (k >= 0) return QtScalar(QtPoly::term(1, k, 0));
    return QtScalar(QtPoly::one(), QtPoly::term(1, -k, 0));
}

QtScalar QtScalar::t_power(int k) {
    if (k >= 0) return QtScalar(QtPoly::term(1, 0, k));
    return QtScalar(QtPoly::one(), QtPoly::term(1, 0, -k));
}

QtScalar QtScalar::operator-() const {
    QtScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

QtScalar operator+(const QtScalar& a, const QtScalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return QtScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QtScalar operator-(const QtScalar& a, const QtScalar& b) { return a + (-b); }

QtScalar operator*(const QtScalar& a, const QtScalar& b) {
    if (a.is_zero() || b.is_zero()) return QtScalar();
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    return QtScalar(a.num_ * b.num_, a.den_ * b.den_);
}

QtScalar operator/(const QtScalar& a, const QtScalar& b) {
    if (b.is_zero()) throw std::domain_error("zero divisor");
    if (a.is_zero()) return QtScalar();
    return QtScalar(a.num_ * b.den_, a.den_ * b.num_);
}

QtScalar QtScalar::inverse() const {
    if (is_zero()) throw std::domain_error("zero divisor");
    return QtScalar(den_, num_);
}

QtScalar QtScalar::invert_qt() const {
    if (is_zero()) return QtScalar();
    const int qn = num_.degree_q(), tn = num_.degree_t();
    const int qd = den_.degree_q(), td = den_.degree_t();
    QtPoly new_num = num_.mirrored(qn, tn);
    QtPoly new_den = den_.mirrored(qd, td);
    // num/den at (1/q, 1/t) equals q^(qd-qn) t^(td-tn) * new_num / new_den.
    if (qd >= qn) {
        new_num = new_num * QtPoly::term(1, qd - qn, 0);
    } else {
        new_den = new_den * QtPoly::term(1, qn - qd, 0);
    }
    if (td >= tn) {
        new_num = new_num * QtPoly::term(1, 0, td - tn);
    } else {
        new_den = new_den * QtPoly::term(1, 0, tn - td);
    }
    return QtScalar(std::move(new_num), std::move(new_den));
}

QtScalar QtScalar::specialize(Subst q_sub, Subst t_sub) const {
    QtPoly d = den_.substitute(q_sub, t_sub);
    if (d.is_zero()) throw std::domain_error("pole at specialization");
    return QtScalar(num_.substitute(q_sub, t_sub), std::move(d));
}

QtScalar QtScalar::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    QtScalar r = one();
    QtScalar base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

}  // namespace pbmac
