#include "pbmac/qt_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace pbmac {

QtPoly QtPoly::constant(BigInt c) {
    QtPoly p;
    if (c != 0) p.terms_[{0, 0}] = std::move(c);
    return p;
}

QtPoly QtPoly::term(BigInt c, int q_exp, int t_exp) {
    if (q_exp < 0 || t_exp < 0) throw std::domain_error("negative exponent");
    QtPoly p;
    if (c != 0) p.terms_[{q_exp, t_exp}] = std::move(c);
    return p;
}

bool QtPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == QtExp{0, 0} &&
           terms_.begin()->second == 1;
}

bool QtPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == QtExp{0, 0});
}

int QtPoly::degree_q() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.q);
    return d;
}

int QtPoly::degree_t() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.t);
    return d;
}

BigInt QtPoly::leading_coeff() const {
    if (terms_.empty()) return 0;
    return terms_.rbegin()->second;
}

void QtPoly::add_term(const QtExp& e, const BigInt& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QtPoly QtPoly::operator-() const {
    QtPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

QtPoly operator+(const QtPoly& a, const QtPoly& b) {
    QtPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

QtPoly operator-(const QtPoly& a, const QtPoly& b) {
    QtPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

QtPoly operator*(const QtPoly& a, const QtPoly& b) {
    QtPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term({ea.q + eb.q, ea.t + eb.t}, ca * cb);
    return r;
}

QtPoly QtPoly::substitute(Subst q_sub, Subst t_sub) const {
    QtPoly r;
    for (const auto& [e, c] : terms_) {
        if (q_sub == Subst::Zero && e.q > 0) continue;
        if (t_sub == Subst::Zero && e.t > 0) continue;
        QtExp ne = e;
        if (q_sub != Subst::Keep) ne.q = 0;
        if (t_sub != Subst::Keep) ne.t = 0;
        r.add_term(ne, c);
    }
    return r;
}

QtPoly QtPoly::mirrored(int q_deg, int t_deg) const {
    QtPoly r;
    for (const auto& [e, c] : terms_) {
        if (e.q > q_deg || e.t > t_deg) throw std::domain_error("mirror bound too small");
        r.add_term({q_deg - e.q, t_deg - e.t}, c);
    }
    return r;
}

// ---------------------------------------------------------------------------
// GCD machinery.  Dense representations: Z[t] as a coefficient vector, and
// Z[t][q] as a vector of those, with q as the outer variable.
// ---------------------------------------------------------------------------

namespace {

using UniPoly = std::vector<BigInt>;   // index = t-exponent
using BivPoly = std::vector<UniPoly>;  // index = q-exponent

void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool uni_is_zero(const UniPoly& p) { return p.empty(); }

int uni_deg(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

UniPoly uni_neg(UniPoly p) {
    for (auto& c : p) c = -c;
    return p;
}

UniPoly uni_add(const UniPoly& a, const UniPoly& b) {
    UniPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    uni_trim(r);
    return r;
}

UniPoly uni_sub(const UniPoly& a, const UniPoly& b) {
    return uni_add(a, uni_neg(b));
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (uni_is_zero(a) || uni_is_zero(b)) return {};
    UniPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    uni_trim(r);
    return r;
}

BigInt uni_content(const UniPoly& p) {
    BigInt g = 0;
    for (const auto& c : p) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

UniPoly uni_div_int(UniPoly p, const BigInt& d) {
    for (auto& c : p) {
        if (c % d != 0) throw std::domain_error("inexact integer division");
        c /= d;
    }
    return p;
}

UniPoly uni_primitive(const UniPoly& p, BigInt* content_out = nullptr) {
    if (uni_is_zero(p)) {
        if (content_out) *content_out = 0;
        return {};
    }
    BigInt c = uni_content(p);
    if (p.back() < 0) c = -c;
    if (content_out) *content_out = c;
    return uni_div_int(p, c);
}

// Exact division in Z[t]; requires the quotient to exist over Z.
UniPoly uni_exact_div(UniPoly a, const UniPoly& b) {
    if (uni_is_zero(b)) throw std::domain_error("division by zero polynomial");
    if (uni_is_zero(a)) return {};
    if (uni_deg(a) < uni_deg(b)) throw std::domain_error("inexact division");
    UniPoly q(a.size() - b.size() + 1);
    while (!uni_is_zero(a)) {
        int d = uni_deg(a) - uni_deg(b);
        if (d < 0) throw std::domain_error("inexact division");
        if (a.back() % b.back() != 0) throw std::domain_error("inexact division");
        BigInt qc = a.back() / b.back();
        q[d] = qc;
        for (size_t i = 0; i < b.size(); ++i) a[d + i] -= qc * b[i];
        uni_trim(a);
    }
    uni_trim(q);
    return q;
}

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a = s*b + r.
UniPoly uni_prem(UniPoly a, const UniPoly& b) {
    const int db = uni_deg(b);
    const BigInt lb = b.back();
    while (!uni_is_zero(a) && uni_deg(a) >= db) {
        int d = uni_deg(a) - db;
        BigInt la = a.back();
        for (auto& c : a) c *= lb;
        for (size_t i = 0; i < b.size(); ++i) a[d + i] -= la * b[i];
        uni_trim(a);
    }
    return a;
}

UniPoly uni_sign_norm(UniPoly p) {
    if (!p.empty() && p.back() < 0)
        for (auto& c : p) c = -c;
    return p;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    if (uni_is_zero(a)) return uni_sign_norm(std::move(b));
    if (uni_is_zero(b)) return uni_sign_norm(std::move(a));
    BigInt ca = uni_content(a), cb = uni_content(b);
    a = uni_primitive(a);
    b = uni_primitive(b);
    while (!uni_is_zero(b)) {
        UniPoly r = uni_prem(a, b);
        a = std::move(b);
        b = uni_primitive(r);
    }
    // a is the primitive gcd with positive leading coefficient; restore the
    // shared integer content.
    return uni_mul(a, {int_gcd(ca, cb)});
}

void biv_trim(BivPoly& p) {
    while (!p.empty() && uni_is_zero(p.back())) p.pop_back();
}

bool biv_is_zero(const BivPoly& p) { return p.empty(); }

int biv_deg(const BivPoly& p) { return static_cast<int>(p.size()) - 1; }

BivPoly biv_mul_uni(const BivPoly& a, const UniPoly& u) {
    BivPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = uni_mul(a[i], u);
    biv_trim(r);
    return r;
}

// Content of a bivariate polynomial as a Z[t] gcd of its q-coefficients.
UniPoly biv_content(const BivPoly& p) {
    UniPoly g;
    for (const auto& c : p) g = uni_gcd(g, c);
    return g;
}

BivPoly biv_exact_div_uni(const BivPoly& a, const UniPoly& u) {
    BivPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = uni_exact_div(a[i], u);
    biv_trim(r);
    return r;
}

BivPoly biv_primitive(const BivPoly& p) {
    if (biv_is_zero(p)) return {};
    return biv_exact_div_uni(p, biv_content(p));
}

BivPoly biv_prem(BivPoly a, const BivPoly& b) {
    const int db = biv_deg(b);
    const UniPoly& lb = b.back();
    while (!biv_is_zero(a) && biv_deg(a) >= db) {
        int d = biv_deg(a) - db;
        UniPoly la = a.back();
        for (auto& c : a) c = uni_mul(c, lb);
        for (size_t i = 0; i < b.size(); ++i) a[d + i] = uni_sub(a[d + i], uni_mul(la, b[i]));
        biv_trim(a);
    }
    return a;
}

BivPoly biv_gcd(BivPoly a, BivPoly b) {
    if (biv_is_zero(a)) return b;
    if (biv_is_zero(b)) return a;
    UniPoly ca = biv_content(a), cb = biv_content(b);
    a = biv_primitive(a);
    b = biv_primitive(b);
    if (biv_deg(a) < biv_deg(b)) std::swap(a, b);
    while (!biv_is_zero(b)) {
        BivPoly r = biv_prem(a, b);
        a = std::move(b);
        b = biv_primitive(r);
    }
    return biv_mul_uni(biv_primitive(a), uni_gcd(ca, cb));
}

// Exact division in Z[t][q].
BivPoly biv_exact_div(BivPoly a, const BivPoly& b) {
    if (biv_is_zero(b)) throw std::domain_error("division by zero polynomial");
    if (biv_is_zero(a)) return {};
    if (biv_deg(a) < biv_deg(b)) throw std::domain_error("inexact division");
    BivPoly q(a.size() - b.size() + 1);
    while (!biv_is_zero(a)) {
        int d = biv_deg(a) - biv_deg(b);
        if (d < 0) throw std::domain_error("inexact division");
        UniPoly qc = uni_exact_div(a.back(), b.back());
        q[d] = qc;
        for (size_t i = 0; i < b.size(); ++i) a[d + i] = uni_sub(a[d + i], uni_mul(qc, b[i]));
        biv_trim(a);
    }
    biv_trim(q);
    return q;
}

BivPoly to_dense(const QtPoly& p) {
    BivPoly r(p.degree_q() + 1);
    const int dt = p.degree_t() + 1;
    for (auto& u : r) u.assign(dt, 0);
    for (const auto& [e, c] : p.terms()) r[e.q][e.t] = c;
    for (auto& u : r) uni_trim(u);
    biv_trim(r);
    return r;
}

QtPoly from_dense(const BivPoly& p) {
    QtPoly r;
    for (size_t a = 0; a < p.size(); ++a)
        for (size_t b = 0; b < p[a].size(); ++b)
            if (p[a][b] != 0) r.add_term({static_cast<int>(a), static_cast<int>(b)}, p[a][b]);
    return r;
}

// Largest q^a t^b dividing every term, with the integer content.
void monomial_content(const QtPoly& p, int& qm, int& tm, BigInt& cm) {
    qm = tm = -1;
    cm = 0;
    for (const auto& [e, c] : p.terms()) {
        qm = (qm < 0) ? e.q : std::min(qm, e.q);
        tm = (tm < 0) ? e.t : std::min(tm, e.t);
        cm = int_gcd(cm, c);
    }
    if (qm < 0) qm = tm = 0;
}

QtPoly shift_down(const QtPoly& p, int qs, int ts, const BigInt& d) {
    QtPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term({e.q - qs, e.t - ts}, c / d);
    return r;
}

}  // namespace

QtPoly qt_gcd(const QtPoly& a, const QtPoly& b) {
    if (a.is_zero() && b.is_zero()) return QtPoly();
    if (a.is_zero() || b.is_zero()) {
        QtPoly g = a.is_zero() ? b : a;
        if (g.leading_coeff() < 0) g = -g;
        return g;
    }
    if (a.is_one() || b.is_one()) return QtPoly::one();

    // Split off monomial content; the dense PRS only sees the cofactors.
    int qa, ta, qb, tb;
    BigInt ca, cb;
    monomial_content(a, qa, ta, ca);
    monomial_content(b, qb, tb, cb);
    const int qg = std::min(qa, qb);
    const int tg = std::min(ta, tb);
    const BigInt cg = int_gcd(ca, cb);

    const QtPoly ra = shift_down(a, qa, ta, ca);
    const QtPoly rb = shift_down(b, qb, tb, cb);
    QtPoly g = (ra.is_one() || rb.is_one())
                   ? QtPoly::one()
                   : from_dense(biv_gcd(to_dense(ra), to_dense(rb)));
    g = g * QtPoly::term(cg, qg, tg);
    if (g.leading_coeff() < 0) g = -g;
    return g;
}

QtPoly qt_exact_div(const QtPoly& a, const QtPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return QtPoly();
    if (b.is_one()) return a;
    if (b.is_monomial()) {
        const auto& [eb, cb] = *b.terms().begin();
        QtPoly r;
        for (const auto& [e, c] : a.terms()) {
            if (e.q < eb.q || e.t < eb.t || c % cb != 0)
                throw std::domain_error("inexact division");
            r.add_term({e.q - eb.q, e.t - eb.t}, c / cb);
        }
        return r;
    }
    return from_dense(biv_exact_div(to_dense(a), to_dense(b)));
}

}  // namespace pbmac
