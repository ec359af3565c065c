#include "pbmac/io.hpp"

#include <sstream>

namespace pbmac {

namespace {

void join_ints(std::ostringstream& out, const std::vector<int>& v) {
    out << '[';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out << ',';
        out << v[i];
    }
    out << ']';
}

void qt_terms_json(std::ostringstream& out, const QtPoly& p) {
    out << '[';
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) out << ',';
        first = false;
        out << '[' << c << ',' << e.q << ',' << e.t << ']';
    }
    out << ']';
}

void scalar_json(std::ostringstream& out, const QtScalar& s) {
    out << "{\"num\":";
    qt_terms_json(out, s.num());
    out << ",\"den\":";
    qt_terms_json(out, s.den());
    out << '}';
}

// One c q^a t^b piece; `mult` separates letters ("*" for text, " " for latex)
// and `brace` selects exponent style (x^{2} vs x^2).
std::string qt_term_str(const BigInt& c, int a, int b, const char* mult, bool brace) {
    std::ostringstream out;
    const BigInt abs_c = c < 0 ? BigInt(-c) : c;
    const bool unit = abs_c == 1 && (a > 0 || b > 0);
    if (!unit) out << abs_c;
    bool need_sep = !unit;
    auto emit = [&](char var, int e) {
        if (e == 0) return;
        if (need_sep) out << mult;
        out << var;
        if (e > 1) {
            if (brace) out << "^{" << e << '}';
            else out << '^' << e;
        }
        need_sep = true;
    };
    emit('q', a);
    emit('t', b);
    return out.str();
}

std::string qt_poly_str(const QtPoly& p, const char* mult, bool brace) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? '-' : '+');
        }
        first = false;
        out << qt_term_str(c, e.q, e.t, mult, brace);
    }
    return out.str();
}

std::string scalar_str(const QtScalar& s, const char* mult, bool brace, bool latex) {
    if (s.is_integer_poly()) {
        const std::string num = qt_poly_str(s.num(), mult, brace);
        if (s.num().terms().size() > 1) return latex ? "\\left(" + num + "\\right)" : "(" + num + ")";
        return num;
    }
    // Canonical form pins the sign to the leading denominator coefficient;
    // for display flip the pair when the trailing one is negative, so
    // denominators read 1-q t^2 rather than -1+q t^2.
    const bool flip = s.den().terms().begin()->second < 0;
    const std::string num = qt_poly_str(flip ? -s.num() : s.num(), mult, brace);
    const std::string den = qt_poly_str(flip ? -s.den() : s.den(), mult, brace);
    if (latex) return "\\frac{" + num + "}{" + den + "}";
    const std::string lhs = s.num().terms().size() > 1 ? "(" + num + ")" : num;
    return lhs + "/(" + den + ")";
}

std::string monomial_str(const Monomial& m, const char* mult, bool brace) {
    std::ostringstream out;
    bool need_sep = false;
    for (size_t k = 0; k < m.size(); ++k) {
        if (m[k] == 0) continue;
        if (need_sep) out << mult;
        if (brace) out << "x_{" << k + 1 << '}';
        else out << 'x' << k + 1;
        if (m[k] > 1) {
            if (brace) out << "^{" << m[k] << '}';
            else out << '^' << m[k];
        }
        need_sep = true;
    }
    return out.str();
}

std::string poly_str(const XPolynomial& p, const char* mult, bool brace, bool latex) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!first) out << " + ";
        first = false;
        const std::string mono = monomial_str(it->first, mult, brace);
        if (mono.empty()) {
            out << scalar_str(it->second, mult, brace, latex);
        } else if (it->second.is_one()) {
            out << mono;
        } else {
            out << scalar_str(it->second, mult, brace, latex) << (latex ? " " : mult) << mono;
        }
    }
    return out.str();
}

}  // namespace

std::string to_json(const QtScalar& s) {
    std::ostringstream out;
    scalar_json(out, s);
    return out.str();
}

std::string to_json(const XPolynomial& p) {
    std::ostringstream out;
    out << '[';
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!first) out << ',';
        first = false;
        out << "{\"x\":";
        join_ints(out, it->first);
        out << ",\"num\":";
        qt_terms_json(out, it->second.num());
        out << ",\"den\":";
        qt_terms_json(out, it->second.den());
        out << '}';
    }
    out << ']';
    return out.str();
}

std::string to_json(const AugmentedFilling& f) {
    std::ostringstream out;
    out << "{\"shape\":";
    join_ints(out, f.shape());
    out << ",\"basement\":";
    join_ints(out, f.basement().one_line());
    out << ",\"rows\":[";
    for (size_t r = 0; r < f.rows().size(); ++r) {
        if (r) out << ',';
        join_ints(out, f.rows()[r]);
    }
    out << "]}";
    return out.str();
}

std::string to_json(const ExpansionResult& e) {
    std::ostringstream out;
    out << "{\"basis\":\"" << e.basis_tag << "\",\"terms\":[";
    bool first = true;
    for (auto it = e.coefficients.rbegin(); it != e.coefficients.rend(); ++it) {
        if (!first) out << ',';
        first = false;
        out << "{\"index\":";
        join_ints(out, it->first);
        out << ",\"coeff\":";
        scalar_json(out, it->second);
        out << '}';
    }
    out << "]}";
    return out.str();
}

std::string to_latex(const QtScalar& s) { return scalar_str(s, " ", true, true); }

std::string to_latex(const XPolynomial& p) { return poly_str(p, " ", true, true); }

std::string to_text(const QtScalar& s) { return scalar_str(s, "*", false, false); }

std::string to_text(const XPolynomial& p) { return poly_str(p, "*", false, false); }

std::string to_text(const AugmentedFilling& f) {
    std::ostringstream out;
    out << "rows=[";
    for (size_t r = 0; r < f.rows().size(); ++r) {
        if (r) out << ',';
        out << '[';
        for (size_t c = 0; c < f.rows()[r].size(); ++c) {
            if (c) out << ',';
            out << f.rows()[r][c];
        }
        out << ']';
    }
    out << ']';
    return out.str();
}

}  // namespace pbmac
