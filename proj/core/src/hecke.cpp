#include "pbmac/hecke.hpp"

#include <stdexcept>

namespace pbmac {

XPolynomial op_pi(const XPolynomial& f, int i) {
    return (f * XPolynomial::variable(f.var_count(), i)).divided_difference(i);
}

XPolynomial op_theta(const XPolynomial& f, int i) { return op_pi(f, i) - f; }

XPolynomial op_tpi(const XPolynomial& f, int i) {
    return op_pi(f, i).scaled(one_minus_t()) + f.swap_vars(i).scaled(QtScalar::t());
}

XPolynomial op_ttheta(const XPolynomial& f, int i) {
    return op_theta(f, i).scaled(one_minus_t()) + f.swap_vars(i).scaled(QtScalar::t());
}

XPolynomial apply_word(XPolynomial f, const OperatorWord& word) {
    for (const OpLetter& l : word) {
        switch (l.kind) {
            case OpKind::Pi: f = op_pi(f, l.index); break;
            case OpKind::Theta: f = op_theta(f, l.index); break;
            case OpKind::TPi: f = op_tpi(f, l.index); break;
            case OpKind::TTheta: f = op_ttheta(f, l.index); break;
        }
    }
    return f;
}

OperatorWord word_for(OpKind kind, const Permutation& sigma) {
    return word_for(kind, sigma.reduced_word());
}

OperatorWord word_for(OpKind kind, const std::vector<int>& letters) {
    OperatorWord w;
    w.reserve(letters.size());
    for (int i : letters) w.push_back({kind, i});
    return w;
}

TwinvStats twinv(const Composition& alpha, const Permutation& sigma) {
    if (alpha.size() != static_cast<size_t>(sigma.n()))
        throw std::invalid_argument("arity mismatch");
    TwinvStats s;
    const int n = sigma.n();
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (sigma(i) <= sigma(j)) continue;
            if (alpha[i - 1] <= alpha[j - 1]) ++s.theta_count;
            if (alpha[i - 1] < alpha[j - 1]) ++s.pi_count;
        }
    }
    return s;
}

bool verify_basement_permute(const Composition& alpha, const Permutation& sigma, int i) {
    const Permutation swapped = sigma.times_s(i);
    const Permutation inv = sigma.inverse();
    const int gamma_i = alpha[inv(i) - 1];
    const int gamma_i1 = alpha[inv(i + 1) - 1];

    const XPolynomial e = macdonald_E({alpha, sigma});
    const XPolynomial e_swapped = macdonald_E({alpha, swapped});

    if (swapped.length() < sigma.length()) {
        const QtScalar factor = gamma_i <= gamma_i1 ? QtScalar::t() : QtScalar::one();
        return op_ttheta(e, i) == e_swapped.scaled(factor);
    }
    const QtScalar factor = gamma_i < gamma_i1 ? QtScalar::t() : QtScalar::one();
    return op_tpi(e, i) == e_swapped.scaled(factor);
}

bool verify_twinv_corollary(const Composition& alpha, const Permutation& sigma) {
    const int n = sigma.n();
    const Permutation w0 = Permutation::longest(n);
    const Permutation id = Permutation::identity(n);

    const Composition alpha_rev(alpha.rbegin(), alpha.rend());
    const XPolynomial theta_lhs =
        apply_word(macdonald_E({alpha, w0}), word_for(OpKind::TTheta, sigma));
    const XPolynomial theta_rhs =
        macdonald_E({alpha, sigma.reversed()})
            .scaled(QtScalar::t_power(twinv(alpha_rev, sigma).theta_count));
    if (theta_lhs != theta_rhs) return false;

    const XPolynomial pi_lhs =
        apply_word(macdonald_E({alpha, id}), word_for(OpKind::TPi, sigma));
    const XPolynomial pi_rhs =
        macdonald_E({alpha, sigma}).scaled(QtScalar::t_power(twinv(alpha, sigma).pi_count));
    return pi_lhs == pi_rhs;
}

XPolynomial shape_transpose(const MacdonaldIndex& idx, int j) {
    return shape_transpose_apply(macdonald_E(idx), idx, j);
}

XPolynomial shape_transpose_apply(const XPolynomial& e, const MacdonaldIndex& idx, int j) {
    const int n = idx.basement.n();
    if (j < 1 || j >= n) throw std::out_of_range("row index out of range");
    if (idx.basement(j) != idx.basement(j + 1) + 1 || idx.shape[j - 1] == idx.shape[j])
        throw std::domain_error("shape-transpose hypothesis unmet");

    const int i = idx.basement(j + 1);
    const QtScalar t = QtScalar::t();

    if (idx.shape[j - 1] < idx.shape[j]) {
        const Cell u{j + 1, idx.shape[j - 1] + 1};
        const QtScalar c(QtPoly::one() - QtPoly::var_t(),
                         QtPoly::one() -
                             QtPoly::term(1, 1 + leg(idx.shape, u), arm(idx.shape, u)));
        return op_ttheta(e, i) + e.scaled(c);
    }
    const Cell u{j, idx.shape[j] + 1};
    const QtScalar c(QtPoly::one() - QtPoly::var_t(),
                     QtPoly::one() -
                         QtPoly::term(1, 1 + leg(idx.shape, u), 1 + arm(idx.shape, u)));
    // (ttheta_i + C)^{-1} = (C + t - 1 - ttheta_i) / ((C-1)(C+t)); the
    // quadratic relation makes (ttheta_i + C)(C + t - 1 - ttheta_i) the
    // scalar (C-1)(C+t).
    const QtScalar denom = (c - QtScalar::one()) * (c + t);
    return (e.scaled(c + t - QtScalar::one()) - op_ttheta(e, i)).scaled(denom.inverse());
}

XPolynomial invert_ttheta_plus_const(const XPolynomial& g, int i, const QtScalar& a) {
    const QtScalar t = QtScalar::t();
    // The genuinely singular shifts are the negated eigenvalues {1, -t};
    // t is rejected as well to keep the documented contract.
    if (a == QtScalar::one() || a == t || a == -t)
        throw std::domain_error("non-invertible shift");
    const QtScalar denom = (a - QtScalar::one()) * (a + t);
    return (g.scaled(a + t - QtScalar::one()) - op_ttheta(g, i)).scaled(denom.inverse());
}

bool verify_quadratic_and_inverse(int i, const XPolynomial& f) {
    const QtScalar t = QtScalar::t();
    const XPolynomial tf = f.scaled(t);
    const XPolynomial th = op_ttheta(f, i);
    if (op_ttheta(th, i) != th.scaled(t - QtScalar::one()) + tf) return false;
    if (op_tpi(th, i) != tf) return false;
    return op_ttheta(op_tpi(f, i), i) == tf;
}

bool verify_mixed_braid(const XPolynomial& f, int i) {
    if (i < 2 || i >= f.var_count()) throw std::out_of_range("operator index out of range");
    const auto word = [&](std::initializer_list<OpLetter> ls) {
        return apply_word(f, OperatorWord(ls));
    };
    const OpLetter pi_hi{OpKind::TPi, i}, pi_lo{OpKind::TPi, i - 1};
    const OpLetter th_hi{OpKind::TTheta, i}, th_lo{OpKind::TTheta, i - 1};
    return word({pi_hi, pi_lo, th_hi}) == word({th_lo, pi_hi, pi_lo}) &&
           word({pi_lo, pi_hi, th_lo}) == word({th_hi, pi_lo, pi_hi}) &&
           word({pi_lo, th_hi, th_lo}) == word({th_hi, th_lo, pi_hi}) &&
           word({pi_hi, th_lo, th_hi}) == word({th_lo, th_hi, pi_lo});
}

bool verify_tatom_tkey_shape_corollary(const Composition& alpha) {
    const int n = static_cast<int>(alpha.size());
    const Permutation id = Permutation::identity(n);
    for (int i = 1; i < n; ++i) {
        if (alpha[i - 1] <= alpha[i]) continue;
        Composition swapped = alpha;
        std::swap(swapped[i - 1], swapped[i]);
        if (op_ttheta(t_atom({alpha, id}), i) != t_atom({swapped, id})) return false;
    }
    for (int j = 1; j < n; ++j) {
        if (alpha[j - 1] >= alpha[j]) continue;
        Composition swapped = alpha;
        std::swap(swapped[j - 1], swapped[j]);
        // Key basement puts labels i+1 = n+1-j, i = n-j on rows j, j+1.
        if (op_tpi(t_key(alpha), n - j) != t_key(swapped)) return false;
    }
    return true;
}

bool verify_tatom_pi_lemma(const Composition& alpha, const Permutation& sigma) {
    const int n = sigma.n();
    for (int j = 1; j < n; ++j) {
        if (alpha[j - 1] >= alpha[j]) continue;
        Composition swapped = alpha;
        std::swap(swapped[j - 1], swapped[j]);
        const XPolynomial a = t_atom({alpha, sigma});
        const XPolynomial a_swapped = t_atom({swapped, sigma});
        if (sigma(j) == sigma(j + 1) + 1) {
            if (op_tpi(a, sigma(j + 1)) != a_swapped) return false;
        } else if (sigma(j + 1) == sigma(j) + 1) {
            if (op_tpi(a, sigma(j)) != a_swapped.scaled(QtScalar::t())) return false;
        }
    }
    return true;
}

bool verify_tkey_pbf(const Composition& lambda, const Composition& target) {
    const int n = static_cast<int>(lambda.size());
    const Composition sorted = rev_sort(lambda);

    const Permutation sigma = shortest_permutation(sorted, target);
    if (t_key(target) != t_atom({sorted, sigma.complement()})) return false;

    const Composition increasing(sorted.rbegin(), sorted.rend());
    const Permutation tau = shortest_permutation(increasing, target);
    return t_atom({target, Permutation::identity(n)}) == t_atom({increasing, tau});
}

bool verify_rho_word(const Composition& alpha, const Permutation& sigma) {
    const Composition lambda = rev_sort(alpha);
    OperatorWord word = word_for(OpKind::TTheta, sorting_word(lambda, alpha));
    const OperatorWord pis = word_for(OpKind::TPi, sigma);
    word.insert(word.end(), pis.begin(), pis.end());

    const XPolynomial lhs = apply_word(XPolynomial::monomial(lambda), word);
    const XPolynomial rhs =
        t_atom({alpha, sigma}).scaled(QtScalar::t_power(twinv(alpha, sigma).pi_count));
    return lhs == rhs;
}

}  // namespace pbmac
