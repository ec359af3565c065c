#include "pbmac/expansions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pbmac {

QtScalar shape_hook_product(const Composition& shape) {
    QtScalar p = QtScalar::one();
    for (int r = 1; r <= static_cast<int>(shape.size()); ++r) {
        for (int c = 1; c <= shape[r - 1]; ++c) {
            const Cell u{r, c};
            p *= QtScalar(QtPoly::one() -
                          QtPoly::term(1, 1 + leg(shape, u), arm(shape, u)));
        }
    }
    return p;
}

ExpansionResult macdonald_P_expand(const Composition& lambda, const Permutation& sigma) {
    if (!is_partition(lambda)) throw std::invalid_argument("not a partition");
    ExpansionResult res;
    res.basis_tag = "E^sigma_gamma(x;q,t)";
    const QtScalar top = shape_hook_product(lambda);
    for (const Composition& gamma : rearrangements_of(lambda)) {
        const QtScalar c = QtScalar::t_power(twinv(gamma, sigma).pi_count) * top /
                           shape_hook_product(gamma);
        res.coefficients.emplace(gamma, c);
    }
    return res;
}

XPolynomial symmetric_P(const Composition& lambda, const Permutation& sigma) {
    const ExpansionResult e = macdonald_P_expand(lambda, sigma);
    return reconstruct(e, sigma.n(), [&](const Composition& gamma) {
        return macdonald_E({gamma, sigma});
    });
}

ExpansionResult hall_littlewood_expand(const Composition& lambda, const Permutation& sigma) {
    if (!is_partition(lambda)) throw std::invalid_argument("not a partition");
    ExpansionResult res;
    res.basis_tag = "A^sigma_gamma(x;t)";
    for (const Composition& gamma : rearrangements_of(lambda))
        res.coefficients.emplace(gamma, QtScalar::t_power(twinv(gamma, sigma).pi_count));
    return res;
}

namespace {

// Exact division of f by the linear form x_i - x_j (1-based, i != j).
XPolynomial divide_linear(const XPolynomial& f, int i, int j) {
    struct Less {
        int i;
        MonomialLess base;
        bool operator()(const Monomial& a, const Monomial& b) const {
            if (a[i - 1] != b[i - 1]) return a[i - 1] > b[i - 1];
            return base(b, a);
        }
    };
    std::map<Monomial, QtScalar, Less> work(Less{i});
    for (const auto& [m, c] : f.terms()) work.emplace(m, c);

    XPolynomial quotient(f.var_count());
    while (!work.empty()) {
        auto it = work.begin();
        Monomial m = it->first;
        QtScalar c = it->second;
        work.erase(it);
        if (c.is_zero()) continue;
        if (m[i - 1] == 0) throw std::domain_error("inexact linear division");
        --m[i - 1];
        quotient.add_term(m, c);
        // f -= c x^m (x_i - x_j): the x_i part cancels the popped term.
        Monomial rest = m;
        ++rest[j - 1];
        auto [pos, inserted] = work.emplace(rest, c);
        if (!inserted) {
            pos->second += c;
            if (pos->second.is_zero()) work.erase(pos);
        }
    }
    return quotient;
}

}  // namespace

XPolynomial hall_littlewood_oracle(const Composition& lambda, int n) {
    if (!is_partition(lambda)) throw std::invalid_argument("not a partition");
    if (static_cast<int>(lambda.size()) > n)
        throw std::invalid_argument("more parts than variables");
    Composition lam = lambda;
    lam.resize(n, 0);

    XPolynomial weights = XPolynomial::monomial(lam);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            XPolynomial factor = XPolynomial::variable(n, i) -
                                 XPolynomial::variable(n, j).scaled(QtScalar::t());
            weights = weights * factor;
        }
    }

    XPolynomial antisym(n);
    for (const Permutation& w : all_permutations(n)) {
        const XPolynomial img = weights.permute_vars(w.one_line());
        antisym = w.length() % 2 == 0 ? antisym + img : antisym - img;
    }

    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) antisym = divide_linear(antisym, i, j);

    // v_lambda(t), zero parts included.
    QtScalar v = QtScalar::one();
    std::map<int, int> mult;
    for (int part : lam) ++mult[part];
    for (const auto& [part, m] : mult) {
        for (int j = 1; j <= m; ++j) {
            v *= QtScalar(QtPoly::one() - QtPoly::term(1, 0, j),
                          QtPoly::one() - QtPoly::var_t());
        }
    }
    return antisym.scaled(v.inverse());
}

QtScalar kostka_foulkes(const Composition& lambda, const Composition& mu, int n) {
    if (!is_partition(lambda) || !is_partition(mu))
        throw std::invalid_argument("not a partition");
    const int weight = std::accumulate(lambda.begin(), lambda.end(), 0);
    if (weight != std::accumulate(mu.begin(), mu.end(), 0))
        throw std::invalid_argument("partition weight mismatch");

    auto nonzero_parts = [](const Composition& a) {
        int k = 0;
        for (int v : a)
            if (v > 0) ++k;
        return k;
    };
    const int nn = std::max({n, nonzero_parts(lambda), nonzero_parts(mu), 1});

    Composition mu_padded = mu;
    mu_padded.resize(nn, 0);

    XPolynomial rest = schur_oracle(lambda, nn);
    QtScalar result = QtScalar::zero();
    // Partitions arrive in decreasing lex order, a linear extension of
    // dominance from the top, so the system is unitriangular.
    for (const Composition& nu : partitions_of(weight, nn)) {
        const QtScalar c = rest.coefficient(nu);
        if (nu == mu_padded) result = c;
        if (!c.is_zero()) rest -= hall_littlewood_oracle(nu, nn).scaled(c);
    }
    if (!rest.is_zero()) throw std::logic_error("triangular solve left a residue");
    return result;
}

ExpansionResult schur_in_atoms(const Composition& lambda, const Permutation& sigma) {
    if (!is_partition(lambda)) throw std::invalid_argument("not a partition");
    const int n = sigma.n();
    if (static_cast<int>(lambda.size()) > n)
        throw std::invalid_argument("more parts than variables");
    const int weight = std::accumulate(lambda.begin(), lambda.end(), 0);

    ExpansionResult res;
    res.basis_tag = "A^sigma_gamma(x;t)";
    std::map<Composition, QtScalar> kostka_cache;
    for (const Composition& gamma : compositions_of(weight, n)) {
        const Composition mu = rev_sort(gamma);
        auto it = kostka_cache.find(mu);
        if (it == kostka_cache.end())
            it = kostka_cache.emplace(mu, kostka_foulkes(lambda, mu, n)).first;
        if (it->second.is_zero()) continue;
        res.coefficients.emplace(
            gamma, QtScalar::t_power(twinv(gamma, sigma).pi_count) * it->second);
    }
    return res;
}

std::optional<std::vector<QtScalar>> basis_solve(const XPolynomial& f,
                                                 const std::vector<XPolynomial>& basis) {
    const size_t k = basis.size();
    std::map<Monomial, size_t, MonomialLess> row_of;
    auto index_terms = [&](const XPolynomial& p) {
        for (const auto& [m, c] : p.terms()) row_of.emplace(m, 0);
    };
    index_terms(f);
    for (const auto& b : basis) {
        if (b.var_count() != f.var_count()) throw std::invalid_argument("arity mismatch");
        index_terms(b);
    }
    size_t rows = 0;
    for (auto& [m, idx] : row_of) idx = rows++;

    std::vector<std::vector<QtScalar>> a(rows, std::vector<QtScalar>(k, QtScalar::zero()));
    std::vector<QtScalar> rhs(rows, QtScalar::zero());
    for (size_t col = 0; col < k; ++col)
        for (const auto& [m, c] : basis[col].terms()) a[row_of[m]][col] = c;
    for (const auto& [m, c] : f.terms()) rhs[row_of[m]] = c;

    std::vector<QtScalar> solution(k, QtScalar::zero());
    size_t pivot_row = 0;
    for (size_t col = 0; col < k; ++col) {
        size_t found = rows;
        for (size_t r = pivot_row; r < rows; ++r) {
            if (!a[r][col].is_zero()) {
                found = r;
                break;
            }
        }
        if (found == rows) return std::nullopt;  // dependent set
        std::swap(a[pivot_row], a[found]);
        std::swap(rhs[pivot_row], rhs[found]);
        const QtScalar inv = a[pivot_row][col].inverse();
        for (size_t c2 = col; c2 < k; ++c2) a[pivot_row][c2] *= inv;
        rhs[pivot_row] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || a[r][col].is_zero()) continue;
            const QtScalar factor = a[r][col];
            for (size_t c2 = col; c2 < k; ++c2) a[r][c2] -= factor * a[pivot_row][c2];
            rhs[r] -= factor * rhs[pivot_row];
        }
        ++pivot_row;
    }
    for (size_t col = 0; col < k; ++col) solution[col] = rhs[col];

    XPolynomial check(f.var_count());
    for (size_t col = 0; col < k; ++col) check += basis[col].scaled(solution[col]);
    if (check != f) return std::nullopt;
    return solution;
}

XPolynomial reconstruct(const ExpansionResult& expansion, int n,
                        const std::function<XPolynomial(const Composition&)>& element) {
    XPolynomial sum(n);
    for (const auto& [index, coeff] : expansion.coefficients)
        sum += element(index).scaled(coeff);
    return sum;
}

}  // namespace pbmac
