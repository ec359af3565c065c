#include "pbmac/macdonald.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace pbmac {

namespace {

std::mutex cache_mutex;
std::map<std::pair<Composition, std::vector<int>>, XPolynomial>& cache() {
    static std::map<std::pair<Composition, std::vector<int>>, XPolynomial> c;
    return c;
}

}  // namespace

void clear_macdonald_cache() {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache().clear();
}

XPolynomial macdonald_E(const MacdonaldIndex& idx) {
    if (idx.shape.size() != static_cast<size_t>(idx.basement.n()))
        throw std::invalid_argument("shape/basement length mismatch");
    const auto key = std::make_pair(idx.shape, idx.basement.one_line());
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache().find(key);
        if (it != cache().end()) return it->second;
    }

    const int n = idx.basement.n();
    XPolynomial result(n);
    for (const AugmentedFilling& f : enumerate_naf(idx.shape, idx.basement)) {
        QtScalar coeff = QtScalar::term(1, maj(f), coinv(f));
        for (int r = 1; r <= n; ++r) {
            for (int c = 1; c <= idx.shape[r - 1]; ++c) {
                if (f.entry({r, c}) == f.entry({r, c - 1})) continue;
                const Cell u{r, c};
                QtPoly den = QtPoly::one() -
                             QtPoly::term(1, 1 + leg(idx.shape, u), 1 + arm(idx.shape, u));
                coeff *= QtScalar(QtPoly::one() - QtPoly::var_t(), std::move(den));
            }
        }
        result.add_term(weight(f), coeff);
    }

    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache().emplace(key, std::move(result)).first->second;
}

XPolynomial t_atom(const MacdonaldIndex& idx) {
    return macdonald_E(idx).specialize(QtScalar::Subst::Zero, QtScalar::Subst::Keep);
}

XPolynomial t_key(const Composition& alpha) {
    return t_atom({alpha, Permutation::longest(static_cast<int>(alpha.size()))});
}

XPolynomial demazure_atom(const Composition& alpha) {
    const MacdonaldIndex idx{alpha, Permutation::identity(static_cast<int>(alpha.size()))};
    return macdonald_E(idx).specialize(QtScalar::Subst::Zero, QtScalar::Subst::Zero);
}

XPolynomial key_polynomial(const Composition& alpha) {
    const MacdonaldIndex idx{alpha, Permutation::longest(static_cast<int>(alpha.size()))};
    return macdonald_E(idx).specialize(QtScalar::Subst::Zero, QtScalar::Subst::Zero);
}

XPolynomial schur_oracle(const Composition& lambda, int n) {
    if (!is_partition(lambda)) throw std::invalid_argument("not a partition");
    std::vector<int> rows;
    for (int v : lambda)
        if (v > 0) rows.push_back(v);
    XPolynomial result(n);
    if (static_cast<int>(rows.size()) > n) return result;  // no column-strict filling
    if (rows.empty()) return XPolynomial::one(n);

    std::vector<std::vector<int>> tab(rows.size());
    for (size_t r = 0; r < rows.size(); ++r) tab[r].assign(rows[r], 0);

    auto rec = [&](auto&& self, size_t r, int c) -> void {
        if (r == rows.size()) {
            Monomial w(n, 0);
            for (const auto& row : tab)
                for (int e : row) ++w[e - 1];
            result.add_term(w, QtScalar::one());
            return;
        }
        const int lo = std::max(c > 0 ? tab[r][c - 1] : 1,
                                r > 0 && c < rows[r - 1] ? tab[r - 1][c] + 1 : 1);
        for (int v = lo; v <= n; ++v) {
            tab[r][c] = v;
            if (c + 1 < rows[r]) self(self, r, c + 1);
            else self(self, r + 1, 0);
        }
        tab[r][c] = 0;
    };
    rec(rec, 0, 0);
    return result;
}

bool verify_knop_sahi(const Composition& alpha) {
    const int n = static_cast<int>(alpha.size());
    const Permutation w0 = Permutation::longest(n);

    Composition hat(alpha.begin() + 1, alpha.end());
    hat.push_back(alpha[0] + 1);
    const XPolynomial lhs = macdonald_E({hat, w0});

    // E_alpha(x_2, .., x_n, x_1/q)
    std::vector<VarImage> images(n);
    for (int i = 1; i < n; ++i) images[i - 1] = {QtScalar::one(), i + 1};
    images[n - 1] = {QtScalar::q_power(-1), 1};
    XPolynomial rhs = macdonald_E({alpha, w0}).substitute(images);
    rhs = (rhs * XPolynomial::variable(n, 1)).scaled(QtScalar::q_power(alpha[0]));
    return lhs == rhs;
}

bool verify_spec_to_atom(const Composition& alpha) {
    const int n = static_cast<int>(alpha.size());
    const XPolynomial lhs = macdonald_E({alpha, Permutation::longest(n)});

    std::vector<int> reverse_target(n);
    for (int i = 1; i <= n; ++i) reverse_target[i - 1] = n + 1 - i;
    const XPolynomial rhs =
        macdonald_E({alpha, Permutation::identity(n)})
            .permute_vars(reverse_target)
            .map_coefficients([](const QtScalar& c) { return c.invert_qt(); });
    return lhs == rhs;
}

bool verify_shift(const Composition& alpha, const Permutation& sigma) {
    const int n = static_cast<int>(alpha.size());
    Composition up = alpha;
    for (int& v : up) ++v;
    const XPolynomial lhs = macdonald_E({up, sigma});
    const XPolynomial rhs =
        macdonald_E({alpha, sigma}) * XPolynomial::monomial(Monomial(n, 1));
    return lhs == rhs;
}

bool verify_triangularity(const Composition& alpha, const Permutation& sigma) {
    const int n = static_cast<int>(alpha.size());
    const XPolynomial e = macdonald_E({alpha, sigma});
    const int weight_sum = std::accumulate(alpha.begin(), alpha.end(), 0);
    const Composition alpha_sorted = rev_sort(alpha);
    for (const Composition& gamma : compositions_of(weight_sum, n)) {
        // x^{sigma^{-1}(gamma)} assigns gamma_i to variable x_{sigma(i)}.
        Monomial m(n);
        for (int k = 1; k <= n; ++k) m[sigma(k) - 1] = gamma[k - 1];
        const QtScalar c = e.coefficient(m);
        if (gamma == alpha) {
            if (!c.is_one()) return false;
            continue;
        }
        const Composition gamma_sorted = rev_sort(gamma);
        if (alpha_sorted < gamma_sorted) {
            if (!c.is_zero()) return false;
        } else if (gamma_sorted == alpha_sorted && alpha < gamma) {
            if (!c.is_zero()) return false;
        }
    }
    return true;
}

bool verify_partial_symmetry(const Composition& alpha, const Permutation& sigma) {
    const int n = static_cast<int>(alpha.size());
    const XPolynomial e = macdonald_E({alpha, sigma});
    for (int j = 1; j < n; ++j) {
        if (alpha[j - 1] != alpha[j]) continue;
        const int lo = std::min(sigma(j), sigma(j + 1));
        const int hi = std::max(sigma(j), sigma(j + 1));
        if (hi != lo + 1) continue;
        if (!e.symmetric_in(lo)) return false;
    }
    return true;
}

}  // namespace pbmac
