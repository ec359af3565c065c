#pragma once

/*
 * expansions.hpp
 * --------------
 * Symmetric-function layer on top of the E polynomials: the symmetric
 * Macdonald P via its permuted-basement expansion, Hall-Littlewood
 * polynomials, Kostka-Foulkes coefficients, Schur-into-t-atom expansions,
 * and exact linear algebra over Q(q, t).
 */

#include <map>
#include <optional>
#include <string>

#include "pbmac/hecke.hpp"

namespace pbmac {

struct ExpansionResult {
    std::string basis_tag;
    std::map<Composition, QtScalar, MonomialLess> coefficients;
};

// prod over non-basement boxes of shape (1 - q^(1+leg u) t^(arm u)).
QtScalar shape_hook_product(const Composition& shape);

// P_lambda(x; q, t) assembled as
//   shape_hook_product(lambda) * sum over gamma ~ lambda of
//     t^twinv_pi(gamma, sigma) E^sigma_gamma / shape_hook_product(gamma);
// the result is independent of sigma (a tested property).
XPolynomial symmetric_P(const Composition& lambda, const Permutation& sigma);

// The coefficient map of that expansion in the E^sigma basis.
ExpansionResult macdonald_P_expand(const Composition& lambda, const Permutation& sigma);

// P_lambda(x; t) = sum over gamma ~ lambda of t^twinv_pi(gamma, sigma)
// A^sigma_gamma(x; t); coefficients are bare powers of t.
ExpansionResult hall_littlewood_expand(const Composition& lambda, const Permutation& sigma);

// Classical Weyl symmetrization formula for P_lambda(x; t) in n variables,
// independent of the filling model.
XPolynomial hall_littlewood_oracle(const Composition& lambda, int n);

// K_{lambda,mu}(t) from the unitriangular system s_lambda = sum K P_mu,
// solved against the Hall-Littlewood oracle down dominance order.
QtScalar kostka_foulkes(const Composition& lambda, const Composition& mu, int n);

// s_lambda = sum over compositions gamma of t^twinv_pi(gamma, sigma)
// K_{lambda, sort(gamma)}(t) A^sigma_gamma(x; t).
ExpansionResult schur_in_atoms(const Composition& lambda, const Permutation& sigma);

// Exact coordinates of f in the given basis, or nullopt if f is outside the
// span (or the elements fail to be independent).
std::optional<std::vector<QtScalar>> basis_solve(const XPolynomial& f,
                                                 const std::vector<XPolynomial>& basis);

// Sum of coefficient * basis element; basis elements fetched by the callback.
XPolynomial reconstruct(const ExpansionResult& expansion, int n,
                        const std::function<XPolynomial(const Composition&)>& element);

}  // namespace pbmac
