#pragma once

/*
 * macdonald.hpp
 * -------------
 * Permuted-basement non-symmetric Macdonald polynomials E^sigma_alpha(x;q,t)
 * computed from the non-attacking filling model:
 *
 *   E = sum over fillings of  x^F q^maj(F) t^coinv(F) *
 *       prod over non-basement boxes u with F(u) != F(left of u) of
 *           (1 - t) / (1 - q^(1+leg u) t^(1+arm u)).
 *
 * Basement boxes never contribute a factor.  Specializing q = 0 gives the
 * permuted-basement Demazure t-atoms, q = t = 0 the classical atoms and
 * keys (basement identity resp. the longest permutation).
 */

#include "pbmac/filling.hpp"

namespace pbmac {

struct MacdonaldIndex {
    Composition shape;
    Permutation basement;
};

// Memoized; safe for concurrent use.
XPolynomial macdonald_E(const MacdonaldIndex& idx);
void clear_macdonald_cache();

// E at q = 0.
XPolynomial t_atom(const MacdonaldIndex& idx);

// t-atom with the longest basement.
XPolynomial t_key(const Composition& alpha);

// q = t = 0 specializations: classical Demazure atom (identity basement)
// and key polynomial (longest basement).
XPolynomial demazure_atom(const Composition& alpha);
XPolynomial key_polynomial(const Composition& alpha);

// Schur polynomial s_lambda(x_1..x_n) by semistandard tableau enumeration.
// Independent of the filling model; used as an oracle.
XPolynomial schur_oracle(const Composition& lambda, int n);

// E_{(a_2..a_n, a_1+1)} == q^{a_1} x_1 E_alpha(x_2,..,x_n, x_1/q), key basement.
bool verify_knop_sahi(const Composition& alpha);

// E^{w0}_alpha(x_1..x_n; q, t) == E^{id}_alpha(x_n..x_1; 1/q, 1/t).
bool verify_spec_to_atom(const Composition& alpha);

// E^sigma_{alpha + (1..1)} == x_1...x_n E^sigma_alpha.
bool verify_shift(const Composition& alpha, const Permutation& sigma);

// Coefficient triangularity of E^sigma_alpha in the monomial basis.
bool verify_triangularity(const Composition& alpha, const Permutation& sigma);

// x_i x_{i+1} symmetry whenever two equal-length adjacent rows carry
// basement labels {i, i+1}.
bool verify_partial_symmetry(const Composition& alpha, const Permutation& sigma);

}  // namespace pbmac
