#pragma once

/*
 * hecke.hpp
 * ---------
 * Demazure operators pi_i = d_i x_i, theta_i = pi_i - 1 and their
 * Demazure-Lusztig t-deformations
 *
 *   tpi_i(f)    = (1-t) pi_i(f)    + t s_i(f)
 *   ttheta_i(f) = (1-t) theta_i(f) + t s_i(f),
 *
 * satisfying ttheta_i^2 = (t-1) ttheta_i + t and the braid relations, so
 * words indexed by permutations are well-defined.  Operator words apply
 * left to right: the first letter acts first.
 */

#include "pbmac/macdonald.hpp"

namespace pbmac {

XPolynomial op_pi(const XPolynomial& f, int i);
XPolynomial op_theta(const XPolynomial& f, int i);
XPolynomial op_tpi(const XPolynomial& f, int i);
XPolynomial op_ttheta(const XPolynomial& f, int i);

enum class OpKind { Pi, Theta, TPi, TTheta };

struct OpLetter {
    OpKind kind;
    int index;
};

using OperatorWord = std::vector<OpLetter>;

XPolynomial apply_word(XPolynomial f, const OperatorWord& word);

// The canonical reduced word of sigma, each letter carrying `kind`.
OperatorWord word_for(OpKind kind, const Permutation& sigma);
OperatorWord word_for(OpKind kind, const std::vector<int>& letters);

struct TwinvStats {
    int theta_count = 0;  // pairs i < j with a_i <= a_j and sigma_i > sigma_j
    int pi_count = 0;     // pairs i < j with a_i <  a_j and sigma_i > sigma_j
    friend bool operator==(const TwinvStats&, const TwinvStats&) = default;
};

TwinvStats twinv(const Composition& alpha, const Permutation& sigma);

// Basement-permuting identity: with gamma_i the length of the row whose
// basement label is i,
//   ttheta_i E^sigma = E^{sigma s_i} * (t if gamma_i <= gamma_{i+1} else 1)
//     when the exchange shortens sigma, and
//   tpi_i    E^sigma = E^{sigma s_i} * (t if gamma_i <  gamma_{i+1} else 1)
//     when it lengthens sigma.
bool verify_basement_permute(const Composition& alpha, const Permutation& sigma, int i);

// ttheta_sigma E^{w0}_alpha == t^twinv_theta(w0 alpha, sigma) E^{w0 sigma}_alpha
// and tpi_sigma E^{id}_alpha == t^twinv_pi(alpha, sigma) E^sigma_alpha.
bool verify_twinv_corollary(const Composition& alpha, const Permutation& sigma);

// E^sigma_{s_j alpha} computed from E^sigma_alpha by the shape-exchange
// formulas, without re-enumerating fillings.  Requires sigma_j == sigma_{j+1}+1
// and alpha_j != alpha_{j+1}; throws std::domain_error otherwise.
XPolynomial shape_transpose(const MacdonaldIndex& idx, int j);

// Same exchange applied to a caller-supplied value of E^sigma_alpha.
XPolynomial shape_transpose_apply(const XPolynomial& e, const MacdonaldIndex& idx, int j);

// Solve (ttheta_i + A) f = g for constant A not in {1, t}.
XPolynomial invert_ttheta_plus_const(const XPolynomial& g, int i, const QtScalar& a);

bool verify_quadratic_and_inverse(int i, const XPolynomial& f);

// The four mixed braid relations between tpi and ttheta at indices i-1, i.
bool verify_mixed_braid(const XPolynomial& f, int i);

// Shape-permuting action on t-atoms and t-keys:
//   ttheta_i A_alpha == A_{s_i alpha}     when alpha_i > alpha_{i+1},
//   tpi_i    K_alpha == K_{s_j alpha}     when alpha_j < alpha_{j+1}, j = n-i.
bool verify_tatom_tkey_shape_corollary(const Composition& alpha);

// Two-case tpi action on permuted-basement t-atoms over rows j, j+1 with
// alpha_j < alpha_{j+1} and consecutive basement labels.
bool verify_tatom_pi_lemma(const Composition& alpha, const Permutation& sigma);

// K_{sigma lambda} == A^{w0 sigma}_lambda and A_{sigma mu} == A^sigma_mu
// (mu the increasing rearrangement), sigma shortest.
bool verify_tkey_pbf(const Composition& lambda, const Composition& target);

// A^sigma_alpha == t^-twinv_pi(alpha, sigma) tpi_sigma ttheta_tau x^lambda,
// tau the shortest permutation with tau(lambda) == alpha.
bool verify_rho_word(const Composition& alpha, const Permutation& sigma);

}  // namespace pbmac
