#pragma once

/*
 * io.hpp
 * ------
 * Canonical serialization.  Byte-stable by construction:
 *   - x-monomial term lists and expansion indices are emitted in descending
 *     graded-lex order (leading term first);
 *   - (q, t) coefficient term lists in ascending graded-lex order, so small
 *     factors read naturally ("1-t", "1-q t^2").
 *
 * JSON forms:
 *   scalar      {"num":[[c,a,b],...],"den":[[c,a,b],...]}     c q^a t^b terms
 *   polynomial  [{"x":[e1..en],"num":...,"den":...},...]
 *   filling     {"shape":[...],"basement":[...],"rows":[[...],...]}
 *   expansion   {"basis":"...","terms":[{"index":[...],"coeff":{...}},...]}
 */

#include <string>

#include "pbmac/expansions.hpp"

namespace pbmac {

std::string to_json(const QtScalar& s);
std::string to_json(const XPolynomial& p);
std::string to_json(const AugmentedFilling& f);
std::string to_json(const ExpansionResult& e);

std::string to_latex(const QtScalar& s);
std::string to_latex(const XPolynomial& p);

std::string to_text(const QtScalar& s);
std::string to_text(const XPolynomial& p);
std::string to_text(const AugmentedFilling& f);

}  // namespace pbmac
