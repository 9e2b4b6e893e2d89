#pragma once

#include <string>

#include "dtorus/coeff.hpp"
#include "dtorus/poly.hpp"

namespace dtorus {

/// Parses the expression grammar into a polynomial over ctx's coefficient
/// domain. Generators: W, L, X, Y, Z (star directly after a generator is the
/// adjoint; any other * is a product), unit I; named constants q, z, zbar,
/// mu, hbar, i substituted from ctx; integer and rational literals (decimals
/// in the float backend only); + - and juxtaposition; ^ with integer
/// exponents (negative only on L/L*) and half-integer exponents on q.
template <class Ctx>
NCPoly<typename Ctx::C> parse_expression(const std::string& text, const Ctx& ctx);

/// Canonical rendering: terms in descending word order, coefficients matched
/// against the named constants where possible. Output re-parses to the same
/// polynomial (parse . print = id on canonical forms).
template <class Ctx>
std::string to_canonical_string(const NCPoly<typename Ctx::C>& p, const Ctx& ctx);

}  // namespace dtorus
