#pragma once

// Trace form B(x, y) = tr(xy) on gl(n), the trace-power invariants
// p_k(x) = tr(x^k) / k and the identities they satisfy.
//
// Gradient convention: with respect to B, the gradient of f is the matrix
// whose (i, j) entry is df/dx_ji, so that tr(grad f(x) v) is the directional
// derivative of f along v. Under this convention grad p_k(x) = x^(k-1).
// The dual of E_ij under B is E_ji.

#include <cstddef>

#include "affinv/exactmat.hpp"
#include "affinv/scalar_field.hpp"

namespace affinv {

/// E_ij, 1-based.
struct BasisElement {
  std::size_t i;
  std::size_t j;

  /// Throws IndexOutOfRange unless 1 <= i, j <= n.
  RatMatrix matrix(std::size_t n) const;
  BasisElement dual() const noexcept { return {j, i}; }
};

Rational trace_form(const RatMatrix& x, const RatMatrix& y);

/// n^2 x n^2 Gram matrix of the trace form on (E_11, E_12, ..., E_nn).
RatMatrix trace_form_gram(std::size_t n);

/// tr(x^k) / k; throws InvalidArgument for k < 1.
Rational p_k(const RatMatrix& x, unsigned k);
/// x^(k-1); throws InvalidArgument for k < 1.
RatMatrix grad_p_k(const RatMatrix& x, unsigned k);

/// tr(x^k E_ji), which equals the (i, j) entry of x^k. Indices are 1-based.
Rational entry_bracket_pairing(const RatMatrix& x, unsigned k, std::size_t i, std::size_t j);

/// Sum over all (i, j) of tr(x^k E_ji) [E_ij, x], accumulated term by term.
/// The sum equals [x^k, x] and is therefore zero.
RatMatrix basis_expansion_residual(const RatMatrix& x, unsigned k);

/// Gradient of f at x under the trace form, from exact forward-mode partials.
RatMatrix gradient(const ScalarField& f, const RatMatrix& x);

/// [grad f(x), x]; zero whenever f is a polynomial in p_1, ..., p_n.
RatMatrix gradient_commutator_residual(const ScalarField& f, const RatMatrix& x);

}  // namespace affinv
