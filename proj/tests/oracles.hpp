#pragma once

// Reference computations that share no code with the library.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "affinv/exactmat.hpp"

namespace oracle {

using affinv::Rational;
using affinv::RatMatrix;

inline int parity(const std::vector<std::size_t>& perm) {
  int inversions = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

// Sum over all n! permutations.
inline Rational leibniz_det(const RatMatrix& x) {
  const std::size_t n = x.dim();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    Rational term = parity(perm);
    for (std::size_t r = 0; r < n; ++r) term *= x(r, perm[r]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline RatMatrix naive_mul(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t n = a.dim();
  RatMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

inline RatMatrix naive_power(const RatMatrix& x, unsigned k) {
  RatMatrix r = RatMatrix::identity(x.dim());
  for (unsigned s = 0; s < k; ++s) r = naive_mul(r, x);
  return r;
}

// det(tI - x) at a rational point t.
inline Rational char_poly_at(const RatMatrix& x, const Rational& t) {
  RatMatrix m(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j) m(i, j) = (i == j ? t : Rational(0)) - x(i, j);
  return leibniz_det(m);
}

// Rows e_n, e_n x, ..., e_n x^{n-1} computed from full powers.
inline Rational krylov_det(const RatMatrix& x) {
  const std::size_t n = x.dim();
  RatMatrix k(n);
  for (std::size_t r = 0; r < n; ++r) {
    const RatMatrix p = naive_power(x, static_cast<unsigned>(r));
    for (std::size_t c = 0; c < n; ++c) k(r, c) = p(n - 1, c);
  }
  return leibniz_det(k);
}

}  // namespace oracle
