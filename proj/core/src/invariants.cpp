#include "affinv/invariants.hpp"

#include <string>

#include "affinv/errors.hpp"

namespace affinv {

RatMatrix BasisElement::matrix(std::size_t n) const {
  if (i < 1 || j < 1 || i > n || j > n) {
    throw IndexOutOfRange("basis element E_" + std::to_string(i) + "," + std::to_string(j) + " outside n = " +
                          std::to_string(n));
  }
  return RatMatrix::unit(n, i - 1, j - 1);
}

Rational trace_form(const RatMatrix& x, const RatMatrix& y) {
  if (x.dim() != y.dim()) throw DimensionMismatch("trace_form: operands of different dimension");
  // tr(xy) = sum_{a,b} x_ab y_ba without forming the product.
  Rational t = 0;
  for (std::size_t a = 0; a < x.dim(); ++a)
    for (std::size_t b = 0; b < x.dim(); ++b) t += x(a, b) * y(b, a);
  return t;
}

RatMatrix trace_form_gram(std::size_t n) {
  RatMatrix gram(n * n);
  for (std::size_t p = 0; p < n * n; ++p) {
    const RatMatrix ep = BasisElement{p / n + 1, p % n + 1}.matrix(n);
    for (std::size_t q = 0; q < n * n; ++q) {
      gram(p, q) = trace_form(ep, BasisElement{q / n + 1, q % n + 1}.matrix(n));
    }
  }
  return gram;
}

Rational p_k(const RatMatrix& x, unsigned k) {
  if (k < 1) throw InvalidArgument("p_k requires k >= 1");
  return Rational(power(x, k).trace() / k);
}

RatMatrix grad_p_k(const RatMatrix& x, unsigned k) {
  if (k < 1) throw InvalidArgument("grad_p_k requires k >= 1");
  return power(x, k - 1);
}

Rational entry_bracket_pairing(const RatMatrix& x, unsigned k, std::size_t i, std::size_t j) {
  return trace_form(power(x, k), BasisElement{j, i}.matrix(x.dim()));
}

RatMatrix basis_expansion_residual(const RatMatrix& x, unsigned k) {
  const std::size_t n = x.dim();
  const RatMatrix xk = power(x, k);
  RatMatrix sum(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const Rational coeff = trace_form(xk, BasisElement{j, i}.matrix(n));
      if (coeff == 0) continue;
      sum += coeff * commutator(BasisElement{i, j}.matrix(n), x);
    }
  }
  return sum;
}

RatMatrix gradient(const ScalarField& f, const RatMatrix& x) {
  f.validate(x.dim());
  return partial_derivatives(f, x).transpose();
}

RatMatrix gradient_commutator_residual(const ScalarField& f, const RatMatrix& x) {
  return commutator(gradient(f, x), x);
}

}  // namespace affinv
