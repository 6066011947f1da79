#include "affinv/krylov.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "affinv/errors.hpp"
#include "affinv/invariants.hpp"

namespace affinv {

RatMatrix companion(const CompanionSpec& spec) {
  const std::size_t n = spec.alpha.size();
  if (n == 0) throw InvalidArgument("companion: empty coefficient vector");
  RatMatrix x(n);
  for (std::size_t r = 1; r < n; ++r) x(r, r - 1) = 1;
  for (std::size_t r = 0; r < n; ++r) x(r, n - 1) = spec.alpha[n - 1 - r];
  return x;
}

PGroupElement p_check(const RatMatrix& y) {
  const std::size_t n = y.dim();
  if (y.row(n - 1) != RatVector::unit(n, n - 1)) throw NotInP("last row is not (0, ..., 0, 1)");
  Rational d = determinant(y);
  if (d == 0) throw SingularMatrix("P element must be invertible");
  return PGroupElement(y, std::move(d), affinv::inverse(y));
}

RatMatrix krylov_rows(const RatVector& w, const RatMatrix& x) {
  const std::size_t n = x.dim();
  RatMatrix rows(n);
  RatVector r = w;
  for (std::size_t k = 0; k < n; ++k) {
    rows.set_row(k, r);
    if (k + 1 < n) r = r * x;
  }
  return rows;
}

KrylovMatrix krylov_matrix(const RatMatrix& x) {
  return {x, krylov_rows(RatVector::unit(x.dim(), x.dim() - 1), x)};
}

Rational D(const RatMatrix& x) { return determinant(krylov_matrix(x).rows); }

Rational D_via_trace(const RatMatrix& x) {
  const std::size_t n = x.dim();
  RatMatrix m(n);
  for (std::size_t k = 0; k < n; ++k) {
    const RatMatrix xk = power(x, static_cast<unsigned>(k));
    for (std::size_t j = 1; j <= n; ++j) m(k, j - 1) = trace_form(xk, BasisElement{j, n}.matrix(n));
  }
  return determinant(m);
}

int companion_sign(std::size_t n) { return (n * (n - 1) / 2) % 2 == 0 ? 1 : -1; }

bool in_omega(const RatMatrix& x) { return D(x) != 0; }

bool is_regular(const RatMatrix& x) { return min_poly(x).degree() == static_cast<int>(x.dim()); }

std::pair<Rational, Rational> transformation_law(const RatMatrix& x, const PGroupElement& y) {
  if (x.dim() != y.matrix().dim()) throw DimensionMismatch("transformation_law: dimension mismatch");
  const RatMatrix conj = y.matrix() * x * y.inverse();
  return {D(conj), Rational(D(x) / y.det())};
}

std::pair<Rational, Rational> homogeneity_check(const RatMatrix& x, const Rational& t) {
  const std::size_t n = x.dim();
  Rational factor = 1;
  for (std::size_t e = 0; e < n * (n - 1) / 2; ++e) factor *= t;
  return {D(t * x), Rational(factor * D(x))};
}

namespace {

bool is_cyclic(const RatVector& w, const RatMatrix& x) { return determinant(krylov_rows(w, x)) != 0; }

}  // namespace

std::variant<RatVector, NotRegular> find_cyclic_row(const RatMatrix& x, std::uint64_t seed, unsigned max_tries) {
  const std::size_t n = x.dim();
  UniPoly mp = min_poly(x);
  if (mp.degree() < static_cast<int>(n)) return NotRegular{std::move(mp)};

  for (std::size_t idx = n; idx-- > 0;) {
    RatVector e = RatVector::unit(n, idx);
    if (is_cyclic(e, x)) return e;
  }

  std::mt19937_64 rng(seed);
  long m = 1;
  for (unsigned t = 0; t < max_tries; ++t) {
    std::uniform_int_distribution<long> dist(-m, m);
    RatVector w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = Rational(dist(rng));
    if (!w.is_zero() && is_cyclic(w, x)) return w;
    m = std::min<long>(2 * m, 1L << 30);
  }
  throw SearchExhausted("no cyclic row found after " + std::to_string(max_tries) + " random draws");
}

RatMatrix complete_with_last_row(const RatVector& w) {
  const std::size_t n = w.size();
  std::vector<RatVector> chosen{w};
  for (std::size_t idx = 0; idx < n && chosen.size() < n; ++idx) {
    chosen.push_back(RatVector::unit(n, idx));
    if (rank(chosen) < chosen.size()) chosen.pop_back();
  }
  if (chosen.size() < n) throw InvalidArgument("complete_with_last_row: zero row cannot be completed");
  RatMatrix g(n);
  for (std::size_t r = 0; r + 1 < n; ++r) g.set_row(r, chosen[r + 1]);
  g.set_row(n - 1, w);
  return g;
}

std::variant<RatMatrix, NotRegular> conjugate_into_omega(const RatMatrix& x, std::uint64_t seed, unsigned max_tries) {
  if (in_omega(x)) return RatMatrix::identity(x.dim());
  auto found = find_cyclic_row(x, seed, max_tries);
  if (auto* nr = std::get_if<NotRegular>(&found)) return std::move(*nr);
  const RatMatrix g = complete_with_last_row(std::get<RatVector>(found));
  if (!in_omega(g * x * affinv::inverse(g))) {
    throw std::logic_error("conjugate_into_omega: conjugate failed exact verification");
  }
  return g;
}

}  // namespace affinv
