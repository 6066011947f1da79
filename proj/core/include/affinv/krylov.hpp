#pragma once

// Krylov rows e_n, e_n x, ..., e_n x^(n-1), their determinant D(x), the open
// set Omega = {D != 0}, companion matrices, the mirabolic group P (last row
// (0, ..., 0, 1)) and conjugation of regular elements into Omega.
//
// Conventions for n = 1: the Krylov matrix is [1], D = 1, Omega is all of
// gl(1), every element is regular and P = {[1]}.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "affinv/exactmat.hpp"

namespace affinv {

/// (alpha_1, ..., alpha_n) of the companion matrix.
struct CompanionSpec {
  std::vector<Rational> alpha;
};

/// Companion matrix: 1s on the subdiagonal and last column
/// (alpha_n, alpha_(n-1), ..., alpha_1) read top to bottom. Its characteristic
/// polynomial is t^n - alpha_1 t^(n-1) - ... - alpha_n.
/// Throws InvalidArgument for an empty spec.
RatMatrix companion(const CompanionSpec& spec);

/// Element of P. Construction goes through p_check.
class PGroupElement {
 public:
  const RatMatrix& matrix() const noexcept { return m_; }
  const Rational& det() const noexcept { return det_; }
  const RatMatrix& inverse() const noexcept { return inv_; }

 private:
  friend PGroupElement p_check(const RatMatrix& y);
  PGroupElement(RatMatrix m, Rational det, RatMatrix inv)
      : m_(std::move(m)), det_(std::move(det)), inv_(std::move(inv)) {}
  RatMatrix m_;
  Rational det_;
  RatMatrix inv_;
};

/// Throws NotInP when the last row is not e_n, SingularMatrix when det y = 0.
PGroupElement p_check(const RatMatrix& y);

struct KrylovMatrix {
  RatMatrix base;
  /// Row k (0-based) is e_n x^k.
  RatMatrix rows;
};

/// Rows by repeated row-times-matrix products; x^k is never formed.
KrylovMatrix krylov_matrix(const RatMatrix& x);
/// Rows w, w x, ..., w x^(n-1).
RatMatrix krylov_rows(const RatVector& w, const RatMatrix& x);

/// det of the Krylov rows.
Rational D(const RatMatrix& x);
/// det of the matrix with (k+1, j) entry tr(x^k E_jn), built from powers of x
/// and the trace form. Equal to D(x).
Rational D_via_trace(const RatMatrix& x);
/// (-1)^(n(n-1)/2), the value of D at every companion matrix.
int companion_sign(std::size_t n);

bool in_omega(const RatMatrix& x);
/// deg min_poly(x) = n.
bool is_regular(const RatMatrix& x);

/// (D(y x y^-1), det(y)^-1 D(x)).
std::pair<Rational, Rational> transformation_law(const RatMatrix& x, const PGroupElement& y);
/// (D(t x), t^(n(n-1)/2) D(x)).
std::pair<Rational, Rational> homogeneity_check(const RatMatrix& x, const Rational& t);

struct NotRegular {
  UniPoly min_poly;
};

inline constexpr unsigned kDefaultCyclicTries = 64;

/// Looks for a row w with w, w x, ..., w x^(n-1) independent. Tries e_n, then
/// e_(n-1), ..., e_1, then up to max_tries random integer
/// rows from [-m, m] where m doubles after every draw (capped at 2^30).
/// Returns NotRegular when x has no cyclic vector; throws SearchExhausted if
/// x is regular but every draw failed.
std::variant<RatVector, NotRegular> find_cyclic_row(const RatMatrix& x, std::uint64_t seed,
                                                     unsigned max_tries = kDefaultCyclicTries);

/// Invertible g with D(g x g^-1) != 0, verified exactly. g has last row equal
/// to the cyclic row w; the remaining rows are standard basis rows picked
/// greedily to keep the rank full. g = I when x is already in Omega.
std::variant<RatMatrix, NotRegular> conjugate_into_omega(const RatMatrix& x, std::uint64_t seed,
                                                         unsigned max_tries = kDefaultCyclicTries);

/// Completion used by conjugate_into_omega: rows (e_a, ..., e_b, w).
RatMatrix complete_with_last_row(const RatVector& w);

}  // namespace affinv
