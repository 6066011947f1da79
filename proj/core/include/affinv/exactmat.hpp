#pragma once

// Exact dense linear algebra over the rationals.
//
// Storage is 0-based (row, column); the 1-based (i, j) convention of the
// mathematical notation is used by the JSON layer and by the index-taking
// operations in invariants.hpp and calculus.hpp.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace affinv {

/// Arbitrary-precision rational, always kept in canonical form (gcd = 1,
/// positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" (optional leading '-', decimal digits only, q != 0).
Rational parse_rational(std::string_view text);
/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

class RatVector {
 public:
  RatVector() = default;
  explicit RatVector(std::size_t n) : v_(n) {}
  RatVector(std::initializer_list<Rational> init) : v_(init) {}
  explicit RatVector(std::vector<Rational> v) : v_(std::move(v)) {}

  static RatVector unit(std::size_t n, std::size_t index);

  std::size_t size() const noexcept { return v_.size(); }
  Rational& operator[](std::size_t i) { return v_[i]; }
  const Rational& operator[](std::size_t i) const { return v_[i]; }
  const std::vector<Rational>& values() const noexcept { return v_; }

  bool is_zero() const;

  friend bool operator==(const RatVector&, const RatVector&) = default;

 private:
  std::vector<Rational> v_;
};

/// Square n x n matrix of rationals, n >= 1, row-major.
class RatMatrix {
 public:
  explicit RatMatrix(std::size_t n);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);

  static RatMatrix identity(std::size_t n);
  /// Elementary matrix with a single 1 at (row, col), 0-based.
  static RatMatrix unit(std::size_t n, std::size_t row, std::size_t col);

  std::size_t dim() const noexcept { return n_; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  RatVector row(std::size_t r) const;
  void set_row(std::size_t r, const RatVector& v);
  Rational trace() const;
  RatMatrix transpose() const;
  bool is_zero() const;

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  RatMatrix& operator*=(const Rational& s);

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<Rational> a_;
};

RatMatrix operator+(RatMatrix a, const RatMatrix& b);
RatMatrix operator-(RatMatrix a, const RatMatrix& b);
RatMatrix operator-(RatMatrix a);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(RatMatrix a, const Rational& s);
RatMatrix operator*(const Rational& s, RatMatrix a);
/// Row vector times matrix.
RatVector operator*(const RatVector& v, const RatMatrix& a);

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);
std::ostream& operator<<(std::ostream& os, const RatVector& v);

/// Univariate polynomial with rational coefficients in ascending degree.
/// Trailing zeros are never stored; the zero polynomial has no coefficients.
class UniPoly {
 public:
  static constexpr int kZeroDegree = -1;

  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> ascending);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }
  /// Coefficient of t^k; zero beyond the degree.
  Rational coefficient(std::size_t k) const;

  Rational operator()(const Rational& t) const;
  /// Matrix substitution p(x) by Horner's rule.
  RatMatrix operator()(const RatMatrix& x) const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct PolyDivision {
  UniPoly quotient;
  UniPoly remainder;
};

/// Euclidean division; throws InvalidArgument on a zero divisor.
PolyDivision divmod(const UniPoly& a, const UniPoly& b);

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

// ---------------------------------------------------------------------------

RatMatrix power(const RatMatrix& x, unsigned k);
RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);

/// Cofactor expansion for n <= 3, fraction-free Bareiss elimination on the
/// denominator-cleared integer matrix otherwise.
Rational determinant(const RatMatrix& x);
std::size_t rank(const RatMatrix& x);
/// Rank of an arbitrary list of row vectors of a common length.
std::size_t rank(const std::vector<RatVector>& rows);
/// Throws SingularMatrix when det(x) = 0.
RatMatrix inverse(const RatMatrix& x);

/// Monic det(tI - x), degree n.
UniPoly char_poly(const RatMatrix& x);
/// Monic polynomial of least degree annihilating x.
UniPoly min_poly(const RatMatrix& x);

struct NoSolution {};
struct NonUnique {};
using LinearSolution = std::variant<RatVector, NoSolution, NonUnique>;

LinearSolution solve_linear(const RatMatrix& a, const RatVector& b);

}  // namespace affinv
