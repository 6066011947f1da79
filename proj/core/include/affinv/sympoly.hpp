#pragma once

// Sparse multivariate polynomials over Q in the n^2 entry variables
// x_11, x_12, ..., x_nn (variable index (i-1) n + (j-1)), and the explicit
// polynomial D_n = det(e_n, e_n X, ..., e_n X^(n-1)) of a generic matrix X.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <variant>
#include <vector>

#include "affinv/exactmat.hpp"
#include "affinv/json_io.hpp"

namespace affinv {

using Exponents = std::vector<std::uint16_t>;

/// Graded lexicographic order, largest term first: higher total degree
/// first, ties broken lexicographically with x_11 > x_12 > ... > x_nn.
struct GrlexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

std::size_t total_degree(const Exponents& e);

class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexDescending>;

  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}
  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  /// The entry x_ij (1-based) of an n x n generic matrix.
  static MultiPoly entry(std::size_t n, std::size_t i, std::size_t j);

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Coefficient of a monomial (zero when absent).
  Rational coefficient(const Exponents& e) const;
  /// Adds c x^e, dropping the term if it cancels.
  void add_term(const Exponents& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);

  /// Formal partial derivative in variable `index`.
  MultiPoly derivative(std::size_t index) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Replaces variable v by images[v].
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;

  /// [{"coef": "p/q", "exps": [...]}, ...] in graded-lex descending order.
  Json to_json() const;
  static MultiPoly from_json(std::size_t nvars, const Json& j);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t nvars_;
  TermMap terms_;
};

/// Throws DimensionMismatch when variable counts differ.
MultiPoly operator+(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(MultiPoly a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(MultiPoly a, const Rational& s);

/// Square matrix of polynomials sharing one variable count.
class SymMatrix {
 public:
  SymMatrix(std::size_t n, std::size_t nvars);
  /// X with entry (i, j) equal to the variable x_ij.
  static SymMatrix generic(std::size_t n);
  static SymMatrix from_constant(const RatMatrix& m, std::size_t nvars);

  std::size_t dim() const noexcept { return n_; }
  std::size_t nvars() const noexcept { return nvars_; }
  MultiPoly& operator()(std::size_t r, std::size_t c) { return e_[r * n_ + c]; }
  const MultiPoly& operator()(std::size_t r, std::size_t c) const { return e_[r * n_ + c]; }

 private:
  std::size_t n_;
  std::size_t nvars_;
  std::vector<MultiPoly> e_;
};

SymMatrix operator*(const SymMatrix& a, const SymMatrix& b);
/// Row vector of polynomials times a polynomial matrix.
std::vector<MultiPoly> operator*(const std::vector<MultiPoly>& row, const SymMatrix& m);

/// Determinant by Laplace expansion along the first row, skipping zeros.
MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& rows);

inline constexpr std::size_t kDefaultNMax = 4;

/// det(e_n, e_n X, ..., e_n X^(n-1)) for an arbitrary polynomial matrix X.
/// The first row e_n is eliminated up front, leaving an (n-1) x (n-1)
/// cofactor expansion.
MultiPoly symbolic_krylov_det(const SymMatrix& x);
/// D_n of the generic matrix. Throws ResourceLimit for n > n_max and
/// InvalidArgument for n = 0.
MultiPoly symbolic_D(std::size_t n, std::size_t n_max = kDefaultNMax);

struct NotHomogeneous {
  Exponents first;
  Exponents second;
};
struct AllDegrees {};
using Homogeneity = std::variant<std::size_t, NotHomogeneous, AllDegrees>;

/// Common total degree, or a pair of terms of different degree. The zero
/// polynomial is homogeneous of every degree.
Homogeneity is_homogeneous(const MultiPoly& p);

/// Exact evaluation at the entries of x; requires nvars = n^2.
Rational poly_eval(const MultiPoly& p, const RatMatrix& x);

/// sum_v x_v dp/dx_v.
MultiPoly euler_operator(const MultiPoly& p);

}  // namespace affinv
