#pragma once

// Expression trees for scalar fields phi : gl(n) -> R.
//
// Node kinds: const(Rational), var(i, j) (the entry x_ij, 1-based), add, mul,
// pow(nonnegative integer exponent) and pk(k) = tr(x^k) / k. Every field is a
// polynomial in the n^2 entries, so exact evaluation and exact partial
// derivatives are always available.
//
// JSON form:
//   {"kind": "const", "value": "3/2"}
//   {"kind": "var", "i": 1, "j": 2}
//   {"kind": "add", "args": [...]}      {"kind": "mul", "args": [...]}
//   {"kind": "pow", "base": {...}, "exp": 2}
//   {"kind": "pk", "k": 2}

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "affinv/exactmat.hpp"
#include "affinv/json_io.hpp"

namespace affinv {

class ScalarField {
 public:
  enum class Kind { kConst, kVar, kAdd, kMul, kPow, kPk };

  static ScalarField constant(const Rational& value);
  /// Entry x_ij, 1-based.
  static ScalarField var(std::size_t i, std::size_t j);
  /// tr(x^k) / k, k >= 1.
  static ScalarField pk(unsigned k);
  static ScalarField add(std::vector<ScalarField> args);
  static ScalarField mul(std::vector<ScalarField> args);
  static ScalarField pow(ScalarField base, unsigned exponent);

  Kind kind() const noexcept { return node_->kind; }
  const Rational& value() const noexcept { return node_->value; }
  std::size_t row() const noexcept { return node_->i; }
  std::size_t col() const noexcept { return node_->j; }
  unsigned exponent() const noexcept { return node_->exponent; }
  const std::vector<ScalarField>& args() const noexcept { return node_->args; }

  /// True when the field only references p_k nodes and constants, i.e. it is
  /// a polynomial in p_1, p_2, ... and hence conjugation invariant.
  bool is_trace_polynomial() const;
  /// Largest row/column index referenced by a var node (0 if none).
  std::size_t max_index() const;
  /// Throws IndexOutOfRange if a var node does not fit an n x n matrix.
  void validate(std::size_t n) const;

  Json to_json() const;
  static ScalarField from_json(const Json& j);

 private:
  struct Node {
    Kind kind;
    Rational value;
    std::size_t i = 0;
    std::size_t j = 0;
    unsigned exponent = 0;
    std::vector<ScalarField> args;
  };
  explicit ScalarField(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator*(const ScalarField& a, const ScalarField& b);

Rational evaluate(const ScalarField& f, const RatMatrix& x);
/// entries is a row-major n x n matrix of doubles.
double evaluate(const ScalarField& f, std::span<const double> entries, std::size_t n);

/// Exact partials by forward-mode differentiation: result(a, b) = df/dx_{ab}
/// (0-based storage of the 1-based entry x_{a+1, b+1}).
RatMatrix partial_derivatives(const ScalarField& f, const RatMatrix& x);
std::vector<double> partial_derivatives(const ScalarField& f, std::span<const double> entries, std::size_t n);

}  // namespace affinv
