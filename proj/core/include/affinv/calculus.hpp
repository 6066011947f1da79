#pragma once

// Floating-point layer: central finite differences along adjoint vector
// fields L_ij(x) = [E_ij, x], the reduced n x n system obtained from a locally
// P-invariant function, and a Monte-Carlo weak form of the same statement for
// densities on a box.
//
// Index arguments (i, j) are 1-based.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "affinv/exactmat.hpp"
#include "affinv/scalar_field.hpp"

namespace affinv {

class FloatMatrix {
 public:
  explicit FloatMatrix(std::size_t n);
  /// Throws InvalidArgument on a non-finite entry.
  FloatMatrix(std::size_t n, std::vector<double> entries);
  explicit FloatMatrix(const RatMatrix& m);

  static FloatMatrix identity(std::size_t n);
  /// E_ij, 1-based.
  static FloatMatrix unit(std::size_t n, std::size_t i, std::size_t j);

  std::size_t dim() const noexcept { return n_; }
  double& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  const std::vector<double>& entries() const noexcept { return a_; }
  double trace() const;
  double max_abs() const;

  FloatMatrix& operator+=(const FloatMatrix& o);
  FloatMatrix& operator-=(const FloatMatrix& o);
  FloatMatrix& operator*=(double s);

 private:
  std::size_t n_;
  std::vector<double> a_;
};

FloatMatrix operator+(FloatMatrix a, const FloatMatrix& b);
FloatMatrix operator-(FloatMatrix a, const FloatMatrix& b);
FloatMatrix operator*(FloatMatrix a, double s);
FloatMatrix operator*(const FloatMatrix& a, const FloatMatrix& b);
FloatMatrix commutator(const FloatMatrix& a, const FloatMatrix& b);
FloatMatrix power(const FloatMatrix& x, unsigned k);

enum class FDScheme { kCentral };

struct FDConfig {
  double h = 1e-5;
  FDScheme scheme = FDScheme::kCentral;
  /// Bound on the P-invariance residual.
  double tau_res = 1e-6;
  /// Bound on the reduced-system residuals r_k.
  double tau_sys = 1e-5;
  /// Bound on |L_nj phi|.
  double tau_lemma = 1e-5;
  /// Bound on the full identity residual for arbitrary fields.
  double tau_comb = 1e-5;
  /// Minimum |D(x)| for the lemma check.
  double delta = 0.1;

  /// Throws InvalidArgument unless every step and tolerance is positive.
  void validate() const;
};

double eval_field(const ScalarField& f, const FloatMatrix& x);

/// (f(x + h v) - f(x - h v)) / (2 h).
double fd_directional(const ScalarField& f, const FloatMatrix& x, const FloatMatrix& v, const FDConfig& cfg);

/// Directional derivative of f at x along [E_ij, x].
double lie_derivative(const ScalarField& f, std::size_t i, std::size_t j, const FloatMatrix& x, const FDConfig& cfg);

/// max |L_ij f(x)| over 1 <= i <= n-1, 1 <= j <= n (0 when n = 1).
double p_invariance_residual(const ScalarField& f, const FloatMatrix& x, const FDConfig& cfg);

/// |sum_ij (x^k)_ij L_ij f(x)|, 0 <= k <= n-1. The vector field inside the
/// sum is identically zero, so this measures finite-difference error only.
double full_identity_residual(const ScalarField& f, const FloatMatrix& x, unsigned k, const FDConfig& cfg);

struct ReducedSystem {
  /// r_k = sum_j (x^k)_nj L_nj f(x), k = 0..n-1.
  std::vector<double> residuals;
  /// s_j = L_nj f(x), j = 1..n.
  std::vector<double> solution;
  double d_value = 0;
  double p_residual = 0;
  /// The P-invariance precondition failed, so the lemma says nothing here.
  bool vacuous = false;
  bool lemma_pass = false;
};

/// Throws PreconditionViolated when |D(x)| < cfg.delta. lemma_pass requires
/// the P-invariance residual within tau_res, every |r_k| within tau_sys and
/// every |s_j| within tau_lemma.
ReducedSystem reduced_system_check(const ScalarField& f, const RatMatrix& x, const FDConfig& cfg);

/// Linear part of the adjoint field x -> [E_ij, x] has zero trace; computed
/// exactly on the E_ab basis.
Rational adjoint_field_divergence(std::size_t n, std::size_t i, std::size_t j);

struct QuadratureSpec {
  std::size_t n = 2;
  /// Every entry ranges over [-a, a].
  double a = 2.0;
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 1;
  /// Fixed shard count; results do not depend on the thread count.
  unsigned shards = 8;
  unsigned threads = 1;
  /// Boundary shell thickness as a fraction of a.
  double shell_width = 1e-3;
  std::size_t shell_samples = 2000;
  /// Largest |psi| tolerated inside the shell.
  double leak_tolerance = 1e-4;

  void validate() const;
};

struct WeakEstimate {
  double estimate = 0;
  double std_error = 0;
};

/// prod over entries of (1 - x_ab^2 / a^2)^2: equals 1 at the origin and
/// vanishes to second order on the box boundary.
ScalarField box_bump(std::size_t n, const Rational& a);

/// Samples the boundary shell of the box; throws BoundaryLeak if psi exceeds
/// the leak tolerance there. Returns the largest |psi| seen.
double check_boundary(const ScalarField& psi, const QuadratureSpec& q);

/// Monte-Carlo estimate of -int_box u (L_ij psi) dx, i.e. (L_ij T)(psi) for
/// the distribution T(psi) = int u psi.
WeakEstimate weak_lie_derivative(const ScalarField& u, const ScalarField& psi, std::size_t i, std::size_t j,
                                 const QuadratureSpec& q);

/// All n^2 pairs from one sample set, row-major by (i, j).
std::vector<WeakEstimate> weak_lie_derivatives(const ScalarField& u, const ScalarField& psi, const QuadratureSpec& q);

/// Deterministic tensor-product Gauss-Legendre rule (20 nodes per entry) for
/// n = 2, row-major by (i, j).
std::vector<double> weak_lie_derivatives_grid(const ScalarField& u, const ScalarField& psi, double a);

}  // namespace affinv
