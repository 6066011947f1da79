#include "affinv/calculus.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <random>
#include <string>
#include <thread>

#include "affinv/errors.hpp"
#include "affinv/invariants.hpp"
#include "affinv/krylov.hpp"

namespace affinv {

// --- FloatMatrix ------------------------------------------------------------

FloatMatrix::FloatMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {
  if (n == 0) throw InvalidArgument("matrix dimension must be at least 1");
}

FloatMatrix::FloatMatrix(std::size_t n, std::vector<double> entries) : n_(n), a_(std::move(entries)) {
  if (n == 0) throw InvalidArgument("matrix dimension must be at least 1");
  if (a_.size() != n * n) throw DimensionMismatch("FloatMatrix: entry count is not n^2");
  if (!std::all_of(a_.begin(), a_.end(), [](double v) { return std::isfinite(v); })) {
    throw InvalidArgument("FloatMatrix: non-finite entry");
  }
}

FloatMatrix::FloatMatrix(const RatMatrix& m) : FloatMatrix(m.dim()) {
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) (*this)(r, c) = m(r, c).get_d();
}

FloatMatrix FloatMatrix::identity(std::size_t n) {
  FloatMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

FloatMatrix FloatMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > n || j > n) throw IndexOutOfRange("E_ij index out of range");
  FloatMatrix m(n);
  m(i - 1, j - 1) = 1.0;
  return m;
}

double FloatMatrix::trace() const {
  double t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double FloatMatrix::max_abs() const {
  double m = 0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

FloatMatrix& FloatMatrix::operator+=(const FloatMatrix& o) {
  if (o.n_ != n_) throw DimensionMismatch("FloatMatrix add");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

FloatMatrix& FloatMatrix::operator-=(const FloatMatrix& o) {
  if (o.n_ != n_) throw DimensionMismatch("FloatMatrix subtract");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

FloatMatrix& FloatMatrix::operator*=(double s) {
  for (double& v : a_) v *= s;
  return *this;
}

FloatMatrix operator+(FloatMatrix a, const FloatMatrix& b) { return a += b; }
FloatMatrix operator-(FloatMatrix a, const FloatMatrix& b) { return a -= b; }
FloatMatrix operator*(FloatMatrix a, double s) { return a *= s; }

FloatMatrix operator*(const FloatMatrix& a, const FloatMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("FloatMatrix multiply");
  const std::size_t n = a.dim();
  FloatMatrix p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) p(i, j) += a(i, k) * b(k, j);
  return p;
}

FloatMatrix commutator(const FloatMatrix& a, const FloatMatrix& b) { return a * b - b * a; }

FloatMatrix power(const FloatMatrix& x, unsigned k) {
  FloatMatrix p = FloatMatrix::identity(x.dim());
  for (unsigned e = 0; e < k; ++e) p = p * x;
  return p;
}

// --- finite differences -----------------------------------------------------

void FDConfig::validate() const {
  if (!(h > 0) || !(tau_res > 0) || !(tau_sys > 0) || !(tau_lemma > 0) || !(tau_comb > 0) || !(delta > 0)) {
    throw InvalidArgument("FDConfig: step, tolerances and delta must be positive");
  }
}

double eval_field(const ScalarField& f, const FloatMatrix& x) { return evaluate(f, x.entries(), x.dim()); }

double fd_directional(const ScalarField& f, const FloatMatrix& x, const FloatMatrix& v, const FDConfig& cfg) {
  const double fp = eval_field(f, x + v * cfg.h);
  const double fm = eval_field(f, x - v * cfg.h);
  return (fp - fm) / (2.0 * cfg.h);
}

double lie_derivative(const ScalarField& f, std::size_t i, std::size_t j, const FloatMatrix& x, const FDConfig& cfg) {
  return fd_directional(f, x, commutator(FloatMatrix::unit(x.dim(), i, j), x), cfg);
}

double p_invariance_residual(const ScalarField& f, const FloatMatrix& x, const FDConfig& cfg) {
  const std::size_t n = x.dim();
  double worst = 0;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j <= n; ++j) worst = std::max(worst, std::abs(lie_derivative(f, i, j, x, cfg)));
  return worst;
}

double full_identity_residual(const ScalarField& f, const FloatMatrix& x, unsigned k, const FDConfig& cfg) {
  const std::size_t n = x.dim();
  if (k >= n) throw InvalidArgument("full_identity_residual: k must be at most n-1");
  const FloatMatrix xk = power(x, k);
  double sum = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const double c = xk(i - 1, j - 1);
      if (c != 0.0) sum += c * lie_derivative(f, i, j, x, cfg);
    }
  }
  return std::abs(sum);
}

ReducedSystem reduced_system_check(const ScalarField& f, const RatMatrix& x, const FDConfig& cfg) {
  cfg.validate();
  const std::size_t n = x.dim();
  ReducedSystem out;
  out.d_value = D(x).get_d();
  if (std::abs(out.d_value) < cfg.delta) {
    throw PreconditionViolated("|D(x)| = " + std::to_string(std::abs(out.d_value)) + " is below the cutoff " +
                               std::to_string(cfg.delta));
  }
  const FloatMatrix xf(x);
  out.p_residual = p_invariance_residual(f, xf, cfg);
  out.vacuous = out.p_residual > cfg.tau_res;

  out.solution.resize(n);
  for (std::size_t j = 1; j <= n; ++j) out.solution[j - 1] = lie_derivative(f, n, j, xf, cfg);

  out.residuals.resize(n);
  FloatMatrix xk = FloatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    double r = 0;
    for (std::size_t j = 0; j < n; ++j) r += xk(n - 1, j) * out.solution[j];
    out.residuals[k] = r;
    xk = xk * xf;
  }

  auto max_abs = [](const std::vector<double>& v) {
    double m = 0;
    for (double e : v) m = std::max(m, std::abs(e));
    return m;
  };
  out.lemma_pass = !out.vacuous && max_abs(out.residuals) <= cfg.tau_sys && max_abs(out.solution) <= cfg.tau_lemma;
  return out;
}

Rational adjoint_field_divergence(std::size_t n, std::size_t i, std::size_t j) {
  const RatMatrix e = BasisElement{i, j}.matrix(n);
  Rational div = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) div += commutator(e, RatMatrix::unit(n, a, b))(a, b);
  return div;
}

// --- weak form --------------------------------------------------------------

void QuadratureSpec::validate() const {
  if (n < 1) throw InvalidArgument("QuadratureSpec: n must be at least 1");
  if (!(a > 0)) throw InvalidArgument("QuadratureSpec: box half-width must be positive");
  if (samples < 1) throw InvalidArgument("QuadratureSpec: sample count must be at least 1");
  if (shards < 1) throw InvalidArgument("QuadratureSpec: shard count must be at least 1");
  if (!(shell_width > 0) || !(leak_tolerance > 0)) throw InvalidArgument("QuadratureSpec: shell parameters");
}

ScalarField box_bump(std::size_t n, const Rational& a) {
  const Rational inv_a2 = -1 / (a * a);
  std::vector<ScalarField> factors;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      ScalarField inner = ScalarField::constant(Rational(1)) +
                          ScalarField::constant(inv_a2) * ScalarField::pow(ScalarField::var(i, j), 2);
      factors.push_back(ScalarField::pow(std::move(inner), 2));
    }
  }
  return ScalarField::mul(std::move(factors));
}

namespace {

// 53-bit uniform on [0, 1); independent of the standard library's
// distribution implementation.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

std::mt19937_64 shard_rng(std::uint64_t seed, std::uint64_t shard) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(shard), static_cast<std::uint32_t>(shard >> 32)};
  return std::mt19937_64(seq);
}

struct Kahan {
  double sum = 0;
  double comp = 0;
  void add(double v) {
    const double y = v - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

// -u(x) (L_ij psi)(x) for every (i, j), where
// (L_ij psi)(x) = sum_b dpsi/dx_ib x_jb - sum_a x_ai dpsi/dx_aj.
void weak_integrands(const ScalarField& u, const ScalarField& psi, std::size_t n, const std::vector<double>& x,
                     std::vector<double>& out) {
  const double uval = evaluate(u, x, n);
  const std::vector<double> g = partial_derivatives(psi, x, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double l = 0;
      for (std::size_t b = 0; b < n; ++b) l += g[i * n + b] * x[j * n + b];
      for (std::size_t a = 0; a < n; ++a) l -= x[a * n + i] * g[a * n + j];
      out[i * n + j] = -uval * l;
    }
  }
}

void require_divergence_free(std::size_t n) {
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (adjoint_field_divergence(n, i, j) != 0) throw std::logic_error("adjoint field is not divergence free");
}

}  // namespace

double check_boundary(const ScalarField& psi, const QuadratureSpec& q) {
  q.validate();
  const std::size_t m = q.n * q.n;
  auto rng = shard_rng(q.seed, 0xB0B0B0B0ull);
  std::vector<double> x(m);
  double worst = 0;
  for (std::size_t s = 0; s < q.shell_samples; ++s) {
    for (auto& v : x) v = q.a * (2.0 * unit_uniform(rng) - 1.0);
    // Push one coordinate into the shell a (1 - w) <= |x| <= a.
    const std::size_t c = s % m;
    const double depth = q.a * q.shell_width * unit_uniform(rng);
    x[c] = ((s / m) % 2 == 0 ? 1.0 : -1.0) * (q.a - depth);
    worst = std::max(worst, std::abs(evaluate(psi, x, q.n)));
  }
  if (worst > q.leak_tolerance) {
    throw BoundaryLeak("test function reaches " + std::to_string(worst) + " in the boundary shell (tolerance " +
                       std::to_string(q.leak_tolerance) + ")");
  }
  return worst;
}

std::vector<WeakEstimate> weak_lie_derivatives(const ScalarField& u, const ScalarField& psi, const QuadratureSpec& q) {
  q.validate();
  u.validate(q.n);
  psi.validate(q.n);
  require_divergence_free(q.n);
  check_boundary(psi, q);

  const std::size_t n = q.n;
  const std::size_t m = n * n;
  struct ShardSums {
    std::vector<Kahan> sum;
    std::vector<Kahan> sumsq;
  };
  std::vector<ShardSums> shards(q.shards, ShardSums{std::vector<Kahan>(m), std::vector<Kahan>(m)});

  auto run_shard = [&](unsigned s) {
    const std::size_t count = q.samples / q.shards + (s < q.samples % q.shards ? 1 : 0);
    auto rng = shard_rng(q.seed, s);
    std::vector<double> x(m);
    std::vector<double> f(m);
    for (std::size_t t = 0; t < count; ++t) {
      for (auto& v : x) v = q.a * (2.0 * unit_uniform(rng) - 1.0);
      weak_integrands(u, psi, n, x, f);
      for (std::size_t p = 0; p < m; ++p) {
        shards[s].sum[p].add(f[p]);
        shards[s].sumsq[p].add(f[p] * f[p]);
      }
    }
  };

  const unsigned threads = std::max(1u, std::min(q.threads, q.shards));
  if (threads == 1) {
    for (unsigned s = 0; s < q.shards; ++s) run_shard(s);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (unsigned s = w; s < q.shards; s += threads) run_shard(s);
      });
    }
    for (auto& t : pool) t.join();
  }

  const double volume = std::pow(2.0 * q.a, static_cast<double>(m));
  const double count = static_cast<double>(q.samples);
  std::vector<WeakEstimate> out(m);
  for (std::size_t p = 0; p < m; ++p) {
    Kahan total;
    Kahan total_sq;
    for (const auto& sh : shards) {
      total.add(sh.sum[p].sum);
      total_sq.add(sh.sumsq[p].sum);
    }
    const double mean = total.sum / count;
    const double var = count > 1 ? std::max(0.0, (total_sq.sum / count - mean * mean) * count / (count - 1)) : 0.0;
    out[p] = {volume * mean, volume * std::sqrt(var / count)};
  }
  return out;
}

WeakEstimate weak_lie_derivative(const ScalarField& u, const ScalarField& psi, std::size_t i, std::size_t j,
                                 const QuadratureSpec& q) {
  if (i < 1 || j < 1 || i > q.n || j > q.n) throw IndexOutOfRange("weak_lie_derivative: (i, j) out of range");
  return weak_lie_derivatives(u, psi, q)[(i - 1) * q.n + (j - 1)];
}

std::vector<double> weak_lie_derivatives_grid(const ScalarField& u, const ScalarField& psi, double a) {
  constexpr std::size_t kN = 2;
  constexpr unsigned kPoints = 20;
  using Rule = boost::math::quadrature::gauss<double, kPoints>;
  std::vector<double> nodes;
  std::vector<double> weights;
  const auto& abs = Rule::abscissa();
  const auto& wts = Rule::weights();
  for (std::size_t k = 0; k < abs.size(); ++k) {
    nodes.push_back(a * abs[k]);
    weights.push_back(a * wts[k]);
    if (abs[k] != 0.0) {
      nodes.push_back(-a * abs[k]);
      weights.push_back(a * wts[k]);
    }
  }
  u.validate(kN);
  psi.validate(kN);
  const std::size_t p = nodes.size();
  std::vector<Kahan> acc(kN * kN);
  std::vector<double> x(kN * kN);
  std::vector<double> f(kN * kN);
  for (std::size_t i0 = 0; i0 < p; ++i0)
    for (std::size_t i1 = 0; i1 < p; ++i1)
      for (std::size_t i2 = 0; i2 < p; ++i2)
        for (std::size_t i3 = 0; i3 < p; ++i3) {
          x = {nodes[i0], nodes[i1], nodes[i2], nodes[i3]};
          const double w = weights[i0] * weights[i1] * weights[i2] * weights[i3];
          weak_integrands(u, psi, kN, x, f);
          for (std::size_t q = 0; q < f.size(); ++q) acc[q].add(w * f[q]);
        }
  std::vector<double> out;
  for (const auto& k : acc) out.push_back(k.sum);
  return out;
}

}  // namespace affinv
