#include "affinv/sampling.hpp"

#include "affinv/errors.hpp"

namespace affinv {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

RatMatrix random_int_matrix(Rng& rng, std::size_t n, long bound) {
  RatMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = uniform_int(rng, -bound, bound);
  return m;
}

RatMatrix random_grid_matrix(Rng& rng, std::size_t n, long a_times_denom, long denom) {
  RatMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Rational(Rational(uniform_int(rng, -a_times_denom, a_times_denom)) / denom);
  return m;
}

Rational random_rational(Rng& rng, long num_bound, long den_bound, bool nonzero) {
  long p = 0;
  do {
    p = uniform_int(rng, -num_bound, num_bound);
  } while (nonzero && p == 0);
  return Rational(Rational(p) / uniform_int(rng, 1, den_bound));
}

RatMatrix random_invertible(Rng& rng, std::size_t n, long bound) {
  for (;;) {
    RatMatrix m = random_int_matrix(rng, n, bound);
    if (determinant(m) != 0) return m;
  }
}

RatMatrix random_p_matrix(Rng& rng, std::size_t n, long bound) {
  for (;;) {
    RatMatrix m = random_int_matrix(rng, n, bound);
    m.set_row(n - 1, RatVector::unit(n, n - 1));
    if (determinant(m) != 0) return m;
  }
}

CompanionSpec random_companion(Rng& rng, std::size_t n, long bound) {
  CompanionSpec spec;
  for (std::size_t i = 0; i < n; ++i) spec.alpha.push_back(random_rational(rng, bound, 4));
  return spec;
}

RatMatrix jordan_nilpotent(std::size_t n) {
  RatMatrix j(n);
  for (std::size_t r = 0; r + 1 < n; ++r) j(r, r + 1) = 1;
  return j;
}

RatMatrix random_non_regular(Rng& rng, std::size_t n) {
  if (n < 2) throw InvalidArgument("random_non_regular needs n >= 2");
  const long lambda = uniform_int(rng, -5, 5);
  RatMatrix b(n);
  b(0, 0) = lambda;
  b(1, 1) = lambda;
  for (std::size_t d = 2; d < n; ++d) {
    long mu = lambda;
    while (mu == lambda) mu = uniform_int(rng, -5, 5);
    b(d, d) = mu;
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c)
      if (!(r == 0 && c == 1)) b(r, c) = uniform_int(rng, -3, 3);
  const RatMatrix s = random_invertible(rng, n, 3);
  return s * b * inverse(s);
}

RatMatrix random_regular_outside_omega(Rng& rng, std::size_t n) {
  if (n < 2) throw InvalidArgument("random_regular_outside_omega needs n >= 2");
  for (;;) {
    RatMatrix x = random_int_matrix(rng, n, 9);
    RatVector last(n);
    last[n - 1] = uniform_int(rng, -9, 9);
    x.set_row(n - 1, last);
    if (is_regular(x)) return x;
  }
}

ScalarField random_invariant_field(Rng& rng, std::size_t n, unsigned max_weight) {
  std::vector<ScalarField> terms;
  terms.push_back(ScalarField::constant(random_rational(rng, 3, 2)));
  const long count = uniform_int(rng, 1, 3);
  for (long t = 0; t < count; ++t) {
    std::vector<ScalarField> factors{ScalarField::constant(random_rational(rng, 3, 3, true))};
    unsigned weight = 0;
    const long max_k = static_cast<long>(std::min<std::size_t>(n, max_weight));
    const unsigned target = static_cast<unsigned>(uniform_int(rng, 1, max_weight));
    while (weight < target) {
      const unsigned k = static_cast<unsigned>(uniform_int(rng, 1, max_k));
      if (weight + k > max_weight) break;
      factors.push_back(ScalarField::pk(k));
      weight += k;
    }
    if (factors.size() == 1) factors.push_back(ScalarField::pk(1));
    terms.push_back(ScalarField::mul(std::move(factors)));
  }
  return ScalarField::add(std::move(terms));
}

ScalarField random_field(Rng& rng, std::size_t n, unsigned depth) {
  const long choice = uniform_int(rng, 0, depth == 0 ? 2 : 5);
  const auto index = [&] { return static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(n))); };
  switch (choice) {
    case 0:
      return ScalarField::var(index(), index());
    case 1:
      return ScalarField::constant(random_rational(rng, 3, 3));
    case 2:
      return ScalarField::pk(static_cast<unsigned>(uniform_int(rng, 1, std::min<long>(static_cast<long>(n), 2))));
    case 3:
      return random_field(rng, n, depth - 1) + random_field(rng, n, depth - 1);
    case 4:
      return random_field(rng, n, depth - 1) * random_field(rng, n, depth - 1);
    default:
      return ScalarField::pow(random_field(rng, n, depth - 1), 2);
  }
}

}  // namespace affinv
