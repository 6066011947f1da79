#pragma once

// Seeded generators for the property suites. Every generator is a pure
// function of the engine state, so a (seed, stream) pair replays exactly.

#include <cstddef>
#include <cstdint>
#include <random>

#include "affinv/exactmat.hpp"
#include "affinv/krylov.hpp"
#include "affinv/scalar_field.hpp"

namespace affinv {

using Rng = std::mt19937_64;

/// Engine for substream `stream` of a master seed (e.g. one per shard or per
/// property).
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

long uniform_int(Rng& rng, long lo, long hi);

/// Integer entries uniform in [-bound, bound].
RatMatrix random_int_matrix(Rng& rng, std::size_t n, long bound = 9);
/// Entries k / denom uniform in [-a, a]; exactly representable in binary
/// floating point when denom is a power of two.
RatMatrix random_grid_matrix(Rng& rng, std::size_t n, long a_times_denom, long denom);
/// p / q with |p| <= num_bound, 1 <= q <= den_bound; nonzero when requested.
Rational random_rational(Rng& rng, long num_bound, long den_bound, bool nonzero = false);

RatMatrix random_invertible(Rng& rng, std::size_t n, long bound = 9);
/// Random invertible matrix with last row e_n.
RatMatrix random_p_matrix(Rng& rng, std::size_t n, long bound = 9);
CompanionSpec random_companion(Rng& rng, std::size_t n, long bound = 9);

/// Single nilpotent Jordan block: ones on the superdiagonal.
RatMatrix jordan_nilpotent(std::size_t n);
/// S B S^-1 where B is upper triangular with an eigenvalue repeated in two
/// separate 1 x 1 blocks; never regular. Requires n >= 2.
RatMatrix random_non_regular(Rng& rng, std::size_t n);
/// Regular matrix with last row lambda e_n, hence outside Omega. Requires n >= 2.
RatMatrix random_regular_outside_omega(Rng& rng, std::size_t n);

/// c_0 + sum of up to three terms c * prod p_k^e with weight sum k e at most
/// max_weight, k in 1..n.
ScalarField random_invariant_field(Rng& rng, std::size_t n, unsigned max_weight = 4);
/// Random expression tree over var, const and pk leaves with add, mul and
/// square nodes; depth at most `depth`.
ScalarField random_field(Rng& rng, std::size_t n, unsigned depth = 3);

}  // namespace affinv
