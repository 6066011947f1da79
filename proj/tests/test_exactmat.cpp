#include <gtest/gtest.h>

#include "affinv/errors.hpp"
#include "affinv/exactmat.hpp"
#include "affinv/json_io.hpp"
#include "affinv/sampling.hpp"
#include "oracles.hpp"

using namespace affinv;

namespace {

RatMatrix diag(std::initializer_list<long> d) {
  RatMatrix m(d.size());
  std::size_t i = 0;
  for (long v : d) m(i, i) = v, ++i;
  return m;
}

UniPoly poly(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.emplace_back(v);
  return UniPoly(c);
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("0/7")), "0");
  EXPECT_EQ(parse_rational("0/5").get_den(), 1);
  for (const char* bad : {"", "1/0", "1/", "/2", "a", "1.5", "1/-2", "--1", "1 /2", "+"})
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}

TEST(Power, Examples) {
  const RatMatrix x{{1, 2}, {3, 4}};
  EXPECT_EQ(power(RatMatrix::identity(2), 5), RatMatrix::identity(2));
  EXPECT_EQ(power(x, 2), (RatMatrix{{7, 10}, {15, 22}}));
  EXPECT_EQ(power(x, 0), RatMatrix::identity(2));
}

TEST(Power, AddsExponents) {
  Rng rng = make_rng(11);
  for (int s = 0; s < 30; ++s) {
    const std::size_t n = 1 + s % 4;
    const RatMatrix x = random_int_matrix(rng, n, 5);
    const unsigned k1 = s % 4, k2 = (s / 4) % 3;
    EXPECT_EQ(power(x, k1) * power(x, k2), power(x, k1 + k2));
    EXPECT_EQ(power(x, k1 + k2), oracle::naive_power(x, k1 + k2));
  }
}

TEST(Commutator, Examples) {
  const RatMatrix x{{1, 2}, {3, 4}};
  EXPECT_TRUE(commutator(x, x).is_zero());
  EXPECT_EQ(commutator(RatMatrix::unit(2, 0, 0), RatMatrix::unit(2, 0, 1)), RatMatrix::unit(2, 0, 1));
  EXPECT_TRUE(commutator(x, RatMatrix::identity(2)).is_zero());
  EXPECT_THROW(commutator(x, RatMatrix::identity(3)), DimensionMismatch);
}

TEST(Determinant, Examples) {
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(determinant(RatMatrix::identity(n)), 1);
  EXPECT_EQ(determinant(RatMatrix{{1, 2}, {3, 4}}), -2);
  EXPECT_EQ(determinant(RatMatrix{{1, 2, 3, 4}, {5, 6, 7, 8}, {1, 2, 3, 4}, {0, 1, 0, 1}}), 0);
}

TEST(Determinant, MatchesLeibnizOracle) {
  Rng rng = make_rng(3);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int s = 0; s < 10; ++s) {
      RatMatrix x = random_int_matrix(rng, n);
      x(0, 0) = random_rational(rng, 7, 5);  // force the rational path
      EXPECT_EQ(determinant(x), oracle::leibniz_det(x)) << x;
    }
  }
}

TEST(Determinant, Multiplicative) {
  Rng rng = make_rng(4);
  for (std::size_t n = 2; n <= 5; ++n)
    for (int s = 0; s < 20; ++s) {
      const RatMatrix a = random_int_matrix(rng, n), b = random_int_matrix(rng, n);
      EXPECT_EQ(determinant(a * b), determinant(a) * determinant(b));
    }
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(RatMatrix::identity(4)), 4u);
  EXPECT_EQ(rank(RatMatrix(3)), 0u);
  EXPECT_EQ(rank(RatMatrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(rank(std::vector<RatVector>{{1, 1, 0}, {2, 2, 0}, {0, 0, 1}}), 2u);
}

TEST(Inverse, RoundTripAndSingular) {
  Rng rng = make_rng(5);
  for (std::size_t n = 1; n <= 5; ++n) {
    const RatMatrix a = random_invertible(rng, n);
    EXPECT_EQ(a * inverse(a), RatMatrix::identity(n));
  }
  EXPECT_THROW(inverse(RatMatrix{{1, 2}, {2, 4}}), SingularMatrix);
}

TEST(CharPoly, Examples) {
  EXPECT_EQ(char_poly(diag({1, 2})), poly({2, -3, 1}));
  const Rational a1(5, 3), a2(-7);
  const RatMatrix c{{0, a2}, {1, a1}};
  EXPECT_EQ(char_poly(c), UniPoly({-a2, -a1, 1}));
  EXPECT_EQ(char_poly(RatMatrix(3)), poly({0, 0, 0, 1}));
}

TEST(CharPoly, MatchesDeterminantOracleAndCayleyHamilton) {
  Rng rng = make_rng(6);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int s = 0; s < 8; ++s) {
      const RatMatrix x = random_int_matrix(rng, n);
      const UniPoly p = char_poly(x);
      EXPECT_EQ(p.degree(), static_cast<int>(n));
      for (long t : {-2L, 0L, 3L}) EXPECT_EQ(p(Rational(t)), oracle::char_poly_at(x, t));
      EXPECT_TRUE(p(x).is_zero());
    }
}

TEST(MinPoly, Examples) {
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(min_poly(RatMatrix::identity(n)), poly({-1, 1}));
  EXPECT_EQ(min_poly(RatMatrix{{0, 1}, {0, 0}}), poly({0, 0, 1}));
  EXPECT_EQ(min_poly(diag({1, 1, 2})), poly({2, -3, 1}));
  EXPECT_EQ(min_poly(RatMatrix(3)), poly({0, 1}));
}

TEST(MinPoly, AnnihilatesAndDividesCharPoly) {
  Rng rng = make_rng(7);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int s = 0; s < 8; ++s) {
      const RatMatrix x = s % 2 == 0 || n == 1 ? random_int_matrix(rng, n) : random_non_regular(rng, n);
      const UniPoly m = min_poly(x);
      EXPECT_EQ(m.coefficients().back(), 1);
      EXPECT_TRUE(m(x).is_zero());
      EXPECT_TRUE(divmod(char_poly(x), m).remainder.is_zero());
      if (m.degree() > 1) {
        // nothing of lower degree annihilates x: the truncated tail is not zero at x
        const std::vector<Rational> tail(m.coefficients().begin() + 1, m.coefficients().end());
        EXPECT_FALSE(UniPoly(tail)(x).is_zero());
      }
    }
}

TEST(UniPoly, Canonical) {
  EXPECT_EQ(poly({1, 2, 0, 0}), poly({1, 2}));
  EXPECT_EQ(poly({0, 0}).degree(), UniPoly::kZeroDegree);
  const PolyDivision d = divmod(poly({-1, 0, 1}), poly({-1, 1}));
  EXPECT_EQ(d.quotient, poly({1, 1}));
  EXPECT_TRUE(d.remainder.is_zero());
  EXPECT_THROW(divmod(poly({1}), UniPoly()), InvalidArgument);
}

TEST(SolveLinear, Examples) {
  const RatVector b{5, Rational(1, 3)};
  EXPECT_EQ(std::get<RatVector>(solve_linear(RatMatrix::identity(2), b)), b);
  EXPECT_EQ(std::get<RatVector>(solve_linear(RatMatrix{{0, 1}, {1, 0}}, RatVector{1, 2})), (RatVector{2, 1}));
  EXPECT_TRUE(std::holds_alternative<NoSolution>(solve_linear(RatMatrix(2), RatVector{1, 0})));
  EXPECT_TRUE(std::holds_alternative<NonUnique>(solve_linear(RatMatrix{{1, 2}, {2, 4}}, RatVector{1, 2})));
  EXPECT_THROW(solve_linear(RatMatrix(2), RatVector{1, 2, 3}), DimensionMismatch);
}

TEST(SolveLinear, SolutionSatisfiesSystem) {
  Rng rng = make_rng(8);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int s = 0; s < 10; ++s) {
      const RatMatrix a = random_invertible(rng, n);
      RatVector b(n);
      for (std::size_t i = 0; i < n; ++i) b[i] = random_rational(rng, 9, 4);
      const RatVector x = std::get<RatVector>(solve_linear(a, b));
      EXPECT_EQ(x * a.transpose(), b);
    }
}

TEST(MatrixJson, RoundTripAndRejects) {
  Rng rng = make_rng(9);
  RatMatrix x = random_int_matrix(rng, 3);
  x(1, 2) = Rational(-22, 7);
  const Json j = to_json(x);
  EXPECT_EQ(to_json(matrix_from_json(j)), j);
  EXPECT_EQ(matrix_from_json(j), x);
  EXPECT_EQ(matrix_from_json(Json::parse(R"({"n":1,"entries":[[4]]})")), (RatMatrix{{4}}));
  for (const char* bad : {R"({"n":2,"entries":[["1","2"],["3"]]})", R"({"n":2,"entries":[["1","2"]]})",
                          R"({"n":1,"entries":[["1/0"]]})", R"({"n":0,"entries":[]})", R"({"entries":[["1"]]})",
                          R"({"n":1,"entries":[["x"]]})", R"([1,2])"})
    EXPECT_THROW(matrix_from_json(Json::parse(bad)), Error) << bad;
}
