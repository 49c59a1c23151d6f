#include <gtest/gtest.h>

#include <random>

#include "rootkit/error.hpp"
#include "rootkit/linalg.hpp"
#include "rootkit/rational.hpp"

using namespace rootkit;

TEST(Rational, PqFormatAlwaysCarriesDenominator) {
  EXPECT_EQ(to_pq(Rational(3)), "3/1");
  EXPECT_EQ(to_pq(Rational(0)), "0/1");
  EXPECT_EQ(to_pq(parse_rational("-2/4")), "-1/2");
}

TEST(Rational, ParseAcceptsFractionsAndIntegers) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("0/5"), Rational(0));
}

TEST(Rational, ParseRejectsGarbage) {
  for (const char* bad : {"", "/", "1/0", "1/-2", "x", "1.5", "--1", "1/2/3"}) {
    try {
      parse_rational(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
}

TEST(Rational, PqRoundTripOnRandomValues) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 97);
  for (int k = 0; k < 500; ++k) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    EXPECT_EQ(parse_rational(to_pq(q)), q);
  }
}

TEST(RatVector, ArithmeticAndOrdering) {
  const RatVector a{1, -1, 0};
  const RatVector b{0, 1, -1};
  EXPECT_EQ(a + b, (RatVector{1, 0, -1}));
  EXPECT_EQ(a - b, (RatVector{1, -2, 1}));
  EXPECT_EQ(Rational(1, 2) * a, RatVector({Rational(1, 2), Rational(-1, 2), Rational(0)}));
  EXPECT_EQ(-a, (RatVector{-1, 1, 0}));
  EXPECT_LT(b, a);
  EXPECT_EQ(dot(a, b), Rational(-1));
  EXPECT_TRUE(RatVector(3).is_zero());
  EXPECT_EQ(a.to_string(), "(1, -1, 0)");
  EXPECT_EQ(RatVectorHash{}(a), RatVectorHash{}(RatVector{1, -1, 0}));
}

TEST(Linalg, SolveAndInverse) {
  RatMatrix a(2, 2);
  a(0, 0) = 2;
  a(0, 1) = -1;
  a(1, 0) = -1;
  a(1, 1) = 2;
  const auto x = solve(a, RatVector{1, 0});
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, RatVector({Rational(2, 3), Rational(1, 3)}));
  const auto inv = inverse(a);
  ASSERT_TRUE(inv);
  EXPECT_EQ((*inv) * (a * RatVector{5, -3}), (RatVector{5, -3}));
  EXPECT_TRUE(is_positive_definite(a));
}

TEST(Linalg, SingularAndIndefinite) {
  RatMatrix a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 2;
  a(1, 1) = 4;
  EXPECT_FALSE(solve(a, RatVector{1, 1}));
  EXPECT_FALSE(inverse(a));
  EXPECT_FALSE(is_positive_definite(a));
  a(1, 1) = 3;
  EXPECT_FALSE(is_positive_definite(a));
}

TEST(Linalg, RandomSystemsSolveExactly) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 6;
    RatMatrix a(n, n);
    RatVector b(n);
    for (std::size_t i = 0; i < n; ++i) {
      b[i] = d(rng);
      for (std::size_t j = 0; j < n; ++j) a(i, j) = d(rng);
    }
    if (auto x = solve(a, b)) EXPECT_EQ(a * *x, b);
  }
}
