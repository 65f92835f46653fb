#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "tautcalc/rational.hpp"
#include "tautcalc/special.hpp"

using namespace tautcalc;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("-6/8").str(), "-3/4");
  EXPECT_EQ(Rational::parse("12").str(), "12");
  EXPECT_EQ(Rational::parse("4/2").str(), "2");
  EXPECT_EQ(Rational(3, -9).str(), "-1/3");
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  std::ostringstream os;
  os << Rational(-7, 21);
  EXPECT_EQ(os.str(), "-1/3");
}

TEST(Rational, FieldLaws) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> dist(-40, 40);
  for (int trial = 0; trial < 200; ++trial) {
    auto pick = [&] {
      long d = dist(rng);
      return Rational(dist(rng), d == 0 ? 1 : d);
    };
    const Rational a = pick(), b = pick(), c = pick();
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) {
      EXPECT_EQ(a / b * b, a);
    }
    EXPECT_EQ(Rational::parse(a.str()), a);
    EXPECT_EQ(a.hash(), Rational::parse(a.str()).hash());
  }
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
  EXPECT_THROW(Rational(0).pow(-1), std::domain_error);
}

TEST(Rational, Factorials) {
  EXPECT_EQ(factorial(0), Rational(1));
  EXPECT_EQ(factorial(10), Rational(3628800));
  EXPECT_EQ(binomial(5, 2), Rational(10));
  EXPECT_EQ(binomial(-3, 2), Rational(6));  // (-3)(-4)/2
  EXPECT_EQ(binomial(4, -1), Rational(0));
  EXPECT_EQ(double_factorial_odd(0), 1);
  EXPECT_EQ(double_factorial_odd(4), 105);  // 7!!
}

TEST(Bernoulli, MatchesAkiyamaTanigawa) {
  for (int m = 0; m <= 30; ++m) EXPECT_EQ(bernoulli_number(m), oracle::bernoulli(m)) << m;
  EXPECT_EQ(bernoulli_number(1), Rational(-1, 2));
  EXPECT_EQ(bernoulli_number(12), Rational(-691, 2730));
}

TEST(Bernoulli, PolynomialIdentities) {
  const Rational xs[] = {Rational(0), Rational(1, 3), Rational(-5, 2), Rational(7)};
  for (int m = 0; m <= 12; ++m) {
    for (const auto& x : xs) {
      // B_m(1 - x) = (-1)^m B_m(x)
      const Rational sign = m % 2 == 0 ? Rational(1) : Rational(-1);
      EXPECT_EQ(bernoulli_poly(m, Rational(1) - x), sign * bernoulli_poly(m, x));
      // B_m(x + 1) - B_m(x) = m x^{m-1}
      if (m >= 1) EXPECT_EQ(bernoulli_poly(m, x + Rational(1)) - bernoulli_poly(m, x), Rational(m) * x.pow(m - 1));
    }
    EXPECT_EQ(bernoulli_poly(m, Rational(0)), bernoulli_number(m));
  }
}

TEST(SymmetricFunctions, NewtonIdentities) {
  const ArithmeticProgression ctxs[] = {{Rational(1, 3), 4}, {Rational(-2), 3}, {Rational(5, 7), 1}, {Rational(0), 0}};
  for (const auto& ctx : ctxs) {
    for (int k = 1; k <= 6; ++k) {
      // k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
      Rational rhs(0);
      for (int i = 1; i <= k; ++i) {
        const Rational t = elementary_symmetric(k - i, ctx) * power_sum(i, ctx);
        rhs += (i % 2 == 1) ? t : -t;
      }
      EXPECT_EQ(Rational(k) * elementary_symmetric(k, ctx), rhs);
      // k h_k = sum_{i=1}^k h_{k-i} p_i
      Rational rhs_h(0);
      for (int i = 1; i <= k; ++i) rhs_h += complete_homogeneous(k - i, ctx) * power_sum(i, ctx);
      EXPECT_EQ(Rational(k) * complete_homogeneous(k, ctx), rhs_h);
    }
  }
  const ArithmeticProgression p{Rational(1, 2), 3};  // 1/2, 3/2, 5/2
  EXPECT_EQ(power_sum(2, p), Rational(35, 4));
}

TEST(Stirling, ClassicalTables) {
  EXPECT_EQ(stirling1(5, 2), 50);
  EXPECT_EQ(stirling1(6, 3), 225);
  EXPECT_EQ(stirling2(5, 2), 15);
  EXPECT_EQ(stirling2(7, 3), 301);
  EXPECT_EQ(stirling1(0, 0), 1);
  EXPECT_EQ(stirling2(4, 0), 0);
}

TEST(Stirling, GeneralizedFirstIsProductExpansion) {
  const Rational xs[] = {Rational(0), Rational(1, 3), Rational(2, 5), Rational(1)};
  for (int k = 0; k <= 6; ++k) {
    for (const auto& x : xs) {
      std::vector<Rational> cs;
      for (int j = 0; j < k; ++j) cs.push_back(x + Rational(j));
      const auto poly = oracle::linear_product(cs, false, k);
      for (int m = 0; m <= k; ++m) EXPECT_EQ(stirling_generalized_first(k, m, x), poly[m]) << k << " " << m;
    }
  }
  EXPECT_THROW(stirling_generalized_first(2, 3, Rational(0)), std::invalid_argument);
}

TEST(Stirling, GeneralizedSecondIsInverseSeries) {
  const Rational xs[] = {Rational(0), Rational(1, 2), Rational(2, 3)};
  for (int depth = 1; depth <= 4; ++depth) {
    for (const auto& x : xs) {
      std::vector<Rational> cs;
      for (int j = 1; j <= depth; ++j) cs.push_back(x - Rational(j));
      const auto series = oracle::linear_product(cs, true, 7);
      for (int m = 0; m <= 7; ++m) EXPECT_EQ(stirling_generalized_second(depth, m, x), series[m]) << depth << " " << m;
    }
  }
}
