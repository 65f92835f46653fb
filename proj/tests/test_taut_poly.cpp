#include <gtest/gtest.h>

#include <random>

#include "tautcalc/special.hpp"
#include "tautcalc/taut_poly.hpp"

using namespace tautcalc;

namespace {

TautPolynomial random_poly(std::mt19937& rng, int n, int trunc) {
  std::uniform_int_distribution<int> coef(-6, 6), deg(0, 2), count(0, 5), which(1, 3);
  TautPolynomial p(n, trunc);
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    TautMonomial m;
    m.psi.assign(n, 0);
    for (int i = 0; i < n; ++i) m.psi[i] = deg(rng) == 2 ? 1 : 0;
    const int k = which(rng);
    if (deg(rng) > 0) m.kappa = {{k, 1 + deg(rng) / 2}};
    int c = coef(rng);
    p.add_term(m, Rational(c, 1 + (t % 3)));
  }
  return p;
}

}  // namespace

TEST(TautPolynomial, RenderParseRoundTrip) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const TautPolynomial p = random_poly(rng, 3, 6);
    const std::string text = p.render();
    EXPECT_EQ(TautPolynomial::parse(text, 3, 6), p) << text;
  }
  const auto q = TautPolynomial::parse("1 - 3/4*k2 + k1*p1^2 - p2", 2, 4);
  EXPECT_EQ(q.render(), "1 - p2 + k1*p1^2 - 3/4*k2");
  EXPECT_EQ(q.coefficient({{{2, 1}}, {0, 0}}), Rational(-3, 4));
  EXPECT_EQ(TautPolynomial::parse("0", 1, 2).render(), "0");
  EXPECT_THROW(TautPolynomial::parse("k0", 1, 2), std::invalid_argument);
  EXPECT_THROW(TautPolynomial::parse("p3", 2, 2), std::invalid_argument);
  EXPECT_THROW(TautPolynomial::parse("1 +", 2, 2), std::invalid_argument);
}

TEST(TautPolynomial, RingLaws) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_poly(rng, 2, 5), b = random_poly(rng, 2, 5), c = random_poly(rng, 2, 5);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(tp_add(a, b), a + b);
    EXPECT_EQ(tp_mul(a, b), a * b);
    EXPECT_EQ(tp_scale(a, Rational(3)), a * Rational(3));
    TautPolynomial sum(2, 5);
    for (int k = 0; k <= 5; ++k) sum += a.homogeneous_part(k);
    EXPECT_EQ(sum, a);
  }
}

TEST(TautPolynomial, TruncationAndMismatch) {
  const auto p = TautPolynomial::psi(1, 2, 1, 2);
  EXPECT_TRUE((p * p).is_zero());
  EXPECT_TRUE(TautPolynomial::kappa(1, 2, 3).is_zero());
  EXPECT_THROW(TautPolynomial(1, 2) + TautPolynomial(2, 2), std::invalid_argument);
  EXPECT_THROW(TautPolynomial::psi(2, 3, 3), std::invalid_argument);
  EXPECT_EQ(p.retruncated(1).size(), 0u);
}

TEST(TautPolynomial, KappaExponentialIsAHomomorphism) {
  const std::map<int, Rational> a{{1, Rational(1, 2)}, {2, Rational(-3)}};
  const std::map<int, Rational> b{{1, Rational(2, 3)}, {3, Rational(5)}};
  std::map<int, Rational> ab = a;
  for (const auto& [m, c] : b) ab[m] += c;
  EXPECT_EQ(exp_kappa_series(a, 2, 6) * exp_kappa_series(b, 2, 6), exp_kappa_series(ab, 2, 6));
  const auto e = exp_kappa_series({{1, Rational(1)}}, 0, 3);
  EXPECT_EQ(e.coefficient({{{1, 3}}, {}}), Rational(1, 6));
}

TEST(TautPolynomial, GeometricSeriesInverse) {
  const Rational w(-2, 3);
  const auto geo = psi_geometric(2, 2, w, 5);
  const auto lin = TautPolynomial::constant(2, 5, 1) - TautPolynomial::psi(2, 5, 2) * w;
  EXPECT_EQ(geo * lin, TautPolynomial::constant(2, 5, 1));
}

TEST(EdgeSeries, ConstantTermAndDivision) {
  const Rational xs[] = {Rational(1), Rational(-1), Rational(1, 2)};
  for (int r = 1; r <= 4; ++r) {
    for (int w = 0; w < r; ++w) {
      for (const auto& x : xs) {
        const EdgeSeries q = edge_local_factor(w, r, x, 6);
        // first-order term of the numerator is -x B_2(w/r)/2 (psi' + psi'')
        EXPECT_EQ(q.at(0, 0), -x * bernoulli_poly(2, Rational(w, r)) / Rational(2));
        // swapping the halves exchanges w and r - w
        const EdgeSeries swapped = edge_local_factor((r - w) % r, r, x, 6);
        for (int i = 0; i <= 6; ++i)
          for (int j = 0; i + j <= 6; ++j) EXPECT_EQ(q.at(i, j), swapped.at(j, i));
      }
    }
  }
  EXPECT_THROW(edge_numerator(3, 3, Rational(1), 4), std::invalid_argument);
}

TEST(EdgeSeries, DivisionRejectsRemainders) {
  EdgeSeries bad(3);
  bad.at(2, 0) = Rational(1);
  EXPECT_THROW(divide_by_sum(bad), std::logic_error);
  EdgeSeries constant(3);
  constant.at(0, 0) = Rational(1);
  EXPECT_THROW(divide_by_sum(constant), std::logic_error);
  EdgeSeries ok(3);
  ok.at(2, 0) = Rational(1);
  ok.at(0, 2) = Rational(-1);  // psi'^2 - psi''^2 = (psi' - psi'')(psi' + psi'')
  const EdgeSeries q = divide_by_sum(ok);
  EXPECT_EQ(q.at(1, 0), Rational(1));
  EXPECT_EQ(q.at(0, 1), Rational(-1));
}

TEST(EdgeSeries, Substitution) {
  EdgeSeries s(2);
  s.at(0, 0) = Rational(1);
  s.at(1, 1) = Rational(3);
  const auto p = substitute_edge(s, 3, 2, 3, 1);
  EXPECT_EQ(p.render(), "1 + 3*p1*p3");
  EXPECT_THROW(substitute_edge(s, 3, 2, 2, 2), std::invalid_argument);
  EXPECT_THROW(substitute_edge(s, 3, 2, 0, 2), std::invalid_argument);
}
