#include <gtest/gtest.h>

#include <functional>

#include "oracles.hpp"
#include "tautcalc/intersection.hpp"
#include "tautcalc/omega.hpp"

using namespace tautcalc;

namespace {

OmegaSpec spec(int r, long s, std::vector<long> a, Rational x = Rational(1)) {
  OmegaSpec o;
  o.r = r;
  o.s = s;
  o.a = std::move(a);
  o.x = x;
  return o;
}

TautPolynomial one(int g, int n) { return TautPolynomial::constant(n, moduli_dim(g, n), 1); }

}  // namespace

TEST(Omega, Calibration) {
  EXPECT_EQ(hodge_integral(1, 1, 1, one(1, 1)), Rational(1, 24));
  EXPECT_EQ(hodge_pairing(1, 1, Rational(-1), one(1, 1)), Rational(-1, 24));
  EXPECT_EQ(omega_integral(1, 1, spec(1, 1, {1}), one(1, 1)), Rational(-1, 24));
}

TEST(Omega, PointClassHasDegreeOneOverR) {
  for (int r = 1; r <= 5; ++r)
    for (long s = -3; s <= 4; ++s)
      for (long a1 = 0; a1 < r; ++a1)
        for (long a2 = 0; a2 < r; ++a2) {
          const long a3 = mod_r(s - a1 - a2, r);
          EXPECT_EQ(omega_integral(0, 3, spec(r, s, {a1, a2, a3}), one(0, 3)), Rational(1, r));
        }
}

TEST(Omega, ZeroXIsCoveringDegree) {
  // only the degree-0 part r^{2g-1} survives
  const std::pair<int, int> types[] = {{0, 4}, {1, 1}, {1, 2}, {2, 0}};
  for (auto [g, n] : types) {
    const int D = moduli_dim(g, n);
    for (int r = 1; r <= 3; ++r) {
      std::vector<long> a(n, 0);
      if (n > 0) a[0] = mod_r((2L * g - 2 + n) * 1, r);
      if (n == 0 && mod_r(2L * g - 2, r) != 0) continue;
      const auto basis = monomials_of_degree(n, D);
      const auto vals = omega_pairings(g, n, spec(r, 1, a, Rational(0)), basis);
      for (std::size_t i = 0; i < basis.size(); ++i)
        EXPECT_EQ(vals[i], Rational(r).pow(2 * g - 1) * integrate_mixed(g, n, TautPolynomial::monomial(n, D, basis[i])));
    }
  }
}

TEST(Omega, LambdaGFormula) {
  // int lambda_g prod psi^d, checked against C(2g-3+n; d) b_g
  const std::pair<int, int> types[] = {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 2}, {2, 3}, {3, 1}};
  for (auto [g, n] : types) {
    const int D = moduli_dim(g, n);
    std::vector<int> d(n, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == n - 1) {
        d[i] = left;
        TautMonomial m;
        m.psi = d;
        EXPECT_EQ(hodge_integral(g, n, g, TautPolynomial::monomial(n, D, m)), oracle::lambda_g_psi(g, d));
        return;
      }
      for (int k = 0; k <= left; ++k) {
        d[i] = k;
        rec(i + 1, left - k);
      }
    };
    rec(0, D - g);
  }
  EXPECT_EQ(hodge_integral(2, 1, 2, TautPolynomial::psi(1, 4, 1, 2)), Rational(7, 5760));
}

TEST(Omega, HodgeIndexRange) {
  EXPECT_EQ(hodge_integral(1, 1, 2, one(1, 1)), Rational(0));
  EXPECT_EQ(hodge_integral(1, 1, -1, one(1, 1)), Rational(0));
  EXPECT_EQ(hodge_integral(1, 1, 0, TautPolynomial::psi(1, 1, 1)), Rational(1, 24));
}

TEST(Omega, ClosedFormAtROne) {
  const std::pair<int, int> types[] = {{0, 5}, {1, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 1}};
  const Rational xs[] = {Rational(1), Rational(1, 2), Rational(-2)};
  for (auto [g, n] : types) {
    const int D = moduli_dim(g, n);
    const auto basis = monomial_basis(n, D);
    for (long s : {-2L, -1L, 0L, 2L, 3L}) {
      for (const auto& x : xs) {
        const auto cf = omega_closed_form_r1(g, n, s, x);
        EXPECT_EQ(cf.lambda_t, -x);
        const auto vals = omega_pairings(g, n, spec(1, s, std::vector<long>(n, 0), x), basis);
        for (std::size_t i = 0; i < basis.size(); ++i)
          EXPECT_EQ(cf.integrate(TautPolynomial::monomial(n, D, basis[i])), vals[i]) << g << "," << n << " s=" << s;
      }
    }
  }
}

TEST(Omega, ChiAndMasurVeechClassesAtROne) {
  // Omega(1,-1;0) = Lambda(-1) exp(-sum kappa_m / m)
  const auto cf = omega_closed_form_r1(1, 2, -1, Rational(1));
  EXPECT_EQ(cf.kappa_coeffs.at(1), Rational(-1));
  EXPECT_EQ(cf.kappa_coeffs.at(2), Rational(-1, 2));
  EXPECT_EQ(omega_integral(1, 1, spec(1, -1, {0}), one(1, 1)), Rational(-1, 12));
}

TEST(Omega, DegreeBounds) {
  const auto jkv = degree_bound_check(0, 5, spec(3, 0, {1, 1, 1, 1, 2}), DegreeBound::JKV);
  EXPECT_EQ(degree_bound_first_k(0, 5, spec(3, 0, {1, 1, 1, 1, 2}), DegreeBound::JKV), 2);
  EXPECT_TRUE(jkv.pass());
  EXPECT_FALSE(jkv.pairings.empty());
  const auto neg = degree_bound_check(2, 1, spec(2, -1, {1}), DegreeBound::NegativeS);
  EXPECT_EQ(degree_bound_first_k(2, 1, spec(2, -1, {1}), DegreeBound::NegativeS), 4);
  EXPECT_TRUE(neg.pass());
  EXPECT_FALSE(neg.pairings.empty());
  // a bound at or above the dimension checks nothing
  const auto vac = degree_bound_check(1, 1, spec(2, -1, {1}), DegreeBound::NegativeS);
  EXPECT_TRUE(vac.pairings.empty());
  EXPECT_FALSE(vac.note.empty());
  EXPECT_THROW(degree_bound_check(1, 1, spec(2, 0, {0}), DegreeBound::JKV), std::invalid_argument);
  EXPECT_THROW(degree_bound_check(0, 4, spec(2, 1, {1, 1, 1, 1}), DegreeBound::NegativeS), std::invalid_argument);
}

TEST(Omega, SpecValidation) {
  EXPECT_THROW(omega_integral(1, 1, spec(2, 0, {1}), one(1, 1)), std::invalid_argument);
  EXPECT_THROW(omega_integral(1, 1, spec(0, 0, {0}), one(1, 1)), std::invalid_argument);
  EXPECT_THROW(omega_integral(1, 1, spec(2, 0, {0, 0}), one(1, 1)), std::invalid_argument);
  EXPECT_NO_THROW(spec(3, 2, {1, 1, 1, 1}).validate(0, 4) );
  EXPECT_EQ(spec(2, -1, {0, 3}, Rational(1, 2)).str(), "r=2,s=-1,a=(0,3),x=1/2");
}

TEST(Omega, CachesDoNotChangeValues) {
  const auto o = spec(3, 2, {2, 1, 1, 0});
  const auto basis = monomial_basis(4, 1);
  const auto first = omega_pairings(0, 4, o, basis);
  clear_omega_caches();
  EXPECT_EQ(omega_pairings(0, 4, o, basis), first);
}

TEST(OmegaProduct, Commutes) {
  struct Case {
    int g, n;
    OmegaSpec A, B;
  };
  const Case cases[] = {
      {1, 2, spec(2, 1, {0, 2}), spec(2, 1, {2, 0}, Rational(-1))},
      {1, 1, spec(2, 1, {1}), spec(3, 2, {2}, Rational(1, 2))},
      {0, 5, spec(2, 0, {1, 1, 1, 1, 0}), spec(3, 1, {1, 1, 1, 0, 0}, Rational(-1))},
      {2, 0, spec(2, 1, {}), spec(3, 3, {})},
  };
  for (const auto& c : cases) {
    const auto basis = monomial_basis(c.n, moduli_dim(c.g, c.n));
    EXPECT_EQ(omega_product_pairings(c.g, c.n, c.A, c.B, basis), omega_product_pairings(c.g, c.n, c.B, c.A, basis))
        << c.A.str() << " * " << c.B.str();
  }
}

TEST(OmegaProduct, MatchesSingleClassWhenOneFactorIsTrivial) {
  // Omega^{[0]}(1,s;0) is the unit class
  const auto A = spec(2, 1, {1, 0, 0});
  const auto B = spec(1, 5, {0, 0, 0}, Rational(0));
  const auto basis = monomial_basis(3, 2);
  EXPECT_EQ(omega_product_pairings(1, 3, A, B, basis), omega_pairings(1, 3, A, basis));
}
