#include <gtest/gtest.h>

#include "tautcalc/identities.hpp"
#include "tautcalc/intersection.hpp"

using namespace tautcalc;

#define EXPECT_REPORT_PASSES(expr)                        \
  do {                                                    \
    const CheckReport rep_ = (expr);                      \
    EXPECT_TRUE(rep_.pass()) << rep_.to_json().dump();    \
    EXPECT_FALSE(rep_.pairings.empty()) << rep_.check;    \
  } while (0)

TEST(Identities, ShiftOfS) {
  EXPECT_REPORT_PASSES(check_shift_s(1, 1, 2, 1, {1}, Rational(1)));
  for (long s = -3; s <= 3; ++s) EXPECT_REPORT_PASSES(check_shift_s(1, 2, 1, s, {0, 0}, Rational(1, 2)));
  EXPECT_REPORT_PASSES(check_shift_s(0, 4, 2, 0, {1, 1, 1, 1}, Rational(-1)));
}

TEST(Identities, ShiftOfLegs) {
  EXPECT_REPORT_PASSES(check_shift_a(1, 1, 2, 0, {0}, 1, Rational(1)));
  EXPECT_REPORT_PASSES(check_shift_a(0, 4, 3, 1, {2, 1, 1, 1}, 3, Rational(-1)));
  EXPECT_REPORT_PASSES(check_multi_shift_a(1, 1, 2, 0, {2}, 1, 2, Rational(1)));
  EXPECT_REPORT_PASSES(check_multi_shift_a(1, 2, 3, -2, {1, 1}, 2, 3, Rational(1, 2)));
  EXPECT_THROW(check_shift_a(1, 1, 2, 0, {0}, 2, Rational(1)), std::invalid_argument);
}

TEST(Identities, MultipleShiftOfS) {
  for (int N = 0; N <= 3; ++N) {
    EXPECT_REPORT_PASSES(check_multi_shift_s(1, 1, 2, 1, {1}, N, Rational(1)));
    EXPECT_REPORT_PASSES(check_multi_shift_s(0, 4, 3, -1, {1, 1, 1, 1}, N, Rational(1, 2)));
  }
}

TEST(Identities, ShiftsAreNotTrivial) {
  // the s-shift really changes the class at r = 2
  const auto basis = monomial_basis(1, 1);
  OmegaSpec a{2, 1, {1}, Rational(1)};
  OmegaSpec b{2, 3, {1}, Rational(1)};
  EXPECT_NE(omega_pairings(1, 1, a, basis), omega_pairings(1, 1, b, basis));
}

TEST(Identities, ZeroAndRSymmetry) {
  EXPECT_REPORT_PASSES(check_zero_r_symmetry(1, 1, 2, {2}, Rational(1)));
  EXPECT_REPORT_PASSES(check_zero_r_symmetry(0, 4, 2, {2, 1, 1, 2}, Rational(-1)));
  EXPECT_REPORT_PASSES(check_zero_r_symmetry(1, 1, 1, {1}, Rational(1, 2)));
}

TEST(Identities, Pullback) {
  EXPECT_REPORT_PASSES(check_pullback(1, 1, 2, 3, {1}, Rational(1)));
  EXPECT_REPORT_PASSES(check_pullback(1, 1, 2, 0, {2}, Rational(1)));
  EXPECT_REPORT_PASSES(check_pullback(0, 3, 3, 2, {1, 1, 0}, Rational(1, 2)));
  EXPECT_REPORT_PASSES(check_pullback(2, 0, 2, -3, {}, Rational(-1)));
  EXPECT_REPORT_PASSES(check_forgotten_point_vanishing(1, 2, 3, -2, {1, 1}, Rational(1)));
}

TEST(Identities, StringAndDilaton) {
  EXPECT_REPORT_PASSES(check_string(1, 1, 2, 0, {2}, Rational(1)));
  EXPECT_REPORT_PASSES(check_string(0, 4, 3, -1, {1, 1, 1, 1}, Rational(1, 2)));
  EXPECT_REPORT_PASSES(check_dilaton(0, 3, 2, 1, {1, 1, 1}, Rational(1)));
  EXPECT_REPORT_PASSES(check_dilaton(1, 2, 3, 4, {1, 1}, Rational(-1)));
}

TEST(Identities, VanishingAfterShift) {
  EXPECT_REPORT_PASSES(check_vanishing_corollary(1, 1, 2, 3, {1}, Rational(1)));
  EXPECT_REPORT_PASSES(check_vanishing_corollary(1, 1, 2, -1, {1}, Rational(1)));
  EXPECT_REPORT_PASSES(check_vanishing_corollary(0, 4, 3, 7, {1, 1, 1, 2}, Rational(1, 2)));
  EXPECT_REPORT_PASSES(check_vanishing_corollary(0, 4, 3, -4, {1, 1, 1, 1}, Rational(-1)));
  // [s] = 0 is the plain forgotten-point vanishing
  const auto rep = check_vanishing_corollary(1, 1, 3, 2, {2}, Rational(1));
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.pairings.size(), 1u);
}

TEST(Identities, SegreChern) {
  EXPECT_REPORT_PASSES(check_segre_chern(1, 1, -1, Rational(1)));
  EXPECT_REPORT_PASSES(check_segre_chern(0, 4, 0, Rational(1)));
  EXPECT_REPORT_PASSES(check_segre_chern(1, 2, 3, Rational(1, 2)));
  EXPECT_REPORT_PASSES(check_segre_chern(2, 0, -1, Rational(0)));
}

TEST(Identities, ProductCounterexample) {
  const auto rep = check_counterexample_footnote({Rational(1), Rational(2), Rational(1, 2)});
  EXPECT_TRUE(rep.pass()) << rep.to_json().dump();
  EXPECT_EQ(rep.note, "naive inverse relation fails at every nonzero x");
  // the degree-2 part pairs with 1 to -x^2/32 = -(3/4) x^2 int kappa_2
  OmegaSpec A{2, 1, {0, 2}, Rational(2)};
  OmegaSpec B{2, 1, {2, 0}, Rational(-2)};
  const Rational top = omega_product_integral(1, 2, A, B, TautPolynomial::constant(2, 2, 1));
  EXPECT_EQ(top, Rational(-4, 32));
  EXPECT_EQ(kappa_psi_integral(1, {0, 0}, {{2, 1}}), Rational(1, 24));
}

TEST(Identities, OddDegreeVanishing) {
  for (int g = 0; g <= 1; ++g)
    for (int n = 0; moduli_dim(g, n) <= 2; ++n) {
      if (!is_stable(g, n)) continue;
      for (int r = 1; r <= 3; ++r)
        for (long s = -1; s <= 2; ++s) {
          std::vector<long> a;
          if (!grid_legs(g, n, r, s, a)) continue;
          const auto rep = check_odd_degree_vanishing(g, n, r, s, a, Rational(1));
          EXPECT_TRUE(rep.pass()) << rep.to_json().dump();
        }
    }
}

TEST(Identities, GridLegs) {
  std::vector<long> a;
  ASSERT_TRUE(grid_legs(1, 3, 3, 2, a));
  EXPECT_EQ(a, (std::vector<long>{1, 2, 3}));
  EXPECT_FALSE(grid_legs(2, 0, 3, 1, a));
  ASSERT_TRUE(grid_legs(2, 0, 2, 1, a));
  EXPECT_TRUE(a.empty());
}

TEST(Identities, SmallGrid) {
  IdentityGrid grid;
  grid.dim_max = 2;
  int reports = 0;
  const int failures = run_identity_grid(grid, [&](const CheckReport& rep) {
    ++reports;
    EXPECT_TRUE(rep.pass()) << rep.to_json().dump();
  });
  EXPECT_EQ(failures, 0);
  EXPECT_GT(reports, 500);
}
