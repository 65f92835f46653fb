#pragma once

#include <functional>
#include <vector>

#include "tautcalc/omega.hpp"
#include "tautcalc/rational.hpp"
#include "tautcalc/report.hpp"

namespace tautcalc {

// Every check below compares two classes through their pairings with all
// kappa/psi monomials up to complementary degree, so a pass certifies the
// identity in the pairing with the monomial subring only.

/// Omega(r, s+r; a) = Omega(r, s; a) * exp(sum (-x)^m/m (s/r)^m kappa_m).
CheckReport check_shift_s(int g, int n, int r, long s, const std::vector<long>& a, const Rational& x);
/// Omega(r, s; .., a_i + r, ..) = Omega(r, s; a) * (1 + x a_i/r psi_i); i is 1-based.
CheckReport check_shift_a(int g, int n, int r, long s, const std::vector<long>& a, int i, const Rational& x);
/// s -> s + N r with p_m(s/r, ..., s/r + N - 1) in the exponent.
CheckReport check_multi_shift_s(int g, int n, int r, long s, const std::vector<long>& a, int N, const Rational& x);
/// a_i -> a_i + N r with prod_{t<N} (1 + x (a_i/r + t) psi_i); also compared
/// against N single shifts applied one after another.
CheckReport check_multi_shift_a(int g, int n, int r, long s, const std::vector<long>& a, int i, int N,
                                const Rational& x);
/// Omega(r,0;a) = Omega(r,r;a), and a_i = 0 vs a_i = r for every i with a_i in {0, r}.
CheckReport check_zero_r_symmetry(int g, int n, int r, const std::vector<long>& a, const Rational& x);

/// Consequences of Omega(r,s;a,s) = pi^* Omega(r,s;a) on Mbar_{g,n+1}:
///   int Omega(a,s) = 0, and
///   int Omega(a,s) psi^d psi_{n+1}^{k+1} = int Omega(a) psi^d kappa_k  (k <= 2, kappa_0 = 2g-2+n).
CheckReport check_pullback(int g, int n, int r, long s, const std::vector<long>& a, const Rational& x);
/// Coefficient of x^d in the string equation: int Omega(a,s) psi^d
///   = sum_{j : d_j > 0} int Omega(a) psi^{d - e_j}.
CheckReport check_string(int g, int n, int r, long s, const std::vector<long>& a, const Rational& x);
/// int Omega(a,s) psi^d psi_{n+1} = (2g-2+n) int Omega(a) psi^d.
CheckReport check_dilaton(int g, int n, int r, long s, const std::vector<long>& a, const Rational& x);
/// int_{Mbar_{g,n+1}} Omega(r,s;a,s) = 0.
CheckReport check_forgotten_point_vanishing(int g, int n, int r, long s, const std::vector<long>& a,
                                            const Rational& x);
/// The four vanishing integrals obtained from the shift properties, plus
/// the Stirling-number expansions of their psi_{n+1} factors. For 0 <= s < r
/// this is the plain forgotten-point vanishing.
CheckReport check_vanishing_corollary(int g, int n, int r, long s, const std::vector<long>& a,
                                      const Rational& x);

/// r = 1: Omega^{[-x]}(1,1-s;0) * Omega^{[x]}(1,s;0) pairs like 1.
CheckReport check_segre_chern(int g, int n, long s, const Rational& x);
/// (g,n) = (1,2): Omega^{[x]}(2,1;0,2) * Omega^{[-x]}(2,1;2,0) pairs like
/// r^{2(2g-1)} - (3/4) x^2 kappa_2 for every x given, the naive inverse
/// relation (product pairs like its constant term) fails, and odd-degree
/// parts vanish.
CheckReport check_counterexample_footnote(const std::vector<Rational>& xs);
/// Degree-k parts of Omega^{[-x]}(r,r-s;r-a) * Omega^{[x]}(r,s;a) pair to 0 for odd k.
CheckReport check_odd_degree_vanishing(int g, int n, int r, long s, const std::vector<long>& a,
                                       const Rational& x);

struct IdentityGrid {
  int dim_max = 4;
  int r_max = 3;
  long s_min = -3;
  long s_max = 4;
  std::vector<Rational> xs{Rational(1), Rational(-1), Rational(1, 2)};
  /// Largest N for the multiple shift in s.
  int shift_max = 3;
};

/// Deterministic admissible a in {1..r}^n (a_i cycles through 1..r, the last
/// entry fixes the congruence). Empty optional-like result: returns false
/// when n = 0 and the congruence fails.
bool grid_legs(int g, int n, int r, long s, std::vector<long>& a);

/// Runs the identity suite over the grid; reports arrive in a fixed order.
/// Returns the number of failing reports.
int run_identity_grid(const IdentityGrid& grid, const std::function<void(const CheckReport&)>& sink);

}  // namespace tautcalc
