#pragma once

#include <string>

#include "tautcalc/rational.hpp"
#include "tautcalc/report.hpp"

namespace tautcalc {

enum class ChiRoute { HarerZagier, HodgeSum, Omega };
enum class MVRoute { Omega, HodgeSum };

std::string route_name(ChiRoute r);
std::string route_name(MVRoute r);

struct EulerCharResult {
  int g = 0;
  int n = 0;
  Rational value;
  ChiRoute route = ChiRoute::HarerZagier;
};

/// MV_{g,n} / pi^{6g-6+2n} without the labelling constant.
struct MVResult {
  int g = 0;
  int n = 0;
  Rational value;
  MVRoute route = MVRoute::Omega;
};

/// Closed form in Bernoulli numbers (with the genus 0 and 1 branches).
EulerCharResult chi_harer_zagier(int g, int n);
/// Finite sum of linear Hodge integrals; the added points are pushed down
/// to kappa classes on Mbar_{g,max(n,1)}.
EulerCharResult chi_via_hodge(int g, int n);
/// int Omega(1,-1;0,...,0) by the stable-graph sum.
EulerCharResult chi_via_omega(int g, int n);
EulerCharResult chi(int g, int n, ChiRoute route);

/// chi_{g,n+1} = -(2g-2+n) chi_{g,n} on every route.
CheckReport chi_recursion_check(int g, int n);

/// sum_{l>=1} (-1)^l/l! sum_mu int_{Mbar_{g,l}} Lambda(-1) prod psi_i^{mu_i+1}
/// against B_{2g} / (2g(2g-2)) and chi_{g,0}. Requires g >= 2.
CheckReport dyz_identity_check(int g);
/// The left-hand side above; alternating = false drops the (-1)^l, which
/// does not give chi_{g,0} (1/180 instead of -1/240 at g = 2).
Rational dyz_lhs(int g, bool alternating = true);

/// (-1)^{3g-3+n} int Omega(1,2;0,...,0).
MVResult mv_via_omega(int g, int n);
/// sum_l 1/l! sum_i int lambda_i psi_{n+1}^2 ... psi_{n+l}^2.
MVResult mv_via_hodge(int g, int n);
MVResult mv(int g, int n, MVRoute route);

/// int (Omega(1,-1;0))^{-1} through Omega^{[-1]}(1,2;0), checked both as an
/// inverse at pairing level and against the Omega route value.
CheckReport mv_segre_check(int g, int n);

/// 2^{2g+1} (4g-4+n)! / (6g-7+2n)!. Throws std::domain_error when a
/// factorial argument is negative.
Rational mv_normalization(int g, int n);

}  // namespace tautcalc
