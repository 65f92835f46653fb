#pragma once

#include <map>
#include <string>
#include <vector>

#include "tautcalc/rational.hpp"
#include "tautcalc/report.hpp"
#include "tautcalc/taut_poly.hpp"

namespace tautcalc {

/// Parameters (r, s, a_1..a_n, x) of one Omega class. a_i are true integers;
/// only the weightings reduce them mod r.
struct OmegaSpec {
  int r = 1;
  long s = 0;
  std::vector<long> a;
  Rational x{1};

  std::string str() const;
  /// Throws std::invalid_argument for r < 1, a wrong length, or
  /// sum a_i != (2g-2+n)s mod r.
  void validate(int g, int n) const;
};

/// All monomials in kappa and psi_1..psi_n of total degree exactly k, in
/// canonical order.
std::vector<TautMonomial> monomials_of_degree(int n, int k);
/// Same for every degree 0..max_degree, lowest degree first.
std::vector<TautMonomial> monomial_basis(int n, int max_degree);

/// int_{Mbar_{g,n}} Omega^{[x]}(r,s;a) * T by the stable-graph sum.
/// T's kappa classes restrict to sum_v kappa_m(v) on each stratum.
Rational omega_integral(int g, int n, const OmegaSpec& spec, const TautPolynomial& T);

/// Pairings of Omega with each monomial (one graph pass for the batch).
/// Results are memoized per (g, n, spec, monomial).
std::vector<Rational> omega_pairings(int g, int n, const OmegaSpec& spec, const std::vector<TautMonomial>& monos);

/// int Omega_A * Omega_B * T, with Omega_B pulled back to each stratum of the
/// Omega_A graph sum through the gluing rule (factor r_B and a sum over
/// residues b + b' = 0 mod r_B per edge).
Rational omega_product_integral(int g, int n, const OmegaSpec& A, const OmegaSpec& B, const TautPolynomial& T);
std::vector<Rational> omega_product_pairings(int g, int n, const OmegaSpec& A, const OmegaSpec& B,
                                             const std::vector<TautMonomial>& monos);

/// int lambda_i * T. Uses Omega^{[x]}(1,1;1,...,1) = Lambda(-x): the degree-i
/// part at x = 1 is (-1)^i lambda_i, isolated by pairing with the degree
/// (dim - i) part of T.
Rational hodge_integral(int g, int n, int i, const TautPolynomial& T);
/// int Lambda(t) * T = sum_i t^i int lambda_i T.
Rational hodge_pairing(int g, int n, const Rational& t, const TautPolynomial& T);

/// Omega^{[x]}(1,s;0,...,0) = Lambda(t) * exp(sum_m c_m kappa_m) with t = -x
/// and c_m = (-x)^m (B_{m+1}(s) - B_{m+1}) / (m(m+1)).
struct ClosedFormR1 {
  int g = 0;
  int n = 0;
  Rational lambda_t;
  std::map<int, Rational> kappa_coeffs;
  TautPolynomial kappa_part{0, 0};

  /// int Lambda(t) * kappa_part * T via hodge_integral.
  Rational integrate(const TautPolynomial& T) const;
};
ClosedFormR1 omega_closed_form_r1(int g, int n, long s, const Rational& x);

enum class DegreeBound { JKV, NegativeS };

/// Pairs the degree-k part of Omega(r,s;a) (x = 1) against every monomial of
/// complementary degree for each k above the bound; all must vanish.
/// Throws std::invalid_argument when the hypothesis of the bound fails.
CheckReport degree_bound_check(int g, int n, const OmegaSpec& spec, DegreeBound kind);

/// Lowest k for which the bound asserts vanishing.
int degree_bound_first_k(int g, int n, const OmegaSpec& spec, DegreeBound kind);

/// Drops every memoized Omega pairing (the psi/kappa caches are kept).
void clear_omega_caches();

}  // namespace tautcalc
