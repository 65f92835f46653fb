#include "tautcalc/applications.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "tautcalc/intersection.hpp"
#include "tautcalc/omega.hpp"
#include "tautcalc/special.hpp"
#include "tautcalc/taut_poly.hpp"

namespace tautcalc {

namespace {

void require_stable(int g, int n) {
  if (!is_stable(g, n))
    throw std::invalid_argument("unstable type (g,n)=(" + std::to_string(g) + "," + std::to_string(n) + ")");
}

Rational sign_pow(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

// kappa_{b_1,...,b_q}: pushforward of prod psi_{n+j}^{b_j+1} along the map
// forgetting the q added points. Expands as a sum over permutations of the
// product of kappa_{sum over a cycle}.
TautPolynomial multi_kappa(const std::vector<int>& parts, int n_points, int trunc) {
  if (parts.empty()) return TautPolynomial::constant(n_points, trunc, 1);
  const int q = static_cast<int>(parts.size());
  TautPolynomial out(n_points, trunc);
  // parts[0] shares a cycle with the subset chosen from the remaining q - 1;
  // |S|! cyclic orders of {0} u S.
  for (unsigned mask = 0; mask < (1u << (q - 1)); ++mask) {
    int sum = parts[0];
    int size = 0;
    std::vector<int> rest;
    for (int j = 1; j < q; ++j) {
      if (mask & (1u << (j - 1))) {
        sum += parts[j];
        ++size;
      } else {
        rest.push_back(parts[j]);
      }
    }
    if (sum > trunc) continue;
    TautPolynomial term = TautPolynomial::kappa(n_points, trunc, sum) * multi_kappa(rest, n_points, trunc);
    out += term * factorial(size);
  }
  return out;
}

// Visits every multiset of positive parts with total <= max_total, as a
// nonincreasing vector together with prod mult_i!.
void for_each_multiset(int max_total, const std::function<void(const std::vector<int>&, const Rational&)>& fn) {
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int largest, int remaining) {
    Rational mult_fact(1);
    int run = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      run = (i > 0 && parts[i] == parts[i - 1]) ? run + 1 : 1;
      mult_fact *= Rational(run);
    }
    fn(parts, mult_fact);
    for (int p = std::min(largest, remaining); p >= 1; --p) {
      parts.push_back(p);
      rec(p, remaining - p);
      parts.pop_back();
    }
  };
  rec(max_total, max_total);
}

// sum_{l} 1/l! sum_{mu_1..mu_l >= 1} prod w(mu_j) prod psi_{n+j}^{mu_j+1},
// pushed down to Mbar_{g,n_base}. When n == 0 the first added point is kept
// as point 1 of the base, so the result lives on Mbar_{g,1} and only l >= 1
// contributes.
TautPolynomial added_point_sum(int g, int n, const std::function<Rational(int)>& w) {
  const int n_base = n == 0 ? 1 : n;
  const int trunc = moduli_dim(g, n_base);
  TautPolynomial out(n_base, trunc);
  if (n > 0) {
    for_each_multiset(trunc, [&](const std::vector<int>& parts, const Rational& mult_fact) {
      Rational c = Rational(1) / mult_fact;
      for (int p : parts) c *= w(p);
      if (c.is_zero()) return;
      out += multi_kappa(parts, n_base, trunc) * c;
    });
    return out;
  }
  for (int first = 1; first + 1 <= trunc; ++first) {
    const Rational w_first = w(first);
    if (w_first.is_zero()) continue;
    const TautPolynomial psi_first = TautPolynomial::psi(n_base, trunc, 1, first + 1);
    for_each_multiset(trunc - first - 1, [&](const std::vector<int>& parts, const Rational& mult_fact) {
      const long l = 1 + static_cast<long>(parts.size());
      Rational c = w_first / (mult_fact * Rational(l));
      for (int p : parts) c *= w(p);
      if (c.is_zero()) return;
      out += psi_first * multi_kappa(parts, n_base, trunc) * c;
    });
  }
  return out;
}

// sum_i t^i int lambda_i T on Mbar_{g,n_base}; genus 0 only has lambda_0.
Rational lambda_sum(int g, int n_base, const Rational& t, const TautPolynomial& T) {
  if (g == 0) return integrate_mixed(g, n_base, T);
  return hodge_pairing(g, n_base, t, T);
}

OmegaSpec trivial_spec(int n, long s, const Rational& x) {
  OmegaSpec spec;
  spec.r = 1;
  spec.s = s;
  spec.a.assign(n, 0);
  spec.x = x;
  return spec;
}

}  // namespace

std::string route_name(ChiRoute r) {
  switch (r) {
    case ChiRoute::HarerZagier: return "harer-zagier";
    case ChiRoute::HodgeSum: return "hodge";
    case ChiRoute::Omega: return "omega";
  }
  return "?";
}

std::string route_name(MVRoute r) {
  switch (r) {
    case MVRoute::Omega: return "omega";
    case MVRoute::HodgeSum: return "hodge";
  }
  return "?";
}

EulerCharResult chi_harer_zagier(int g, int n) {
  require_stable(g, n);
  EulerCharResult res{g, n, Rational(0), ChiRoute::HarerZagier};
  if (g == 0) {
    res.value = sign_pow(n - 3) * factorial(n - 3);
  } else if (g == 1) {
    res.value = sign_pow(n) * factorial(n - 1) / Rational(12);
  } else {
    res.value = sign_pow(n) * factorial(2 * g - 3 + n) * bernoulli_number(2 * g) /
                (Rational(2 * g) * factorial(2 * g - 2));
  }
  return res;
}

EulerCharResult chi_via_hodge(int g, int n) {
  require_stable(g, n);
  // 1/(1+psi) psi^2 = sum_{mu>=1} (-1)^{mu-1} psi^{mu+1}
  const TautPolynomial K = added_point_sum(g, n, [](int mu) { return sign_pow(mu - 1); });
  const int n_base = n == 0 ? 1 : n;
  const Rational total = lambda_sum(g, n_base, Rational(1), K);
  return {g, n, sign_pow(moduli_dim(g, n)) * total, ChiRoute::HodgeSum};
}

EulerCharResult chi_via_omega(int g, int n) {
  require_stable(g, n);
  const Rational v = omega_integral(g, n, trivial_spec(n, -1, Rational(1)),
                                    TautPolynomial::constant(n, moduli_dim(g, n), 1));
  return {g, n, v, ChiRoute::Omega};
}

EulerCharResult chi(int g, int n, ChiRoute route) {
  switch (route) {
    case ChiRoute::HarerZagier: return chi_harer_zagier(g, n);
    case ChiRoute::HodgeSum: return chi_via_hodge(g, n);
    case ChiRoute::Omega: return chi_via_omega(g, n);
  }
  throw std::invalid_argument("unknown route");
}

CheckReport chi_recursion_check(int g, int n) {
  require_stable(g, n);
  CheckReport rep;
  rep.check = "chi_recursion";
  rep.parameters = {{"g", g}, {"n", n}};
  const Rational factor(-(2L * g - 2 + n));
  for (ChiRoute route : {ChiRoute::HarerZagier, ChiRoute::HodgeSum, ChiRoute::Omega}) {
    const Rational lo = chi(g, n, route).value;
    const Rational hi = chi(g, n + 1, route).value;
    rep.add(route_name(route), factor * lo, hi);
  }
  return rep;
}

Rational dyz_lhs(int g, bool alternating) {
  if (g < 2) throw std::invalid_argument("dyz identity needs g >= 2");
  const Rational w = alternating ? Rational(-1) : Rational(1);
  const TautPolynomial K = added_point_sum(g, 0, [w](int) { return w; });
  return lambda_sum(g, 1, Rational(-1), K);
}

CheckReport dyz_identity_check(int g) {
  CheckReport rep;
  rep.check = "dyz_identity";
  rep.parameters = {{"g", g}};
  const Rational rhs = bernoulli_number(2 * g) / Rational(2L * g * (2L * g - 2));
  rep.add("lhs", rhs, dyz_lhs(g, true));
  rep.add("chi_g0", rhs, chi_via_omega(g, 0).value);
  return rep;
}

MVResult mv_via_omega(int g, int n) {
  require_stable(g, n);
  const Rational v = omega_integral(g, n, trivial_spec(n, 2, Rational(1)),
                                    TautPolynomial::constant(n, moduli_dim(g, n), 1));
  return {g, n, sign_pow(moduli_dim(g, n)) * v, MVRoute::Omega};
}

MVResult mv_via_hodge(int g, int n) {
  require_stable(g, n);
  const TautPolynomial K = added_point_sum(g, n, [](int mu) { return mu == 1 ? Rational(1) : Rational(0); });
  const int n_base = n == 0 ? 1 : n;
  return {g, n, lambda_sum(g, n_base, Rational(1), K), MVRoute::HodgeSum};
}

MVResult mv(int g, int n, MVRoute route) {
  return route == MVRoute::Omega ? mv_via_omega(g, n) : mv_via_hodge(g, n);
}

CheckReport mv_segre_check(int g, int n) {
  require_stable(g, n);
  CheckReport rep;
  rep.check = "mv_segre";
  rep.parameters = {{"g", g}, {"n", n}};
  const int D = moduli_dim(g, n);
  const OmegaSpec chern = trivial_spec(n, -1, Rational(1));
  const OmegaSpec inverse = trivial_spec(n, 2, Rational(-1));
  const auto basis = monomial_basis(n, D);
  const auto prod = omega_product_pairings(g, n, chern, inverse, basis);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const TautPolynomial m = TautPolynomial::monomial(n, D, basis[i]);
    rep.add("inverse:" + m.render(), integrate_mixed(g, n, m), prod[i]);
  }
  const Rational via_inverse = omega_integral(g, n, inverse, TautPolynomial::constant(n, D, 1));
  rep.add("mv", mv_via_omega(g, n).value, via_inverse);
  return rep;
}

Rational mv_normalization(int g, int n) {
  const long top = 4L * g - 4 + n;
  const long bottom = 6L * g - 7 + 2L * n;
  if (top < 0 || bottom < 0)
    throw std::domain_error("mv normalization undefined for (g,n)=(" + std::to_string(g) + "," +
                            std::to_string(n) + ")");
  return Rational(2).pow(2L * g + 1) * factorial(top) / factorial(bottom);
}

}  // namespace tautcalc
