#pragma once

#include <vector>

#include "tautcalc/rational.hpp"

namespace tautcalc {

/// Bernoulli number B_m with B_1 = -1/2, i.e. B_m = B_m(0) for the generating
/// series t e^{tx} / (e^t - 1). Computed from sum_{k<=m} C(m+1,k) B_k = 0 and
/// memoized; safe to call concurrently.
Rational bernoulli_number(int m);

/// B_m(x) = sum_k C(m,k) B_k x^{m-k}.
Rational bernoulli_poly(int m, const Rational& x);

/// The variable set (base, base+1, ..., base+count-1).
struct ArithmeticProgression {
  Rational base;
  int count = 0;
};

/// p_m over the progression; 0 for an empty progression. Requires m >= 1.
Rational power_sum(int m, const ArithmeticProgression& ctx);
/// sigma_l over the progression (sigma_0 = 1).
Rational elementary_symmetric(int l, const ArithmeticProgression& ctx);
/// h_l over the progression (h_0 = 1).
Rational complete_homogeneous(int l, const ArithmeticProgression& ctx);

/// Unsigned Stirling numbers of the first kind [n k].
mpz_class stirling1(int n, int k);
/// Stirling numbers of the second kind {n k}.
mpz_class stirling2(int n, int k);

/// (-1)^k s(k, k-m, x) = sum_{i<=m} C(k+i-m, i) [k, k-m+i] x^i.
///
/// This is the coefficient of u^m in prod_{j=0}^{k-1} (1 + (x + j) u); with
/// k = floor(s/r) and x = (s mod r)/r it expands prod_{t=1}^{k} (1 + (s/r - t) u).
/// Throws std::invalid_argument for m > k or negative arguments.
Rational stirling_generalized_first(int k, int m, const Rational& x);

/// S(m - depth, -depth, x) = sum_{i<=m} C(m+depth-1, i) (-1)^i {m-i+depth, depth} x^i,
/// the generalized second-kind number with a negative lower index -depth.
///
/// This is the coefficient of u^m in prod_{j=1}^{depth} (1 + (x - j) u)^{-1};
/// with depth = -floor(s/r) for s < 0 it expands
/// prod_{t=0}^{depth-1} (1 + (s/r + t) u)^{-1}.
Rational stirling_generalized_second(int depth, int m, const Rational& x);

}  // namespace tautcalc
