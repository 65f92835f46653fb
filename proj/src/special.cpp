#include "tautcalc/special.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace tautcalc {

namespace {

struct BernoulliCache {
  std::shared_mutex mu;
  std::vector<Rational> values{Rational(1)};
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

}  // namespace

Rational bernoulli_number(int m) {
  if (m < 0) throw std::invalid_argument("bernoulli_number: negative index");
  auto& cache = bernoulli_cache();
  {
    std::shared_lock lock(cache.mu);
    if (static_cast<std::size_t>(m) < cache.values.size()) return cache.values[m];
  }
  std::unique_lock lock(cache.mu);
  auto& b = cache.values;
  while (b.size() <= static_cast<std::size_t>(m)) {
    const long k = static_cast<long>(b.size());
    Rational acc;
    for (long j = 0; j < k; ++j) acc += binomial(k + 1, j) * b[j];
    b.push_back(-acc / Rational(k + 1));
  }
  return b[m];
}

Rational bernoulli_poly(int m, const Rational& x) {
  if (m < 0) throw std::invalid_argument("bernoulli_poly: negative index");
  // Horner in x: B_m(x) = sum_j C(m, j) B_{m-j} x^j.
  Rational acc;
  for (int j = m; j >= 0; --j) {
    acc *= x;
    acc += binomial(m, j) * bernoulli_number(m - j);
  }
  return acc;
}

Rational power_sum(int m, const ArithmeticProgression& ctx) {
  if (m < 1) throw std::invalid_argument("power_sum: degree must be positive");
  Rational acc;
  for (int i = 0; i < ctx.count; ++i) acc += (ctx.base + Rational(i)).pow(m);
  return acc;
}

Rational elementary_symmetric(int l, const ArithmeticProgression& ctx) {
  if (l < 0) return Rational(0);
  std::vector<Rational> e(l + 1);
  e[0] = Rational(1);
  for (int i = 0; i < ctx.count; ++i) {
    const Rational xi = ctx.base + Rational(i);
    for (int j = l; j >= 1; --j) e[j] += xi * e[j - 1];
  }
  return e[l];
}

Rational complete_homogeneous(int l, const ArithmeticProgression& ctx) {
  if (l < 0) return Rational(0);
  std::vector<Rational> h(l + 1);
  h[0] = Rational(1);
  for (int i = 0; i < ctx.count; ++i) {
    const Rational xi = ctx.base + Rational(i);
    for (int j = 1; j <= l; ++j) h[j] += xi * h[j - 1];
  }
  return h[l];
}

mpz_class stirling1(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("stirling1: negative argument");
  std::vector<mpz_class> row(k + 2, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) row[j] = row[j - 1] + (i - 1) * row[j];
    row[0] = 0;
  }
  return row[k];
}

mpz_class stirling2(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("stirling2: negative argument");
  std::vector<mpz_class> row(k + 2, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) row[j] = row[j - 1] + j * row[j];
    row[0] = 0;
  }
  return row[k];
}

Rational stirling_generalized_first(int k, int m, const Rational& x) {
  if (k < 0 || m < 0) throw std::invalid_argument("stirling_generalized_first: negative argument");
  if (m > k) throw std::invalid_argument("stirling_generalized_first: requires m <= k");
  Rational acc;
  Rational xp(1);
  for (int i = 0; i <= m; ++i) {
    acc += binomial(k + i - m, i) * Rational(stirling1(k, k - m + i)) * xp;
    xp *= x;
  }
  return acc;
}

Rational stirling_generalized_second(int depth, int m, const Rational& x) {
  if (depth < 0 || m < 0)
    throw std::invalid_argument("stirling_generalized_second: negative argument");
  if (depth == 0) return Rational(m == 0 ? 1 : 0);
  Rational acc;
  Rational xp(1);
  for (int i = 0; i <= m; ++i) {
    Rational term = binomial(m + depth - 1, i) * Rational(stirling2(m - i + depth, depth)) * xp;
    if (i % 2) term = -term;
    acc += term;
    xp *= x;
  }
  return acc;
}

}  // namespace tautcalc
