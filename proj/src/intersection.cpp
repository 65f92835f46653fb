#include "tautcalc/intersection.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace tautcalc {

bool PsiCache::lookup(int g, const std::vector<int>& key, Rational& out) const {
  std::shared_lock lock(mu_);
  auto it = table_.find({g, key});
  if (it == table_.end()) return false;
  out = it->second;
  return true;
}

void PsiCache::store(int g, const std::vector<int>& key, const Rational& value) {
  std::unique_lock lock(mu_);
  table_.try_emplace({g, key}, value);
}

std::size_t PsiCache::size() const {
  std::shared_lock lock(mu_);
  return table_.size();
}

void PsiCache::clear() {
  std::unique_lock lock(mu_);
  table_.clear();
}

std::size_t PsiCache::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return 0;
  std::size_t skipped = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    try {
      const auto p1 = line.find(';');
      const auto p2 = line.find(';', p1 == std::string::npos ? p1 : p1 + 1);
      if (p1 == std::string::npos || p2 == std::string::npos) throw std::invalid_argument("field count");
      const int g = std::stoi(line.substr(0, p1));
      std::vector<int> d;
      std::stringstream ss(line.substr(p1 + 1, p2 - p1 - 1));
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size() || v < 0) throw std::invalid_argument("exponent");
        d.push_back(v);
      }
      const Rational value = Rational::parse(line.substr(p2 + 1));
      const int n = static_cast<int>(d.size());
      if (!is_stable(g, n)) throw std::invalid_argument("unstable key");
      std::sort(d.rbegin(), d.rend());
      store(g, d, value);
    } catch (const std::exception&) {
      ++skipped;
      std::cerr << "warning: " << path << ":" << lineno << ": skipping corrupted cache line\n";
    }
  }
  return skipped;
}

void PsiCache::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write cache file " + path);
  out << kHeader << "\n";
  std::shared_lock lock(mu_);
  for (const auto& [key, value] : table_) {
    out << key.first << ";";
    for (std::size_t i = 0; i < key.second.size(); ++i) out << (i ? "," : "") << key.second[i];
    out << ";" << value.str() << "\n";
  }
}

PsiCache& psi_cache() {
  static PsiCache cache;
  return cache;
}

namespace {

Rational dfact(long k) { return Rational(double_factorial_odd(k)); }  // (2k-1)!!

Rational psi_sorted(int g, std::vector<int> d);

// Same as psi_integral but returns 0 for unstable or negative-genus input,
// which is the convention the recursion needs for its boundary terms.
Rational psi_or_zero(int g, std::vector<int> d) {
  const int n = static_cast<int>(d.size());
  if (g < 0 || !is_stable(g, n)) return Rational(0);
  std::sort(d.rbegin(), d.rend());
  return psi_sorted(g, std::move(d));
}

Rational psi_compute(int g, const std::vector<int>& d) {
  const int n = static_cast<int>(d.size());
  if (g == 0 && n == 3) return Rational(1);
  if (g == 1 && n == 1) return Rational(1, 24);

  // d is sorted descending, so zeros and ones sit at the back.
  if (d.back() == 0) {
    std::vector<int> rest(d.begin(), d.end() - 1);
    Rational acc;
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if (rest[j] == 0) continue;
      std::vector<int> e = rest;
      --e[j];
      acc += psi_or_zero(g, e);
    }
    return acc;
  }
  if (d.back() == 1) {
    std::vector<int> rest(d.begin(), d.end() - 1);
    return Rational(2 * g - 2 + n - 1) * psi_or_zero(g, rest);
  }

  // DVV with tau_{k+1} = the largest exponent; S = the others.
  const int k = d.front() - 1;
  const std::vector<int> S(d.begin() + 1, d.end());
  Rational acc;
  for (std::size_t j = 0; j < S.size(); ++j) {
    std::vector<int> e = S;
    e[j] = k + S[j];
    acc += dfact(k + S[j] + 1) / dfact(S[j]) * psi_or_zero(g, e);
  }
  Rational quad;
  const std::size_t m = S.size();
  for (int a = 0; a <= k - 1; ++a) {
    const int b = k - 1 - a;
    const Rational w = dfact(a + 1) * dfact(b + 1);
    std::vector<int> e = S;
    e.push_back(a);
    e.push_back(b);
    Rational inner = psi_or_zero(g - 1, e);
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
      std::vector<int> I{a}, J{b};
      int sumI = a, sumJ = b;
      for (std::size_t t = 0; t < m; ++t) {
        if (mask >> t & 1) {
          I.push_back(S[t]);
          sumI += S[t];
        } else {
          J.push_back(S[t]);
          sumJ += S[t];
        }
      }
      // dimension fixes the genus split: sum = 3 g1 - 3 + |I|
      const int numI = sumI + 3 - static_cast<int>(I.size());
      if (numI % 3 != 0) continue;
      const int g1 = numI / 3;
      const int g2 = g - g1;
      if (g1 < 0 || g2 < 0) continue;
      if (sumJ != moduli_dim(g2, static_cast<int>(J.size()))) continue;
      const Rational left = psi_or_zero(g1, I);
      if (left.is_zero()) continue;
      inner += left * psi_or_zero(g2, J);
    }
    quad += w * inner;
  }
  acc += quad / Rational(2);
  return acc / dfact(k + 2);
}

Rational psi_sorted(int g, std::vector<int> d) {
  const int n = static_cast<int>(d.size());
  int sum = 0;
  for (int x : d) sum += x;
  if (sum != moduli_dim(g, n)) return Rational(0);
  Rational cached;
  if (psi_cache().lookup(g, d, cached)) return cached;
  const Rational value = psi_compute(g, d);
  psi_cache().store(g, d, value);
  return value;
}

// Polynomials in the formal variables u_m (one slot per kappa index in use),
// truncated componentwise by the target exponent vector.
using UPoly = std::map<std::vector<int>, Rational>;

UPoly umul(const UPoly& a, const UPoly& b, const std::vector<int>& cap) {
  UPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      bool ok = true;
      for (std::size_t i = 0; i < e.size() && ok; ++i) {
        e[i] = ea[i] + eb[i];
        ok = e[i] <= cap[i];
      }
      if (!ok) continue;
      Rational& slot = out[e];
      slot += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

struct KappaKey {
  int g;
  std::vector<int> d;
  std::vector<std::pair<int, int>> kappa;
  auto operator<=>(const KappaKey&) const = default;
};

struct KappaCache {
  std::shared_mutex mu;
  std::map<KappaKey, Rational> table;
};

KappaCache& kappa_cache() {
  static KappaCache cache;
  return cache;
}

Rational kappa_reduce(int g, const std::vector<int>& d, const std::vector<std::pair<int, int>>& kappa) {
  const std::size_t q = kappa.size();
  std::vector<int> cap(q);
  int K = 0;
  for (std::size_t i = 0; i < q; ++i) {
    cap[i] = kappa[i].second;
    K += kappa[i].first * kappa[i].second;
  }
  // E(x) = exp(-sum_m u_m x^m) up to x^K; v_k = -E_k.
  std::vector<UPoly> U(K + 1);
  for (std::size_t i = 0; i < q; ++i) {
    std::vector<int> e(q, 0);
    e[i] = 1;
    U[kappa[i].first][e] = Rational(-1);
  }
  std::vector<UPoly> E(K + 1), power(K + 1);
  E[0][std::vector<int>(q, 0)] = Rational(1);
  power[0][std::vector<int>(q, 0)] = Rational(1);
  int total_e = 0;
  for (int c : cap) total_e += c;
  for (int j = 1; j <= total_e; ++j) {
    std::vector<UPoly> next(K + 1);
    for (int a = 0; a <= K; ++a) {
      if (power[a].empty()) continue;
      for (int b = 1; a + b <= K; ++b) {
        if (U[b].empty()) continue;
        for (const auto& [e, c] : umul(power[a], U[b], cap)) next[a + b][e] += c;
      }
    }
    power = std::move(next);
    const Rational inv = Rational(1) / factorial(j);
    for (int a = 0; a <= K; ++a)
      for (const auto& [e, c] : power[a]) E[a][e] += c * inv;
  }
  std::vector<UPoly> v(K + 1);
  for (int k = 1; k <= K; ++k)
    for (const auto& [e, c] : E[k])
      if (!c.is_zero()) v[k][e] = -c;

  Rational prefactor(1);
  for (int c : cap) prefactor *= factorial(c);

  Rational acc;
  std::vector<int> parts;
  // Partitions of K into parts listed in non-increasing order.
  std::function<void(int, int, const UPoly&)> walk = [&](int remaining, int max_part, const UPoly& prod) {
    if (remaining == 0) {
      auto it = prod.find(cap);
      if (it == prod.end()) return;
      Rational mult_fact(1);
      for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        mult_fact *= factorial(static_cast<long>(j - i));
        i = j;
      }
      std::vector<int> full = d;
      for (int p : parts) full.push_back(p + 1);
      acc += it->second / mult_fact * psi_integral(g, full);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      if (v[p].empty()) continue;
      UPoly next = umul(prod, v[p], cap);
      if (next.empty()) continue;
      parts.push_back(p);
      walk(remaining - p, p, next);
      parts.pop_back();
    }
  };
  UPoly one;
  one[std::vector<int>(q, 0)] = Rational(1);
  walk(K, K, one);
  return prefactor * acc;
}

}  // namespace

Rational psi_integral(int g, const std::vector<int>& d) {
  const int n = static_cast<int>(d.size());
  if (!is_stable(g, n)) throw std::invalid_argument("psi_integral: unstable (g, n)");
  for (int x : d)
    if (x < 0) throw std::invalid_argument("psi_integral: negative exponent");
  std::vector<int> sorted = d;
  std::sort(sorted.rbegin(), sorted.rend());
  return psi_sorted(g, std::move(sorted));
}

Rational kappa_psi_integral(int g, const std::vector<int>& d, const std::vector<std::pair<int, int>>& kappa) {
  const int n = static_cast<int>(d.size());
  if (!is_stable(g, n)) throw std::invalid_argument("kappa_psi_integral: unstable (g, n)");
  int deg = 0;
  for (int x : d) {
    if (x < 0) throw std::invalid_argument("kappa_psi_integral: negative exponent");
    deg += x;
  }
  std::vector<std::pair<int, int>> kap;
  for (const auto& [m, e] : kappa) {
    if (m < 1 || e < 0) throw std::invalid_argument("kappa_psi_integral: bad kappa index");
    if (e == 0) continue;
    deg += m * e;
    kap.emplace_back(m, e);
  }
  std::sort(kap.begin(), kap.end());
  for (std::size_t i = 1; i < kap.size(); ++i)
    if (kap[i].first == kap[i - 1].first) throw std::invalid_argument("kappa_psi_integral: repeated kappa index");
  if (deg != moduli_dim(g, n)) return Rational(0);
  if (kap.empty()) return psi_integral(g, d);

  KappaKey key{g, d, kap};
  std::sort(key.d.rbegin(), key.d.rend());
  auto& cache = kappa_cache();
  {
    std::shared_lock lock(cache.mu);
    auto it = cache.table.find(key);
    if (it != cache.table.end()) return it->second;
  }
  const Rational value = kappa_reduce(g, key.d, kap);
  std::unique_lock lock(cache.mu);
  cache.table.try_emplace(key, value);
  return value;
}

Rational integrate_mixed(int g, int n, const TautPolynomial& p) {
  if (p.n_points() != n) throw std::invalid_argument("integrate_mixed: point count mismatch");
  if (!is_stable(g, n)) throw std::invalid_argument("integrate_mixed: unstable (g, n)");
  const int dim = moduli_dim(g, n);
  Rational acc;
  for (const auto& [mono, c] : p.terms())
    if (mono.degree() == dim) acc += c * kappa_psi_integral(g, mono.psi, mono.kappa);
  return acc;
}

namespace {

void for_each_composition(int n, int total, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> d(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      d[i] = left;
      fn(d);
      return;
    }
    for (int x = left; x >= 0; --x) {
      d[i] = x;
      rec(i + 1, left - x);
    }
  };
  if (n == 0) {
    if (total == 0) fn(d);
    return;
  }
  rec(0, total);
}

std::string exps(const std::vector<int>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

}  // namespace

CheckReport forgetful_pullback_check(int g, int n, int m) {
  if (!is_stable(g, n)) throw std::invalid_argument("forgetful_pullback_check: unstable (g, n)");
  if (m < 1) throw std::invalid_argument("forgetful_pullback_check: m must be >= 1");
  CheckReport rep;
  rep.check = "forgetful_pullback";
  rep.parameters = {{"g", g}, {"n", n}, {"m", m}};
  const int dim = moduli_dim(g, n);
  if (m > dim) rep.note = "both sides vanish for degree reasons";
  // d ranges over psi-degrees on the n points, k over the exponent of the
  // forgotten point; degree mismatches are included as zero witnesses.
  for (int k = 0; k <= std::max(dim - m, 0); ++k) {
    const int rest = dim - m - k;
    for_each_composition(n, std::max(rest, 0), [&](const std::vector<int>& d) {
      std::vector<int> up = d;
      up.push_back(k + 1);
      Rational lhs = kappa_psi_integral(g, up, {{m, 1}});
      std::vector<int> up2 = d;
      up2.push_back(k + 1 + m);
      lhs -= psi_integral(g, up2);
      Rational rhs;
      if (rest >= 0) {
        if (k == 0) {
          rhs = Rational(2 * g - 2 + n) * kappa_psi_integral(g, d, {{m, 1}});
        } else if (k == m) {
          rhs = kappa_psi_integral(g, d, {{m, 2}});
        } else {
          std::vector<std::pair<int, int>> kap{{m, 1}, {k, 1}};
          std::sort(kap.begin(), kap.end());
          rhs = kappa_psi_integral(g, d, kap);
        }
      }
      rep.add("psi^" + exps(d) + " k=" + std::to_string(k), rhs, lhs);
    });
  }
  return rep;
}

}  // namespace tautcalc
