#include "tautcalc/omega.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "tautcalc/intersection.hpp"
#include "tautcalc/special.hpp"
#include "tautcalc/stable_graph.hpp"

namespace tautcalc {

std::string OmegaSpec::str() const {
  std::string out = "r=" + std::to_string(r) + ",s=" + std::to_string(s) + ",a=(";
  for (std::size_t i = 0; i < a.size(); ++i) out += (i ? "," : "") + std::to_string(a[i]);
  return out + "),x=" + x.str();
}

void OmegaSpec::validate(int g, int n) const {
  if (r < 1) throw std::invalid_argument("Omega: r must be positive");
  if (static_cast<int>(a.size()) != n) throw std::invalid_argument("Omega: expected " + std::to_string(n) + " values a_i");
  long sum = 0;
  for (long v : a) sum += v;
  if (mod_r(sum, r) != mod_r(static_cast<long>(2 * g - 2 + n) * s, r))
    throw std::invalid_argument("Omega: sum a_i is not congruent to (2g-2+n)s mod r for " + str());
}

std::vector<TautMonomial> monomials_of_degree(int n, int k) {
  std::vector<TautMonomial> out;
  // kappa part: partitions of j <= k; psi part: compositions of k - j.
  std::vector<std::pair<int, int>> kap;
  std::vector<int> psi(n, 0);
  std::function<void(int, int)> psis = [&](int i, int left) {
    if (n == 0) {
      if (left == 0) out.push_back({kap, psi});
      return;
    }
    if (i == n - 1) {
      psi[i] = left;
      out.push_back({kap, psi});
      psi[i] = 0;
      return;
    }
    for (int x = 0; x <= left; ++x) {
      psi[i] = x;
      psis(i + 1, left - x);
    }
    psi[i] = 0;
  };
  std::function<void(int, int)> kappas = [&](int min_part, int budget) {
    psis(0, budget);
    for (int m = min_part; m <= budget; ++m)
      for (int e = 1; m * e <= budget; ++e) {
        kap.emplace_back(m, e);
        kappas(m + 1, budget - m * e);
        kap.pop_back();
      }
  };
  kappas(1, k);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TautMonomial> monomial_basis(int n, int max_degree) {
  std::vector<TautMonomial> out;
  for (int k = 0; k <= max_degree; ++k) {
    auto part = monomials_of_degree(n, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

namespace {

constexpr int kSeriesTrunc = 12;
constexpr long kNoLeg = LONG_MIN;

using KappaPart = std::vector<std::pair<int, int>>;

int kappa_deg(const KappaPart& k) {
  int d = 0;
  for (const auto& [m, e] : k) d += m * e;
  return d;
}

std::vector<Rational> series_exp(const std::vector<Rational>& s, int K) {
  std::vector<Rational> E(K + 1);
  E[0] = Rational(1);
  for (int k = 1; k <= K; ++k) {
    Rational acc;
    for (int j = 1; j <= k && j < static_cast<int>(s.size()); ++j)
      if (!s[j].is_zero()) acc += Rational(j) * s[j] * E[k - j];
    E[k] = acc / Rational(k);
  }
  return E;
}

// Series data and vertex integrals for one (r, s, x).
class Context {
 public:
  Context(int r, long s, const Rational& x) : r_(r), s_(s), x_(x) {
    std::map<int, Rational> c;
    Rational xm(1);
    for (int m = 1; m <= kSeriesTrunc; ++m) {
      xm *= -x;
      c[m] = xm * bernoulli_poly(m + 1, Rational(s, r)) / Rational(static_cast<long>(m) * (m + 1));
    }
    const TautPolynomial vf = exp_kappa_series(c, 0, kSeriesTrunc);
    vf_.resize(kSeriesTrunc + 1);
    for (const auto& [mono, coef] : vf.terms()) vf_[mono.degree()].emplace_back(mono.kappa, coef);
    for (int w = 0; w < r; ++w) edge_.push_back(edge_local_factor(w, r, x, kSeriesTrunc));
  }

  int r() const { return r_; }
  const std::vector<std::pair<KappaPart, Rational>>& vertex_part(int k) const { return vf_[k]; }
  const EdgeSeries& edge(int w) const { return edge_[w]; }

  const std::vector<Rational>& leg(long a) {
    {
      std::shared_lock lock(mu_);
      auto it = leg_.find(a);
      if (it != leg_.end()) return it->second;
    }
    std::vector<Rational> s(kSeriesTrunc + 1);
    Rational xm(1);
    for (int m = 1; m <= kSeriesTrunc; ++m) {
      xm *= -x_;
      s[m] = -xm * bernoulli_poly(m + 1, Rational(a, r_)) / Rational(static_cast<long>(m) * (m + 1));
    }
    std::vector<Rational> e = series_exp(s, kSeriesTrunc);
    std::unique_lock lock(mu_);
    return leg_.try_emplace(a, std::move(e)).first->second;
  }

  // int over Mbar_{g, |points|} of the vertex exponential, leg factors for
  // points tagged with an integer a, psi^exp and kappa^f. points is sorted.
  Rational vertex(int g, const std::vector<std::pair<long, int>>& points, const KappaPart& f) {
    auto key = std::make_tuple(g, points, f);
    {
      std::shared_lock lock(mu_);
      auto it = vertex_.find(key);
      if (it != vertex_.end()) return it->second;
    }
    const int np = static_cast<int>(points.size());
    const int dim = moduli_dim(g, np);
    if (dim > kSeriesTrunc) throw std::invalid_argument("omega: vertex dimension above the supported range");
    int fixed = kappa_deg(f);
    std::vector<int> exps(np);
    std::vector<int> leg_idx;
    for (int i = 0; i < np; ++i) {
      exps[i] = points[i].second;
      fixed += exps[i];
      if (points[i].first != kNoLeg) leg_idx.push_back(i);
    }
    Rational total;
    if (fixed <= dim) {
      std::vector<const std::vector<Rational>*> series;
      for (int i : leg_idx) series.push_back(&leg(points[i].first));
      std::function<void(std::size_t, int, const Rational&)> rec = [&](std::size_t j, int left, const Rational& coef) {
        if (j == leg_idx.size()) {
          for (const auto& [kap, c] : vf_[left])
            total += coef * c * kappa_psi_integral(g, exps, TautMonomial::merge_kappa(f, kap));
          return;
        }
        const auto& L = *series[j];
        for (int k = 0; k <= left; ++k) {
          if (L[k].is_zero()) continue;
          exps[leg_idx[j]] += k;
          rec(j + 1, left - k, coef * L[k]);
          exps[leg_idx[j]] -= k;
        }
      };
      rec(0, dim - fixed, Rational(1));
    }
    std::unique_lock lock(mu_);
    vertex_.try_emplace(std::move(key), total);
    return total;
  }

  // The vertex integrand above as an explicit polynomial on sorted points.
  TautPolynomial vertex_polynomial(int g, const std::vector<std::pair<long, int>>& points, const KappaPart& f) {
    const int np = static_cast<int>(points.size());
    const int dim = moduli_dim(g, np);
    TautPolynomial p(np, dim);
    for (int k = 0; k <= dim; ++k)
      for (const auto& [kap, c] : vf_[k]) p.add_term(TautMonomial{kap, std::vector<int>(np, 0)}, c);
    for (int i = 0; i < np; ++i) {
      if (points[i].first == kNoLeg) continue;
      const auto& L = leg(points[i].first);
      TautPolynomial q(np, dim);
      for (int k = 0; k <= dim; ++k) {
        TautMonomial m{{}, std::vector<int>(np, 0)};
        m.psi[i] = k;
        q.add_term(m, L[k]);
      }
      p = p * q;
    }
    TautMonomial m{f, std::vector<int>(np, 0)};
    for (int i = 0; i < np; ++i) m.psi[i] = points[i].second;
    return p * TautPolynomial::monomial(np, dim, m);
  }

 private:
  int r_;
  long s_;
  Rational x_;
  std::vector<std::vector<std::pair<KappaPart, Rational>>> vf_;
  std::vector<EdgeSeries> edge_;
  std::shared_mutex mu_;
  std::map<long, std::vector<Rational>> leg_;
  std::map<std::tuple<int, std::vector<std::pair<long, int>>, KappaPart>, Rational> vertex_;
};

struct GraphInfo {
  StableGraph graph;
  Rational inv_aut;
  std::vector<std::vector<int>> legs_at;
  std::vector<std::vector<int>> halves_at;
};

struct Registry {
  std::mutex mu;
  std::map<std::string, std::unique_ptr<Context>> contexts;
  std::shared_mutex pair_mu;
  std::map<std::string, std::map<TautMonomial, Rational>> pairings;
  std::map<std::string, Rational> product_vertex;
  std::mutex graph_mu;
  std::map<std::pair<int, int>, std::shared_ptr<const std::vector<GraphInfo>>> graphs;
};

Registry& registry() {
  static Registry reg;
  return reg;
}

Context& context(int r, long s, const Rational& x) {
  auto& reg = registry();
  const std::string key = std::to_string(r) + "|" + std::to_string(s) + "|" + x.str();
  std::lock_guard lock(reg.mu);
  auto it = reg.contexts.find(key);
  if (it == reg.contexts.end()) it = reg.contexts.emplace(key, std::make_unique<Context>(r, s, x)).first;
  return *it->second;
}

GraphInfo make_info(const StableGraph& G) {
  GraphInfo info;
  info.graph = G;
  info.inv_aut = Rational(1, automorphism_order(G));
  const int V = G.num_vertices();
  info.legs_at.assign(V, {});
  info.halves_at.assign(V, {});
  for (int i = 0; i < G.num_legs(); ++i) info.legs_at[G.leg_vertex[i]].push_back(i);
  for (int h = 0; h < 2 * G.num_edges(); ++h) info.halves_at[G.half_edge_vertex(h)].push_back(h);
  return info;
}

constexpr std::size_t kGraphCacheLimit = 60000;

void for_each_graph_info(int g, int n, const std::function<void(const GraphInfo&)>& fn) {
  auto& reg = registry();
  std::shared_ptr<const std::vector<GraphInfo>> cached;
  {
    std::lock_guard lock(reg.graph_mu);
    auto it = reg.graphs.find({g, n});
    if (it != reg.graphs.end()) cached = it->second;
  }
  if (cached) {
    for (const auto& info : *cached) fn(info);
    return;
  }
  auto list = std::make_shared<std::vector<GraphInfo>>();
  bool keep = true;
  for_each_stable_graph(g, n, [&](const StableGraph& G) {
    GraphInfo info = make_info(G);
    fn(info);
    if (keep) {
      list->push_back(std::move(info));
      if (list->size() > kGraphCacheLimit) {
        keep = false;
        list->clear();
        list->shrink_to_fit();
      }
    }
  });
  if (keep) {
    std::lock_guard lock(reg.graph_mu);
    reg.graphs.try_emplace({g, n}, std::move(list));
  }
}

std::string spec_key(int g, int n, const OmegaSpec& spec) {
  return std::to_string(g) + "," + std::to_string(n) + ":" + spec.str();
}

// Splits each kappa power among the vertices; calls fn(per-vertex parts, multinomial).
void distribute_kappa(const KappaPart& kap, int V,
                      const std::function<void(const std::vector<KappaPart>&, const Rational&)>& fn) {
  std::vector<KappaPart> parts(V);
  std::function<void(std::size_t, const Rational&)> over_kappa;
  std::function<void(std::size_t, int, int, const Rational&)> over_vertex = [&](std::size_t idx, int v, int left,
                                                                                const Rational& coef) {
    const int m = kap[idx].first;
    if (v == V - 1) {
      if (left > 0) parts[v].emplace_back(m, left);
      over_kappa(idx + 1, coef / factorial(left));
      if (left > 0) parts[v].pop_back();
      return;
    }
    for (int c = 0; c <= left; ++c) {
      if (c > 0) parts[v].emplace_back(m, c);
      over_vertex(idx, v + 1, left - c, coef / factorial(c));
      if (c > 0) parts[v].pop_back();
    }
  };
  over_kappa = [&](std::size_t idx, const Rational& coef) {
    if (idx == kap.size()) {
      fn(parts, coef);
      return;
    }
    over_vertex(idx, 0, kap[idx].second, coef * factorial(kap[idx].second));
  };
  over_kappa(0, Rational(1));
}

// Core graph sum. With B == nullptr this is int Omega_A * mono; otherwise
// int Omega_A * Omega_B * mono.
std::vector<Rational> graph_sum(int g, int n, const OmegaSpec& A, const OmegaSpec* B,
                                const std::vector<TautMonomial>& monos) {
  const int D = moduli_dim(g, n);
  Context& ctxA = context(A.r, A.s, A.x);
  std::vector<Rational> result(monos.size());
  int max_edges = -1;
  for (const auto& m : monos) max_edges = std::max(max_edges, D - m.degree());
  if (max_edges < 0) return result;

  std::string prod_prefix;
  if (B)
    prod_prefix = std::to_string(A.r) + "|" + std::to_string(A.s) + "|" + A.x.str() + "#" + std::to_string(B->r) + "|" +
                  std::to_string(B->s) + "|" + B->x.str() + "#";

  for_each_graph_info(g, n, [&](const GraphInfo& info) {
    const StableGraph& G = info.graph;
    const int E = G.num_edges();
    if (E > max_edges) return;
    const int V = G.num_vertices();
    const auto wA = enumerate_weightings(G, A.r, static_cast<int>(mod_r(A.s, A.r)), std::vector<int>(A.a.begin(), A.a.end()));
    std::vector<Weighting> wB{{}};
    if (B) wB = enumerate_weightings(G, B->r, static_cast<int>(mod_r(B->s, B->r)), std::vector<int>(B->a.begin(), B->a.end()));
    Rational weight = Rational(A.r).pow(2 * g - 1 - G.h1()) * info.inv_aut;
    if (B) weight *= Rational(B->r).pow(E);
    std::vector<int> vdim(V);
    for (int v = 0; v < V; ++v) vdim[v] = moduli_dim(G.genus[v], static_cast<int>(info.legs_at[v].size() + info.halves_at[v].size()));

    for (std::size_t j = 0; j < monos.size(); ++j) {
      const TautMonomial& mono = monos[j];
      if (E > D - mono.degree()) continue;
      std::vector<int> base_budget = vdim;
      for (int i = 0; i < n; ++i) base_budget[G.leg_vertex[i]] -= mono.psi[i];
      bool feasible = true;
      for (int b : base_budget) feasible = feasible && b >= 0;
      if (!feasible) continue;
      Rational sum_j;
      distribute_kappa(mono.kappa, V, [&](const std::vector<KappaPart>& f, const Rational& multinom) {
        std::vector<int> budget = base_budget;
        for (int v = 0; v < V; ++v) {
          budget[v] -= kappa_deg(f[v]);
          if (budget[v] < 0) return;
        }
        for (const auto& wa : wA) {
          for (const auto& wb : wB) {
            std::vector<int> half_exp(2 * E, 0);
            std::vector<int> left = budget;
            Rational acc;
            std::function<void(int, const Rational&)> rec = [&](int e, const Rational& coef) {
              if (e == E) {
                Rational prod = coef;
                for (int v = 0; v < V && !prod.is_zero(); ++v) {
                  const int gv = G.genus[v];
                  if (!B) {
                    std::vector<std::pair<long, int>> pts;
                    for (int i : info.legs_at[v]) pts.emplace_back(A.a[i], mono.psi[i]);
                    for (int h : info.halves_at[v]) pts.emplace_back(kNoLeg, half_exp[h]);
                    std::sort(pts.begin(), pts.end());
                    prod *= ctxA.vertex(gv, pts, f[v]);
                  } else {
                    std::vector<std::tuple<long, long, int>> pts;
                    for (int i : info.legs_at[v]) pts.emplace_back(A.a[i], B->a[i], mono.psi[i]);
                    for (int h : info.halves_at[v]) {
                      const int res = h % 2 == 0 ? wb[h / 2].first : wb[h / 2].second;
                      pts.emplace_back(kNoLeg, res, half_exp[h]);
                    }
                    std::sort(pts.begin(), pts.end());
                    std::string key = prod_prefix + std::to_string(gv) + ":";
                    for (const auto& [ta, tb, ex] : pts)
                      key += std::to_string(ta) + "," + std::to_string(tb) + "," + std::to_string(ex) + ";";
                    key += "k";
                    for (const auto& [m, ee] : f[v]) key += std::to_string(m) + "^" + std::to_string(ee) + ";";
                    Rational val;
                    bool hit = false;
                    {
                      std::shared_lock lock(registry().pair_mu);
                      auto it = registry().product_vertex.find(key);
                      if (it != registry().product_vertex.end()) {
                        val = it->second;
                        hit = true;
                      }
                    }
                    if (!hit) {
                      std::vector<std::pair<long, int>> pa;
                      OmegaSpec sb{B->r, B->s, {}, B->x};
                      for (const auto& [ta, tb, ex] : pts) {
                        pa.emplace_back(ta, ex);
                        sb.a.push_back(tb);
                      }
                      const TautPolynomial alpha = ctxA.vertex_polynomial(gv, pa, f[v]);
                      val = omega_integral(gv, static_cast<int>(pts.size()), sb, alpha);
                      std::unique_lock lock(registry().pair_mu);
                      registry().product_vertex.try_emplace(key, val);
                    }
                    prod *= val;
                  }
                }
                acc += prod;
                return;
              }
              const auto [va, vb] = G.edges[e];
              const EdgeSeries& Q = ctxA.edge(wa[e].first);
              for (int p = 0; p <= left[va]; ++p) {
                left[va] -= p;
                for (int q = 0; q <= left[vb]; ++q) {
                  const Rational& c = Q.at(p, q);
                  if (c.is_zero()) continue;
                  left[vb] -= q;
                  half_exp[2 * e] = p;
                  half_exp[2 * e + 1] = q;
                  rec(e + 1, coef * c);
                  left[vb] += q;
                }
                left[va] += p;
              }
              half_exp[2 * e] = half_exp[2 * e + 1] = 0;
            };
            rec(0, Rational(1));
            sum_j += multinom * acc;
          }
        }
      });
      result[j] += weight * sum_j;
    }
  });
  return result;
}

}  // namespace

std::vector<Rational> omega_pairings(int g, int n, const OmegaSpec& spec, const std::vector<TautMonomial>& monos) {
  if (!is_stable(g, n)) throw std::invalid_argument("omega: unstable (g, n)");
  spec.validate(g, n);
  const int D = moduli_dim(g, n);
  for (const auto& m : monos)
    if (static_cast<int>(m.psi.size()) != n) throw std::invalid_argument("omega: monomial has the wrong number of points");
  auto& reg = registry();
  const std::string key = spec_key(g, n, spec);
  std::vector<Rational> out(monos.size());
  std::vector<TautMonomial> missing;
  std::vector<std::size_t> missing_idx;
  {
    std::shared_lock lock(reg.pair_mu);
    auto it = reg.pairings.find(key);
    for (std::size_t j = 0; j < monos.size(); ++j) {
      if (monos[j].degree() > D) continue;
      if (it != reg.pairings.end()) {
        auto jt = it->second.find(monos[j]);
        if (jt != it->second.end()) {
          out[j] = jt->second;
          continue;
        }
      }
      missing.push_back(monos[j]);
      missing_idx.push_back(j);
    }
  }
  if (missing.empty()) return out;
  const std::vector<Rational> computed = graph_sum(g, n, spec, nullptr, missing);
  std::unique_lock lock(reg.pair_mu);
  auto& table = reg.pairings[key];
  for (std::size_t k = 0; k < missing.size(); ++k) {
    out[missing_idx[k]] = computed[k];
    table.try_emplace(missing[k], computed[k]);
  }
  return out;
}

namespace {

Rational pair_with(const TautPolynomial& T, const std::vector<Rational>& vals) {
  Rational acc;
  std::size_t j = 0;
  for (const auto& [mono, c] : T.terms()) acc += c * vals[j++];
  return acc;
}

std::vector<TautMonomial> monos_of(const TautPolynomial& T) {
  std::vector<TautMonomial> out;
  for (const auto& [mono, c] : T.terms()) out.push_back(mono);
  return out;
}

}  // namespace

Rational omega_integral(int g, int n, const OmegaSpec& spec, const TautPolynomial& T) {
  if (T.n_points() != n) throw std::invalid_argument("omega_integral: test class has the wrong number of points");
  return pair_with(T, omega_pairings(g, n, spec, monos_of(T)));
}

std::vector<Rational> omega_product_pairings(int g, int n, const OmegaSpec& A, const OmegaSpec& B,
                                             const std::vector<TautMonomial>& monos) {
  if (!is_stable(g, n)) throw std::invalid_argument("omega: unstable (g, n)");
  A.validate(g, n);
  B.validate(g, n);
  return graph_sum(g, n, A, &B, monos);
}

Rational omega_product_integral(int g, int n, const OmegaSpec& A, const OmegaSpec& B, const TautPolynomial& T) {
  if (T.n_points() != n) throw std::invalid_argument("omega_product_integral: test class has the wrong number of points");
  return pair_with(T, omega_product_pairings(g, n, A, B, monos_of(T)));
}

Rational hodge_integral(int g, int n, int i, const TautPolynomial& T) {
  if (!is_stable(g, n)) throw std::invalid_argument("hodge_integral: unstable (g, n)");
  if (T.n_points() != n) throw std::invalid_argument("hodge_integral: test class has the wrong number of points");
  if (i < 0 || i > g) return Rational(0);
  const int D = moduli_dim(g, n);
  const TautPolynomial part = T.homogeneous_part(D - i);
  if (i == 0) return integrate_mixed(g, n, part);
  const OmegaSpec hodge{1, 1, std::vector<long>(n, 1), Rational(1)};
  const Rational v = omega_integral(g, n, hodge, part);
  return i % 2 ? -v : v;
}

Rational hodge_pairing(int g, int n, const Rational& t, const TautPolynomial& T) {
  Rational acc;
  Rational tp(1);
  for (int i = 0; i <= g; ++i) {
    acc += tp * hodge_integral(g, n, i, T);
    tp *= t;
  }
  return acc;
}

Rational ClosedFormR1::integrate(const TautPolynomial& T) const {
  if (T.n_points() != n) throw std::invalid_argument("closed form: test class has the wrong number of points");
  const TautPolynomial full = kappa_part * T.retruncated(kappa_part.trunc_degree());
  return hodge_pairing(g, n, lambda_t, full);
}

ClosedFormR1 omega_closed_form_r1(int g, int n, long s, const Rational& x) {
  if (!is_stable(g, n)) throw std::invalid_argument("omega_closed_form_r1: unstable (g, n)");
  ClosedFormR1 cf;
  cf.g = g;
  cf.n = n;
  cf.lambda_t = -x;
  const int D = moduli_dim(g, n);
  Rational xm(1);
  for (int m = 1; m <= D; ++m) {
    xm *= -x;
    const Rational c =
        xm * (bernoulli_poly(m + 1, Rational(s)) - bernoulli_number(m + 1)) / Rational(static_cast<long>(m) * (m + 1));
    if (!c.is_zero()) cf.kappa_coeffs[m] = c;
  }
  cf.kappa_part = exp_kappa_series(cf.kappa_coeffs, n, D);
  return cf;
}

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

int degree_bound_first_k(int g, int n, const OmegaSpec& spec, DegreeBound kind) {
  long sum = 0;
  for (long v : spec.a) sum += v;
  if (kind == DegreeBound::JKV) {
    if (g != 0 || n < 3 || spec.s != 0)
      throw std::invalid_argument("degree bound (JKV): requires g = 0, n >= 3, s = 0");
    int exceptional = 0;
    for (long v : spec.a) {
      if (v < -1) throw std::invalid_argument("degree bound (JKV): a_i must be >= -1");
      if (v <= 0) ++exceptional;
    }
    if (exceptional > 1) throw std::invalid_argument("degree bound (JKV): at most one a_j may be 0 or -1");
    // k > sum/r - 1  <=>  k >= floor(sum / r)
    return static_cast<int>(floor_div(sum, spec.r));
  }
  if (spec.s >= 0) throw std::invalid_argument("degree bound (negative s): requires s < 0");
  for (long v : spec.a)
    if (v <= 0) throw std::invalid_argument("degree bound (negative s): requires every a_i > 0");
  const long num = static_cast<long>(2 * g - 2 + n) * (-spec.s) + static_cast<long>(spec.r) * (g - 1) + sum;
  return static_cast<int>(floor_div(num, spec.r) + 1);
}

CheckReport degree_bound_check(int g, int n, const OmegaSpec& spec, DegreeBound kind) {
  const int first = degree_bound_first_k(g, n, spec, kind);
  CheckReport rep;
  rep.check = kind == DegreeBound::JKV ? "degree_bound_jkv" : "degree_bound_negative_s";
  rep.parameters = {{"g", g}, {"n", n}, {"spec", spec.str()}, {"first_k", first}};
  const int D = moduli_dim(g, n);
  if (first > D) {
    rep.note = "vacuous: bound is at or above the dimension";
    return rep;
  }
  for (int k = std::max(first, 0); k <= D; ++k) {
    const auto monos = monomials_of_degree(n, D - k);
    const auto vals = omega_pairings(g, n, spec, monos);
    for (std::size_t j = 0; j < monos.size(); ++j)
      rep.add("deg " + std::to_string(k) + " vs " + TautPolynomial::monomial(n, D, monos[j]).render(), Rational(0),
              vals[j]);
  }
  return rep;
}

void clear_omega_caches() {
  auto& reg = registry();
  {
    std::unique_lock lock(reg.pair_mu);
    reg.pairings.clear();
    reg.product_vertex.clear();
  }
  std::lock_guard lock(reg.mu);
  reg.contexts.clear();
}

}  // namespace tautcalc
