#pragma once

// Independent reference implementations used only by the tests. None of them
// share code paths with the library beyond Rational and the plain DVV numbers.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tautcalc/intersection.hpp"
#include "tautcalc/rational.hpp"
#include "tautcalc/stable_graph.hpp"

namespace oracle {

using tautcalc::Rational;

// Akiyama-Tanigawa gives B_m with B_1 = +1/2; flip the sign of B_1.
inline Rational bernoulli(int m) {
  std::vector<Rational> a(m + 1);
  for (int k = 0; k <= m; ++k) {
    a[k] = Rational(1, k + 1);
    for (int j = k; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
  }
  return m == 1 ? -a[0] : a[0];
}

// Dense univariate polynomials, coefficient i multiplies u^i.
using Poly = std::vector<Rational>;

inline Poly poly_mul(const Poly& p, const Poly& q, int trunc) {
  Poly out(trunc + 1, Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size() && static_cast<int>(i + j) <= trunc; ++j) out[i + j] += p[i] * q[j];
  return out;
}

// prod (1 + c_j u), optionally inverted, up to u^trunc.
inline Poly linear_product(const std::vector<Rational>& cs, bool inverse, int trunc) {
  Poly out(trunc + 1, Rational(0));
  out[0] = Rational(1);
  for (const auto& c : cs) {
    Poly f(trunc + 1, Rational(0));
    if (inverse) {
      for (int i = 0; i <= trunc; ++i) f[i] = (-c).pow(i);
    } else {
      f[0] = Rational(1);
      if (trunc >= 1) f[1] = c;
    }
    out = poly_mul(out, f, trunc);
  }
  return out;
}

// <tau_{d_1}...tau_{d_n}>_0 = (n-3)! / prod d_i! when sum d_i = n - 3.
inline Rational genus0_psi(const std::vector<int>& d) {
  const int n = static_cast<int>(d.size());
  int sum = 0;
  for (int x : d) sum += x;
  if (sum != n - 3) return Rational(0);
  Rational out = tautcalc::factorial(n - 3);
  for (int x : d) out /= tautcalc::factorial(x);
  return out;
}

// int lambda_g prod psi_i^{d_i} on Mbar_{g,n} = C(2g-3+n; d) b_g.
inline Rational lambda_g_psi(int g, const std::vector<int>& d) {
  const int n = static_cast<int>(d.size());
  int sum = 0;
  for (int x : d) sum += x;
  if (sum != 2 * g - 3 + n) return Rational(0);
  const Rational two = Rational(2).pow(2 * g - 1);
  Rational b = (two - Rational(1)) * bernoulli(2 * g) / (two * tautcalc::factorial(2 * g));
  if (b.sign() < 0) b = -b;
  Rational multinom = tautcalc::factorial(2 * g - 3 + n);
  for (int x : d) multinom /= tautcalc::factorial(x);
  return multinom * b;
}

// int psi^d kappa_{m_1} ... kappa_{m_k} by pushing the last kappa up one
// point: kappa_m = pi_*(psi_{n+1}^{m+1}) and pi^* kappa_a = kappa_a - psi_{n+1}^a.
inline Rational kappa_by_pullback(int g, std::vector<int> d, std::vector<int> kappas) {
  if (kappas.empty()) return tautcalc::psi_integral(g, d);
  const int last = kappas.back();
  kappas.pop_back();
  const int k = static_cast<int>(kappas.size());
  Rational total(0);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> rest;
    int extra = 0;
    int taken = 0;
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) {
        extra += kappas[i];
        ++taken;
      } else {
        rest.push_back(kappas[i]);
      }
    }
    std::vector<int> dd = d;
    dd.push_back(last + 1 + extra);
    const Rational v = kappa_by_pullback(g, dd, rest);
    total += (taken % 2 == 0) ? v : -v;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Stable graphs by exhaustive labeled enumeration.

struct LabeledGraph {
  std::vector<int> genus;
  std::vector<int> leg_vertex;
  std::vector<std::pair<int, int>> edges;  // a <= b, sorted
};

inline std::string key_of(const LabeledGraph& G, const std::vector<int>& perm) {
  // perm maps old vertex -> new vertex
  const int V = static_cast<int>(G.genus.size());
  std::vector<int> gen(V);
  for (int v = 0; v < V; ++v) gen[perm[v]] = G.genus[v];
  std::vector<int> legs;
  for (int v : G.leg_vertex) legs.push_back(perm[v]);
  std::vector<std::pair<int, int>> es;
  for (auto [a, b] : G.edges) {
    int x = perm[a], y = perm[b];
    if (x > y) std::swap(x, y);
    es.emplace_back(x, y);
  }
  std::sort(es.begin(), es.end());
  std::string s;
  for (int x : gen) s += std::to_string(x) + ",";
  s += "|";
  for (int x : legs) s += std::to_string(x) + ",";
  s += "|";
  for (auto [a, b] : es) s += std::to_string(a) + "-" + std::to_string(b) + ",";
  return s;
}

// Minimum key over the relabelings that sort vertices by the invariant
// (genus, legs carried, valence); only tied vertices get permuted.
inline std::string canonical_key(const LabeledGraph& G) {
  const int V = static_cast<int>(G.genus.size());
  std::vector<std::vector<int>> sig(V);
  std::vector<int> valence(V, 0);
  for (auto [a, b] : G.edges) {
    ++valence[a];
    ++valence[b];
  }
  for (int v = 0; v < V; ++v) sig[v] = {G.genus[v], valence[v]};
  for (int i = 0; i < static_cast<int>(G.leg_vertex.size()); ++i) sig[G.leg_vertex[i]].push_back(i);
  std::vector<int> order(V);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return sig[x] < sig[y]; });
  // blocks of equal signature, permuted independently
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < V;) {
    int j = i;
    while (j < V && sig[order[j]] == sig[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::string best;
  bool first = true;
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == blocks.size()) {
      std::vector<int> perm(V);
      for (int pos = 0; pos < V; ++pos) perm[order[pos]] = pos;
      std::string k = key_of(G, perm);
      if (first || k < best) best = k;
      first = false;
      return;
    }
    auto [lo, hi] = blocks[b];
    std::sort(order.begin() + lo, order.begin() + hi);
    do {
      rec(b + 1);
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  rec(0);
  return best;
}

// Automorphisms acting on vertices and half-edges with legs fixed, counted
// by backtracking over half-edge images for every vertex permutation.
inline long brute_automorphisms(const LabeledGraph& G) {
  const int V = static_cast<int>(G.genus.size());
  const int E = static_cast<int>(G.edges.size());
  std::vector<int> perm(V);
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  do {
    bool ok = true;
    for (int v = 0; v < V && ok; ++v) ok = G.genus[perm[v]] == G.genus[v];
    for (int v : G.leg_vertex)
      if (perm[v] != v) ok = false;
    if (!ok) continue;
    std::vector<bool> used(E, false);
    std::function<long(int)> rec = [&](int e) -> long {
      if (e == E) return 1;
      const auto [a, b] = G.edges[e];
      long total = 0;
      for (int f = 0; f < E; ++f) {
        if (used[f]) continue;
        const auto [c, d] = G.edges[f];
        int orientations = 0;
        if (perm[a] == c && perm[b] == d) ++orientations;
        if (perm[a] == d && perm[b] == c) ++orientations;
        if (orientations == 0) continue;
        used[f] = true;
        total += orientations * rec(e + 1);
        used[f] = false;
      }
      return total;
    };
    count += rec(0);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

inline bool connected(int V, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(V);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [a, b] : edges) parent[find(a)] = find(b);
  for (int v = 0; v < V; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

struct GraphClass {
  LabeledGraph rep;
  long automorphisms = 0;
};

// All isomorphism classes of stable graphs of type (g, n), keyed by the
// canonical key above.
inline std::map<std::string, GraphClass> stable_graphs(int g, int n) {
  std::map<std::string, GraphClass> out;
  const int max_v = 2 * g - 2 + n;
  for (int V = 1; V <= max_v; ++V) {
    std::vector<int> gen(V, 0);
    std::function<void(int, int)> genus_rec = [&](int v, int left) {
      if (v == V) {
        const int h1 = left;
        const int E = V - 1 + h1;
        std::vector<std::pair<int, int>> types;
        for (int a = 0; a < V; ++a)
          for (int b = a; b < V; ++b) types.emplace_back(a, b);
        std::vector<std::pair<int, int>> edges;
        std::function<void(std::size_t)> edge_rec = [&](std::size_t from) {
          if (static_cast<int>(edges.size()) == E) {
            if (!connected(V, edges)) return;
            std::vector<int> valence(V, 0);
            for (auto [a, b] : edges) {
              ++valence[a];
              ++valence[b];
            }
            std::vector<int> legs(n, 0);
            std::function<void(int)> leg_rec = [&](int i) {
              if (i == n) {
                std::vector<int> val = valence;
                for (int v2 : legs) ++val[v2];
                for (int v2 = 0; v2 < V; ++v2)
                  if (2 * gen[v2] - 2 + val[v2] <= 0) return;
                LabeledGraph G{gen, legs, edges};
                const std::string key = canonical_key(G);
                if (out.count(key)) return;
                out[key] = {G, brute_automorphisms(G)};
                return;
              }
              for (int v2 = 0; v2 < V; ++v2) {
                legs[i] = v2;
                leg_rec(i + 1);
              }
            };
            leg_rec(0);
            return;
          }
          for (std::size_t t = from; t < types.size(); ++t) {
            edges.push_back(types[t]);
            edge_rec(t);
            edges.pop_back();
          }
        };
        edge_rec(0);
        return;
      }
      for (int x = 0; x <= left; ++x) {
        gen[v] = x;
        genus_rec(v + 1, left - x);
      }
    };
    genus_rec(0, g);
  }
  return out;
}

inline LabeledGraph from_library(const tautcalc::StableGraph& G) {
  LabeledGraph L{G.genus, G.leg_vertex, G.edges};
  std::sort(L.edges.begin(), L.edges.end());
  return L;
}

// Admissible weightings by trying every residue on every first half-edge.
inline std::set<tautcalc::Weighting> brute_weightings(const tautcalc::StableGraph& G, int r, int s,
                                                      const std::vector<int>& a) {
  const int E = G.num_edges();
  const int V = G.num_vertices();
  std::set<tautcalc::Weighting> out;
  std::vector<int> w(E, 0);
  std::function<void(int)> rec = [&](int e) {
    if (e == E) {
      std::vector<long> local(V, 0);
      std::vector<long> val(V, 0);
      for (int i = 0; i < G.num_legs(); ++i) {
        local[G.leg_vertex[i]] += a[i];
        ++val[G.leg_vertex[i]];
      }
      tautcalc::Weighting wt;
      for (int k = 0; k < E; ++k) {
        const int other = (r - w[k]) % r;
        wt.emplace_back(w[k], other);
        local[G.edges[k].first] += w[k];
        local[G.edges[k].second] += other;
        ++val[G.edges[k].first];
        ++val[G.edges[k].second];
      }
      for (int v = 0; v < V; ++v) {
        const long want = (2L * G.genus[v] - 2 + val[v]) * s;
        if (((local[v] - want) % r + r) % r != 0) return;
      }
      out.insert(wt);
      return;
    }
    for (int x = 0; x < r; ++x) {
      w[e] = x;
      rec(e + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace oracle
