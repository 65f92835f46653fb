#include "tautcalc/stable_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tautcalc {

int StableGraph::total_genus() const { return std::accumulate(genus.begin(), genus.end(), 0) + h1(); }

int StableGraph::valence(int v) const {
  int val = 0;
  for (int x : leg_vertex) val += (x == v);
  for (const auto& [a, b] : edges) val += (a == v) + (b == v);
  return val;
}

bool StableGraph::is_valid() const {
  const int V = num_vertices();
  if (V == 0) return false;
  for (int x : leg_vertex)
    if (x < 0 || x >= V) return false;
  for (const auto& [a, b] : edges)
    if (a < 0 || b >= V || a > b) return false;
  for (int v = 0; v < V; ++v)
    if (genus[v] < 0 || 2 * genus[v] - 2 + valence(v) <= 0) return false;
  std::vector<int> parent(V);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int comps = V;
  for (const auto& [a, b] : edges) {
    const int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --comps;
    }
  }
  return comps == 1;
}

std::string StableGraph::serialize() const {
  std::string s = "V:";
  for (int v = 0; v < num_vertices(); ++v) s += (v ? "," : "") + std::to_string(genus[v]);
  s += "|L:";
  for (int i = 0; i < num_legs(); ++i) s += (i ? "," : "") + std::to_string(leg_vertex[i]);
  s += "|E:";
  for (int e = 0; e < num_edges(); ++e)
    s += (e ? "," : "") + ("(" + std::to_string(edges[e].first) + "," + std::to_string(edges[e].second) + ")");
  return s;
}

StableGraph StableGraph::parse(const std::string& text) {
  auto fail = [&text]() { throw std::invalid_argument("StableGraph::parse: malformed '" + text + "'"); };
  const auto p1 = text.find("|L:");
  const auto p2 = text.find("|E:");
  if (text.rfind("V:", 0) != 0 || p1 == std::string::npos || p2 == std::string::npos || p2 < p1) fail();
  auto ints = [&](const std::string& part) {
    std::vector<int> out;
    std::string tok;
    for (char ch : part) {
      if (ch >= '0' && ch <= '9') {
        tok += ch;
      } else if (ch == ',' || ch == '(' || ch == ')') {
        if (!tok.empty()) out.push_back(std::stoi(tok));
        tok.clear();
      } else {
        fail();
      }
    }
    if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
  };
  StableGraph g;
  g.genus = ints(text.substr(2, p1 - 2));
  g.leg_vertex = ints(text.substr(p1 + 3, p2 - p1 - 3));
  const std::vector<int> e = ints(text.substr(p2 + 3));
  if (e.size() % 2) fail();
  for (std::size_t i = 0; i < e.size(); i += 2) g.edges.emplace_back(std::min(e[i], e[i + 1]), std::max(e[i], e[i + 1]));
  return g;
}

namespace {

// Byte encoding of g under the relabeling pos[old] = new.
std::string encode(const StableGraph& g, const std::vector<int>& pos) {
  const int V = g.num_vertices();
  std::string s;
  s.reserve(2 + V + g.num_legs() + 2 * g.num_edges());
  s.push_back(static_cast<char>(V));
  std::vector<int> gen(V);
  for (int v = 0; v < V; ++v) gen[pos[v]] = g.genus[v];
  for (int x : gen) s.push_back(static_cast<char>(x));
  for (int x : g.leg_vertex) s.push_back(static_cast<char>(pos[x]));
  std::vector<std::pair<int, int>> es;
  es.reserve(g.edges.size());
  for (const auto& [a, b] : g.edges) {
    const int x = pos[a], y = pos[b];
    es.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(es.begin(), es.end());
  for (const auto& [x, y] : es) {
    s.push_back(static_cast<char>(x));
    s.push_back(static_cast<char>(y));
  }
  return s;
}

StableGraph decode(const std::string& s, int n) {
  StableGraph g;
  const int V = s[0];
  std::size_t i = 1;
  for (int v = 0; v < V; ++v) g.genus.push_back(s[i++]);
  for (int k = 0; k < n; ++k) g.leg_vertex.push_back(s[i++]);
  while (i < s.size()) {
    const int a = s[i], b = s[i + 1];
    g.edges.emplace_back(a, b);
    i += 2;
  }
  return g;
}

struct CanonResult {
  std::string key;
  long count = 0;
};

CanonResult canonical_key(const StableGraph& g) {
  const int V = g.num_vertices();
  if (V == 1) return {encode(g, {0}), 1};

  // Colour refinement seeded with isomorphism-invariant vertex data.
  std::vector<std::vector<int>> legs(V);
  for (int i = 0; i < g.num_legs(); ++i) legs[g.leg_vertex[i]].push_back(i);
  std::vector<int> loops(V, 0), degree(V, 0);
  std::vector<std::map<int, int>> adj(V);
  for (const auto& [a, b] : g.edges) {
    if (a == b) {
      ++loops[a];
    } else {
      ++degree[a];
      ++degree[b];
      ++adj[a][b];
      ++adj[b][a];
    }
  }
  std::vector<std::vector<int>> sig(V);
  for (int v = 0; v < V; ++v) {
    sig[v] = {g.genus[v], loops[v], degree[v], static_cast<int>(legs[v].size())};
    sig[v].insert(sig[v].end(), legs[v].begin(), legs[v].end());
  }
  std::vector<int> color(V);
  int classes = 0;
  for (;;) {
    std::vector<std::vector<int>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < V; ++v)
      color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    const int now = static_cast<int>(sorted.size());
    if (now == classes || now == V) {
      classes = now;
      break;
    }
    classes = now;
    for (int v = 0; v < V; ++v) {
      std::vector<std::pair<int, int>> nb;
      for (const auto& [u, mult] : adj[v]) nb.emplace_back(color[u], mult);
      std::sort(nb.begin(), nb.end());
      sig[v] = {color[v]};
      for (const auto& [c, m] : nb) {
        sig[v].push_back(c);
        sig[v].push_back(m);
      }
    }
  }

  // Vertices ordered by colour; permute inside tied cells.
  std::vector<int> order(V);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return color[x] < color[y]; });
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < V;) {
    int j = i;
    while (j < V && color[order[j]] == color[order[i]]) ++j;
    if (j - i > 1) cells.emplace_back(i, j);
    i = j;
  }

  CanonResult best;
  std::vector<int> pos(V);
  auto visit = [&]() {
    for (int i = 0; i < V; ++i) pos[order[i]] = i;
    std::string k = encode(g, pos);
    if (best.count == 0 || k < best.key) {
      best.key = std::move(k);
      best.count = 1;
    } else if (k == best.key) {
      ++best.count;
    }
  };
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == cells.size()) {
      visit();
      return;
    }
    auto first = order.begin() + cells[c].first;
    auto last = order.begin() + cells[c].second;
    std::sort(first, last);
    do {
      rec(c + 1);
    } while (std::next_permutation(first, last));
  };
  rec(0);
  return best;
}

long edge_factor(const StableGraph& g) {
  std::map<std::pair<int, int>, int> mult;
  for (const auto& e : g.edges) ++mult[e];
  long f = 1;
  for (const auto& [e, m] : mult) {
    for (int k = 2; k <= m; ++k) f *= k;
    if (e.first == e.second) f <<= m;
  }
  return f;
}

void check_stable(int g, int n) {
  if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) throw std::invalid_argument("stable graphs: unstable (g, n)");
}

// All graphs with one more edge obtained by degenerating a single vertex.
template <class Sink>
void degenerations(const StableGraph& G, Sink&& sink) {
  const int V = G.num_vertices();
  for (int v = 0; v < V; ++v) {
    if (G.genus[v] >= 1) {
      StableGraph H = G;
      --H.genus[v];
      H.edges.emplace_back(v, v);
      sink(H);
    }
    // items at v: legs, then half-edges (edge e, end 0/1)
    std::vector<int> leg_items;
    for (int i = 0; i < G.num_legs(); ++i)
      if (G.leg_vertex[i] == v) leg_items.push_back(i);
    std::vector<std::pair<int, int>> half_items;
    for (int e = 0; e < G.num_edges(); ++e) {
      if (G.edges[e].first == v) half_items.emplace_back(e, 0);
      if (G.edges[e].second == v) half_items.emplace_back(e, 1);
    }
    const int items = static_cast<int>(leg_items.size() + half_items.size());
    const int gv = G.genus[v];
    for (unsigned mask = 0; mask < (1u << items); ++mask) {
      const int nb = __builtin_popcount(mask);
      const int na = items - nb;
      // item 0 stays on side A to halve the symmetric duplicates
      if (items > 0 && (mask & 1u)) continue;
      for (int ga = 0; ga <= gv; ++ga) {
        const int gb = gv - ga;
        if (2 * ga - 2 + na + 1 <= 0 || 2 * gb - 2 + nb + 1 <= 0) continue;
        StableGraph H = G;
        H.genus[v] = ga;
        H.genus.push_back(gb);
        const int w = V;
        int bit = 0;
        for (int i : leg_items) {
          if (mask >> bit & 1u) H.leg_vertex[i] = w;
          ++bit;
        }
        for (const auto& [e, end] : half_items) {
          if (mask >> bit & 1u) (end == 0 ? H.edges[e].first : H.edges[e].second) = w;
          ++bit;
        }
        for (auto& [a, b] : H.edges)
          if (a > b) std::swap(a, b);
        H.edges.emplace_back(v, w);
        sink(H);
      }
    }
  }
}

}  // namespace

CanonicalForm canonicalize(const StableGraph& g) {
  CanonResult c = canonical_key(g);
  return {decode(c.key, g.num_legs()), c.key, c.count};
}

long automorphism_order(const StableGraph& g) { return canonical_key(g).count * edge_factor(g); }

void for_each_stable_graph(int g, int n, const std::function<void(const StableGraph&)>& fn) {
  check_stable(g, n);
  StableGraph smooth;
  smooth.genus = {g};
  smooth.leg_vertex.assign(n, 0);
  std::vector<std::string> level{canonical_key(smooth).key};
  const int max_edges = 3 * g - 3 + n;
  for (int E = 0; !level.empty(); ++E) {
    for (const auto& k : level) fn(decode(k, n));
    if (E == max_edges) break;
    std::set<std::string> next;
    for (const auto& k : level) {
      const StableGraph G = decode(k, n);
      degenerations(G, [&](const StableGraph& H) { next.insert(canonical_key(H).key); });
    }
    level.assign(next.begin(), next.end());
  }
}

std::vector<StableGraph> enumerate_stable_graphs(int g, int n) {
  std::vector<StableGraph> out;
  for_each_stable_graph(g, n, [&](const StableGraph& G) { out.push_back(G); });
  return out;
}

std::vector<Weighting> enumerate_weightings(const StableGraph& gamma, int r, int s, const std::vector<int>& a) {
  if (r < 1) throw std::invalid_argument("enumerate_weightings: r must be positive");
  const int n = gamma.num_legs();
  if (static_cast<int>(a.size()) != n) throw std::invalid_argument("enumerate_weightings: wrong number of a_i");
  const int g = gamma.total_genus();
  long sum_a = 0;
  for (int x : a) sum_a += x;
  if (mod_r(sum_a, r) != mod_r(static_cast<long>(2 * g - 2 + n) * s, r))
    throw std::domain_error("enumerate_weightings: sum a_i is not congruent to (2g-2+n)s mod r");

  const int V = gamma.num_vertices();
  const int E = gamma.num_edges();
  std::vector<int> target(V), fixed(V, 0);
  for (int v = 0; v < V; ++v) target[v] = mod_r(static_cast<long>(2 * gamma.genus[v] - 2 + gamma.valence(v)) * s, r);
  for (int i = 0; i < n; ++i) fixed[gamma.leg_vertex[i]] = mod_r(fixed[gamma.leg_vertex[i]] + a[i], r);

  // Edges processed in order; a vertex is checked once its last edge is set.
  std::vector<int> last_edge(V, -1);
  for (int e = 0; e < E; ++e) {
    last_edge[gamma.edges[e].first] = e;
    last_edge[gamma.edges[e].second] = e;
  }
  for (int v = 0; v < V; ++v)
    if (last_edge[v] < 0 && fixed[v] != target[v]) return {};

  std::vector<Weighting> out;
  Weighting w(E);
  std::vector<int> acc = fixed;
  std::function<void(int)> rec = [&](int e) {
    if (e == E) {
      out.push_back(w);
      return;
    }
    const auto [x, y] = gamma.edges[e];
    for (int h = 0; h < r; ++h) {
      const int h2 = mod_r(-h, r);
      acc[x] = mod_r(acc[x] + h, r);
      acc[y] = mod_r(acc[y] + h2, r);
      bool ok = true;
      if (last_edge[x] == e && acc[x] != target[x]) ok = false;
      if (last_edge[y] == e && acc[y] != target[y]) ok = false;
      if (ok) {
        w[e] = {h, h2};
        rec(e + 1);
      }
      acc[x] = mod_r(acc[x] - h, r);
      acc[y] = mod_r(acc[y] - h2, r);
    }
  };
  rec(0);
  return out;
}

}  // namespace tautcalc
