#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace tautcalc {

/// Dual graph of a stable curve. Vertices carry genera, leg i (0-based here,
/// marking i+1) sits on leg_vertex[i], edges are unordered vertex pairs with
/// a <= b (a == b is a self-loop). Half-edge 2e is the `a` end of edge e,
/// half-edge 2e+1 the `b` end.
struct StableGraph {
  std::vector<int> genus;
  std::vector<int> leg_vertex;
  std::vector<std::pair<int, int>> edges;

  int num_vertices() const { return static_cast<int>(genus.size()); }
  int num_legs() const { return static_cast<int>(leg_vertex.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int h1() const { return num_edges() - num_vertices() + 1; }
  int total_genus() const;
  /// Legs plus half-edges at v.
  int valence(int v) const;
  int half_edge_vertex(int h) const { return h % 2 == 0 ? edges[h / 2].first : edges[h / 2].second; }

  /// Connectivity, genus formula and per-vertex stability.
  bool is_valid() const;

  /// "V:g_1,...|L:v(1),...|E:(a,b),..." with 0-based vertex indices.
  std::string serialize() const;
  static StableGraph parse(const std::string& text);

  friend bool operator==(const StableGraph&, const StableGraph&) = default;
};

/// Canonical representative of the isomorphism class (vertex relabeling with
/// legs fixed) plus the number of vertex permutations fixing the graph.
struct CanonicalForm {
  StableGraph graph;
  std::string key;
  long vertex_automorphisms = 1;
};
CanonicalForm canonicalize(const StableGraph& g);

/// Order of the automorphism group acting on vertices and half-edges with
/// legs fixed: vertex part times edge-multiplicity factorials times, per
/// vertex, loops! * 2^loops.
long automorphism_order(const StableGraph& g);

/// One representative per isomorphism class of stable graphs of type (g, n),
/// each in canonical form, sorted by (#edges, canonical key).
/// Throws std::invalid_argument if (g, n) is unstable.
std::vector<StableGraph> enumerate_stable_graphs(int g, int n);

/// Streaming variant; the callback receives graphs in the same order.
void for_each_stable_graph(int g, int n, const std::function<void(const StableGraph&)>& fn);

/// Residues on the two halves of each edge: w[e] = {w(2e), w(2e+1)}.
using Weighting = std::vector<std::pair<int, int>>;

/// All mod-r half-edge decorations of Gamma compatible with legs a_i mod r,
/// w(h) + w(h') = 0 mod r on each edge, and the vertex congruence
/// (sum of local decorations) = (2g_v - 2 + n_v) s mod r.
/// Throws std::domain_error if sum a_i != (2g - 2 + n) s mod r.
std::vector<Weighting> enumerate_weightings(const StableGraph& gamma, int r, int s, const std::vector<int>& a);

/// Non-negative residue of x mod r.
inline int mod_r(long x, int r) {
  const long m = x % r;
  return static_cast<int>(m < 0 ? m + r : m);
}

}  // namespace tautcalc
