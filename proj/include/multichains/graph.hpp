#pragma once

// Comparability graphs G_iota(P_r) on the multichain set, their clique
// (flag) complexes via Bron-Kerbosch with pivoting, and graph-level
// comparisons across the family script-I.

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "multichains/multichain.hpp"
#include "multichains/simplicial_complex.hpp"

namespace multichains {

struct MultichainGraph {
  std::vector<Multichain> vertices;               // canonical P_r order
  std::set<std::pair<int, int>> edges;            // i < j vertex-index pairs

  bool has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return edges.count({i, j}) != 0;
  }

  /// DIMACS-like edge list, one `e i j` line per edge.
  std::string to_edge_list() const {
    std::ostringstream out;
    for (const auto& [i, j] : edges) out << "e " << i << ' ' << j << '\n';
    return out.str();
  }
};

enum class RelationKind { iota, iota_prime, muhle, general };

/// Symmetric relation evaluator for edge construction.
using RelationFn = std::function<bool(const Multichain&, const Multichain&)>;

inline RelationFn make_relation(const Poset& po, RelationKind kind,
                                const std::optional<IndexMap>& iota,
                                const std::optional<KappaMap>& kappa) {
  switch (kind) {
    case RelationKind::iota:
    case RelationKind::iota_prime:
      if (!iota) throw std::invalid_argument("relation requires iota");
      return [&po, i = *iota](const Multichain& p, const Multichain& q) {
        return rel_leq(po, i, p, q);
      };
    case RelationKind::muhle:
      return [&po](const Multichain& p, const Multichain& q) {
        return rel_muhle(po, p, q);
      };
    case RelationKind::general:
      if (!iota || !kappa) throw std::invalid_argument("general relation requires iota and kappa");
      return [&po, i = *iota, k = *kappa](const Multichain& p, const Multichain& q) {
        return rel_general(po, i, k, p, q);
      };
  }
  throw std::logic_error("unreachable");
}

/// {p, q} is an edge iff p != q and p rel q or q rel p.
inline MultichainGraph multichain_graph(const Poset& po, int r, const RelationFn& rel) {
  MultichainGraph g;
  g.vertices = enumerate_multichains(po, r);
  const int n = static_cast<int>(g.vertices.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rel(g.vertices[i], g.vertices[j]) || rel(g.vertices[j], g.vertices[i]))
        g.edges.insert({i, j});
  return g;
}

inline MultichainGraph multichain_graph(const Poset& po, int r, const IndexMap& iota) {
  return multichain_graph(po, r, make_relation(po, RelationKind::iota, iota, std::nullopt));
}

/// Facets = maximal cliques, Bron-Kerbosch with pivot, vertices in the
/// canonical lexicographic rank order so the output is deterministic.
inline SimplicialComplex clique_complex(const Poset& po, const MultichainGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& [i, j] : g.edges) adj[i][j] = adj[j][i] = 1;

  std::vector<std::vector<int>> cliques;
  std::vector<int> R;
  std::function<void(std::vector<int>, std::vector<int>)> expand =
      [&](std::vector<int> P, std::vector<int> X) {
        if (P.empty() && X.empty()) {
          cliques.push_back(R);
          return;
        }
        // pivot: vertex of P u X with most neighbours in P
        int pivot = -1, best = -1;
        auto count_nb = [&](int u) {
          int c = 0;
          for (int v : P)
            if (adj[u][v]) ++c;
          return c;
        };
        for (int u : P)
          if (int c = count_nb(u); c > best) best = c, pivot = u;
        for (int u : X)
          if (int c = count_nb(u); c > best) best = c, pivot = u;
        std::vector<int> ext;
        for (int v : P)
          if (!adj[pivot][v]) ext.push_back(v);
        for (int v : ext) {
          std::vector<int> P2, X2;
          for (int w : P)
            if (adj[v][w]) P2.push_back(w);
          for (int w : X)
            if (adj[v][w]) X2.push_back(w);
          R.push_back(v);
          expand(std::move(P2), std::move(X2));
          R.pop_back();
          P.erase(std::find(P.begin(), P.end(), v));
          X.insert(std::lower_bound(X.begin(), X.end(), v), v);
        }
      };
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  expand(all, {});

  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& mc : g.vertices) labels.push_back(multichain_label(po, mc));
  return SimplicialComplex(std::move(labels), std::move(cliques));
}

inline SimplicialComplex clique_complex(const Poset& po, int r, const IndexMap& iota) {
  return clique_complex(po, multichain_graph(po, r, iota));
}

inline bool graphs_equal(const MultichainGraph& a, const MultichainGraph& b) {
  if (a.vertices != b.vertices)
    throw std::invalid_argument("graphs_equal requires identical vertex sets");
  return a.edges == b.edges;
}

/// Number of distinct G_iota(P_r) over iota in script-I.
inline int count_distinct_graphs(const Poset& po, int r) {
  std::set<std::set<std::pair<int, int>>> edge_sets;
  for (const auto& iota : enumerate_script_I(r))
    edge_sets.insert(multichain_graph(po, r, iota).edges);
  return static_cast<int>(edge_sets.size());
}

/// True iff {p, q} is an edge of G_iota(P_r) for every iota in script-I,
/// which happens exactly when p and q differ in a unique coordinate whose
/// entries are comparable.  (On non-chain posets the unique differing pair
/// can be incomparable, and then no relation holds in either direction.)
inline bool edge_in_all_graphs(const Poset& po, int /*r*/, const Multichain& p,
                               const Multichain& q) {
  if (p == q) throw std::invalid_argument("edge_in_all_graphs requires p != q");
  if (p.size() != q.size()) throw std::invalid_argument("length mismatch");
  int diffs = 0;
  size_t where = 0;
  for (size_t k = 0; k < p.size(); ++k)
    if (p[k] != q[k]) {
      ++diffs;
      where = k;
    }
  return diffs == 1 && po.comparable(p[where], q[where]);
}

}  // namespace multichains
