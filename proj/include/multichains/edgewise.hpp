#pragma once

// Classical r-th edgewise subdivision of an ordered simplicial complex,
// built facet by facet from the Freudenthal-style grid criterion.  Serves
// as an independent cross-check and is deliberately unaware of the
// multichain relation machinery.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "multichains/simplicial_complex.hpp"

namespace multichains {

namespace detail {

// Partial-sum transform of a grid point a (a_0..a_d summing to r):
// t_j = a_j + a_{j+1} + ... + a_d.
inline std::vector<int> grid_tail_sums(const std::vector<int>& a) {
  std::vector<int> t(a.size());
  int acc = 0;
  for (int j = static_cast<int>(a.size()) - 1; j >= 0; --j) {
    acc += a[j];
    t[j] = acc;
  }
  return t;
}

// A set of grid points spans a cell iff their tail-sum vectors form a chain
// under the componentwise order with total spread at most one.
inline bool grid_simplex(const std::vector<std::vector<int>>& tails) {
  const size_t d1 = tails.front().size();
  for (size_t i = 0; i < tails.size(); ++i)
    for (size_t j = i + 1; j < tails.size(); ++j) {
      bool le = true, ge = true;
      for (size_t k = 0; k < d1; ++k) {
        int diff = tails[i][k] - tails[j][k];
        if (diff > 1 || diff < -1) return false;
        if (diff > 0) le = false;
        if (diff < 0) ge = false;
      }
      if (!le && !ge) return false;
    }
  return true;
}

}  // namespace detail

/// r-th edgewise subdivision of K.  Every facet must be written in the
/// global vertex order (true for order complexes); vertices of the result
/// are labelled by the multiset they represent, e.g. "112" for the grid
/// point with two copies of vertex "1" and one of vertex "2".
inline SimplicialComplex edgewise_subdivision(const SimplicialComplex& k, int r) {
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  std::map<std::vector<int>, int> vertex_index;  // multiset of K-vertices -> index
  std::vector<std::string> labels;
  std::vector<std::vector<int>> cells;

  auto intern = [&](const std::vector<int>& multiset) {
    auto it = vertex_index.find(multiset);
    if (it != vertex_index.end()) return it->second;
    int idx = static_cast<int>(labels.size());
    vertex_index.emplace(multiset, idx);
    bool single = true;
    for (int v : multiset)
      if (k.vertex_labels()[v].size() != 1) single = false;
    std::string lab;
    for (size_t i = 0; i < multiset.size(); ++i) {
      if (!single && i) lab += ',';
      lab += k.vertex_labels()[multiset[i]];
    }
    labels.push_back(lab);
    return idx;
  };

  for (const auto& facet : k.facets()) {
    for (size_t i = 1; i < facet.size(); ++i)
      if (facet[i] <= facet[i - 1])
        throw std::invalid_argument("facet not in global vertex order");
    const int d = static_cast<int>(facet.size()) - 1;
    // grid points: compositions of r into d+1 nonnegative parts
    std::vector<std::vector<int>> grid;
    std::vector<int> comp(d + 1, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
      if (pos == d) {
        comp[pos] = remaining;
        grid.push_back(comp);
        return;
      }
      for (int v = 0; v <= remaining; ++v) {
        comp[pos] = v;
        self(self, pos + 1, remaining - v);
      }
    };
    rec(rec, 0, r);
    std::vector<std::vector<int>> tails;
    tails.reserve(grid.size());
    for (const auto& a : grid) tails.push_back(detail::grid_tail_sums(a));

    // maximal compatible sets within this facet, by greedy growth over all
    // subsets (grids are tiny at desk scale)
    const int n = static_cast<int>(grid.size());
    std::vector<std::vector<int>> maximal;
    std::vector<int> cur;
    auto grow = [&](auto&& self, int start) -> void {
      bool extended = false;
      for (int v = 0; v < n; ++v) {
        if (std::find(cur.begin(), cur.end(), v) != cur.end()) continue;
        std::vector<std::vector<int>> t;
        for (int u : cur) t.push_back(tails[u]);
        t.push_back(tails[v]);
        if (!detail::grid_simplex(t)) continue;
        extended = true;
        if (v < start) continue;  // will be found from another root
        cur.push_back(v);
        self(self, v + 1);
        cur.pop_back();
      }
      if (!extended) maximal.push_back(cur);
    };
    grow(grow, 0);

    for (const auto& cell : maximal) {
      std::vector<int> verts;
      for (int g : cell) {
        // multiset of K-vertices represented by grid point grid[g]
        std::vector<int> ms;
        for (int j = 0; j <= d; ++j)
          for (int c = 0; c < grid[g][j]; ++c) ms.push_back(facet[j]);
        verts.push_back(intern(ms));
      }
      cells.push_back(std::move(verts));
    }
  }
  return SimplicialComplex(std::move(labels), std::move(cells));
}

}  // namespace multichains
