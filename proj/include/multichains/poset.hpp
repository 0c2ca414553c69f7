#pragma once

// Finite posets: construction from cover relations, chain machinery and
// order complexes.  Elements are referenced by dense integer indices that
// follow a fixed topological sort, so i <= j in the index order whenever
// leq(i, j) holds.

#include <algorithm>
#include <cstddef>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "multichains/simplicial_complex.hpp"

namespace multichains {

/// Strictly increasing (w.r.t. the poset order) sequence of element indices.
using Chain = std::vector<int>;

class Poset {
 public:
  /// Build from labels and cover pairs (a, b) meaning a is covered-below b.
  /// The order matrix is the reflexive-transitive closure of the covers.
  /// Rejects duplicate labels and cycles in the cover digraph.
  static Poset from_cover_relations(const std::vector<std::string>& labels,
                                    const std::vector<std::pair<std::string, std::string>>& covers) {
    std::set<std::string> seen;
    for (const auto& l : labels) {
      if (!seen.insert(l).second)
        throw std::invalid_argument("duplicate label: " + l);
    }
    auto index_of = [&](const std::string& l) {
      auto it = std::find(labels.begin(), labels.end(), l);
      if (it == labels.end()) throw std::invalid_argument("unknown label: " + l);
      return static_cast<int>(it - labels.begin());
    };
    const int n = static_cast<int>(labels.size());
    std::vector<std::vector<int>> succ(n);
    std::vector<int> indeg(n, 0);
    for (const auto& [a, b] : covers) {
      int i = index_of(a), j = index_of(b);
      succ[i].push_back(j);
      ++indeg[j];
    }
    // Kahn topological sort; a leftover vertex set witnesses a cycle.
    std::vector<int> order;
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    std::vector<int> deg = indeg;
    for (int i = 0; i < n; ++i)
      if (deg[i] == 0) ready.push(i);
    while (!ready.empty()) {
      int v = ready.top();
      ready.pop();
      order.push_back(v);
      for (int w : succ[v])
        if (--deg[w] == 0) ready.push(w);
    }
    if (static_cast<int>(order.size()) != n) {
      std::ostringstream msg;
      msg << "cycle detected among:";
      for (int i = 0; i < n; ++i)
        if (deg[i] > 0) msg << ' ' << labels[i];
      throw std::invalid_argument(msg.str());
    }
    // Reindex so that the internal index order is a linear extension.
    std::vector<int> pos(n);
    for (int k = 0; k < n; ++k) pos[order[k]] = k;
    Poset p;
    p.labels_.resize(n);
    for (int i = 0; i < n; ++i) p.labels_[pos[i]] = labels[i];
    p.leq_.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) p.leq_[i][i] = 1;
    for (int k = 0; k < n; ++k) {
      int v = order[k];
      for (int w : succ[v]) p.leq_[pos[v]][pos[w]] = 1;
    }
    // Transitive closure in topological order.
    for (int i = n - 1; i >= 0; --i)
      for (int j = i + 1; j < n; ++j)
        if (p.leq_[i][j])
          for (int k = j + 1; k < n; ++k)
            if (p.leq_[j][k]) p.leq_[i][k] = 1;
    p.check_axioms();
    return p;
  }

  /// Parse the text format: one `a < b` cover per line, isolated elements on
  /// their own line, `#` comments and blank lines ignored.
  static Poset parse(const std::string& text) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> covers;
    auto add_label = [&](const std::string& l) {
      if (std::find(labels.begin(), labels.end(), l) == labels.end()) labels.push_back(l);
    };
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::string a, lt, b;
      if (!(ls >> a)) continue;
      if (ls >> lt) {
        if (lt != "<" || !(ls >> b))
          throw std::invalid_argument("bad poset line: " + line);
        add_label(a);
        add_label(b);
        covers.emplace_back(a, b);
      } else {
        add_label(a);
      }
    }
    return from_cover_relations(labels, covers);
  }

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(i); }

  bool leq(int a, int b) const { return leq_[a][b] != 0; }
  bool less(int a, int b) const { return a != b && leq_[a][b] != 0; }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  /// All inclusionwise maximal chains, each strictly increasing in index order.
  std::vector<Chain> maximal_chains() const {
    std::vector<Chain> out;
    Chain cur;
    dfs_chains(cur, out);
    return out;
  }

  /// Length (= #elements - 1) of a longest chain.
  int longest_chain_length() const {
    int best = 0;
    for (const auto& c : maximal_chains())
      best = std::max(best, static_cast<int>(c.size()) - 1);
    return best;
  }

  /// Order complex: facets are the maximal chains.
  SimplicialComplex order_complex() const {
    std::vector<std::vector<int>> facets;
    for (const auto& c : maximal_chains()) facets.push_back(c);
    return SimplicialComplex(labels_, std::move(facets));
  }

  /// True iff the index set forms a chain.
  bool is_chain_set(const std::vector<int>& elems) const {
    for (size_t i = 0; i < elems.size(); ++i)
      for (size_t j = i + 1; j < elems.size(); ++j)
        if (!comparable(elems[i], elems[j])) return false;
    return true;
  }

 private:
  void check_axioms() const {
    const int n = size();
    for (int a = 0; a < n; ++a) {
      if (!leq_[a][a]) throw std::logic_error("relation not reflexive");
      for (int b = 0; b < n; ++b) {
        if (a != b && leq_[a][b] && leq_[b][a])
          throw std::logic_error("relation not antisymmetric");
        for (int c = 0; c < n; ++c)
          if (leq_[a][b] && leq_[b][c] && !leq_[a][c])
            throw std::logic_error("relation not transitive");
      }
    }
  }

  void dfs_chains(Chain& cur, std::vector<Chain>& out) const {
    const int n = size();
    bool extended = false;
    int start = cur.empty() ? 0 : cur.back() + 1;
    for (int v = start; v < n; ++v) {
      bool ok = true;
      for (int u : cur)
        if (!less(u, v)) { ok = false; break; }
      if (!ok) continue;
      extended = true;
      cur.push_back(v);
      dfs_chains(cur, out);
      cur.pop_back();
    }
    if (!extended && !cur.empty()) {
      // cur is maximal upwards; maximal overall iff no element fits below or
      // between, which the index order (a linear extension) rules out except
      // for strictly smaller elements comparable to everything in cur.
      for (int v = 0; v < n; ++v) {
        if (std::find(cur.begin(), cur.end(), v) != cur.end()) continue;
        bool fits = true;
        for (int u : cur)
          if (!comparable(u, v)) { fits = false; break; }
        if (fits) return;  // cur extends, not maximal
      }
      out.push_back(cur);
    }
  }

  std::vector<std::string> labels_;
  std::vector<std::vector<char>> leq_;
};

}  // namespace multichains
