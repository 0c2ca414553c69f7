#pragma once

// Shared corpus of small posets used across the test suites, together with
// test-only brute-force oracles kept independent of the library paths they
// check.

#include <string>
#include <utility>
#include <vector>

#include "multichains/multichain.hpp"
#include "multichains/poset.hpp"

namespace corpus {

inline multichains::Poset chain(int n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  for (int i = 1; i < n; ++i) covers.push_back({std::to_string(i), std::to_string(i + 1)});
  return multichains::Poset::from_cover_relations(labels, covers);
}

inline multichains::Poset antichain(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return multichains::Poset::from_cover_relations(labels, {});
}

inline multichains::Poset diamond() {
  return multichains::Poset::from_cover_relations(
      {"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

// Two minimal elements below a middle element below two maximal ones.
inline multichains::Poset bowtie() {
  return multichains::Poset::from_cover_relations(
      {"a", "b", "c", "d", "e"}, {{"a", "c"}, {"b", "c"}, {"c", "d"}, {"c", "e"}});
}

inline std::vector<multichains::Poset> all() {
  return {chain(2), chain(3), chain(4), antichain(2), antichain(3), diamond(), bowtie()};
}

/// All strictly increasing maps [r] -> [2r], including iota(1) != 1.
inline std::vector<multichains::IndexMap> every_index_map(int r) {
  std::vector<multichains::IndexMap> out;
  std::vector<int> vals;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(vals.size()) == r) {
      out.emplace_back(vals);
      return;
    }
    for (int v = next; v <= 2 * r; ++v) {
      vals.push_back(v);
      self(self, v + 1);
      vals.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

/// Test-side brute-force partial-order check of an arbitrary relation.
template <typename Rel>
bool is_partial_order(const std::vector<multichains::Multichain>& carrier, Rel&& rel) {
  for (const auto& p : carrier)
    if (!rel(p, p)) return false;
  for (const auto& p : carrier)
    for (const auto& q : carrier)
      if (p != q && rel(p, q) && rel(q, p)) return false;
  for (const auto& p : carrier)
    for (const auto& q : carrier) {
      if (!rel(p, q)) continue;
      for (const auto& s : carrier)
        if (rel(q, s) && !rel(p, s)) return false;
    }
  return true;
}

}  // namespace corpus
