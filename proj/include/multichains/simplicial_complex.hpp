#pragma once

// Vertex-labelled simplicial complexes stored by facets, with exact
// combinatorial statistics (f-vector, dimension, purity, Euler
// characteristic) computed by full face expansion.

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace multichains {

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Facets are deduplicated, sorted and checked for mutual inclusion.
  SimplicialComplex(std::vector<std::string> vertex_labels,
                    std::vector<std::vector<int>> facets)
      : labels_(std::move(vertex_labels)) {
    std::set<std::vector<int>> uniq;
    for (auto f : facets) {
      if (f.empty()) throw std::invalid_argument("empty facet");
      std::sort(f.begin(), f.end());
      f.erase(std::unique(f.begin(), f.end()), f.end());
      for (int v : f)
        if (v < 0 || v >= static_cast<int>(labels_.size()))
          throw std::out_of_range("facet vertex out of range");
      uniq.insert(std::move(f));
    }
    for (const auto& f : uniq) {
      bool contained = false;
      for (const auto& g : uniq)
        if (&f != &g && f != g &&
            std::includes(g.begin(), g.end(), f.begin(), f.end())) {
          contained = true;
          break;
        }
      if (!contained) facets_.push_back(f);
    }
  }

  const std::vector<std::string>& vertex_labels() const { return labels_; }
  const std::vector<std::vector<int>>& facets() const { return facets_; }

  int dimension() const {
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
  }

  bool is_pure() const {
    if (facets_.empty()) return true;
    size_t s = facets_.front().size();
    for (const auto& f : facets_)
      if (f.size() != s) return false;
    return true;
  }

  /// All faces, grouped by dimension (faces(k) = the k-dimensional ones),
  /// expanded from the facets with deduplication.  Guarded against blowup.
  std::vector<std::vector<std::vector<int>>> faces_by_dimension(
      size_t max_faces = 100000) const {
    std::set<std::vector<int>> all;
    for (const auto& f : facets_) {
      const size_t k = f.size();
      // all nonempty subsets
      for (size_t mask = 1; mask < (size_t{1} << k); ++mask) {
        std::vector<int> face;
        for (size_t i = 0; i < k; ++i)
          if (mask & (size_t{1} << i)) face.push_back(f[i]);
        all.insert(std::move(face));
        if (all.size() > max_faces)
          throw std::length_error("face expansion exceeds max_faces guard");
      }
    }
    std::vector<std::vector<std::vector<int>>> out(
        static_cast<size_t>(dimension() + 1));
    for (const auto& f : all) out[f.size() - 1].push_back(f);
    return out;
  }

  /// (f_0, ..., f_dim)
  std::vector<long long> f_vector(size_t max_faces = 100000) const {
    std::vector<long long> fv;
    for (const auto& dim_faces : faces_by_dimension(max_faces))
      fv.push_back(static_cast<long long>(dim_faces.size()));
    return fv;
  }

  long long euler_characteristic(size_t max_faces = 100000) const {
    long long chi = 0;
    int sign = 1;
    for (long long fk : f_vector(max_faces)) {
      chi += sign * fk;
      sign = -sign;
    }
    return chi;
  }

  /// Facets as sets of label strings; the vertex-order-independent view.
  std::set<std::set<std::string>> facet_label_sets() const {
    std::set<std::set<std::string>> out;
    for (const auto& f : facets_) {
      std::set<std::string> s;
      for (int v : f) s.insert(labels_[v]);
      out.insert(std::move(s));
    }
    return out;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["vertices"] = labels_;
    auto sorted = facets_;
    std::sort(sorted.begin(), sorted.end());
    j["facets"] = sorted;
    return j;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> facets_;
};

}  // namespace multichains
