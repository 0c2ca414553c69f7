#pragma once

// Reduced simplicial homology over the integers: boundary matrices with
// alternating signs over the fixed vertex order, Smith normal form with
// arbitrary-precision entries, Betti numbers and torsion coefficients.

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"
#include "multichains/simplicial_complex.hpp"

namespace multichains {

using BigInt = boost::multiprecision::cpp_int;

struct IntegerMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<BigInt>> entries;  // rows x cols

  IntegerMatrix() = default;
  IntegerMatrix(int r, int c) : rows(r), cols(c), entries(r, std::vector<BigInt>(c, 0)) {}

  BigInt& at(int i, int j) { return entries[i][j]; }
  const BigInt& at(int i, int j) const { return entries[i][j]; }

  bool is_zero() const {
    for (const auto& row : entries)
      for (const auto& e : row)
        if (e != 0) return false;
    return true;
  }

  IntegerMatrix multiply(const IntegerMatrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix dimension mismatch");
    IntegerMatrix out(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k)
        if (entries[i][k] != 0)
          for (int j = 0; j < o.cols; ++j)
            out.entries[i][j] += entries[i][k] * o.entries[k][j];
    return out;
  }
};

struct SmithResult {
  std::vector<BigInt> invariant_factors;  // d_1 | d_2 | ..., all nonzero
  int rank = 0;
};

namespace detail {

/// Dense Smith normal form by row/column operations, pivoting on the
/// minimal-absolute-value nonzero entry to limit coefficient growth.
inline SmithResult dense_snf(IntegerMatrix m) {
  SmithResult res;
  int top = 0;
  while (true) {
    // locate minimal nonzero entry in the remaining block
    int pi = -1, pj = -1;
    for (int i = top; i < m.rows; ++i)
      for (int j = top; j < m.cols; ++j)
        if (m.at(i, j) != 0 &&
            (pi < 0 || abs(m.at(i, j)) < abs(m.at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    std::swap(m.entries[top], m.entries[pi]);
    for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, top), m.at(i, pj));

    bool clean = true;
    for (int i = top + 1; i < m.rows; ++i) {
      if (m.at(i, top) == 0) continue;
      BigInt f = m.at(i, top) / m.at(top, top);
      for (int j = top; j < m.cols; ++j) m.at(i, j) -= f * m.at(top, j);
      if (m.at(i, top) != 0) clean = false;
    }
    for (int j = top + 1; j < m.cols; ++j) {
      if (m.at(top, j) == 0) continue;
      BigInt f = m.at(top, j) / m.at(top, top);
      for (int i = 0; i < m.rows; ++i) m.at(i, j) -= f * m.at(i, top);
      if (m.at(top, j) != 0) clean = false;
    }
    if (!clean) continue;  // reduce again around a smaller pivot

    // pivot must divide every remaining entry for the divisibility chain
    bool divides_all = true;
    for (int i = top + 1; i < m.rows && divides_all; ++i)
      for (int j = top + 1; j < m.cols && divides_all; ++j)
        if (m.at(i, j) % m.at(top, top) != 0) {
          for (int jj = top; jj < m.cols; ++jj) m.at(top, jj) += m.at(i, jj);
          divides_all = false;
        }
    if (!divides_all) continue;

    BigInt d = abs(m.at(top, top));
    res.invariant_factors.push_back(d);
    ++top;
  }
  res.rank = static_cast<int>(res.invariant_factors.size());
  return res;
}

/// Row-major sparse matrix, enough for boundary operators.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::map<int, BigInt>> row_data;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), row_data(r) {}
};

/// Smith normal form on a sparse matrix.  Boundary matrices are very
/// sparse with mostly unit entries, so eliminate +-1 pivots first
/// (Markowitz fill ordering); each unit pivot contributes an invariant
/// factor 1.  The leftover block, which carries all the torsion, is handed
/// to the dense routine.
inline SmithResult sparse_snf(SparseMatrix sm) {
  const int m_rows = sm.rows;
  const int m_cols = sm.cols;
  auto& rows = sm.row_data;
  std::vector<std::set<int>> col_rows(m_cols);
  for (int i = 0; i < m_rows; ++i)
    for (const auto& [j, v] : rows[i]) col_rows[j].insert(i);
  std::vector<char> row_live(m_rows, 1), col_live(m_cols, 1);
  int unit_pivots = 0;
  while (true) {
    long long best = -1;
    int pi = -1, pj = -1;
    for (int i = 0; i < m_rows; ++i) {
      if (!row_live[i]) continue;
      for (const auto& [j, v] : rows[i]) {
        if (v != 1 && v != -1) continue;
        long long score = static_cast<long long>(rows[i].size() - 1) *
                          static_cast<long long>(col_rows[j].size() - 1);
        if (best < 0 || score < best) {
          best = score;
          pi = i;
          pj = j;
        }
        if (best == 0) break;
      }
      if (best == 0) break;
    }
    if (pi < 0) break;
    const BigInt pv = rows[pi][pj];
    // clear the pivot column with row operations
    const auto victims = col_rows[pj];
    for (int i2 : victims) {
      if (i2 == pi) continue;
      BigInt f = rows[i2][pj] / pv;  // exact: |pv| = 1
      for (const auto& [j, v] : rows[pi]) {
        auto it = rows[i2].find(j);
        if (it == rows[i2].end()) {
          rows[i2][j] = -f * v;
          col_rows[j].insert(i2);
        } else {
          it->second -= f * v;
          if (it->second == 0) {
            rows[i2].erase(it);
            col_rows[j].erase(i2);
          }
        }
      }
    }
    // the pivot column is now zero off the pivot row; the implied column
    // operations only touch the pivot row, so drop both outright
    for (const auto& [j, v] : rows[pi]) col_rows[j].erase(pi);
    rows[pi].clear();
    row_live[pi] = 0;
    col_live[pj] = 0;
    ++unit_pivots;
  }
  // residual block without unit entries
  std::vector<int> rmap, cmap(m_cols, -1);
  for (int i = 0; i < m_rows; ++i)
    if (row_live[i] && !rows[i].empty()) rmap.push_back(i);
  std::vector<int> ccols;
  for (int j = 0; j < m_cols; ++j)
    if (col_live[j] && !col_rows[j].empty()) {
      cmap[j] = static_cast<int>(ccols.size());
      ccols.push_back(j);
    }
  IntegerMatrix rest(static_cast<int>(rmap.size()), static_cast<int>(ccols.size()));
  for (size_t i = 0; i < rmap.size(); ++i)
    for (const auto& [j, v] : rows[rmap[i]]) rest.at(static_cast<int>(i), cmap[j]) = v;
  SmithResult res;
  res.invariant_factors.assign(unit_pivots, 1);
  auto tail = dense_snf(std::move(rest));
  res.invariant_factors.insert(res.invariant_factors.end(),
                               tail.invariant_factors.begin(),
                               tail.invariant_factors.end());
  res.rank = static_cast<int>(res.invariant_factors.size());
  return res;
}

/// Sparse boundary operators, index k = del_k, del_0 the augmentation row.
inline std::vector<SparseMatrix> sparse_boundaries(
    const std::vector<std::vector<std::vector<int>>>& faces) {
  const int dim = static_cast<int>(faces.size()) - 1;
  std::vector<std::map<std::vector<int>, int>> index(faces.size());
  for (int d = 0; d <= dim; ++d)
    for (size_t i = 0; i < faces[d].size(); ++i)
      index[d][faces[d][i]] = static_cast<int>(i);
  std::vector<SparseMatrix> out;
  if (dim < 0) return out;
  SparseMatrix aug(1, static_cast<int>(faces[0].size()));
  for (int j = 0; j < aug.cols; ++j) aug.row_data[0][j] = 1;
  out.push_back(std::move(aug));
  for (int d = 1; d <= dim; ++d) {
    SparseMatrix bd(static_cast<int>(faces[d - 1].size()),
                    static_cast<int>(faces[d].size()));
    for (size_t j = 0; j < faces[d].size(); ++j) {
      const auto& f = faces[d][j];
      int sign = 1;
      for (size_t drop = 0; drop < f.size(); ++drop) {
        std::vector<int> sub;
        for (size_t i = 0; i < f.size(); ++i)
          if (i != drop) sub.push_back(f[i]);
        bd.row_data[index[d - 1].at(sub)][static_cast<int>(j)] = sign;
        sign = -sign;
      }
    }
    out.push_back(std::move(bd));
  }
  return out;
}

}  // namespace detail

inline SmithResult smith_normal_form(const IntegerMatrix& m) {
  detail::SparseMatrix sm(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) sm.row_data[i][j] = m.at(i, j);
  return detail::sparse_snf(std::move(sm));
}

struct HomologyResult {
  std::vector<long long> betti;                 // reduced, dimensions 0..dim
  std::vector<std::vector<BigInt>> torsion;     // invariant factors > 1

  bool is_point() const {
    for (long long b : betti)
      if (b != 0) return false;
    for (const auto& t : torsion)
      if (!t.empty()) return false;
    return true;
  }

  bool operator==(const HomologyResult& o) const {
    auto trim = [](const HomologyResult& h) {
      auto b = h.betti;
      while (!b.empty() && b.back() == 0) b.pop_back();
      auto t = h.torsion;
      while (!t.empty() && t.back().empty()) t.pop_back();
      return std::pair{b, t};
    };
    return trim(*this) == trim(o);
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["betti"] = betti;
    nlohmann::json tor = nlohmann::json::array();
    for (const auto& dim : torsion) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& d : dim) row.push_back(d.str());
      tor.push_back(row);
    }
    j["torsion"] = tor;
    j["reduced"] = true;
    return j;
  }
};

/// Boundary operators del_k : C_k -> C_{k-1} for k = 0..dim, where del_0 is
/// the augmentation row (all ones).  Index k in the returned list is del_k.
inline std::vector<IntegerMatrix> boundary_matrices(const SimplicialComplex& k,
                                                    size_t max_faces = 100000) {
  const auto faces = k.faces_by_dimension(max_faces);
  const int dim = static_cast<int>(faces.size()) - 1;
  std::vector<std::map<std::vector<int>, int>> index(faces.size());
  for (int d = 0; d <= dim; ++d)
    for (size_t i = 0; i < faces[d].size(); ++i)
      index[d][faces[d][i]] = static_cast<int>(i);

  std::vector<IntegerMatrix> out;
  if (dim < 0) return out;
  // augmentation
  IntegerMatrix aug(1, static_cast<int>(faces[0].size()));
  for (int j = 0; j < aug.cols; ++j) aug.at(0, j) = 1;
  out.push_back(std::move(aug));
  for (int d = 1; d <= dim; ++d) {
    IntegerMatrix bd(static_cast<int>(faces[d - 1].size()),
                     static_cast<int>(faces[d].size()));
    for (size_t j = 0; j < faces[d].size(); ++j) {
      const auto& f = faces[d][j];
      int sign = 1;
      for (size_t drop = 0; drop < f.size(); ++drop) {
        std::vector<int> sub;
        for (size_t i = 0; i < f.size(); ++i)
          if (i != drop) sub.push_back(f[i]);
        bd.at(index[d - 1].at(sub), static_cast<int>(j)) = sign;
        sign = -sign;
      }
    }
    out.push_back(std::move(bd));
  }
  return out;
}

/// Reduced integer homology in all dimensions.
inline HomologyResult reduced_homology(const SimplicialComplex& k,
                                       size_t max_faces = 100000) {
  HomologyResult res;
  const auto bd = detail::sparse_boundaries(k.faces_by_dimension(max_faces));
  const int dim = static_cast<int>(bd.size()) - 1;
  if (dim < 0) return res;
  std::vector<SmithResult> snf(bd.size());
  for (size_t i = 0; i < bd.size(); ++i) snf[i] = detail::sparse_snf(bd[i]);
  for (int d = 0; d <= dim; ++d) {
    const long long chains = bd[d].cols;
    const long long rank_d = snf[d].rank;
    const long long rank_up = (d + 1 <= dim) ? snf[d + 1].rank : 0;
    res.betti.push_back(chains - rank_d - rank_up);
    std::vector<BigInt> tor;
    if (d + 1 <= dim)
      for (const auto& f : snf[d + 1].invariant_factors)
        if (f > 1) tor.push_back(f);
    res.torsion.push_back(std::move(tor));
  }
  return res;
}

inline bool is_homology_point(const SimplicialComplex& k, size_t max_faces = 100000) {
  return reduced_homology(k, max_faces).is_point();
}

/// Vanishing reduced homology plus purity in dimension d.
inline bool is_homology_ball(const SimplicialComplex& k, int d,
                             size_t max_faces = 100000) {
  return k.dimension() == d && k.is_pure() && is_homology_point(k, max_faces);
}

}  // namespace multichains
