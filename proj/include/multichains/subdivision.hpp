#pragma once

// Exact-arithmetic geometry for the subdivision claims: the affine vertex
// placement p -> (p_1 + ... + p_r)/r, per-facet volume certificates, the
// non-reflexive dimension/purity dichotomy, and the interior-point
// preimage tableau construction.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"
#include "multichains/graph.hpp"
#include "multichains/homology.hpp"
#include "multichains/multichain.hpp"

namespace multichains {

using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_str(const Rational& q) {
  std::ostringstream out;
  out << numerator(q) << '/' << denominator(q);
  return out.str();
}

/// Point of |Delta(P)| in barycentric coordinates over a chain of P.
struct BarycentricPoint {
  Chain chain;                    // strictly increasing element indices
  std::vector<Rational> coords;   // same length, sum 1, each >= 0

  void validate() const {
    if (chain.size() != coords.size())
      throw std::invalid_argument("coordinate/chain length mismatch");
    Rational s = 0;
    for (const auto& c : coords) {
      if (c < 0) throw std::invalid_argument("negative barycentric coordinate");
      s += c;
    }
    if (s != 1) throw std::invalid_argument("barycentric coordinates must sum to 1");
  }

  bool operator==(const BarycentricPoint& o) const {
    // compare as sparse points: supports and coordinates must agree
    std::map<int, Rational> a, b;
    for (size_t i = 0; i < chain.size(); ++i)
      if (coords[i] != 0) a[chain[i]] = coords[i];
    for (size_t i = 0; i < o.chain.size(); ++i)
      if (o.coords[i] != 0) b[o.chain[i]] = o.coords[i];
    return a == b;
  }
};

/// f(p_1 <= ... <= p_r) = (p_1 + ... + p_r)/r over the support chain.
inline BarycentricPoint vertex_placement(const Multichain& mc) {
  BarycentricPoint pt;
  const int r = static_cast<int>(mc.size());
  for (int e : mc) {
    if (pt.chain.empty() || pt.chain.back() != e) {
      pt.chain.push_back(e);
      pt.coords.push_back(0);
    }
    pt.coords.back() += Rational(1, r);
  }
  return pt;
}

/// Union of the entries of a simplex of multichains, as a chain of P.
/// A non-chain union contradicts the clique structure and is an error.
inline Chain simplex_support(const Poset& po, const std::vector<Multichain>& simplex) {
  std::set<int> elems;
  for (const auto& mc : simplex) elems.insert(mc.begin(), mc.end());
  Chain c(elems.begin(), elems.end());
  if (!po.is_chain_set(c))
    throw std::logic_error("simplex support is not a chain");
  return c;
}

struct FacetCertificate {
  Chain chain;
  int pieces = 0;
  bool nondegenerate = true;
  bool volume_ok = false;
  bool injective = true;
  bool homology_point = false;
  Rational total_volume = 0;
  Rational target_volume = 0;

  bool certified() const {
    return nondegenerate && volume_ok && injective && homology_point;
  }
};

struct DichotomyReport {
  bool dim_excess = false;
  bool non_pure = false;
  int complex_dimension = 0;
  int poset_dimension = 0;
};

struct Certificate {
  bool applicable = false;          // false when iota is not reflexive
  bool certified = false;
  std::vector<FacetCertificate> facets;
  DichotomyReport dichotomy;        // filled when not applicable

  nlohmann::json to_json(const Poset& po) const {
    nlohmann::json j;
    j["reflexive"] = applicable;
    if (!applicable) {
      j["dichotomy"] = {{"dim_excess", dichotomy.dim_excess},
                        {"non_pure", dichotomy.non_pure},
                        {"complex_dimension", dichotomy.complex_dimension},
                        {"poset_dimension", dichotomy.poset_dimension}};
      return j;
    }
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& f : facets) {
      std::vector<std::string> chain_labels;
      for (int e : f.chain) chain_labels.push_back(po.label(e));
      rows.push_back({{"chain", chain_labels},
                      {"pieces", f.pieces},
                      {"volume_ok", f.volume_ok},
                      {"homology_point", f.homology_point},
                      {"total_volume", rational_str(f.total_volume)},
                      {"target_volume", rational_str(f.target_volume)}});
    }
    j["facets"] = rows;
    j["certified"] = certified;
    return j;
  }
};

namespace detail {

/// d x d determinant, exact, by fraction-free elimination on rationals.
inline Rational det(std::vector<std::vector<Rational>> m) {
  const int n = static_cast<int>(m.size());
  Rational result = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (m[i][col] != 0) { piv = i; break; }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      result = -result;
    }
    result *= m[col][col];
    for (int i = col + 1; i < n; ++i) {
      Rational f = m[i][col] / m[col][col];
      for (int j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return result;
}

inline Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Coordinates of a multichain vertex inside the simplex on `chain`,
/// dropping the first barycentric coordinate.
inline std::vector<Rational> facet_coords(const Chain& chain, const Multichain& mc) {
  std::vector<Rational> x(chain.size() - 1, 0);
  const int r = static_cast<int>(mc.size());
  for (int e : mc) {
    auto it = std::lower_bound(chain.begin(), chain.end(), e);
    const auto pos = static_cast<size_t>(it - chain.begin());
    if (pos > 0) x[pos - 1] += Rational(1, r);
  }
  return x;
}

}  // namespace detail

/// Induced subcomplex of the clique complex on the multichains supported
/// inside the given chain.
inline SimplicialComplex restricted_complex(const Poset& po, const MultichainGraph& g,
                                            const Chain& chain) {
  std::vector<int> keep;
  std::set<int> chain_set(chain.begin(), chain.end());
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    bool inside = true;
    for (int e : g.vertices[i])
      if (!chain_set.count(e)) { inside = false; break; }
    if (inside) keep.push_back(static_cast<int>(i));
  }
  MultichainGraph sub;
  for (int v : keep) sub.vertices.push_back(g.vertices[v]);
  std::map<int, int> remap;
  for (size_t i = 0; i < keep.size(); ++i) remap[keep[i]] = static_cast<int>(i);
  for (const auto& [i, j] : g.edges)
    if (remap.count(i) && remap.count(j)) sub.edges.insert({remap[i], remap[j]});
  return clique_complex(po, sub);
}

/// Dimension/purity dichotomy for non-reflexive iota on a chain poset.
inline DichotomyReport dichotomy_report(const Poset& po, int r, const IndexMap& iota) {
  if (is_reflexive_map(iota))
    throw std::invalid_argument("dichotomy_report requires a non-reflexive iota");
  for (int a = 0; a < po.size(); ++a)
    for (int b = 0; b < po.size(); ++b)
      if (!po.comparable(a, b))
        throw std::invalid_argument("dichotomy_report requires a chain poset");
  const auto k = clique_complex(po, r, iota);
  DichotomyReport rep;
  rep.complex_dimension = k.dimension();
  rep.poset_dimension = po.longest_chain_length();
  rep.dim_excess = rep.complex_dimension > rep.poset_dimension;
  rep.non_pure = !k.is_pure();
  return rep;
}

/// Per-maximal-chain subdivision certificate: nondegenerate pieces whose
/// exact volumes sum to the facet volume, injective vertex placement, and
/// homology of a point on the restricted subcomplex.
inline Certificate subdivision_certificate(const Poset& po, int r, const IndexMap& iota,
                                           size_t max_faces = 100000) {
  Certificate cert;
  if (!is_reflexive_map(iota)) {
    cert.dichotomy = dichotomy_report(po, r, iota);
    return cert;
  }
  cert.applicable = true;
  const auto g = multichain_graph(po, r, iota);
  bool all_ok = true;
  for (const auto& chain : po.maximal_chains()) {
    FacetCertificate fc;
    fc.chain = chain;
    const int d = static_cast<int>(chain.size()) - 1;
    const auto sub = restricted_complex(po, g, chain);

    // vertex placement must be injective on the restricted vertex set
    std::set<std::vector<Rational>> placed;
    {
      std::set<int> chain_set(chain.begin(), chain.end());
      for (const auto& mc : g.vertices) {
        bool inside = true;
        for (int e : mc)
          if (!chain_set.count(e)) { inside = false; break; }
        if (!inside) continue;
        if (!placed.insert(detail::facet_coords(chain, mc)).second)
          fc.injective = false;
      }
    }

    fc.target_volume = 1 / detail::factorial(d);
    const auto faces = sub.faces_by_dimension(max_faces);
    std::set<int> chain_set(chain.begin(), chain.end());
    std::vector<Multichain> verts;
    for (const auto& mc : g.vertices) {
      bool inside = true;
      for (int e : mc)
        if (!chain_set.count(e)) inside = false;
      if (inside) verts.push_back(mc);
    }
    if (static_cast<int>(faces.size()) - 1 >= d) {
      for (const auto& face : faces[d]) {
        std::vector<std::vector<Rational>> rows;
        const auto base = detail::facet_coords(chain, verts[face[0]]);
        for (size_t i = 1; i < face.size(); ++i) {
          auto x = detail::facet_coords(chain, verts[face[i]]);
          for (size_t j = 0; j < x.size(); ++j) x[j] -= base[j];
          rows.push_back(std::move(x));
        }
        Rational vol = d == 0 ? Rational(1) : abs(detail::det(rows)) / detail::factorial(d);
        if (vol == 0) fc.nondegenerate = false;
        fc.total_volume += vol;
        ++fc.pieces;
      }
    }
    fc.volume_ok = (fc.total_volume == fc.target_volume);
    fc.homology_point = is_homology_point(sub, max_faces);
    all_ok = all_ok && fc.certified();
    cert.facets.push_back(std::move(fc));
  }
  cert.certified = all_ok;
  return cert;
}

/// The alpha values and element grid from the interior-point preimage
/// construction; columns are the multichains of the preimage support.
struct PreimageTableau {
  std::vector<Rational> alphas;            // strictly increasing, last = 1
  std::vector<std::vector<int>> grid;      // r rows, m columns of elements
  std::vector<Rational> weights;           // alpha_j - alpha_{j-1}

  Multichain column(int j) const {
    Multichain mc;
    for (const auto& row : grid) mc.push_back(row[j]);
    return mc;
  }
  int columns() const { return static_cast<int>(alphas.size()); }
};

/// Formal convex combination of multichains; a point of the realization.
struct ComplexPoint {
  std::vector<Multichain> support;
  std::vector<Rational> weights;
};

/// |f| applied to a formal point: averages each multichain and mixes.
inline BarycentricPoint apply_f(const Poset& po, const ComplexPoint& x) {
  std::map<int, Rational> acc;
  for (size_t i = 0; i < x.support.size(); ++i) {
    const auto v = vertex_placement(x.support[i]);
    for (size_t j = 0; j < v.chain.size(); ++j)
      acc[v.chain[j]] += x.weights[i] * v.coords[j];
  }
  BarycentricPoint z;
  for (const auto& [e, c] : acc)
    if (c != 0) {
      z.chain.push_back(e);
      z.coords.push_back(c);
    }
  if (!po.is_chain_set(z.chain))
    throw std::logic_error("image support is not a chain");
  return z;
}

namespace detail {
inline int ceil_int(const Rational& q) {
  using boost::multiprecision::cpp_int;
  cpp_int num = numerator(q), den = denominator(q);
  cpp_int c = (num + den - 1) / den;
  return static_cast<int>(c);
}
}  // namespace detail

/// Interior-point preimage under |f| for reflexive iota with iota(1) = 1:
/// computes the alpha values, fills the element grid by the two-case
/// min-formula and returns the tableau together with the preimage point.
inline std::pair<PreimageTableau, ComplexPoint> preimage(const Poset& po,
                                                         const BarycentricPoint& z,
                                                         const IndexMap& iota_in) {
  z.validate();
  const IndexMap iota = normalized(iota_in);
  if (!is_reflexive_map(iota))
    throw std::invalid_argument("preimage requires a reflexive iota");
  for (const auto& c : z.coords)
    if (c == 0)
      throw std::invalid_argument("preimage requires strictly positive coordinates");
  if (!po.is_chain_set(z.chain))
    throw std::invalid_argument("point support is not a chain");

  const int r = iota.r();
  const int n = static_cast<int>(z.chain.size());
  // S_u = r * (lambda_1 + ... + lambda_u)
  std::vector<Rational> S(n + 1, 0);
  for (int u = 1; u <= n; ++u) S[u] = S[u - 1] + r * z.coords[u - 1];

  std::set<Rational> alpha_set;
  for (int u = 1; u <= n; ++u) {
    const int i = detail::ceil_int(S[u]);
    Rational alpha;
    if (iota(i) == 2 * i - 1) {
      alpha = S[u] - (i - 1);
    } else {  // iota(i) == 2i
      alpha = (S[u] == i) ? Rational(1) : Rational(i) - S[u];
    }
    alpha_set.insert(alpha);
  }
  PreimageTableau tab;
  tab.alphas.assign(alpha_set.begin(), alpha_set.end());
  const int m = static_cast<int>(tab.alphas.size());
  tab.grid.assign(r, std::vector<int>(m, -1));
  for (int i = 1; i <= r; ++i) {
    for (int j = 0; j < m; ++j) {
      const Rational& aj = tab.alphas[j];
      int k = -1;
      if (iota(i) == 2 * i - 1) {
        for (int kp = 1; kp <= n; ++kp)
          if (S[kp] >= Rational(i - 1) + aj) { k = kp; break; }
      } else {
        for (int kp = 1; kp <= n; ++kp)
          if (Rational(i) - S[kp] < aj) { k = kp; break; }
      }
      if (k < 0) throw std::logic_error("preimage grid formula found no index");
      tab.grid[i - 1][j] = z.chain[k - 1];
    }
  }
  Rational prev = 0;
  for (int j = 0; j < m; ++j) {
    tab.weights.push_back(tab.alphas[j] - prev);
    prev = tab.alphas[j];
  }
  ComplexPoint x;
  for (int j = 0; j < m; ++j) {
    x.support.push_back(tab.column(j));
    x.weights.push_back(tab.weights[j]);
  }
  return {tab, x};
}

}  // namespace multichains
