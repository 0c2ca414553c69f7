#pragma once

// Closure operators and poset maps behind the homotopy-equivalence claims:
// the block-pattern closure on fibers, the constant-multichain closure for
// the componentwise order, the support map g, fiber complexes and the
// reduction of closed fibers to the zig-zag order.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "multichains/graph.hpp"
#include "multichains/multichain.hpp"

namespace multichains {

/// A finite partial order on a carrier of multichains, with the axioms
/// verified at construction.
class FiniteOrder {
 public:
  FiniteOrder(std::vector<Multichain> carrier,
              const std::function<bool(const Multichain&, const Multichain&)>& leq)
      : carrier_(std::move(carrier)) {
    const int n = size();
    leq_.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        leq_[i][j] = leq(carrier_[i], carrier_[j]) ? 1 : 0;
    for (int a = 0; a < n; ++a) {
      if (!leq_[a][a]) throw std::invalid_argument("relation not reflexive");
      for (int b = 0; b < n; ++b) {
        if (a != b && leq_[a][b] && leq_[b][a])
          throw std::invalid_argument("relation not antisymmetric");
        for (int c = 0; c < n; ++c)
          if (leq_[a][b] && leq_[b][c] && !leq_[a][c])
            throw std::invalid_argument("relation not transitive");
      }
    }
  }

  int size() const { return static_cast<int>(carrier_.size()); }
  const std::vector<Multichain>& carrier() const { return carrier_; }
  bool leq(int i, int j) const { return leq_[i][j] != 0; }

  int index_of(const Multichain& mc) const {
    auto it = std::find(carrier_.begin(), carrier_.end(), mc);
    if (it == carrier_.end()) throw std::invalid_argument("element not in carrier");
    return static_cast<int>(it - carrier_.begin());
  }

  /// Order complex = clique complex of the comparability graph.
  SimplicialComplex order_complex(const Poset& po) const {
    MultichainGraph g;
    g.vertices = carrier_;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (leq_[i][j] || leq_[j][i]) g.edges.insert({i, j});
    return clique_complex(po, g);
  }

 private:
  std::vector<Multichain> carrier_;
  std::vector<std::vector<char>> leq_;
};

struct ClosureReport {
  bool extensive = true;
  bool idempotent = true;
  bool monotone = true;
  std::vector<Multichain> image;  // fixed points

  bool is_closure() const { return extensive && idempotent && monotone; }

  nlohmann::json to_json(const Poset& po) const {
    nlohmann::json j;
    j["extensive"] = extensive;
    j["idempotent"] = idempotent;
    j["monotone"] = monotone;
    std::vector<std::string> img;
    for (const auto& mc : image) img.push_back(multichain_label(po, mc));
    j["image"] = img;
    return j;
  }
};

/// Exhaustive closure-operator verification on a finite order.
inline ClosureReport check_closure(
    const std::function<Multichain(const Multichain&)>& op, const FiniteOrder& order) {
  ClosureReport rep;
  const int n = order.size();
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = order.index_of(op(order.carrier()[i]));
  for (int i = 0; i < n; ++i) {
    if (!order.leq(i, img[i])) rep.extensive = false;
    if (img[img[i]] != img[i]) rep.idempotent = false;
    for (int j = 0; j < n; ++j)
      if (order.leq(i, j) && !order.leq(img[i], img[j])) rep.monotone = false;
  }
  std::set<int> fixed;
  for (int i = 0; i < n; ++i)
    if (img[i] == i) fixed.insert(i);
  for (int i : fixed) rep.image.push_back(order.carrier()[i]);
  return rep;
}

/// The block-pattern closure from the fiber-contractibility argument:
/// b_1 copies of p_{B_1}, then per t the k_t copies of p_{B_t + 1} and
/// m_t copies of p_{B_{t+1}}, where C_t = B_t + k_t and B_{t+1} = C_t + m_t
/// on partial block sums.  Requires condition (bc).
inline Multichain closure_cl(const Multichain& p, const IndexMap& iota_in) {
  const IndexMap iota = normalized(iota_in);
  if (!is_transitive_map(iota))
    throw std::invalid_argument("closure_cl requires a transitive iota (condition bc)");
  const int r = iota.r();
  if (static_cast<int>(p.size()) != r)
    throw std::invalid_argument("multichain length mismatch");
  const int ell = iota.num_b_blocks();
  Multichain out;
  auto push = [&](int elem, int copies) {
    if (copies < 0) throw std::logic_error("negative repetition count");
    for (int c = 0; c < copies; ++c) out.push_back(elem);
  };
  push(p[iota.b_sum(1) - 1], iota.b()[0]);
  for (int t = 1; t <= ell - 1; ++t) {
    const int k_t = iota.c_sum(t) - iota.b_sum(t);
    const int m_t = iota.b_sum(t + 1) - iota.c_sum(t);
    push(p[iota.b_sum(t)], k_t);       // p_{B_t + 1}
    push(p[iota.b_sum(t + 1) - 1], m_t);  // p_{B_{t+1}}
  }
  if (static_cast<int>(out.size()) != r)
    throw std::logic_error("closure output has wrong length");
  return out;
}

/// Constant multichain at the top entry; the closure for the
/// componentwise order.
inline Multichain muhle_closure(const Multichain& p) {
  return Multichain(p.size(), p.back());
}

/// Union of the entries of a chain of multichains, as a chain of P.
/// Monotone as a map of face posets when the input is a relation chain.
inline Chain support_map_g(const Poset& po, const std::vector<Multichain>& rel_chain) {
  std::set<int> elems;
  for (const auto& mc : rel_chain) elems.insert(mc.begin(), mc.end());
  Chain c(elems.begin(), elems.end());
  if (!po.is_chain_set(c))
    throw std::logic_error("union of a relation chain is not a chain");
  return c;
}

/// Multichains of P supported in the target chain, ordered by <='_iota.
inline FiniteOrder fiber_order(const Poset& po, int r, const IndexMap& iota,
                               const Chain& target) {
  if (!is_transitive_map(iota))
    throw std::invalid_argument("fiber requires a transitive iota");
  std::set<int> tset(target.begin(), target.end());
  std::vector<Multichain> carrier;
  for (const auto& mc : enumerate_multichains(po, r)) {
    bool inside = true;
    for (int e : mc)
      if (!tset.count(e)) { inside = false; break; }
    if (inside) carrier.push_back(mc);
  }
  return FiniteOrder(carrier, [&](const Multichain& p, const Multichain& q) {
    return rel_leq_prime(po, iota, p, q);
  });
}

/// Order complex of the fiber of g over the target chain.
inline SimplicialComplex fiber_complex(const Poset& po, int r, const IndexMap& iota,
                                       const Chain& target) {
  return fiber_order(po, r, iota, target).order_complex(po);
}

struct QZero {
  int r0 = 0;
  IndexMap iota0;
  FiniteOrder order;
};

/// Zig-zag map on [r0]: iota0(t) = 2t for even t, 2t-1 for odd t.
inline IndexMap zigzag_map(int r0) {
  std::vector<int> vals;
  for (int t = 1; t <= r0; ++t) vals.push_back(t % 2 == 0 ? 2 * t : 2 * t - 1);
  return IndexMap(std::move(vals));
}

/// The reduced order Q_0 the closed fiber collapses to: r0 = 2l - 2 when
/// the last C partial sum meets the last B partial sum, else 2l - 1, with
/// the zig-zag map on [r0].
inline QZero q_zero_order(const Poset& po, const IndexMap& iota_in, const Chain& target) {
  const IndexMap iota = normalized(iota_in);
  if (!is_transitive_map(iota))
    throw std::invalid_argument("q_zero_order requires a transitive iota");
  const int ell = iota.num_b_blocks();
  const int r0 = (iota.c_sum(ell - 1) == iota.b_sum(ell)) ? 2 * ell - 2 : 2 * ell - 1;
  if (r0 < 1) throw std::logic_error("degenerate r0");
  IndexMap iota0 = zigzag_map(r0);
  std::set<int> tset(target.begin(), target.end());
  std::vector<Multichain> carrier;
  for (const auto& mc : enumerate_multichains(po, r0)) {
    bool inside = true;
    for (int e : mc)
      if (!tset.count(e)) { inside = false; break; }
    if (inside) carrier.push_back(mc);
  }
  FiniteOrder q0(carrier, [&](const Multichain& p, const Multichain& q) {
    return rel_leq_prime(po, iota0, p, q);
  });
  return QZero{r0, iota0, std::move(q0)};
}

/// The map h : cl(Q) -> Q_0.  Closed multichains are constant on the
/// pattern ranges (C_{t-1}, B_t] and (B_t, C_t] of positions; h reads one
/// representative entry per nonempty range, in order.  (On patterns whose
/// ranges all start within the first r0 positions this is plain
/// truncation.)
inline Multichain map_h(const Multichain& p, const IndexMap& iota_in) {
  const IndexMap iota = normalized(iota_in);
  const int ell = iota.num_b_blocks();
  Multichain out;
  for (int t = 1; t <= ell; ++t) {
    if (iota.c_sum(t - 1) < iota.b_sum(t)) out.push_back(p.at(iota.b_sum(t) - 1));
    if (iota.b_sum(t) < iota.c_sum(t)) out.push_back(p.at(iota.c_sum(t) - 1));
  }
  return out;
}

/// Pattern expansion h' : Q_0 -> cl(Q): entry j takes x_{2t-1} for
/// C_{t-1} < j <= B_t and x_{2t} for B_t < j <= C_t.
inline Multichain map_h_prime(const Multichain& x, const IndexMap& iota_in) {
  const IndexMap iota = normalized(iota_in);
  const int r = iota.r();
  const int ell = iota.num_b_blocks();
  Multichain out(r, -1);
  for (int t = 1; t <= ell; ++t) {
    for (int j = iota.c_sum(t - 1) + 1; j <= iota.b_sum(t); ++j)
      out[j - 1] = x.at(2 * t - 2);  // x_{2t-1}
    for (int j = iota.b_sum(t) + 1; j <= iota.c_sum(t); ++j)
      out[j - 1] = x.at(2 * t - 1);  // x_{2t}
  }
  for (int v : out)
    if (v < 0) throw std::logic_error("pattern expansion left a gap");
  return out;
}

}  // namespace multichains
