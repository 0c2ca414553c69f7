#pragma once

// r-multichains of a finite poset, the index maps iota : [r] -> [2r] with
// their block decomposition, and the relation families they induce on P_r.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "multichains/poset.hpp"

namespace multichains {

/// Weakly increasing r-tuple of element indices of a fixed poset.
using Multichain = std::vector<int>;

inline std::string multichain_label(const Poset& p, const Multichain& mc) {
  bool single = true;
  for (int e : mc)
    if (p.label(e).size() != 1) single = false;
  std::ostringstream out;
  if (single) {
    for (int e : mc) out << p.label(e);
  } else {
    out << '(';
    for (size_t i = 0; i < mc.size(); ++i) {
      if (i) out << ',';
      out << p.label(mc[i]);
    }
    out << ')';
  }
  return out.str();
}

/// All r-multichains in canonical lexicographic order of index tuples.
inline std::vector<Multichain> enumerate_multichains(const Poset& p, int r) {
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  std::vector<Multichain> out;
  Multichain cur;
  auto rec = [&](auto&& self, int last) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v < p.size(); ++v) {
      if (last >= 0 && !p.leq(last, v)) continue;
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, -1);
  return out;
}

/// A strictly increasing map iota : [r] -> [2r] together with the block
/// decomposition of its image (B-blocks of sizes b_i) and of the image of
/// its complement map iota* (C-blocks of sizes c_i).
class IndexMap {
 public:
  /// values are iota(1), ..., iota(r) (1-based numbers).
  explicit IndexMap(std::vector<int> values) : values_(std::move(values)) {
    const int r = static_cast<int>(values_.size());
    if (r < 1) throw std::invalid_argument("iota must be nonempty");
    for (int t = 0; t < r; ++t) {
      if (values_[t] < 1 || values_[t] > 2 * r)
        throw std::invalid_argument("iota value out of [2r]");
      if (t > 0 && values_[t] <= values_[t - 1])
        throw std::invalid_argument("iota must be strictly increasing");
    }
    compute_blocks();
  }

  static IndexMap parse(const std::string& csv) {
    std::vector<int> vals;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) vals.push_back(std::stoi(tok));
    return IndexMap(std::move(vals));
  }

  int r() const { return static_cast<int>(values_.size()); }
  /// iota(t), 1-based t.
  int operator()(int t) const { return values_.at(t - 1); }
  const std::vector<int>& values() const { return values_; }

  /// The map iota* whose image is the complement of image(iota) in [2r].
  IndexMap dual() const {
    std::vector<char> in_image(2 * r() + 1, 0);
    for (int v : values_) in_image[v] = 1;
    std::vector<int> comp;
    for (int v = 1; v <= 2 * r(); ++v)
      if (!in_image[v]) comp.push_back(v);
    return IndexMap(std::move(comp));
  }

  int num_b_blocks() const { return static_cast<int>(b_.size()); }   // ell
  int num_c_blocks() const { return static_cast<int>(c_.size()); }   // ell'
  const std::vector<int>& b() const { return b_; }
  const std::vector<int>& c() const { return c_; }
  /// b_1 + ... + b_t  (t may be 0)
  int b_sum(int t) const { return std::accumulate(b_.begin(), b_.begin() + t, 0); }
  /// c_1 + ... + c_t, where c_t = 0 beyond the last C-block
  int c_sum(int t) const {
    t = std::min<int>(t, static_cast<int>(c_.size()));
    return std::accumulate(c_.begin(), c_.begin() + t, 0);
  }
  /// 1-based index of the B-block containing iota(t).
  int block_of(int t) const { return block_of_.at(t - 1); }

  std::string to_string() const {
    std::ostringstream out;
    for (size_t i = 0; i < values_.size(); ++i) {
      if (i) out << ',';
      out << values_[i];
    }
    return out.str();
  }

  bool operator==(const IndexMap& o) const { return values_ == o.values_; }

 private:
  void compute_blocks() {
    block_of_.assign(values_.size(), 0);
    for (size_t t = 0; t < values_.size(); ++t) {
      if (t == 0 || values_[t] != values_[t - 1] + 1) b_.push_back(0);
      ++b_.back();
      block_of_[t] = static_cast<int>(b_.size());
    }
    auto comp_vals = [&] {
      std::vector<char> in_image(2 * r() + 1, 0);
      for (int v : values_) in_image[v] = 1;
      std::vector<int> comp;
      for (int v = 1; v <= 2 * r(); ++v)
        if (!in_image[v]) comp.push_back(v);
      return comp;
    }();
    for (size_t t = 0; t < comp_vals.size(); ++t) {
      if (t == 0 || comp_vals[t] != comp_vals[t - 1] + 1) c_.push_back(0);
      ++c_.back();
    }
  }

  std::vector<int> values_;
  std::vector<int> b_, c_;
  std::vector<int> block_of_;
};

/// Per-block toggle between the iota clauses (0) and componentwise >= (1).
class KappaMap {
 public:
  explicit KappaMap(std::vector<int> assignments) : values_(std::move(assignments)) {
    for (int v : values_)
      if (v != 0 && v != 1) throw std::invalid_argument("kappa values must be 0 or 1");
  }
  static KappaMap parse(const std::string& csv) {
    std::vector<int> vals;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) vals.push_back(std::stoi(tok));
    return KappaMap(std::move(vals));
  }
  int size() const { return static_cast<int>(values_.size()); }
  /// kappa(i), 1-based block index.
  int operator()(int i) const { return values_.at(i - 1); }

 private:
  std::vector<int> values_;
};

inline void require_same_r(const IndexMap& iota, const Multichain& p, const Multichain& q) {
  if (static_cast<int>(p.size()) != iota.r() || static_cast<int>(q.size()) != iota.r())
    throw std::invalid_argument("multichain length does not match r of iota");
}

/// p <=_iota q : for all t, p_t >= q_s when s <= iota(t)-t and p_t <= q_s
/// when s > iota(t)-t.
inline bool rel_leq(const Poset& po, const IndexMap& iota,
                    const Multichain& p, const Multichain& q) {
  require_same_r(iota, p, q);
  const int r = iota.r();
  for (int t = 1; t <= r; ++t) {
    const int split = iota(t) - t;
    for (int s = 1; s <= r; ++s) {
      if (s <= split) {
        if (!po.leq(q[s - 1], p[t - 1])) return false;
      } else {
        if (!po.leq(p[t - 1], q[s - 1])) return false;
      }
    }
  }
  return true;
}

/// Block-interleaving characterization of <=_iota: the 2r-chain
/// p-block, q-block, p-block, ... exists in P.  Defined via the block data
/// for iota(1) = 1; other iota are evaluated through the dual.
inline bool rel_leq_interleaved(const Poset& po, const IndexMap& iota,
                                const Multichain& p, const Multichain& q) {
  require_same_r(iota, p, q);
  if (iota(1) != 1) return rel_leq_interleaved(po, iota.dual(), q, p);
  const int ell = iota.num_b_blocks();
  const int ellp = iota.num_c_blocks();
  // junctions p_{B_i} <= q_{C_{i-1}+1} and q_{C_i} <= p_{B_i + 1}
  for (int i = 1; i <= ell; ++i) {
    if (i <= ellp) {
      if (!po.leq(p[iota.b_sum(i) - 1], q[iota.c_sum(i - 1)])) return false;
    }
    if (i < ell) {
      if (!po.leq(q[iota.c_sum(i) - 1], p[iota.b_sum(i)])) return false;
    }
  }
  return true;
}

/// p <='_iota q : p = q or p <=_iota q.
inline bool rel_leq_prime(const Poset& po, const IndexMap& iota,
                          const Multichain& p, const Multichain& q) {
  require_same_r(iota, p, q);
  return p == q || rel_leq(po, iota, p, q);
}

/// Componentwise order on P_r.
inline bool rel_muhle(const Poset& po, const Multichain& p, const Multichain& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("multichain length mismatch");
  for (size_t i = 0; i < p.size(); ++i)
    if (!po.leq(p[i], q[i])) return false;
  return true;
}

/// p <=_{iota,kappa} q : kappa = 0 blocks use the iota clauses, kappa = 1
/// blocks require p_t >= q_t for the t of that block.
inline bool rel_general(const Poset& po, const IndexMap& iota, const KappaMap& kappa,
                        const Multichain& p, const Multichain& q) {
  require_same_r(iota, p, q);
  if (kappa.size() != iota.num_b_blocks())
    throw std::invalid_argument("kappa length does not match block count of iota");
  const int r = iota.r();
  for (int t = 1; t <= r; ++t) {
    const int blk = iota.block_of(t);
    if (kappa(blk) == 1) {
      if (!po.leq(q[t - 1], p[t - 1])) return false;
      continue;
    }
    const int split = iota(t) - t;
    for (int s = 1; s <= r; ++s) {
      if (s <= split) {
        if (!po.leq(q[s - 1], p[t - 1])) return false;
      } else {
        if (!po.leq(p[t - 1], q[s - 1])) return false;
      }
    }
  }
  return true;
}

/// Classification predicates.  For iota(1) != 1 the documented symmetry is
/// removed by passing to the dual map first.
inline IndexMap normalized(const IndexMap& iota) {
  return iota(1) == 1 ? iota : iota.dual();
}

inline bool is_reflexive_map(const IndexMap& iota_in) {
  const IndexMap iota = normalized(iota_in);
  for (int t = 1; t <= iota.r(); ++t)
    if (iota(t) != 2 * t - 1 && iota(t) != 2 * t) return false;
  return true;
}

/// Condition (bc): B_1 < C_1 < B_2 < C_2 < ... < B_{l-1} < C_{l-1} <= B_l <= C_l
/// on partial sums of the block sizes.
inline bool is_transitive_map(const IndexMap& iota_in) {
  const IndexMap iota = normalized(iota_in);
  const int ell = iota.num_b_blocks();
  for (int t = 1; t <= ell - 1; ++t) {
    const bool last = (t == ell - 1);
    if (last) {
      if (!(iota.b_sum(t) < iota.c_sum(t))) return false;
      if (!(iota.c_sum(t) <= iota.b_sum(t + 1))) return false;
    } else {
      if (!(iota.b_sum(t) < iota.c_sum(t))) return false;
      if (!(iota.c_sum(t) < iota.b_sum(t + 1))) return false;
    }
  }
  return iota.b_sum(ell) <= iota.c_sum(ell);
}

inline bool is_partial_order_map(const IndexMap& iota_in) {
  const IndexMap iota = normalized(iota_in);
  if (iota(1) != 1) return false;
  for (int t = 2; t <= iota.r(); ++t) {
    const int want = (t % 2 == 0) ? 2 * t : 2 * t - 1;
    if (iota(t) != want) return false;
  }
  return true;
}

/// The 2^{r-1} maps with iota(1) = 1 and iota(t) in {2t-1, 2t}; exactly the
/// reflexive ones up to duality.
inline std::vector<IndexMap> enumerate_script_I(int r) {
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  std::vector<IndexMap> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (r - 1)); ++mask) {
    std::vector<int> vals{1};
    for (int t = 2; t <= r; ++t)
      vals.push_back((mask >> (t - 2)) & 1 ? 2 * t : 2 * t - 1);
    out.emplace_back(std::move(vals));
  }
  return out;
}

/// All strictly increasing maps [r] -> [2r] with iota(1) = 1.
inline std::vector<IndexMap> enumerate_all_maps(int r) {
  std::vector<IndexMap> out;
  std::vector<int> vals{1};
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(vals.size()) == r) {
      out.emplace_back(vals);
      return;
    }
    for (int v = vals.back() + 1; v <= 2 * r; ++v) {
      vals.push_back(v);
      self(self);
      vals.pop_back();
    }
  };
  rec(rec);
  return out;
}

struct AxiomReport {
  bool reflexive = true;
  bool antisymmetric = true;
  bool transitive = true;
};

/// Brute-force axiom verifier for <=_iota on P_r.  Refuses (rather than
/// truncates) when the transitivity triple count exceeds the guard.
inline AxiomReport oracle_check_axioms(const Poset& po, int r, const IndexMap& iota,
                                       std::uint64_t max_triples = 100000000ull) {
  const auto pr = enumerate_multichains(po, r);
  const std::uint64_t n = pr.size();
  if (n * n * n > max_triples)
    throw std::length_error("oracle size guard exceeded: |P_r|^3 > max_triples");
  AxiomReport rep;
  for (const auto& p : pr)
    if (!rel_leq(po, iota, p, p)) { rep.reflexive = false; break; }
  for (const auto& p : pr) {
    for (const auto& q : pr) {
      if (p != q && rel_leq(po, iota, p, q) && rel_leq(po, iota, q, p)) {
        rep.antisymmetric = false;
        break;
      }
    }
    if (!rep.antisymmetric) break;
  }
  for (const auto& p : pr) {
    for (const auto& q : pr) {
      if (!rel_leq(po, iota, p, q)) continue;
      for (const auto& s : pr)
        if (rel_leq(po, iota, q, s) && !rel_leq(po, iota, p, s)) {
          rep.transitive = false;
          break;
        }
      if (!rep.transitive) break;
    }
    if (!rep.transitive) break;
  }
  return rep;
}

}  // namespace multichains
