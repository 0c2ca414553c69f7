#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "corpus.hpp"
#include "multichains/subdivision.hpp"

using namespace multichains;

namespace {

BarycentricPoint point(Chain chain, std::vector<Rational> coords) {
  BarycentricPoint z;
  z.chain = std::move(chain);
  z.coords = std::move(coords);
  z.validate();
  return z;
}

/// Random point with strictly positive rational coordinates on a chain.
BarycentricPoint random_point(const Chain& chain, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(1, 12);
  std::vector<Rational> raw;
  Rational total = 0;
  for (size_t i = 0; i < chain.size(); ++i) {
    raw.push_back(Rational(num(rng), num(rng)));
    total += raw.back();
  }
  for (auto& c : raw) c /= total;
  return point(chain, raw);
}

}  // namespace

TEST_CASE("vertex placement averages the entries") {
  auto a = vertex_placement({0, 1});
  CHECK(a.chain == Chain{0, 1});
  CHECK(a.coords == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

  auto b = vertex_placement({0, 0, 1});
  CHECK(b.chain == Chain{0, 1});
  CHECK(b.coords == std::vector<Rational>{Rational(2, 3), Rational(1, 3)});

  auto c = vertex_placement({2, 2, 2});
  CHECK(c.chain == Chain{2});
  CHECK(c.coords == std::vector<Rational>{1});
}

TEST_CASE("barycentric point validation and sparse equality") {
  CHECK_THROWS_AS(point({0, 1}, {Rational(1, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(point({0, 1}, {Rational(1, 2), Rational(1, 3)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(point({0, 1}, {Rational(3, 2), Rational(-1, 2)}),
                  std::invalid_argument);
  // a zero coordinate is ignored in comparisons
  CHECK(point({0, 1, 2}, {Rational(1, 2), 0, Rational(1, 2)}) ==
        point({0, 2}, {Rational(1, 2), Rational(1, 2)}));
}

TEST_CASE("simplex support") {
  auto c3 = corpus::chain(3);
  CHECK(simplex_support(c3, {{0, 0}, {0, 2}}) == Chain{0, 2});
  auto a3 = corpus::antichain(3);
  CHECK_THROWS_AS(simplex_support(a3, {{0, 0}, {1, 1}}), std::logic_error);
}

TEST_CASE("subdivision certificates for the reflexive r=2 maps") {
  auto c3 = corpus::chain(3);
  for (auto vals : {std::vector<int>{1, 3}, std::vector<int>{1, 4}}) {
    auto cert = subdivision_certificate(c3, 2, IndexMap(vals));
    REQUIRE(cert.applicable);
    CHECK(cert.certified);
    REQUIRE(cert.facets.size() == 1);
    const auto& f = cert.facets[0];
    CHECK(f.pieces == 4);
    CHECK(f.total_volume == Rational(1, 2));
    CHECK(f.injective);
    CHECK(f.homology_point);
  }
}

TEST_CASE("certificates across the corpus for script-I maps") {
  for (const auto& p : corpus::all())
    for (int r = 2; r <= 3; ++r)
      for (const auto& io : enumerate_script_I(r)) {
        auto cert = subdivision_certificate(p, r, io);
        REQUIRE(cert.applicable);
        CHECK(cert.certified);
        // r^d pieces per facet of dimension d
        for (const auto& f : cert.facets) {
          long long expect = 1;
          for (size_t i = 1; i < f.chain.size(); ++i) expect *= r;
          CHECK(f.pieces == expect);
        }
      }
}

TEST_CASE("non-reflexive maps route to the dichotomy") {
  auto c3 = corpus::chain(3);
  auto cert = subdivision_certificate(c3, 3, IndexMap({1, 2, 4}));
  CHECK_FALSE(cert.applicable);
  CHECK_FALSE(cert.certified);
  CHECK(cert.dichotomy.dim_excess);
  CHECK(cert.dichotomy.non_pure);
  CHECK(cert.dichotomy.complex_dimension == 4);
  CHECK(cert.dichotomy.poset_dimension == 2);

  auto rep = dichotomy_report(corpus::chain(2), 2, IndexMap({1, 2}));
  CHECK(rep.dim_excess);
  CHECK(rep.complex_dimension == 2);
  CHECK(rep.poset_dimension == 1);

  CHECK_THROWS_AS(dichotomy_report(c3, 2, IndexMap({1, 3})), std::invalid_argument);
  CHECK_THROWS_AS(dichotomy_report(corpus::diamond(), 2, IndexMap({1, 2})),
                  std::invalid_argument);
}

TEST_CASE("dichotomy holds for every non-reflexive map on short chains") {
  for (int n = 2; n <= 3; ++n) {
    auto p = corpus::chain(n);
    for (int r = 2; r <= 3; ++r)
      for (const auto& io : enumerate_all_maps(r)) {
        if (is_reflexive_map(io)) continue;
        auto rep = dichotomy_report(p, r, io);
        CHECK((rep.dim_excess || rep.non_pure));
      }
  }
}

TEST_CASE("preimage of the barycenter of an edge") {
  auto c2 = corpus::chain(2);
  auto z = point({0, 1}, {Rational(1, 2), Rational(1, 2)});
  for (auto vals : {std::vector<int>{1, 3}, std::vector<int>{1, 4}}) {
    auto [tab, x] = preimage(c2, z, IndexMap(vals));
    REQUIRE(tab.columns() == 1);
    CHECK(tab.column(0) == Multichain{0, 1});
    CHECK(tab.weights == std::vector<Rational>{1});
    CHECK(apply_f(c2, x) == z);
  }
}

TEST_CASE("preimage with two columns") {
  auto c2 = corpus::chain(2);
  auto z = point({0, 1}, {Rational(1, 4), Rational(3, 4)});
  auto [tab, x] = preimage(c2, z, IndexMap({1, 3}));
  REQUIRE(tab.columns() == 2);
  CHECK(tab.alphas == std::vector<Rational>{Rational(1, 2), 1});
  CHECK(tab.column(0) == Multichain{0, 1});
  CHECK(tab.column(1) == Multichain{1, 1});
  CHECK(tab.weights == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(apply_f(c2, x) == z);
}

TEST_CASE("preimage of a vertex point") {
  auto c2 = corpus::chain(2);
  auto z = point({1}, {1});
  auto [tab, x] = preimage(c2, z, IndexMap({1, 4}));
  REQUIRE(tab.columns() == 1);
  CHECK(tab.column(0) == Multichain{1, 1});
  CHECK(apply_f(c2, x) == z);
}

TEST_CASE("preimage rejects bad input") {
  auto c2 = corpus::chain(2);
  auto z = point({0, 1}, {Rational(1, 2), Rational(1, 2)});
  CHECK_THROWS_AS(preimage(c2, z, IndexMap({1, 2})), std::invalid_argument);
  auto zero = point({0, 1}, {1, 0});
  CHECK_THROWS_AS(preimage(c2, zero, IndexMap({1, 3})), std::invalid_argument);
  auto a2 = corpus::antichain(2);
  CHECK_THROWS_AS(preimage(a2, z, IndexMap({1, 3})), std::invalid_argument);
}

TEST_CASE("seeded round trips with tableau invariants") {
  std::mt19937 rng(20240817);
  for (int n = 2; n <= 3; ++n) {
    auto p = corpus::chain(n);
    Chain full(static_cast<size_t>(n));
    std::iota(full.begin(), full.end(), 0);
    for (int r = 2; r <= 3; ++r)
      for (const auto& io : enumerate_script_I(r))
        for (int trial = 0; trial < 50; ++trial) {
          auto z = random_point(full, rng);
          auto [tab, x] = preimage(p, z, io);
          CHECK(apply_f(p, x) == z);
          // weights are positive and sum to 1
          Rational sum = 0;
          for (const auto& w : tab.weights) {
            CHECK(w > 0);
            sum += w;
          }
          CHECK(sum == 1);
          // distinct columns, pairwise comparable in the relation: the
          // support spans a simplex of the complex
          for (int j = 0; j + 1 < tab.columns(); ++j)
            for (int k = j + 1; k < tab.columns(); ++k) {
              CHECK(tab.column(j) != tab.column(k));
              CHECK((rel_leq(p, io, tab.column(j), tab.column(k)) ||
                     rel_leq(p, io, tab.column(k), tab.column(j))));
            }
          // each grid row is monotone in j, direction set by the parity
          // of iota at that row
          for (int i = 1; i <= r; ++i)
            for (int j = 0; j + 1 < tab.columns(); ++j) {
              if (io(i) == 2 * i - 1)
                CHECK(tab.grid[i - 1][j] <= tab.grid[i - 1][j + 1]);
              else
                CHECK(tab.grid[i - 1][j] >= tab.grid[i - 1][j + 1]);
            }
        }
  }
}
