#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <boost/multiprecision/cpp_int.hpp>

#include "corpus.hpp"
#include "multichains/graph.hpp"
#include "multichains/homology.hpp"

using namespace multichains;

namespace {

// Test-side rank oracle: Gaussian elimination over the rationals, no Smith
// normal form involved.
long long rational_rank(const IntegerMatrix& m) {
  using Rat = boost::multiprecision::cpp_rational;
  std::vector<std::vector<Rat>> a(m.rows, std::vector<Rat>(m.cols));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) a[i][j] = Rat(m.at(i, j));
  long long rank = 0;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int i = row; i < m.rows; ++i)
      if (a[i][col] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[piv], a[row]);
    for (int i = row + 1; i < m.rows; ++i) {
      if (a[i][col] == 0) continue;
      Rat f = a[i][col] / a[row][col];
      for (int j = col; j < m.cols; ++j) a[i][j] -= f * a[row][j];
    }
    ++rank;
    ++row;
  }
  return rank;
}

SimplicialComplex hollow_triangle() {
  return SimplicialComplex({"a", "b", "c"}, {{0, 1}, {0, 2}, {1, 2}});
}

}  // namespace

TEST_CASE("boundary of a single edge") {
  SimplicialComplex edge({"a", "b"}, {{0, 1}});
  auto bd = boundary_matrices(edge);
  REQUIRE(bd.size() == 2);
  CHECK(bd[0].rows == 1);
  CHECK(bd[0].cols == 2);
  CHECK(bd[1].rows == 2);
  CHECK(bd[1].cols == 1);
  CHECK(bd[1].at(0, 0) == -1);
  CHECK(bd[1].at(1, 0) == 1);
  CHECK(bd[0].multiply(bd[1]).is_zero());
}

TEST_CASE("boundary squared vanishes on the corpus complexes") {
  for (const auto& p : corpus::all())
    for (int r = 1; r <= 3; ++r)
      for (const auto& io : enumerate_script_I(r)) {
        auto bd = boundary_matrices(clique_complex(p, r, io));
        for (size_t k = 1; k < bd.size(); ++k)
          CHECK(bd[k - 1].multiply(bd[k]).is_zero());
      }
}

TEST_CASE("smith normal form on fixed matrices") {
  IntegerMatrix m(2, 2);
  m.at(0, 0) = 2;
  m.at(1, 1) = 3;
  auto s = smith_normal_form(m);
  CHECK(s.invariant_factors == std::vector<BigInt>{1, 6});
  CHECK(s.rank == 2);

  IntegerMatrix z(3, 2);
  auto sz = smith_normal_form(z);
  CHECK(sz.rank == 0);
  CHECK(sz.invariant_factors.empty());

  IntegerMatrix id(3, 3);
  for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
  auto si = smith_normal_form(id);
  CHECK(si.invariant_factors == std::vector<BigInt>{1, 1, 1});

  // divisibility chain must hold for every input
  IntegerMatrix w(2, 3);
  w.at(0, 0) = 4; w.at(0, 1) = 6; w.at(0, 2) = 10;
  w.at(1, 0) = 6; w.at(1, 1) = 4; w.at(1, 2) = 2;
  auto sw = smith_normal_form(w);
  REQUIRE(sw.rank == 2);
  CHECK(sw.invariant_factors[1] % sw.invariant_factors[0] == 0);
}

TEST_CASE("homology of model spaces") {
  auto full = corpus::chain(4).order_complex();  // solid tetrahedron
  CHECK(is_homology_point(full));

  auto circle = hollow_triangle();
  auto h = reduced_homology(circle);
  CHECK(h.betti == std::vector<long long>{0, 1});
  CHECK_FALSE(h.is_point());
  for (const auto& t : h.torsion) CHECK(t.empty());

  auto two_points = corpus::antichain(2).order_complex();
  CHECK(reduced_homology(two_points).betti == std::vector<long long>{1});

  SimplicialComplex vertex({"a"}, {{0}});
  CHECK(is_homology_point(vertex));
}

TEST_CASE("homology of the r=3 counterexample complex") {
  auto k = clique_complex(corpus::chain(3), 3, IndexMap({1, 2, 4}));
  auto h = reduced_homology(k);
  CHECK(h.betti == std::vector<long long>{0, 1, 0, 0, 0});
  for (const auto& t : h.torsion) CHECK(t.empty());
}

TEST_CASE("homology ball predicate") {
  CHECK(is_homology_ball(clique_complex(corpus::chain(3), 2, IndexMap({1, 3})), 2));
  CHECK_FALSE(is_homology_ball(hollow_triangle(), 1));
  CHECK_FALSE(is_homology_ball(corpus::chain(3).order_complex(), 1));  // wrong dim
}

TEST_CASE("Euler-Poincare consistency") {
  for (const auto& p : corpus::all())
    for (int r = 1; r <= 3; ++r)
      for (const auto& io : enumerate_script_I(r)) {
        auto k = clique_complex(p, r, io);
        auto h = reduced_homology(k);
        long long alt = 0, sign = 1;
        for (long long b : h.betti) {
          alt += sign * b;
          sign = -sign;
        }
        // reduced: chi(K) - 1 equals the alternating betti sum
        CHECK(k.euler_characteristic() - 1 == alt);
      }
}

TEST_CASE("homology is invariant under vertex relabeling") {
  SimplicialComplex a({"a", "b", "c"}, {{0, 1}, {0, 2}, {1, 2}});
  SimplicialComplex b({"x", "y", "z"}, {{0, 2}, {1, 2}, {0, 1}});
  CHECK(reduced_homology(a) == reduced_homology(b));
}

TEST_CASE("betti numbers agree with a rational rank oracle") {
  std::vector<SimplicialComplex> cases = {
      hollow_triangle(), corpus::chain(4).order_complex(),
      corpus::diamond().order_complex(), corpus::bowtie().order_complex(),
      clique_complex(corpus::chain(3), 3, IndexMap({1, 2, 4})),
      clique_complex(corpus::chain(3), 2, IndexMap({1, 4}))};
  for (const auto& k : cases) {
    auto bd = boundary_matrices(k);
    auto h = reduced_homology(k);
    REQUIRE(h.betti.size() == bd.size());
    const int dim = static_cast<int>(bd.size()) - 1;
    for (int d = 0; d <= dim; ++d) {
      long long up = d + 1 <= dim ? rational_rank(bd[d + 1]) : 0;
      CHECK(h.betti[d] == bd[d].cols - rational_rank(bd[d]) - up);
    }
  }
}

TEST_CASE("homology result equality trims trailing zeros") {
  HomologyResult a, b;
  a.betti = {0, 1};
  a.torsion = {{}, {}};
  b.betti = {0, 1, 0};
  b.torsion = {{}, {}, {}};
  CHECK(a == b);
  b.betti[2] = 1;
  CHECK_FALSE(a == b);
}

TEST_CASE("json serialization of homology") {
  auto h = reduced_homology(hollow_triangle());
  auto j = h.to_json();
  CHECK(j["betti"] == std::vector<long long>{0, 1});
  CHECK(j["reduced"] == true);
  CHECK(j["torsion"].is_array());
}

TEST_CASE("face guard propagates") {
  auto k = corpus::chain(4).order_complex();
  CHECK_THROWS_AS(reduced_homology(k, /*max_faces=*/2), std::length_error);
}
