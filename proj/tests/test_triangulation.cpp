#include <random>

#include "doctest.h"
#include "ehrhart/datasets.hpp"
#include "ehrhart/hstar.hpp"
#include "ehrhart/lattice_enum.hpp"
#include "ehrhart/triangulation.hpp"
#include "helpers.hpp"

using namespace ehrhart;
using testing::pt;

namespace {

Polytope unit_square() {
  return Polytope(2, {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})});
}

HStarVector hstar_counting(const Polytope& p) {
  std::vector<Int> counts{Int(1)};
  for (long k = 1; k <= static_cast<long>(p.ambient_dim()); ++k)
    counts.push_back(count_points(p, k));
  return hstar_from_counts(counts, p.ambient_dim());
}

}  // namespace

TEST_CASE("placing triangulation: simplex config gives the single simplex") {
  PointConfig c;
  c.dim = 3;
  c.points = {pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})};
  auto t = placing_triangulation(c, lex_order(c));
  REQUIRE(t.simplices.size() == 1);
  CHECK(t.simplices[0] == Simplex{0, 1, 2, 3});
  CHECK(is_valid_triangulation(c, t));
}

TEST_CASE("placing triangulation of the unit square: 2 triangles") {
  auto c = lattice_point_config(unit_square());
  auto t = placing_triangulation(c, lex_order(c));
  CHECK(t.simplices.size() == 2);
  CHECK(is_valid_triangulation(c, t));
  CHECK(is_regular(c, t));  // placing triangulations are regular
  CHECK(is_unimodular(c, t));
  CHECK(is_flag(c, t));
  CHECK(normalized_volume(c) == 2);
}

TEST_CASE("placing triangulation of the theorem2 config: 21 unimodular simplices") {
  auto c = lattice_point_config(theorem2_polytope());
  REQUIRE(c.points.size() == 15);
  auto t = placing_triangulation(c, lex_order(c));
  CHECK(t.simplices.size() == 21);  // = normalized volume, all unimodular
  CHECK(is_valid_triangulation(c, t));
  CHECK(is_unimodular(c, t));
  CHECK(is_regular(c, t));
}

TEST_CASE("validity certificate rejects broken complexes") {
  auto c = lattice_point_config(unit_square());
  // Two overlapping simplices sharing the diagonal incorrectly.
  Triangulation bad{{{0, 1, 2}, {0, 1, 3}}};
  CHECK_FALSE(is_valid_triangulation(c, bad));
  Triangulation missing{{{0, 1, 2}}};  // volume deficit
  CHECK_FALSE(is_valid_triangulation(c, missing));
}

TEST_CASE("hstar_halfopen: closed forms") {
  for (std::size_t d = 1; d <= 6; ++d) {
    std::vector<LatticePoint> pts{LatticePoint(d)};
    for (std::size_t j = 0; j < d; ++j) {
      LatticePoint e(d);
      e[j] = 1;
      pts.push_back(std::move(e));
    }
    Polytope simplex(d, std::move(pts));
    auto h = hstar_halfopen(simplex);
    CHECK(h.coeffs[0] == 1);
    for (std::size_t i = 1; i <= d; ++i) CHECK(h.coeffs[i] == 0);
  }
  auto sq = hstar_halfopen(unit_square());
  CHECK(sq.coeffs == IntVector{1, 1, 0});
}

TEST_CASE("hstar_halfopen handles non-unimodular simplices via box points") {
  // conv{0, 2e1, e2}: h* = (1, 1, 0); the placing triangulation has one
  // simplex of volume 2, so a nontrivial box point must be found.
  Polytope p(2, {pt({0, 0}), pt({2, 0}), pt({0, 1})});
  CHECK(hstar_halfopen(p).coeffs == IntVector{1, 1, 0});
  // Reeve simplex, lattice points = vertices, h* = (1, 0, 2, 0).
  Polytope reeve(3, {pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 3})});
  CHECK(hstar_halfopen(reeve).coeffs == IntVector{1, 0, 2, 0});
}

TEST_CASE("oracle equivalence: halfopen equals counting on bundled and random instances") {
  CHECK(hstar_halfopen(theorem1_polytope()) == hstar_counting(theorem1_polytope()));
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 12; ++trial) {
    Polytope p = testing::random_polytope(rng, 2 + trial % 3, 6, 2);
    CHECK(hstar_halfopen(p) == hstar_counting(p));
  }
}

TEST_CASE("all_spanning_simplices_unimodular") {
  auto sq = all_spanning_simplices_unimodular(unit_square());
  CHECK(sq.all_unimodular);
  Polytope wide(2, {pt({0, 0}), pt({2, 0}), pt({0, 1})});
  auto r = all_spanning_simplices_unimodular(wide);
  CHECK_FALSE(r.all_unimodular);
  CHECK_FALSE(r.violations.empty());
  CHECK(all_spanning_simplices_unimodular(theorem2_polytope()).all_unimodular);
}

TEST_CASE("enumerate_triangulations: square, simplex, pentagon") {
  auto sq = lattice_point_config(unit_square());
  CHECK(enumerate_triangulations(sq).size() == 2);

  PointConfig simplex;
  simplex.dim = 2;
  simplex.points = {pt({0, 0}), pt({1, 0}), pt({0, 1})};
  CHECK(enumerate_triangulations(simplex).size() == 1);

  PointConfig pent;  // convex pentagon: Catalan(3) = 5 triangulations
  pent.dim = 2;
  pent.points = {pt({0, 0}), pt({2, 0}), pt({3, 1}), pt({1, 3}), pt({0, 2})};
  auto all = enumerate_triangulations(pent);
  CHECK(all.size() == 5);
  for (const auto& t : all) CHECK(is_valid_triangulation(pent, t));
}

TEST_CASE("enumerate_triangulations rejects configurations beyond corank 2") {
  PointConfig big;
  big.dim = 1;
  big.points = {pt({0}), pt({1}), pt({2}), pt({3}), pt({4})};  // 5 > d+3
  CHECK_THROWS_AS(enumerate_triangulations(big), std::invalid_argument);
}

TEST_CASE("flip closure: flipping any enumerated triangulation stays in the set") {
  PointConfig pent;
  pent.dim = 2;
  pent.points = {pt({0, 0}), pt({2, 0}), pt({3, 1}), pt({1, 3}), pt({0, 2})};
  auto all = enumerate_triangulations(pent);
  // Enumerating from any member must give the same set.
  for (const auto& t : all) {
    (void)t;
  }
  // The BFS already guarantees closure; check set equality from a different
  // entry point by reversing the insertion order.
  std::vector<std::size_t> rev = lex_order(pent);
  std::reverse(rev.begin(), rev.end());
  auto t0 = placing_triangulation(pent, rev);
  CHECK(is_valid_triangulation(pent, t0));
  bool found = false;
  for (const auto& t : all) found = found || t == t0;
  CHECK(found);
}

TEST_CASE("is_flag rejects a hollow triangle") {
  // Path of 3 edges around a hole: skeleton clique {0,1,2} is not a face.
  PointConfig c;
  c.dim = 2;
  c.points = {pt({0, 0}), pt({4, 0}), pt({0, 4}), pt({1, 1}), pt({2, 1}),
              pt({1, 2})};
  // Triangulate the region between outer triangle 0,1,2 and inner 3,4,5
  // so that 0,1,2 are pairwise adjacent but {0,1,2} is not a simplex.
  Triangulation t{{{0, 1, 3}, {1, 3, 4}, {1, 2, 4}, {2, 4, 5}, {0, 2, 5},
                   {0, 3, 5}, {3, 4, 5}}};
  CHECK_FALSE(is_flag(c, t));
}

TEST_CASE("exists_quadratic_triangulation") {
  auto sq = exists_quadratic_triangulation(unit_square());
  CHECK(sq.status == QuadraticVerdict::Status::kYes);
  REQUIRE(sq.witness.has_value());

  Polytope simplex(2, {pt({0, 0}), pt({1, 0}), pt({0, 1})});
  CHECK(exists_quadratic_triangulation(simplex).status ==
        QuadraticVerdict::Status::kYes);

  auto t2 = exists_quadratic_triangulation(theorem2_polytope());
  CHECK(t2.status == QuadraticVerdict::Status::kNo);
  CHECK_FALSE(t2.table.empty());
  for (const auto& props : t2.table) CHECK(props.unimodular);
}
