#include <random>

#include "doctest.h"
#include "ehrhart/datasets.hpp"
#include "ehrhart/hstar.hpp"
#include "ehrhart/lattice_enum.hpp"
#include "helpers.hpp"

using namespace ehrhart;

namespace {

std::vector<Int> counts_of(const Polytope& p) {
  std::vector<Int> counts{Int(1)};
  for (long k = 1; k <= static_cast<long>(p.ambient_dim()); ++k)
    counts.push_back(count_points(p, k));
  return counts;
}

}  // namespace

TEST_CASE("hstar_from_counts: closed forms") {
  // Standard d-simplex: counts C(k+d,d) -> (1,0,...,0).
  for (std::size_t d = 1; d <= 8; ++d) {
    std::vector<Int> counts;
    for (long k = 0; k <= static_cast<long>(d); ++k)
      counts.push_back(binomial(Int(k + static_cast<long>(d)), d));
    auto h = hstar_from_counts(counts, d);
    CHECK(h.coeffs[0] == 1);
    for (std::size_t i = 1; i <= d; ++i) CHECK(h.coeffs[i] == 0);
  }
  // Unit square: (1,4,9) -> (1,1,0).
  auto sq = hstar_from_counts({Int(1), Int(4), Int(9)}, 2);
  CHECK(sq.coeffs == IntVector{Int(1), Int(1), Int(0)});
}

TEST_CASE("hstar_from_counts rejects non-Ehrhart data") {
  CHECK_THROWS(hstar_from_counts({Int(1), Int(2), Int(2)}, 2));
}

TEST_CASE("bundled example h*-vectors match the known values") {
  auto h1 = hstar_from_counts(counts_of(theorem1_polytope()), 7);
  CHECK(h1.coeffs == IntVector{1, 2, 3, 4, 5, 3, 2, 1});
  CHECK(is_unimodal(h1.coeffs));
  CHECK_FALSE(is_log_concave(h1.coeffs));
  CHECK_FALSE(has_internal_zeros(h1.coeffs));
  CHECK(normalized_volume(h1) == 21);

  auto h2 = hstar_from_counts(counts_of(theorem2_polytope()), 12);
  CHECK(h2.coeffs == IntVector{1, 2, 3, 4, 5, 3, 2, 1, 0, 0, 0, 0, 0});
  CHECK_FALSE(is_log_concave(h2.coeffs));
  CHECK_FALSE(has_internal_zeros(h2.coeffs));
  CHECK(normalized_volume(h2) == 21);
}

TEST_CASE("ehrhart_from_hstar: simplex gives C(t+d, d); bundled example coefficients positive") {
  HStarVector simplex;
  simplex.d = 3;
  simplex.coeffs = {Int(1), Int(0), Int(0), Int(0)};
  auto e = ehrhart_from_hstar(simplex);
  // C(t+3,3) = (t^3 + 6t^2 + 11t + 6)/6
  CHECK(e.coeffs == RatVector{Rat(1), Rat(11, 6), Rat(1), Rat(1, 6)});

  for (const Polytope& p : {theorem1_polytope(), theorem2_polytope()}) {
    auto h = hstar_from_counts(counts_of(p), p.ambient_dim());
    auto poly = ehrhart_from_hstar(h);
    CHECK(poly.coeffs.size() == p.ambient_dim() + 1);
    for (const Rat& c : poly.coeffs) CHECK(c > 0);
    CHECK(poly.coeffs[0] == 1);
  }
}

TEST_CASE("round trip: hstar -> ehrhart -> evaluate -> hstar") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<long> entry(0, 6);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t d = 2 + trial % 5;
    HStarVector h;
    h.d = d;
    h.coeffs.assign(d + 1, Int(0));
    h.coeffs[0] = 1;
    for (std::size_t i = 1; i <= d; ++i) h.coeffs[i] = Int(entry(rng));
    auto e = ehrhart_from_hstar(h);
    std::vector<Int> counts;
    for (long k = 0; k <= static_cast<long>(d); ++k) {
      Rat v = e.evaluate(Rat(k));
      REQUIRE(v.get_den() == 1);
      counts.push_back(v.get_num());
    }
    CHECK(hstar_from_counts(counts, d) == h);
  }
}

TEST_CASE("unimodal / log-concave / internal-zeros predicates") {
  CHECK(is_unimodal({1, 2, 3, 4, 5, 3, 2, 1}));
  CHECK_FALSE(is_unimodal({1, 3, 1, 3}));
  CHECK(is_unimodal({1, 1, 1}));
  CHECK(is_unimodal({1, 2, 3, 4, 5, 3, 2, 1, 0, 0, 0, 0, 0}));

  CHECK_FALSE(is_log_concave({1, 2, 3, 4, 5, 3, 2, 1}));  // 5*2 > 3^2 at i=5
  CHECK_FALSE(is_log_concave({1, 2, 3, 4, 5, 3, 2, 1, 0, 0, 0, 0, 0}));
  CHECK(is_log_concave({1, 3, 3, 1}));
  CHECK(is_log_concave({1, 1, 1}));

  CHECK(has_internal_zeros({1, 0, 1}));
  CHECK_FALSE(has_internal_zeros({1, 2, 0, 0}));
  CHECK_FALSE(has_internal_zeros({1, 2, 3, 4, 5, 3, 2, 1, 0, 0, 0, 0, 0}));
}

TEST_CASE("log-concave with positive entries implies unimodal") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<long> entry(1, 9);
  int found = 0;
  for (int trial = 0; trial < 500; ++trial) {
    IntVector v(5);
    for (auto& x : v) x = Int(entry(rng));
    if (is_log_concave(v)) {
      ++found;
      CHECK(is_unimodal(v));
    }
  }
  CHECK(found > 0);
}

TEST_CASE("h* invariants on random polytopes: h*_0, h*_1, h*_d") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t d = 2 + trial % 3;
    Polytope p = testing::random_polytope(rng, d, 6, 2);
    auto h = hstar_from_counts(counts_of(p), d);
    CHECK(h.coeffs[0] == 1);
    CHECK(h.coeffs[1] == count_points(p, 1) - Int(static_cast<long>(d) + 1));
    CHECK(h.coeffs[d] ==
          Int(static_cast<long>(enumerate_interior_points(p, 1).size())));
  }
}
