#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "ehrhart/datasets.hpp"
#include "ehrhart/idp.hpp"
#include "ehrhart/search.hpp"
#include "helpers.hpp"

using namespace ehrhart;
using testing::pt;

namespace {

HStarVector hv(std::initializer_list<long> coeffs) {
  HStarVector h;
  for (long c : coeffs) h.coeffs.emplace_back(c);
  h.d = h.coeffs.size() - 1;
  return h;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  REQUIRE(f.good());
  std::ostringstream out;
  out << f.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("lc_violation_score on known vectors") {
  CHECK(lc_violation_score(hv({1, 1, 1})) == 0);
  CHECK(lc_violation_score(hv({1, 3, 3, 1})) < 0);
  // (1,2,3,4,5,3,2,1): worst interior index is i = 5 where
  // h4*h6 - h5^2 = 5*2 - 9 = 1, normalized by h5^2 = 9.
  CHECK(lc_violation_score(hv({1, 2, 3, 4, 5, 3, 2, 1})) == Rat(1, 9));
  // score > 0 iff not log-concave
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> coef(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    HStarVector h;
    h.coeffs.emplace_back(1);
    for (int i = 0; i < 5; ++i) h.coeffs.emplace_back(coef(rng));
    h.d = 5;
    CHECK((lc_violation_score(h) > 0) == !is_log_concave(h.coeffs));
  }
}

TEST_CASE("mutate preserves full dimension and changes the vertex set") {
  std::mt19937_64 rng(7);
  Polytope p(3, {pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}),
                 pt({1, 1, 1})});
  for (int i = 0; i < 25; ++i) {
    auto r = mutate(p, rng, 2);
    CHECK(r.polytope.is_full_dimensional());
    if (r.changed) {
      CHECK(r.polytope.vertices() != p.vertices());
      p = r.polytope;
    }
  }
}

TEST_CASE("zero-step search at the known example reports its score and IDP status") {
  SearchConfig cfg;
  cfg.dim = 7;
  cfg.vertex_budget = 10;
  cfg.steps = 0;
  cfg.seed = 1;
  cfg.idp_level = IdpLevel::kFull;
  cfg.start = theorem1_polytope();
  auto res = local_search(cfg);
  REQUIRE(res.candidates.size() == 1);
  const auto& c = res.candidates.front();
  CHECK(c.score == Rat(1, 9));
  CHECK(c.idp == IdpStatus::kVerified);
  CHECK(c.hstar.coeffs == IntVector{1, 2, 3, 4, 5, 3, 2, 1});
}

TEST_CASE("same seed gives byte-identical artifacts") {
  namespace fs = std::filesystem;
  fs::path base = fs::temp_directory_path() / "ehrhart-search-test";
  fs::remove_all(base);
  SearchConfig cfg;
  cfg.dim = 3;
  cfg.vertex_budget = 6;
  cfg.coord_range = 2;
  cfg.steps = 40;
  cfg.seed = 42;
  cfg.idp_level = IdpLevel::kOff;

  std::string runs[2];
  for (int i = 0; i < 2; ++i) {
    fs::path dir = base / std::to_string(i);
    fs::create_directories(dir);
    cfg.out_dir = dir.string();
    auto res = local_search(cfg);
    runs[i] = slurp(dir / "candidates.jsonl") + "\n---\n" +
              slurp(dir / "runlog.jsonl");
    CHECK(res.runlog.size() > 0);
  }
  CHECK(runs[0] == runs[1]);
  // No wall-clock contamination: the logs must not mention timing.
  CHECK(runs[0].find("time") == std::string::npos);
  fs::remove_all(base);
}

TEST_CASE("candidates are ranked and carry positive, consistent scores") {
  SearchConfig cfg;
  cfg.dim = 3;
  cfg.steps = 60;
  cfg.seed = 5;
  cfg.idp_level = IdpLevel::kOff;
  auto res = local_search(cfg);
  CHECK(std::is_sorted(res.candidates.begin(), res.candidates.end(),
                       [](const Candidate& a, const Candidate& b) {
                         return b.score < a.score;
                       }));
  // All candidates past the seeded starting point must have positive score.
  std::size_t nonpositive = 0;
  for (const auto& c : res.candidates) {
    if (!(c.score > 0)) ++nonpositive;
    CHECK(lc_violation_score(c.hstar) == c.score);
  }
  CHECK(nonpositive <= 1);
}
