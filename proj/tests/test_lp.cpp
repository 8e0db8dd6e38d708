#include "doctest.h"
#include "ehrhart/datasets.hpp"
#include "ehrhart/lp.hpp"

using namespace ehrhart;

TEST_CASE("lp_solve: bounded one-variable maximum") {
  LpProblem p;
  p.a = {{Rat(1)}, {Rat(-1)}};
  p.b = {Rat(5), Rat(0)};
  p.c = {Rat(1)};
  auto out = lp_solve(p);
  REQUIRE(out.status == LpStatus::kOptimal);
  CHECK(out.value == 5);
  CHECK(out.witness[0] == 5);
}

TEST_CASE("lp_solve: infeasible system") {
  LpProblem p;
  p.a = {{Rat(1)}, {Rat(-1)}};
  p.b = {Rat(5), Rat(-6)};  // x <= 5 and x >= 6
  p.c = {Rat(1)};
  CHECK(lp_solve(p).status == LpStatus::kInfeasible);
}

TEST_CASE("lp_solve: unbounded with improving ray") {
  LpProblem p;
  p.a = {{Rat(-1)}};
  p.b = {Rat(0)};
  p.c = {Rat(1)};
  auto out = lp_solve(p);
  REQUIRE(out.status == LpStatus::kUnbounded);
  REQUIRE(out.witness.size() == 1);
  CHECK(out.witness[0] > 0);            // c . r improving
  CHECK(Rat(-1) * out.witness[0] <= 0);  // A . r <= 0
}

TEST_CASE("lp_solve: max of first coordinate over the theorem1 polytope") {
  Polytope p = theorem1_polytope();
  const auto& facets = p.facets();
  LpProblem prob;
  for (const auto& f : facets) {
    RatVector row(7);
    for (std::size_t j = 0; j < 7; ++j) row[j] = Rat(f.normal[j]);
    prob.a.push_back(std::move(row));
    prob.b.push_back(Rat(f.offset));
  }
  prob.c.assign(7, Rat(0));
  prob.c[0] = 1;
  auto out = lp_solve(prob);
  REQUIRE(out.status == LpStatus::kOptimal);
  CHECK(out.value == 1);
  // The witness satisfies every constraint exactly.
  for (std::size_t i = 0; i < prob.a.size(); ++i) {
    Rat lhs = 0;
    for (std::size_t j = 0; j < 7; ++j) lhs += prob.a[i][j] * out.witness[j];
    CHECK(lhs <= prob.b[i]);
  }
}

TEST_CASE("lp_solve: minimization and equality rows") {
  // min x + y  s.t.  x + y = 2, x >= 0, y >= 0
  LpProblem p;
  p.aeq = {{Rat(1), Rat(1)}};
  p.beq = {Rat(2)};
  p.c = {Rat(1), Rat(1)};
  p.maximize = false;
  p.nonneg = true;
  auto out = lp_solve(p);
  REQUIRE(out.status == LpStatus::kOptimal);
  CHECK(out.value == 2);
}

TEST_CASE("lp_feasible_nonneg") {
  // x1 + x2 = 1, x >= 0: feasible
  CHECK(lp_feasible_nonneg({{Rat(1), Rat(1)}}, {Rat(1)}));
  // x1 + x2 = -1, x >= 0: infeasible
  CHECK_FALSE(lp_feasible_nonneg({{Rat(1), Rat(1)}}, {Rat(-1)}));
}

TEST_CASE("lp_solve: re-solving with the optimum pinned stays feasible") {
  LpProblem p;
  p.a = {{Rat(2), Rat(1)}, {Rat(1), Rat(3)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(-1)}};
  p.b = {Rat(4), Rat(6), Rat(0), Rat(0)};
  p.c = {Rat(1), Rat(1)};
  auto out = lp_solve(p);
  REQUIRE(out.status == LpStatus::kOptimal);
  LpProblem pinned = p;
  pinned.a.push_back({Rat(-1), Rat(-1)});  // x + y >= optimum
  pinned.b.push_back(Rat(-out.value));
  CHECK(lp_solve(pinned).status == LpStatus::kOptimal);
}
