#include "ehrhart/datasets.hpp"

namespace ehrhart {

namespace {

LatticePoint unit(std::size_t n, std::size_t i) {
  LatticePoint e(n);
  e[i] = 1;
  return e;
}

LatticePoint from_ints(std::initializer_list<int> vals) {
  LatticePoint p;
  for (int v : vals) p.push_back(Int(v));
  return p;
}

}  // namespace

Polytope theorem1_polytope() {
  std::vector<LatticePoint> pts;
  for (std::size_t i = 0; i < 7; ++i) pts.push_back(unit(7, i));
  pts.push_back(from_ints({1, -1, -1, -1, -1, 0, 0}));
  pts.push_back(from_ints({-1, -1, 0, 0, 0, -1, -1}));
  return Polytope(7, std::move(pts));
}

Polytope theorem2_polytope() {
  std::vector<LatticePoint> pts;
  pts.push_back(LatticePoint(12));
  for (std::size_t i = 1; i < 12; ++i) pts.push_back(unit(12, i));
  pts.push_back(from_ints({1, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0}));
  pts.push_back(from_ints({1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0}));
  pts.push_back(from_ints({1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1}));
  return Polytope(12, std::move(pts));
}

}  // namespace ehrhart
