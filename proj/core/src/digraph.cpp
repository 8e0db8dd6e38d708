#include "ehrhart/digraph.hpp"

#include <set>
#include <stdexcept>

namespace ehrhart {

Digraph::Digraph(std::size_t n,
                 std::vector<std::pair<std::size_t, std::size_t>> arcs)
    : n_(n), arcs_(std::move(arcs)) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [u, v] : arcs_) {
    if (u < 1 || u > n_ || v < 1 || v > n_)
      throw std::invalid_argument("arc endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (!seen.insert({u, v}).second)
      throw std::invalid_argument("duplicate arc");
  }
}

IntMatrix Digraph::incidence_matrix() const {
  IntMatrix m(n_, arcs_.size());
  for (std::size_t j = 0; j < arcs_.size(); ++j) {
    m.at(arcs_[j].first - 1, j) = -1;
    m.at(arcs_[j].second - 1, j) = 1;
  }
  return m;
}

Polytope arc_polytope(const Digraph& g) {
  if (g.arcs().empty())
    throw std::invalid_argument("arc polytope requires at least one arc");
  IntMatrix m = g.incidence_matrix();
  std::vector<LatticePoint> cols;
  cols.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    LatticePoint p(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) p[i] = m.at(i, j);
    cols.push_back(std::move(p));
  }
  return Polytope(g.num_vertices(), std::move(cols));
}

Digraph figure1_graph() {
  return Digraph(14, {{1, 8},
                      {1, 12},
                      {1, 14},
                      {2, 8},
                      {3, 9},
                      {4, 11},
                      {5, 12},
                      {6, 13},
                      {7, 14},
                      {9, 2},
                      {10, 3},
                      {10, 4},
                      {10, 6},
                      {11, 5},
                      {13, 7}});
}

}  // namespace ehrhart
