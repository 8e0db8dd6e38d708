#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ehrhart/polytope.hpp"

namespace ehrhart {

/// Simple directed graph on vertices 1..n. Loops and duplicate arcs are
/// rejected at construction.
class Digraph {
public:
  Digraph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> arcs);

  std::size_t num_vertices() const { return n_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& arcs() const {
    return arcs_;
  }

  /// n x m incidence matrix: column for arc (u, v) has -1 in row u-1 and
  /// +1 in row v-1.
  IntMatrix incidence_matrix() const;

private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> arcs_;
};

/// Arc polytope: convex hull of the incidence-matrix columns, as a
/// Polytope in ambient dimension n. Requires at least one arc.
Polytope arc_polytope(const Digraph& g);

/// The hardcoded 14-vertex bipartite digraph whose arc polytope realizes
/// the 12-dimensional example.
Digraph figure1_graph();

}  // namespace ehrhart
